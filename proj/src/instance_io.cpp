#include "bmt/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "bmt/gf2.hpp"

namespace bmt {

namespace {

struct Token {
    std::string text;
    int col = 1;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long parse_int(const Token& tok, int line, long long lo, long long hi, const char* what) {
    long long value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(line, tok.col, std::string(what) + " is not an integer");
    if (value < lo || value > hi)
        throw ParseError(line, tok.col, std::string(what) + " out of range");
    return value;
}

// Significant (comment-stripped, nonblank) lines with their 1-based numbers.
std::vector<std::pair<int, std::string>> significant_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (tokenize(line).empty()) continue;
        out.emplace_back(number, line);
    }
    return out;
}

void read_set_line(InstanceFile& f, int line, const std::vector<Token>& toks) {
    if (toks.size() < 2) throw ParseError(line, toks[0].col, "set line needs a name");
    const std::string& name = toks[1].text;
    if (f.named_sets.count(name))
        throw ParseError(line, toks[1].col, "duplicate set name '" + name + "'");
    ElementSet s;
    for (size_t i = 2; i < toks.size(); ++i) {
        long long e =
            parse_int(toks[i], line, 1, f.matroid.ground_size(), "element index");
        if (contains(s, static_cast<int>(e - 1)))
            throw ParseError(line, toks[i].col, "repeated element index");
        s = set_union(s, {static_cast<int>(e - 1)});
    }
    f.named_sets.emplace(name, std::move(s));
}

std::vector<std::string> matrix_labels(int n) {
    std::vector<std::string> labels;
    for (int j = 1; j <= n; ++j) labels.push_back("e" + std::to_string(j));
    return labels;
}

long long word_int(const std::vector<std::string>& words, size_t i, long long lo, long long hi,
                   const char* what) {
    if (i >= words.size())
        throw std::invalid_argument(std::string("generate_instance: missing ") + what);
    long long value = 0;
    const char* first = words[i].data();
    const char* last = first + words[i].size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < lo || value > hi)
        throw std::invalid_argument(std::string("generate_instance: bad ") + what + " '" +
                                    words[i] + "'");
    return value;
}

nlohmann::json one_based(const ElementSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int e : s) arr.push_back(e + 1);
    return arr;
}

ElementSet zero_based(const nlohmann::json& arr, const char* what) {
    ElementSet s;
    for (const auto& v : arr) {
        long long e = v.get<long long>();
        if (e < 1)
            throw ParseError(0, 0, std::string(what) + ": element ids are 1-based");
        s.push_back(static_cast<int>(e - 1));
    }
    return normalized(s);
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines = significant_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty instance");
    size_t at = 0;
    auto next_line = [&](const char* what) -> std::pair<int, std::vector<Token>> {
        if (at >= lines.size()) {
            int line = lines.empty() ? 1 : lines.back().first + 1;
            throw ParseError(line, 1, std::string("unexpected end of input, expected ") + what);
        }
        auto [number, raw] = lines[at++];
        return {number, tokenize(raw)};
    };

    auto [header_line, header] = next_line("header");
    InstanceFile f;
    if (header[0].text == "matrix") {
        if (header.size() != 3)
            throw ParseError(header_line, header[0].col, "matrix header needs two counts");
        int r = static_cast<int>(parse_int(header[1], header_line, 1, 4096, "row count"));
        int n = static_cast<int>(parse_int(header[2], header_line, 1, 4096, "column count"));
        GF2Matrix a(r, n);
        for (int i = 0; i < r; ++i) {
            auto [line, toks] = next_line("matrix row");
            if (toks.size() != 1 || static_cast<int>(toks[0].text.size()) != n)
                throw ParseError(line, toks[0].col, "row length mismatch");
            for (int j = 0; j < n; ++j) {
                char ch = toks[0].text[j];
                if (ch != '0' && ch != '1')
                    throw ParseError(line, toks[0].col + j, "matrix entries are 0 or 1");
                if (ch == '1') a.set(i, j, 1);
            }
        }
        f.kind = InstanceFile::Kind::Matrix;
        f.matroid = BinaryMatroid{a, matrix_labels(n)};
    } else if (header[0].text == "graph") {
        if (header.size() != 2)
            throw ParseError(header_line, header[0].col, "graph header needs an edge count");
        int m = static_cast<int>(parse_int(header[1], header_line, 1, 4096, "edge count"));
        std::vector<std::pair<int, int>> edges;
        int max_vertex = 0;
        for (int i = 0; i < m; ++i) {
            auto [line, toks] = next_line("edge");
            if (toks.size() != 2)
                throw ParseError(line, toks[0].col, "edge lines carry two vertex ids");
            int u = static_cast<int>(parse_int(toks[0], line, 1, 4096, "vertex id"));
            int v = static_cast<int>(parse_int(toks[1], line, 1, 4096, "vertex id"));
            edges.emplace_back(u - 1, v - 1);
            max_vertex = std::max({max_vertex, u, v});
        }
        f.kind = InstanceFile::Kind::Graph;
        f.vertex_count = max_vertex;
        f.edges = edges;
        f.matroid = incidence_matroid(max_vertex, edges);
    } else {
        throw ParseError(header_line, header[0].col,
                         "unknown header '" + header[0].text + "', expected matrix or graph");
    }

    while (at < lines.size()) {
        auto [line, toks] = next_line("set line");
        if (toks[0].text != "set")
            throw ParseError(line, toks[0].col, "expected a set line after the instance body");
        read_set_line(f, line, toks);
    }
    return f;
}

InstanceFile generate_instance(const std::vector<std::string>& words) {
    if (words.empty()) throw std::invalid_argument("generate_instance: empty description");
    const std::string& kind = words[0];
    InstanceFile f;
    if (kind == "circular_ladder") {
        if (words.size() != 2)
            throw std::invalid_argument("generate_instance: circular_ladder takes one count");
        int m = static_cast<int>(word_int(words, 1, 3, 1024, "ring size"));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
        for (int i = 0; i < m; ++i) edges.emplace_back(m + i, m + (i + 1) % m);
        for (int i = 0; i < m; ++i) edges.emplace_back(i, m + i);
        f.kind = InstanceFile::Kind::Graph;
        f.vertex_count = 2 * m;
        f.edges = edges;
        f.matroid = incidence_matroid(2 * m, edges);
        ElementSet c1, c2;
        for (int i = 0; i < m; ++i) c1.push_back(i);
        for (int i = 0; i < m; ++i) c2.push_back(m + i);
        f.named_sets.emplace("C1", c1);
        f.named_sets.emplace("C2", c2);
    } else if (kind == "random") {
        if (words.size() != 4)
            throw std::invalid_argument("generate_instance: random takes rows, columns, seed");
        int r = static_cast<int>(word_int(words, 1, 1, 4096, "row count"));
        int n = static_cast<int>(word_int(words, 2, 1, 4096, "column count"));
        auto seed = static_cast<unsigned>(word_int(words, 3, 0, 0xffffffffLL, "seed"));
        std::mt19937 gen(seed);
        GF2Matrix a(r, n);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j)
                if (gen() & 1u) a.set(i, j, 1);
        f.kind = InstanceFile::Kind::Matrix;
        f.matroid = BinaryMatroid{a, matrix_labels(n)};
    } else if (kind == "disjoint_cycles") {
        if (words.size() != 3)
            throw std::invalid_argument("generate_instance: disjoint_cycles takes two lengths");
        int a = static_cast<int>(word_int(words, 1, 1, 1024, "first length"));
        int b = static_cast<int>(word_int(words, 2, 1, 1024, "second length"));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < a; ++i) edges.emplace_back(i, (i + 1) % a);
        for (int i = 0; i < b; ++i) edges.emplace_back(a + i, a + (i + 1) % b);
        f.kind = InstanceFile::Kind::Graph;
        f.vertex_count = a + b;
        f.edges = edges;
        f.matroid = incidence_matroid(a + b, edges);
        ElementSet c1, c2;
        for (int i = 0; i < a; ++i) c1.push_back(i);
        for (int i = 0; i < b; ++i) c2.push_back(a + i);
        f.named_sets.emplace("C1", c1);
        f.named_sets.emplace("C2", c2);
    } else {
        throw std::invalid_argument("generate_instance: unknown kind '" + kind + "'");
    }
    return f;
}

std::string emit_instance(const InstanceFile& f) {
    std::ostringstream out;
    if (f.kind == InstanceFile::Kind::Matrix) {
        const GF2Matrix& a = f.matroid.rep;
        out << "matrix " << a.rows() << ' ' << a.cols() << '\n';
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) out << (a.get(i, j) ? '1' : '0');
            out << '\n';
        }
    } else {
        out << "graph " << f.edges.size() << '\n';
        for (auto [u, v] : f.edges) out << u + 1 << ' ' << v + 1 << '\n';
    }
    for (const auto& [name, s] : f.named_sets) {
        out << "set " << name;
        for (int e : s) out << ' ' << e + 1;
        out << '\n';
    }
    return out.str();
}

std::string emit_certificate(const Certificate& c) {
    nlohmann::json j;
    j["arithmetic"] = c.arithmetic;
    j["c1"] = one_based(c.c1);
    j["c2"] = one_based(c.c2);
    j["circumference_n"] = c.circumference_n;
    j["h_convention"] = c.h_convention;
    j["k"] = c.k;
    switch (c.scenario) {
        case Scenario::S1:
            j["scenario"] = "S1";
            j["witness"] = {{"c", one_based(c.witness_c)}};
            break;
        case Scenario::S2:
            j["scenario"] = "S2";
            j["witness"] = {{"c1_prime", one_based(c.witness_c1p)},
                            {"c2_prime", one_based(c.witness_c2p)}};
            break;
        case Scenario::DirectBound:
            j["scenario"] = "DirectBound";
            j["witness"] = nullptr;
            break;
    }
    j["search_path"] = c.search_path;
    j["seed"] = c.seed;
    nlohmann::json steps = nlohmann::json::array();
    for (const MinorStep& s : c.trace.steps)
        steps.push_back({{"element", s.element + 1},
                         {"op", s.op == MinorOp::Delete ? "delete" : "contract"}});
    j["trace"] = steps;
    return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        Certificate c;
        std::string scenario = j.at("scenario").get<std::string>();
        if (scenario == "S1")
            c.scenario = Scenario::S1;
        else if (scenario == "S2")
            c.scenario = Scenario::S2;
        else if (scenario == "DirectBound")
            c.scenario = Scenario::DirectBound;
        else
            throw ParseError(0, 0, "unknown scenario '" + scenario + "'");
        c.k = j.at("k").get<int>();
        c.c1 = zero_based(j.at("c1"), "c1");
        c.c2 = zero_based(j.at("c2"), "c2");
        c.circumference_n = j.at("circumference_n").get<int>();
        c.arithmetic = j.at("arithmetic").get<std::map<std::string, long long>>();
        c.search_path = j.at("search_path").get<std::string>();
        c.h_convention = j.at("h_convention").get<std::string>();
        c.seed = j.at("seed").get<unsigned>();
        const nlohmann::json& w = j.at("witness");
        if (c.scenario == Scenario::S1) {
            c.witness_c = zero_based(w.at("c"), "witness");
        } else if (c.scenario == Scenario::S2) {
            c.witness_c1p = zero_based(w.at("c1_prime"), "witness");
            c.witness_c2p = zero_based(w.at("c2_prime"), "witness");
        } else if (!w.is_null()) {
            throw ParseError(0, 0, "direct-bound certificates carry a null witness");
        }
        for (const auto& step : j.at("trace")) {
            long long e = step.at("element").get<long long>();
            std::string op = step.at("op").get<std::string>();
            if (e < 1) throw ParseError(0, 0, "trace element ids are 1-based");
            if (op != "delete" && op != "contract")
                throw ParseError(0, 0, "unknown trace op '" + op + "'");
            c.trace.steps.push_back({static_cast<int>(e - 1),
                                     op == "delete" ? MinorOp::Delete : MinorOp::Contract});
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, 0, std::string("certificate JSON: ") + e.what());
    }
}

}  // namespace bmt
