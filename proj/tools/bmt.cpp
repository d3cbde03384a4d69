// Command-line front end: every subcommand is a thin wrapper over one library
// operation, with text and JSON output modes. Exit codes: 0 success, 1
// verification/budget failure, 2 input error.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bmt/common.hpp"
#include "bmt/instance_io.hpp"
#include "bmt/linkage.hpp"
#include "bmt/matroid.hpp"
#include "bmt/patterns.hpp"
#include "bmt/witness.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bmt::ElementSet named(const bmt::InstanceFile& f, const std::string& name) {
    auto it = f.named_sets.find(name);
    if (it != f.named_sets.end()) return it->second;
    std::string known;
    for (const auto& [n, s] : f.named_sets) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    throw std::invalid_argument("no set named '" + name + "'" +
                                (known.empty() ? "" : " (known: " + known + ")"));
}

json one_based(const bmt::ElementSet& s) {
    json arr = json::array();
    for (int e : s) arr.push_back(e + 1);
    return arr;
}

std::string ids(const bmt::ElementSet& s) {
    std::string out;
    for (int e : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e + 1);
    }
    return out;
}

const char* kind_name(bmt::PatternKind k) {
    switch (k) {
        case bmt::PatternKind::Identity: return "identity";
        case bmt::PatternKind::ComplementIdentity: return "complement-identity";
        default: return "lower-triangular";
    }
}

std::string plain(const std::vector<int>& v) {
    std::string out;
    for (int e : v) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

void print_certificate_text(const bmt::Certificate& cert) {
    std::cout << "scenario: "
              << (cert.scenario == bmt::Scenario::S1
                      ? "S1"
                      : cert.scenario == bmt::Scenario::S2 ? "S2" : "DirectBound")
              << "\nsearch path: " << cert.search_path << "\nk: " << cert.k
              << "\ncircumference of the minor: " << cert.circumference_n << "\nc1: "
              << ids(cert.c1) << "\nc2: " << ids(cert.c2) << '\n';
    if (cert.scenario == bmt::Scenario::S1) {
        std::cout << "witness cycle: " << ids(cert.witness_c) << '\n';
    } else if (cert.scenario == bmt::Scenario::S2) {
        std::cout << "witness cycle 1: " << ids(cert.witness_c1p) << '\n'
                  << "witness cycle 2: " << ids(cert.witness_c2p) << '\n';
    } else {
        std::cout << "witness: none\n";
    }
    std::cout << "arithmetic:\n";
    for (const auto& [key, value] : cert.arithmetic)
        std::cout << "  " << key << ": " << value << '\n';
    std::cout << "trace:";
    if (cert.trace.steps.empty()) std::cout << " (none)";
    std::cout << '\n';
    for (const bmt::MinorStep& s : cert.trace.steps)
        std::cout << "  " << (s.op == bmt::MinorOp::Delete ? "delete " : "contract ")
                  << s.element + 1 << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"binary matroid toolkit: circuits, connectivity, and skew-pair certificates"};
    app.require_subcommand(1);

    std::string input, format = "text";
    app.add_option("--input", input, "instance file");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_info = app.add_subcommand("info", "ground size, rank, named sets");
    auto* cmd_circuits = app.add_subcommand("circuits", "enumerate circuits");
    std::optional<int> max_size;
    cmd_circuits->add_option("--max-size", max_size, "only circuits up to this size");
    auto* cmd_circ = app.add_subcommand("circumference", "largest circuit size");
    auto* cmd_kappa = app.add_subcommand("kappa", "linkage between two named sets");
    std::string x_name, y_name;
    cmd_kappa->add_option("--x", x_name, "first named set")->required();
    cmd_kappa->add_option("--y", y_name, "second named set")->required();
    auto* cmd_reduce = app.add_subcommand("reduce", "build the reduced instance");
    std::string c1_name, c2_name;
    cmd_reduce->add_option("--c1", c1_name, "first circuit set name")->required();
    cmd_reduce->add_option("--c2", c2_name, "second circuit set name")->required();
    auto* cmd_certify = app.add_subcommand("certify", "produce a bound certificate");
    int k = 0;
    bmt::WitnessConfig cfg;
    cmd_certify->add_option("--c1", c1_name, "first circuit set name")->required();
    cmd_certify->add_option("--c2", c2_name, "second circuit set name")->required();
    cmd_certify->add_option("--k", k, "bound offset k")->required();
    cmd_certify->add_option("--max-subset-size", cfg.max_subset_size, "search cap on |I|");
    cmd_certify->add_option("--seed", cfg.seed, "recorded seed");
    cmd_certify->add_option("--pattern-order", cfg.pattern_order, "pattern order q");
    cmd_certify->add_option("--sample-budget", cfg.sample_budget, "pipeline sample cap p");
    auto* cmd_pattern = app.add_subcommand("pattern", "find an unavoidable configuration");
    int order = 0;
    cmd_pattern->add_option("--l", order, "configuration order")->required();
    auto* cmd_gen = app.add_subcommand("gen", "generate an instance file");
    std::vector<std::string> words;
    cmd_gen->add_option("words", words, "generator description")->expected(-1)->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    bool as_json = format == "json";

    if (cmd_gen->parsed()) {
        std::cout << bmt::emit_instance(bmt::generate_instance(words));
        return 0;
    }
    if (input.empty()) throw std::invalid_argument("--input is required");
    bmt::InstanceFile f = bmt::parse_instance(slurp(input));
    const bmt::BinaryMatroid& m = f.matroid;

    if (cmd_info->parsed()) {
        if (as_json) {
            json sets = json::object();
            for (const auto& [name, s] : f.named_sets) sets[name] = one_based(s);
            json j = {{"elements", m.ground_size()},
                      {"kind", f.kind == bmt::InstanceFile::Kind::Graph ? "graph" : "matrix"},
                      {"rank", bmt::rank(m)},
                      {"sets", sets}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "kind: "
                      << (f.kind == bmt::InstanceFile::Kind::Graph ? "graph" : "matrix")
                      << "\nelements: " << m.ground_size() << "\nrank: " << bmt::rank(m)
                      << '\n';
            for (const auto& [name, s] : f.named_sets)
                std::cout << "set " << name << ": " << ids(s) << '\n';
        }
    } else if (cmd_circuits->parsed()) {
        std::vector<bmt::ElementSet> cs = bmt::circuits(m, max_size);
        if (as_json) {
            json arr = json::array();
            for (const bmt::ElementSet& c : cs) arr.push_back(one_based(c));
            json j = {{"circuits", arr}, {"count", cs.size()}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "count: " << cs.size() << '\n';
            for (const bmt::ElementSet& c : cs) std::cout << ids(c) << '\n';
        }
    } else if (cmd_circ->parsed()) {
        int c = bmt::circumference(m);
        if (as_json)
            std::cout << json{{"circumference", c}}.dump(2) << '\n';
        else
            std::cout << "circumference: " << c << '\n';
    } else if (cmd_kappa->parsed()) {
        int v = bmt::kappa(m, named(f, x_name), named(f, y_name));
        if (as_json)
            std::cout << json{{"kappa", v}}.dump(2) << '\n';
        else
            std::cout << "kappa: " << v << '\n';
    } else if (cmd_reduce->parsed()) {
        bmt::ReducedInstance ri =
            bmt::build_reduced_instance(m, named(f, c1_name), named(f, c2_name));
        auto origin = [&](const bmt::ElementSet& pos) {
            bmt::ElementSet out;
            for (int p : pos) out.push_back(ri.trace.surviving[p]);
            return out;
        };
        bmt::ElementSet x_set(ri.x.begin(), ri.x.end());
        if (as_json) {
            json dsets = json::array();
            for (const bmt::ElementSet& d : ri.d) dsets.push_back(one_based(origin(d)));
            json steps = json::array();
            for (const bmt::MinorStep& s : ri.trace.steps)
                steps.push_back({{"element", s.element + 1},
                                 {"op", s.op == bmt::MinorOp::Delete ? "delete" : "contract"}});
            json j = {{"c1", one_based(origin(ri.c1))},
                      {"c2", one_based(origin(ri.c2))},
                      {"d", dsets},
                      {"elements", one_based(bmt::ElementSet(ri.trace.surviving.begin(),
                                                             ri.trace.surviving.end()))},
                      {"t", ri.t},
                      {"trace", steps},
                      {"x", one_based(origin(x_set))}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "elements: "
                      << ids(bmt::ElementSet(ri.trace.surviving.begin(),
                                             ri.trace.surviving.end()))
                      << "\nt: " << ri.t << "\nc1: " << ids(origin(ri.c1))
                      << "\nc2: " << ids(origin(ri.c2)) << "\nx: " << ids(origin(x_set))
                      << '\n';
            for (int i = 0; i < ri.t; ++i)
                std::cout << "d " << i + 1 << ": " << ids(origin(ri.d[i])) << '\n';
            std::cout << "trace:";
            if (ri.trace.steps.empty()) std::cout << " (none)";
            std::cout << '\n';
            for (const bmt::MinorStep& s : ri.trace.steps)
                std::cout << "  " << (s.op == bmt::MinorOp::Delete ? "delete " : "contract ")
                          << s.element + 1 << '\n';
        }
    } else if (cmd_certify->parsed()) {
        bmt::CertifyOutcome out =
            bmt::certify(m, named(f, c1_name), named(f, c2_name), k, cfg);
        if (!out.certificate) {
            if (as_json)
                std::cout << json{{"failure", out.failure}}.dump(2) << '\n';
            else
                std::cout << "failure: " << out.failure << '\n';
            return 1;
        }
        if (as_json)
            std::cout << bmt::emit_certificate(*out.certificate);
        else
            print_certificate_text(*out.certificate);
    } else if (cmd_pattern->parsed()) {
        std::optional<bmt::PatternHit> hit = bmt::find_unavoidable(m.rep, order);
        if (as_json) {
            json j;
            if (hit) {
                j["hit"] = {{"cols", one_based(hit->col_indices)},
                            {"col_perm", hit->col_perm},
                            {"kind", kind_name(hit->kind)},
                            {"order", hit->order},
                            {"rows", one_based(hit->row_indices)},
                            {"row_perm", hit->row_perm}};
            } else {
                j["hit"] = nullptr;
            }
            std::cout << j.dump(2) << '\n';
        } else if (hit) {
            std::cout << "kind: " << kind_name(hit->kind) << "\norder: " << hit->order
                      << "\nrows: " << ids(hit->row_indices) << "\ncols: "
                      << ids(hit->col_indices) << "\nrow perm: " << plain(hit->row_perm)
                      << "\ncol perm: " << plain(hit->col_perm) << '\n';
        } else {
            std::cout << "absent\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bmt::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const bmt::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 1;
    } catch (const bmt::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
}
