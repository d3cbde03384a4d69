#include "bmt/matroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bmt {

namespace {

void check_in_range(const BinaryMatroid& m, const ElementSet& a, const char* who) {
    for (int e : a)
        if (e < 0 || e >= m.ground_size())
            throw std::out_of_range(std::string(who) + ": element index out of range");
}

}  // namespace

BinaryMatroid incidence_matroid(int vertex_count,
                                const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0) throw std::invalid_argument("incidence_matroid: negative vertex count");
    GF2Matrix rep(vertex_count, static_cast<int>(edges.size()));
    std::vector<std::string> labels;
    labels.reserve(edges.size());
    for (size_t j = 0; j < edges.size(); ++j) {
        auto [u, v] = edges[j];
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw std::out_of_range("incidence_matroid: vertex id out of range");
        if (u != v) {
            rep.set(u, static_cast<int>(j), 1);
            rep.set(v, static_cast<int>(j), 1);
        }
        labels.push_back(std::to_string(u + 1) + "-" + std::to_string(v + 1));
    }
    return BinaryMatroid{std::move(rep), std::move(labels)};
}

int rank_of(const BinaryMatroid& m, const ElementSet& a) {
    check_in_range(m, a, "rank_of");
    if (a.empty()) return 0;
    return rank(m.rep.select_columns(a));
}

int rank(const BinaryMatroid& m) { return rank(m.rep); }

ElementSet closure(const BinaryMatroid& m, const ElementSet& a) {
    check_in_range(m, a, "closure");
    int base = rank_of(m, a);
    ElementSet out;
    for (int e = 0; e < m.ground_size(); ++e) {
        if (contains(a, e)) {
            out.push_back(e);
            continue;
        }
        ElementSet with = a;
        with.insert(std::lower_bound(with.begin(), with.end(), e), e);
        if (rank_of(m, with) == base) out.push_back(e);
    }
    return out;
}

bool is_circuit(const BinaryMatroid& m, const ElementSet& c) {
    check_in_range(m, c, "is_circuit");
    if (c.empty()) return false;
    if (!is_cycle(m, c)) return false;
    // Zero column sum plus rank |c|-1 pins the unique dependency to the whole
    // set: every (|c|-1)-subset then spans the same space and is independent.
    return rank_of(m, c) == static_cast<int>(c.size()) - 1;
}

bool is_cycle(const BinaryMatroid& m, const ElementSet& s) {
    check_in_range(m, s, "is_cycle");
    for (int i = 0; i < m.rep.rows(); ++i) {
        int acc = 0;
        for (int e : s) acc ^= m.rep.get(i, e);
        if (acc) return false;
    }
    return true;
}

std::vector<ElementSet> circuits(const BinaryMatroid& m, std::optional<int> max_size) {
    std::vector<GF2Vector> basis = kernel_basis(m.rep);
    int dim = static_cast<int>(basis.size());
    if (dim > 26)
        throw BudgetError("circuits: cycle space dimension " + std::to_string(dim) +
                          " exceeds the enumeration budget (26)");
    int bound = max_size.value_or(m.ground_size());

    // Pack each kernel vector over the columns so the Gray-code walk through
    // all nonzero combinations is one XOR per step.
    int words = (m.ground_size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> packed(dim,
                                                   std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < dim; ++i)
        for (int c = 0; c < m.ground_size(); ++c)
            if (basis[i][c]) packed[i][c / 64] |= 1ull << (c % 64);

    std::vector<ElementSet> out;
    std::vector<std::uint64_t> cur(words, 0);
    for (std::uint64_t step = 1; step < (1ull << dim); ++step) {
        int flip = std::countr_zero(step);
        for (int k = 0; k < words; ++k) cur[k] ^= packed[flip][k];
        int size = 0;
        for (int k = 0; k < words; ++k) size += std::popcount(cur[k]);
        if (size > bound) continue;
        ElementSet support;
        support.reserve(size);
        for (int c = 0; c < m.ground_size(); ++c)
            if (cur[c / 64] >> (c % 64) & 1u) support.push_back(c);
        if (is_circuit(m, support)) out.push_back(std::move(support));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int circumference(const BinaryMatroid& m) {
    std::vector<ElementSet> cs = circuits(m);
    if (cs.empty())
        throw std::invalid_argument("circumference undefined: the matroid has no circuit");
    size_t best = 0;
    for (const ElementSet& c : cs) best = std::max(best, c.size());
    return static_cast<int>(best);
}

int lambda(const BinaryMatroid& m, const ElementSet& a) {
    check_in_range(m, a, "lambda");
    return rank_of(m, a) + rank_of(m, complement_in(m.ground_size(), a)) - rank(m);
}

int local_pi(const BinaryMatroid& m, const ElementSet& x, const ElementSet& y) {
    check_in_range(m, x, "local_pi");
    check_in_range(m, y, "local_pi");
    return rank_of(m, x) + rank_of(m, y) - rank_of(m, set_union(x, y));
}

bool is_skew(const BinaryMatroid& m, const ElementSet& x, const ElementSet& y) {
    if (!is_disjoint(x, y)) throw std::invalid_argument("is_skew: sets must be disjoint");
    return local_pi(m, x, y) == 0;
}

MinorTrace minor(const BinaryMatroid& m, const ElementSet& del, const ElementSet& con) {
    check_in_range(m, del, "minor");
    check_in_range(m, con, "minor");
    if (!is_disjoint(del, con))
        throw std::invalid_argument("minor: delete and contract sets overlap");
    ElementSet undeleted;
    for (int e = 0; e < m.ground_size(); ++e)
        if (!contains(del, e)) undeleted.push_back(e);
    int kept_rank = rank_of(m, undeleted);
    int contract_rank = rank_of(m, con);

    GF2Matrix a = m.rep;
    std::vector<bool> row_alive(a.rows(), true);
    std::vector<bool> col_alive(a.cols(), true);
    std::vector<MinorStep> steps;
    for (int e : del) {
        col_alive[e] = false;
        steps.push_back({e, MinorOp::Delete});
    }
    for (int e : con) {
        // Pivot on the least alive row with a 1 in column e; if there is
        // none the element has become a loop and is deleted instead.
        int pivot = -1;
        for (int i = 0; i < a.rows(); ++i) {
            if (row_alive[i] && a.get(i, e)) {
                pivot = i;
                break;
            }
        }
        col_alive[e] = false;
        if (pivot < 0) {
            steps.push_back({e, MinorOp::Delete});
            continue;
        }
        for (int i = 0; i < a.rows(); ++i)
            if (i != pivot && a.get(i, e)) a.xor_row(i, pivot);
        row_alive[pivot] = false;
        steps.push_back({e, MinorOp::Contract});
    }

    std::vector<int> surviving;
    for (int c = 0; c < a.cols(); ++c)
        if (col_alive[c]) surviving.push_back(c);
    std::vector<int> kept_rows;
    for (int r = 0; r < a.rows(); ++r)
        if (row_alive[r]) kept_rows.push_back(r);

    GF2Matrix rep(static_cast<int>(kept_rows.size()), static_cast<int>(surviving.size()));
    for (size_t i = 0; i < kept_rows.size(); ++i)
        for (size_t j = 0; j < surviving.size(); ++j)
            if (a.get(kept_rows[i], surviving[j])) rep.set(static_cast<int>(i),
                                                           static_cast<int>(j), 1);
    std::vector<std::string> labels;
    if (!m.labels.empty())
        for (int c : surviving) labels.push_back(m.labels[c]);
    BinaryMatroid result{std::move(rep), std::move(labels)};
    if (rank(result) != kept_rank - contract_rank)
        throw VerificationError("minor: rank drop does not match the contracted rank");
    return MinorTrace{std::move(steps), std::move(result), std::move(surviving)};
}

SetRelation set_relation(const ElementSet& x, const ElementSet& y,
                         const ElementSet& universe) {
    if (!is_subset(x, universe) || !is_subset(y, universe))
        throw std::invalid_argument("set_relation: arguments must lie inside the universe");
    SetRelation r{};
    r.parallel = is_disjoint(x, y);
    bool xy = is_subset(x, y), yx = is_subset(y, x);
    r.nested_or_equal = xy || yx;
    r.nested_strict = (xy || yx) && x != y;
    r.bowtie = set_union(x, y) == universe;
    r.parallel_or_bowtie = r.parallel || r.bowtie;
    return r;
}

}  // namespace bmt
