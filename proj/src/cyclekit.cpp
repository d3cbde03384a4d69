#include "bmt/cyclekit.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bmt {

namespace {

ElementSet side_set(const ReducedInstance& ri, Side side) {
    switch (side) {
        case Side::C1: return ri.c1;
        case Side::C2: return ri.c2;
        default: return set_union(ri.c1, ri.c2);
    }
}

void check_indices(const ReducedInstance& ri, const std::vector<int>& idx, const char* who) {
    std::vector<int> s = idx;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument(std::string(who) + ": repeated index");
    for (int i : s)
        if (i < 0 || i >= ri.t)
            throw std::out_of_range(std::string(who) + ": index outside [0, t)");
}

// Lexicographically least circuit contained in z (as element ids of n), or
// empty when z spans an independent set.
ElementSet least_circuit_within(const BinaryMatroid& n, const ElementSet& z) {
    GF2Matrix sub = n.rep.select_columns(z);
    std::vector<GF2Vector> basis = kernel_basis(sub);
    int dim = static_cast<int>(basis.size());
    if (dim == 0) return {};
    if (dim > 26)
        throw BudgetError("least_circuit_within: restriction cycle space too large");
    ElementSet best;
    std::vector<std::uint8_t> cur(z.size(), 0);
    for (std::uint64_t step = 1; step < (1ull << dim); ++step) {
        int flip = std::countr_zero(step);
        for (size_t k = 0; k < z.size(); ++k) cur[k] ^= basis[flip][k];
        ElementSet support;
        for (size_t k = 0; k < z.size(); ++k)
            if (cur[k]) support.push_back(z[k]);
        if (!is_circuit(n, support)) continue;
        if (best.empty() || support < best) best = std::move(support);
    }
    return best;
}

HTag tag_of(const ReducedInstance& ri, const ElementSet& h) {
    if (h.empty()) return HTag::Empty;
    if (h == ri.c1) return HTag::C1;
    if (h == ri.c2) return HTag::C2;
    if (h == set_union(ri.c1, ri.c2)) return HTag::C1C2;
    throw VerificationError("triple offset is not one of the four cycles in C1 u C2");
}

}  // namespace

ElementSet h_set(const ReducedInstance& ri, HTag h) {
    switch (h) {
        case HTag::Empty: return {};
        case HTag::C1: return ri.c1;
        case HTag::C2: return ri.c2;
        default: return set_union(ri.c1, ri.c2);
    }
}

ElementSet d_sum(const ReducedInstance& ri, const std::vector<int>& idx) {
    check_indices(ri, idx, "d_sum");
    ElementSet acc;
    for (int i : idx) acc = sym_diff(acc, ri.d[i]);
    return acc;
}

bool circuit_sum_test(const ReducedInstance& ri, const std::vector<int>& idx, Side side) {
    if (idx.empty()) throw std::invalid_argument("circuit_sum_test: empty index set");
    return is_circuit(ri.n, sym_diff(d_sum(ri, idx), side_set(ri, side)));
}

void assert_triple(const ReducedInstance& ri, const ITriple& tr) {
    auto fail = [](const char* msg) { throw VerificationError(std::string("triple: ") + msg); };
    if (tr.s1.empty() || tr.s2.empty()) fail("both index parts must be nonempty");
    check_indices(ri, tr.s1, "triple");
    check_indices(ri, tr.s2, "triple");
    if (!is_disjoint(tr.s1, tr.s2)) fail("index parts overlap");
    if (std::min(tr.s1.front(), tr.s2.front()) != tr.s1.front())
        fail("least index must lie in the first part");

    ElementSet ds1 = d_sum(ri, tr.s1), ds2 = d_sum(ri, tr.s2);
    ElementSet whole = sym_diff(d_sum(ri, set_union(tr.s1, tr.s2)), side_set(ri, tr.side));
    ElementSet hs = h_set(ri, tr.h);
    if (!is_disjoint(tr.g1, tr.g2)) fail("cycles are not disjoint");
    if (sym_diff(tr.g1, tr.g2) != whole) fail("cycles do not recompose the offset sum");
    if (!is_cycle(ri.n, tr.g1) || !is_cycle(ri.n, tr.g2)) fail("parts are not cycles");
    ElementSet c12 = set_union(ri.c1, ri.c2);
    for (const ElementSet* g : {&tr.g1, &tr.g2})
        if (g->empty() || *g == ri.c1 || *g == ri.c2 || *g == c12)
            fail("a part is one of the trivial cycles");
    ElementSet xset(ri.x.begin(), ri.x.end());
    if (set_intersection(tr.g1, xset) != set_intersection(ds1, xset))
        fail("first cycle has the wrong retained elements");
    if (set_intersection(tr.g2, xset) != set_intersection(ds2, xset))
        fail("second cycle has the wrong retained elements");
    if (sym_diff(ds1, tr.g1) != hs) fail("offset of the first cycle is not H");
    if (sym_diff(ds2, tr.g2) != sym_diff(hs, side_set(ri, tr.side)))
        fail("offset of the second cycle is not H plus the side");

    // The partition-lemma relations, by side: the offset side carries the
    // strict nesting, the other side is parallel-or-bowtie.
    SetRelation rel1 = set_relation(set_intersection(ds1, ri.c1),
                                    set_intersection(ds2, ri.c1), ri.c1);
    SetRelation rel2 = set_relation(set_intersection(ds1, ri.c2),
                                    set_intersection(ds2, ri.c2), ri.c2);
    switch (tr.side) {
        case Side::C1:
            if (!rel1.nested_strict) fail("C1 parts are not strictly nested");
            if (!rel2.parallel_or_bowtie) fail("C2 parts are neither parallel nor bowtie");
            break;
        case Side::C2:
            if (!rel2.nested_strict) fail("C2 parts are not strictly nested");
            if (!rel1.parallel_or_bowtie) fail("C1 parts are neither parallel nor bowtie");
            break;
        default:
            if (!rel1.nested_strict) fail("C1 parts are not strictly nested");
            if (!rel2.nested_strict) fail("C2 parts are not strictly nested");
            break;
    }
}

ITriple split_to_triple(const ReducedInstance& ri, const std::vector<int>& idx, Side side) {
    if (idx.empty()) throw std::invalid_argument("split_to_triple: empty index set");
    if (circuit_sum_test(ri, idx, side))
        throw std::invalid_argument("split_to_triple: the offset sum is already a circuit");
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());

    ElementSet z = sym_diff(d_sum(ri, sorted), side_set(ri, side));
    std::vector<ElementSet> components;
    ElementSet rest = z;
    while (!rest.empty()) {
        ElementSet c = least_circuit_within(ri.n, rest);
        if (c.empty())
            throw VerificationError("split_to_triple: leftover cycle without a circuit");
        components.push_back(c);
        rest = set_difference(rest, c);
    }

    int least_x = ri.n.ground_size();
    for (int i : sorted) least_x = std::min(least_x, ri.x[i]);
    ITriple tr;
    tr.side = side;
    for (const ElementSet& c : components) {
        if (contains(c, least_x))
            tr.g1 = c;
        else
            tr.g2 = set_union(tr.g2, c);
    }
    if (tr.g1.empty())
        throw VerificationError("split_to_triple: no component holds the least element of X_I");
    for (int i : sorted)
        (contains(tr.g1, ri.x[i]) ? tr.s1 : tr.s2).push_back(i);
    tr.h = tag_of(ri, sym_diff(d_sum(ri, tr.s1), tr.g1));
    assert_triple(ri, tr);
    return tr;
}

SignProfile sign_of(const ReducedInstance& ri, const ITriple& tr) {
    (void)ri;
    std::vector<int> all = set_union(tr.s1, tr.s2);
    SignProfile p;
    for (int i : all) p.tau.push_back(contains(tr.s1, i) ? 1 : 0);
    if (p.tau.empty() || p.tau.front() != 1)
        throw VerificationError("sign_of: sign vector must start with 1");
    for (size_t i = 0; i < p.tau.size(); ++i) {
        if (i > 0 && p.tau[i] == p.tau[i - 1])
            ++p.sigma.back();
        else
            p.sigma.push_back(1);
    }
    p.omega.push_back(0);
    for (int s : p.sigma) p.omega.push_back(p.omega.back() + s);
    return p;
}

ITriple extend_triple(const ReducedInstance& ri, const std::vector<int>& sigma, HTag h,
                      const std::vector<std::vector<int>>& q_sets) {
    size_t l = sigma.size();
    if (l < 2) throw std::invalid_argument("extend_triple: need at least two blocks");
    if (q_sets.size() != l)
        throw std::invalid_argument("extend_triple: one index set per block required");
    for (size_t i = 0; i < l; ++i) {
        if (sigma[i] < 1) throw std::invalid_argument("extend_triple: block sizes are positive");
        check_indices(ri, q_sets[i], "extend_triple");
        if (!std::is_sorted(q_sets[i].begin(), q_sets[i].end()))
            throw std::invalid_argument("extend_triple: index sets must be ascending");
        int size = static_cast<int>(q_sets[i].size());
        if (size < sigma[i] || (size - sigma[i]) % 2 != 0)
            throw std::invalid_argument(
                "extend_triple: |Q_i| must be >= s_i with the same parity");
        if (i > 0 && q_sets[i - 1].back() >= q_sets[i].front())
            throw std::invalid_argument("extend_triple: index sets must be consecutive");
    }
    ITriple tr;
    tr.side = Side::C1;
    tr.h = h;
    for (size_t i = 0; i < l; ++i) {
        std::vector<int>& part = (i % 2 == 0) ? tr.s1 : tr.s2;
        part.insert(part.end(), q_sets[i].begin(), q_sets[i].end());
    }
    std::sort(tr.s1.begin(), tr.s1.end());
    std::sort(tr.s2.begin(), tr.s2.end());
    ElementSet hs = h_set(ri, h);
    tr.g1 = sym_diff(d_sum(ri, tr.s1), hs);
    tr.g2 = sym_diff(sym_diff(d_sum(ri, tr.s2), hs), ri.c1);
    assert_triple(ri, tr);
    return tr;
}

}  // namespace bmt
