#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "bmt/linkage.hpp"
#include "bmt/matroid.hpp"

#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using bmt::BinaryMatroid;
using bmt::ElementSet;

namespace {

// Two disjoint random sets of the given sizes over 0..n-1.
std::pair<ElementSet, ElementSet> random_pair(std::mt19937& gen, int n, int xs, int ys) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    ElementSet x(perm.begin(), perm.begin() + xs);
    ElementSet y(perm.begin() + xs, perm.begin() + xs + ys);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return {x, y};
}

}  // namespace

TEST_CASE("kappa on named instances") {
    for (int m = 3; m <= 6; ++m) {
        BinaryMatroid cl = helpers::matroid(fixtures::circular_ladder(m));
        CHECK(bmt::kappa(cl, fixtures::ladder_c1(m), fixtures::ladder_c2(m)) == m - 1);
    }
    BinaryMatroid two = helpers::matroid(fixtures::disjoint_cycles(3, 3));
    CHECK(bmt::kappa(two, {0, 1, 2}, {3, 4, 5}) == 0);
}

TEST_CASE("kappa equals exhaustive enumeration") {
    std::mt19937 gen(61);
    for (int trial = 0; trial < 120; ++trial) {
        int r = 3 + static_cast<int>(gen() % 3), n = 6 + static_cast<int>(gen() % 5);
        oracle::Mat a = fixtures::random_mat(r, n, gen());
        BinaryMatroid m = helpers::matroid(a);
        auto [x, y] = random_pair(gen, n, 1 + gen() % 2, 1 + gen() % 2);
        CHECK(bmt::kappa(m, x, y) == oracle::kappa(a, x, y));
    }
}

TEST_CASE("kappa input validation and budget") {
    BinaryMatroid prism = helpers::matroid(fixtures::circular_ladder(3));
    CHECK_THROWS_AS(bmt::kappa(prism, {0, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(bmt::kappa(prism, {0}, {99}), std::out_of_range);
    CHECK_THROWS_AS(bmt::kappa(prism, {-1}, {3}), std::out_of_range);
    CHECK_THROWS_AS(bmt::kappa(prism, {0}, {8}, 3), bmt::BudgetError);
    // Exactly at budget (9 elements, 7 free): no throw, oracle value.
    CHECK(bmt::kappa(prism, {0}, {8}, 7) ==
          oracle::kappa(fixtures::circular_ladder(3), {0}, {8}));
}

TEST_CASE("tutte_reduce post-conditions") {
    std::mt19937 gen(71);
    int done = 0;
    while (done < 80) {
        int r = 3 + static_cast<int>(gen() % 3), n = 6 + static_cast<int>(gen() % 5);
        oracle::Mat a = fixtures::random_mat(r, n, gen());
        BinaryMatroid m = helpers::matroid(a);
        auto [x, y] = random_pair(gen, n, 1 + gen() % 3, 1 + gen() % 3);
        int k = bmt::kappa(m, x, y);
        bmt::MinorTrace t = bmt::tutte_reduce(m, x, y);
        CHECK(t.surviving == bmt::set_union(x, y));
        // kappa, local connectivity, and both restrictions survive intact.
        ElementSet nx, ny;
        for (size_t i = 0; i < t.surviving.size(); ++i)
            (bmt::contains(x, t.surviving[i]) ? nx : ny).push_back(static_cast<int>(i));
        CHECK(bmt::kappa(t.result, nx, ny) == k);
        CHECK(bmt::local_pi(t.result, nx, ny) == k);
        // Restrictions to X and to Y are unchanged as matroids: every subset
        // keeps its rank (representations differ by the contraction pivots).
        for (const auto& [orig, pos] : {std::pair{x, nx}, std::pair{y, ny}}) {
            int sz = static_cast<int>(orig.size());
            for (int mask = 0; mask < (1 << sz); ++mask) {
                ElementSet so, sp;
                for (int b = 0; b < sz; ++b)
                    if (mask >> b & 1) {
                        so.push_back(orig[b]);
                        sp.push_back(pos[b]);
                    }
                CHECK(bmt::rank_of(t.result, sp) == bmt::rank_of(m, so));
            }
        }
        CHECK(t.steps.size() == static_cast<size_t>(n) - t.surviving.size());
        ++done;
    }
}

TEST_CASE("tutte_reduce on the prism keeps the triangles") {
    BinaryMatroid prism = helpers::matroid(fixtures::circular_ladder(3));
    ElementSet c1 = fixtures::ladder_c1(3), c2 = fixtures::ladder_c2(3);
    bmt::MinorTrace t = bmt::tutte_reduce(prism, c1, c2);
    CHECK(t.surviving == ElementSet{0, 1, 2, 3, 4, 5});
    CHECK(bmt::local_pi(t.result, {0, 1, 2}, {3, 4, 5}) == 2);
    CHECK(bmt::is_circuit(t.result, {0, 1, 2}));
    CHECK(bmt::is_circuit(t.result, {3, 4, 5}));
}

TEST_CASE("spanning_reduce") {
    // Prism plus an extra isolated-cycle component: the extra elements lie
    // outside cl(C1 u C2) and must be removed while kappa is preserved.
    std::vector<fixtures::Edge> e = fixtures::circular_ladder_edges(3);
    e.emplace_back(6, 7);
    e.emplace_back(7, 8);
    e.emplace_back(8, 6);
    BinaryMatroid m = helpers::matroid(fixtures::incidence(9, e));
    ElementSet c1 = fixtures::ladder_c1(3), c2 = fixtures::ladder_c2(3);
    bmt::MinorTrace t = bmt::spanning_reduce(m, c1, c2);
    ElementSet surv = t.surviving;
    CHECK(bmt::is_subset(bmt::set_union(c1, c2), surv));
    // X u Y spans the result.
    ElementSet pos1, pos2;
    for (size_t i = 0; i < surv.size(); ++i) {
        if (bmt::contains(c1, surv[i])) pos1.push_back(static_cast<int>(i));
        if (bmt::contains(c2, surv[i])) pos2.push_back(static_cast<int>(i));
    }
    ElementSet both = bmt::set_union(pos1, pos2);
    CHECK(bmt::rank_of(t.result, both) == bmt::rank(t.result));
    CHECK(bmt::kappa(t.result, pos1, pos2) == bmt::kappa(m, c1, c2));
}

TEST_CASE("build_reduced_instance on the prism (pinned)") {
    BinaryMatroid prism = helpers::matroid(fixtures::circular_ladder(3));
    bmt::ReducedInstance ri =
        bmt::build_reduced_instance(prism, fixtures::ladder_c1(3), fixtures::ladder_c2(3));
    CHECK(ri.t == 2);
    CHECK(ri.n.ground_size() == 8);
    CHECK(ri.c1 == ElementSet{0, 1, 2});
    CHECK(ri.c2 == ElementSet{3, 4, 5});
    CHECK(ri.x == std::vector<int>{6, 7});
    REQUIRE(ri.d.size() == 2);
    CHECK(ri.d[0] == ElementSet{0, 3, 6});
    CHECK(ri.d[1] == ElementSet{0, 1, 3, 4, 7});
    // In original element ids (through the trace): {1,4,8} and {1,2,4,5,9},
    // 1-based.
    ElementSet d0_orig, d1_orig;
    for (int e : ri.d[0]) d0_orig.push_back(ri.trace.surviving[e]);
    for (int e : ri.d[1]) d1_orig.push_back(ri.trace.surviving[e]);
    CHECK(d0_orig == ElementSet{0, 3, 7});
    CHECK(d1_orig == ElementSet{0, 1, 3, 4, 8});
    REQUIRE(ri.trace.steps.size() == 1);
    CHECK(ri.trace.steps[0].element == 6);
    CHECK(ri.trace.steps[0].op == bmt::MinorOp::Contract);
    CHECK(ri.trace.surviving == std::vector<int>{0, 1, 2, 3, 4, 5, 7, 8});
}

TEST_CASE("reduced-instance invariants on circular ladders") {
    for (int m = 3; m <= 6; ++m) {
        BinaryMatroid cl = helpers::matroid(fixtures::circular_ladder(m));
        ElementSet c1 = fixtures::ladder_c1(m), c2 = fixtures::ladder_c2(m);
        bmt::ReducedInstance ri = bmt::build_reduced_instance(cl, c1, c2);
        CHECK(ri.t == m - 1);
        // Ground set is exactly C1 u C2 u X.
        ElementSet ground = bmt::set_union(bmt::set_union(ri.c1, ri.c2), ri.x);
        CHECK(static_cast<int>(ground.size()) == ri.n.ground_size());
        // kappa survives and the nullity is t + 2.
        CHECK(bmt::kappa(ri.n, ri.c1, ri.c2) == m - 1);
        CHECK(ri.n.ground_size() - bmt::rank(ri.n) == ri.t + 2);
        CHECK(bmt::is_circuit(ri.n, ri.c1));
        CHECK(bmt::is_circuit(ri.n, ri.c2));
        for (int i = 0; i < ri.t; ++i) {
            // d[i] is the fundamental circuit of x_i and meets both circuits
            // properly (nonempty on both sides of each).
            CHECK(bmt::is_circuit(ri.n, ri.d[i]));
            CHECK(bmt::contains(ri.d[i], ri.x[i]));
            for (const ElementSet* c : {&ri.c1, &ri.c2}) {
                ElementSet inter = bmt::set_intersection(ri.d[i], *c);
                CHECK(!inter.empty());
                CHECK(inter != *c);
            }
        }
        // C1 and C2 are the only circuits inside C1 u C2.
        ElementSet both = bmt::set_union(ri.c1, ri.c2);
        bmt::MinorTrace restr =
            bmt::minor(ri.n, oracle::complement(ri.n.ground_size(), both), {});
        std::vector<ElementSet> inside = bmt::circuits(restr.result);
        CHECK(inside.size() == 2);
    }
}

TEST_CASE("build_reduced_instance input validation") {
    BinaryMatroid prism = helpers::matroid(fixtures::circular_ladder(3));
    // Overlapping or non-skew circuit pairs are rejected.
    CHECK_THROWS_AS(bmt::build_reduced_instance(prism, {0, 1, 2}, {2, 7, 8}),
                    std::invalid_argument);
    CHECK_THROWS_AS(bmt::build_reduced_instance(prism, {0, 1, 2}, {0, 1, 2}),
                    std::invalid_argument);
    // Non-circuits are rejected.
    CHECK_THROWS_AS(bmt::build_reduced_instance(prism, {0, 1}, {3, 4, 5}),
                    std::invalid_argument);
    // Skew but joint: the two triangles of K4 overlap, pick disjoint cycles.
    BinaryMatroid two = helpers::matroid(fixtures::disjoint_cycles(3, 4));
    bmt::ReducedInstance ri = bmt::build_reduced_instance(two, {0, 1, 2}, {3, 4, 5, 6});
    CHECK(ri.t == 0);
    CHECK(ri.d.empty());
    CHECK(ri.n.ground_size() == 7);
}
