#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "bmt/witness.hpp"

#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using bmt::BinaryMatroid;
using bmt::Certificate;
using bmt::CertifyOutcome;
using bmt::ElementSet;
using bmt::ReducedInstance;
using bmt::Scenario;
using bmt::WitnessConfig;

namespace {

BinaryMatroid prism() { return helpers::matroid(fixtures::circular_ladder(3)); }

Certificate prism_cert(int k) {
    CertifyOutcome out =
        bmt::certify(prism(), fixtures::ladder_c1(3), fixtures::ladder_c2(3), k);
    REQUIRE(out.certificate.has_value());
    return *out.certificate;
}

}  // namespace

TEST_CASE("monochromatic_subset") {
    auto constant = [](const std::vector<int>&) { return 7; };
    CHECK(bmt::monochromatic_subset(6, 2, constant, 3) == std::vector<int>{0, 1, 2});
    // q = r is vacuously monochromatic: the first subset wins.
    auto parity = [](const std::vector<int>& s) { return (s[0] + s[1]) % 2; };
    CHECK(bmt::monochromatic_subset(4, 2, parity, 2) == std::vector<int>{0, 1});

    // Pentagon edge coloring of K5 has no monochromatic triangle...
    auto ring5 = [](const std::vector<int>& s) {
        int d = s[1] - s[0];
        return (d == 1 || d == 4) ? 1 : 0;
    };
    CHECK_FALSE(bmt::monochromatic_subset(5, 2, ring5, 3).has_value());
    // ...but every 2-coloring of K6 has one (Ramsey number R(3,3) = 6).
    auto ring6 = [](const std::vector<int>& s) {
        int d = s[1] - s[0];
        return (d == 1 || d == 5) ? 1 : 0;
    };
    std::optional<std::vector<int>> tri = bmt::monochromatic_subset(6, 2, ring6, 3);
    REQUIRE(tri.has_value());
    std::vector<int>& t = *tri;
    int c01 = ring6({t[0], t[1]});
    CHECK(ring6({t[0], t[2]}) == c01);
    CHECK(ring6({t[1], t[2]}) == c01);

    CHECK_THROWS_AS(bmt::monochromatic_subset(4, 3, constant, 2), std::invalid_argument);
    CHECK_THROWS_AS(bmt::monochromatic_subset(4, 2, constant, 5), std::invalid_argument);
}

TEST_CASE("prism k=4: pinned S1 certificate") {
    Certificate c = prism_cert(4);
    CHECK(c.scenario == Scenario::S1);
    CHECK(c.search_path == "s1");
    CHECK(c.k == 4);
    CHECK(c.c1 == ElementSet{0, 1, 2});
    CHECK(c.c2 == ElementSet{3, 4, 5});
    CHECK(c.witness_c == ElementSet{1, 4, 7, 8});
    CHECK(c.circumference_n == 5);
    CHECK(c.arithmetic.at("bound_lhs") == 10);
    CHECK(c.arithmetic.at("two_circ_n") == 10);
    CHECK(c.arithmetic.at("c_sum_c1_size") == 5);
    CHECK(c.arithmetic.at("c_sum_c2_size") == 5);
    CHECK(c.arithmetic.at("surplus") == 2);
    CHECK(c.h_convention == "least-circuit-component");
    REQUIRE(c.trace.steps.size() == 1);
    CHECK(c.trace.steps[0].element == 6);
    CHECK(c.trace.steps[0].op == bmt::MinorOp::Contract);
    CHECK_NOTHROW(bmt::verify_certificate(c));
}

TEST_CASE("prism k=0: smallest S1 witness") {
    Certificate c = prism_cert(0);
    CHECK(c.scenario == Scenario::S1);
    CHECK(c.witness_c == ElementSet{0, 3, 7});
    CHECK(c.arithmetic.at("surplus") == 1);
    CHECK(c.arithmetic.at("c_sum_c1_size") == 4);
    CHECK_NOTHROW(bmt::verify_certificate(c));
}

TEST_CASE("prism k=5: certification fails with a search report") {
    CertifyOutcome out =
        bmt::certify(prism(), fixtures::ladder_c1(3), fixtures::ladder_c2(3), 5);
    CHECK_FALSE(out.certificate.has_value());
    CHECK(out.failure.find("not certified within budgets") != std::string::npos);
    CHECK(out.failure.find("search exhaustion") != std::string::npos);
    CHECK(out.failure.find("|I| = 2") != std::string::npos);
}

TEST_CASE("circular ladder CL_6 at k=2") {
    BinaryMatroid cl6 = helpers::matroid(fixtures::circular_ladder(6));
    ElementSet c1 = fixtures::ladder_c1(6), c2 = fixtures::ladder_c2(6);
    CertifyOutcome out = bmt::certify(cl6, c1, c2, 2);
    REQUIRE(out.certificate.has_value());
    CHECK(out.certificate->scenario == Scenario::S1);
    CHECK(out.certificate->witness_c == ElementSet{0, 6, 13});
    CHECK(out.certificate->circumference_n == 11);
    CHECK_NOTHROW(bmt::verify_certificate(*out.certificate));

    // The disjoint-pair scenario has no witness here: the pipeline gets no
    // usable profile and the exhaustive pair scan comes up empty.
    ReducedInstance ri = bmt::build_reduced_instance(cl6, c1, c2);
    CHECK_FALSE(bmt::find_s2(ri, 2).has_value());
}

TEST_CASE("direct bound on a disjoint pair of triangles") {
    BinaryMatroid two = helpers::matroid(fixtures::disjoint_cycles(3, 3));
    CertifyOutcome out = bmt::certify(two, {0, 1, 2}, {3, 4, 5}, 0);
    REQUIRE(out.certificate.has_value());
    const Certificate& c = *out.certificate;
    CHECK(c.scenario == Scenario::DirectBound);
    CHECK(c.search_path == "direct-bound");
    CHECK(c.circumference_n == 3);
    CHECK(c.arithmetic.at("two_circ_n") == 6);
    CHECK(c.arithmetic.at("bound_lhs") == 6);
    CHECK(c.witness_c.empty());
    CHECK(c.witness_c1p.empty());
    CHECK_NOTHROW(bmt::verify_certificate(c));

    // One notch higher the direct bound falls short and nothing certifies.
    CertifyOutcome miss = bmt::certify(two, {0, 1, 2}, {3, 4, 5}, 1);
    CHECK_FALSE(miss.certificate.has_value());
    CHECK(miss.failure.find("direct bound") != std::string::npos);
}

TEST_CASE("staircase: the S2 pipeline completes at pattern order 4") {
    BinaryMatroid st = helpers::matroid(fixtures::staircase_identity(6, 8, 8));
    ElementSet c1 = fixtures::constructed_c1(8), c2 = fixtures::constructed_c2(8, 8);
    ReducedInstance ri = bmt::build_reduced_instance(st, c1, c2);
    CHECK(ri.t == 6);

    WitnessConfig cfg;
    cfg.pattern_order = 4;
    std::optional<Certificate> s2 = bmt::find_s2(ri, 2, cfg);
    REQUIRE(s2.has_value());
    CHECK(s2->scenario == Scenario::S2);
    CHECK(s2->search_path == "s2-pipeline");
    CHECK(s2->witness_c1p == ElementSet{1, 8, 9, 16, 17});
    CHECK(s2->witness_c2p == ElementSet{3, 10, 11, 18, 19});
    CHECK(s2->arithmetic.at("sym_size") == 14);
    CHECK(s2->arithmetic.at("sum1_size") == 15);
    CHECK(s2->arithmetic.at("sum2_size") == 15);
    CHECK_NOTHROW(bmt::verify_certificate(*s2));

    // With the default order the extracted profile cannot fit and the
    // search falls back to exhaustive pairs.
    std::optional<Certificate> fallback = bmt::find_s2(ri, 2);
    REQUIRE(fallback.has_value());
    CHECK(fallback->search_path == "s2-exhaustive");
    CHECK_NOTHROW(bmt::verify_certificate(*fallback));

    // At k=4 no S1 witness exists (pair sums offset by C1 never stay
    // circuits here) and certify lands on the exhaustive S2 scan.
    CHECK_FALSE(bmt::find_s1(ri, 4, cfg).has_value());
    CertifyOutcome out = bmt::certify(st, c1, c2, 4, cfg);
    REQUIRE(out.certificate.has_value());
    CHECK(out.certificate->scenario == Scenario::S2);
    CHECK(out.certificate->search_path == "s2-exhaustive");
    CHECK(out.certificate->witness_c1p == ElementSet{0, 8, 16});
    CHECK(out.certificate->witness_c2p == ElementSet{2, 9, 10, 17, 18});
    CHECK_NOTHROW(bmt::verify_certificate(*out.certificate));
}

TEST_CASE("verify_bound_oracle") {
    BinaryMatroid p = prism();
    ElementSet c1 = fixtures::ladder_c1(3), c2 = fixtures::ladder_c2(3);
    CHECK(bmt::verify_bound_oracle(p, c1, c2, 6));
    CHECK_FALSE(bmt::verify_bound_oracle(p, c1, c2, 7));
    BinaryMatroid two = helpers::matroid(fixtures::disjoint_cycles(3, 3));
    CHECK(bmt::verify_bound_oracle(two, {0, 1, 2}, {3, 4, 5}, 0));
    CHECK_FALSE(bmt::verify_bound_oracle(two, {0, 1, 2}, {3, 4, 5}, 1));
}

TEST_CASE("verify_certificate rejects tampering") {
    Certificate good = prism_cert(4);
    CHECK_NOTHROW(bmt::verify_certificate(good));

    Certificate bad = good;
    bad.k = 5;
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);

    bad = good;
    bad.witness_c = ElementSet{0, 3, 7};
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);

    bad = good;
    bad.witness_c = ElementSet{1, 4, 7, 99};
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);

    bad = good;
    bad.arithmetic["surplus"] = 3;
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);

    bad = good;
    bad.arithmetic.erase("bound_lhs");
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);

    bad = good;
    bad.circumference_n = 6;
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);

    bad = good;
    bad.scenario = Scenario::DirectBound;
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);

    bad = good;
    bad.search_path = "s2-pipeline";
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);

    bad = good;
    bad.h_convention = "leftmost";
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);

    bad = good;
    bad.c1 = ElementSet{0, 1, 3};
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);

    bad = good;
    bad.trace.surviving.pop_back();
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);

    bad = good;
    bad.trace.result = BinaryMatroid{};
    CHECK_THROWS_AS(bmt::verify_certificate(bad), bmt::VerificationError);
}

TEST_CASE("certify input validation") {
    BinaryMatroid p = prism();
    ElementSet c1 = fixtures::ladder_c1(3), c2 = fixtures::ladder_c2(3);
    CHECK_THROWS_AS(bmt::certify(p, c1, c2, -1), std::invalid_argument);
    WitnessConfig cfg;
    cfg.max_subset_size = 0;
    CHECK_THROWS_AS(bmt::certify(p, c1, c2, 0, cfg), std::invalid_argument);
    cfg = {};
    cfg.pattern_order = 0;
    CHECK_THROWS_AS(bmt::certify(p, c1, c2, 0, cfg), std::invalid_argument);
    cfg = {};
    cfg.sample_budget = -2;
    CHECK_THROWS_AS(bmt::certify(p, c1, c2, 0, cfg), std::invalid_argument);
    // Not a skew pair: two quadrilaterals of CL_4 sharing no element but
    // with positive local connectivity are rejected upstream.
    CHECK_THROWS_AS(bmt::certify(p, c1, ElementSet{0, 1, 2}, 0), std::invalid_argument);
}

TEST_CASE("certificates never contradict the brute-force oracle") {
    std::mt19937 gen(131);
    int produced = 0, attempted = 0;
    while (attempted < 40) {
        oracle::Mat a = fixtures::random_mat(4 + gen() % 2, 8 + gen() % 2, gen());
        BinaryMatroid m = helpers::matroid(a);
        std::vector<ElementSet> cs = bmt::circuits(m);
        // First disjoint skew pair, if any.
        bool found = false;
        for (size_t i = 0; i < cs.size() && !found; ++i)
            for (size_t j = 0; j < cs.size() && !found; ++j) {
                if (i == j || !bmt::is_disjoint(cs[i], cs[j])) continue;
                if (!bmt::is_skew(m, cs[i], cs[j])) continue;
                found = true;
                ++attempted;
                for (int k : {0, 1, 2}) {
                    CertifyOutcome out = bmt::certify(m, cs[i], cs[j], k);
                    if (!out.certificate) continue;
                    ++produced;
                    CHECK_NOTHROW(bmt::verify_certificate(*out.certificate));
                    // A verified certificate implies the original bound.
                    CHECK(bmt::verify_bound_oracle(m, cs[i], cs[j], k));
                }
            }
        if (!found) ++attempted;  // instance without a usable pair still counts
    }
    CHECK(produced > 10);
}
