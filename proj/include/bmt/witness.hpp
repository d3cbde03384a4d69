// Witness search over a reduced instance: the single-cycle scenario (S1), the
// disjoint-pair scenario (S2) with its pattern/Ramsey extraction pipeline and
// exhaustive fallback, the end-to-end certifier, and the brute-force bound
// oracle every certificate is validated against.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bmt/common.hpp"
#include "bmt/linkage.hpp"

namespace bmt {

struct WitnessConfig {
    int max_subset_size = 6;  // cap on |I| (and on |V_i| in the fallback)
    int pattern_order = 2;    // q, the order of the second pattern hit
    int sample_budget = 64;   // p, how many fundamental circuits feed the pipeline
    unsigned seed = 1;        // recorded for reproducibility
};

enum class Scenario { S1, S2, DirectBound };

// A self-contained, re-verifiable witness that 2 c(N) >= |C1| + |C2| + k on
// the minor N the trace leads to. Every element set is written in origin ids
// of the matroid the certificate was produced from; trace.surviving maps
// positions of N back to those ids.
struct Certificate {
    Scenario scenario = Scenario::DirectBound;
    int k = 0;
    ElementSet c1, c2;
    ElementSet witness_c;                 // S1: the cycle C
    ElementSet witness_c1p, witness_c2p;  // S2: the disjoint cycles C1', C2'
    int circumference_n = 0;              // 0 when enumeration hit its budget
    std::map<std::string, long long> arithmetic;
    MinorTrace trace;
    std::string search_path;  // s1 | s2-pipeline | s2-exhaustive | direct-bound
    std::string h_convention = "least-circuit-component";
    unsigned seed = 1;
};

struct CertifyOutcome {
    std::optional<Certificate> certificate;
    std::string failure;  // nonempty exactly when no certificate was produced
};

// First q-subset of [0, n), in lexicographic order, all of whose r-subsets
// receive the same color; absent when the exhaustive scan finds none.
std::optional<std::vector<int>> monochromatic_subset(
    int n, int r, const std::function<int(const std::vector<int>&)>& color, int q);

// Search index sets I by increasing size then lexicographic order (sizes up
// to cfg.max_subset_size) for a cycle C = D_I with both offsets C Δ C1 and
// C Δ C2 circuits and |C - (C1 u C2)| = |I| >= ceil(k / 2); package the
// first hit as a verified certificate.
std::optional<Certificate> find_s1(const ReducedInstance& ri, int k,
                                   const WitnessConfig& cfg = {});

// Search for disjoint cycles C1' = D_{V1}, C2' = D_{V2} with both
// C1 Δ C2 Δ C_i' circuits and |(C1 u C2) Δ (C1' u C2')| >= k. The pattern
// pipeline (indicator matrices, two unavoidable-configuration hits, the
// replacement normalization, a profile-uniform subset, balancing and
// interleaving) is attempted first; any absent intermediate falls back to an
// exhaustive scan over index-set pairs.
std::optional<Certificate> find_s2(const ReducedInstance& ri, int k,
                                   const WitnessConfig& cfg = {});

// Build the reduced instance for the skew circuit pair and try S1, S2, then
// the direct bound 2 c(N) >= |C1| + |C2| + k by circuit enumeration. Every
// certificate re-verifies from primitives before it is returned; when no
// scenario lands within the budgets, the failure report says which searches
// were exhausted (it never claims the bound itself fails).
CertifyOutcome certify(const BinaryMatroid& m, const ElementSet& c1, const ElementSet& c2,
                       int k, const WitnessConfig& cfg = {});

// Brute-force truth of |c1| + |c2| <= 2 circumference(m) - k.
bool verify_bound_oracle(const BinaryMatroid& m, const ElementSet& c1, const ElementSet& c2,
                         int k);

// Re-check every claim of a certificate from primitive operations against
// the minor it carries; throws VerificationError at the first broken claim.
void verify_certificate(const Certificate& cert);

}  // namespace bmt
