// Arithmetic in the cycle space of a reduced instance: the sums D_I, circuit
// tests for D_I offset by C1/C2/both, decomposition of a non-circuit sum into
// an I-triple, sign and block profiles, and the triple-extension step.
#pragma once

#include <vector>

#include "bmt/common.hpp"
#include "bmt/linkage.hpp"

namespace bmt {

// Which circuit(s) the sum D_I is offset by.
enum class Side { C1, C2, Both };

// The offset cycle H of a triple; it is always one of the four cycles that
// live inside C1 u C2.
enum class HTag { Empty, C1, C2, C1C2 };

struct ITriple {
    std::vector<int> s1;  // ascending indices into [t]
    std::vector<int> s2;
    HTag h = HTag::Empty;
    ElementSet g1;  // the cycle containing x_min
    ElementSet g2;  // the rest
    Side side = Side::C1;
};

struct SignProfile {
    std::vector<int> tau;    // 1 where the j-th smallest index sits in s1
    std::vector<int> sigma;  // run lengths of tau
    std::vector<int> omega;  // prefix sums of sigma, omega[0] = 0
};

// The element set of the offset tag within an instance.
ElementSet h_set(const ReducedInstance& ri, HTag h);

// Symmetric difference of the chosen fundamental circuits (indices into
// [0, t)); the empty index set gives the empty cycle.
ElementSet d_sum(const ReducedInstance& ri, const std::vector<int>& idx);

// True iff D_I offset by the chosen side is a circuit of n. The index set
// must be nonempty.
bool circuit_sum_test(const ReducedInstance& ri, const std::vector<int>& idx, Side side);

// Check every invariant of a triple against its instance; throws
// VerificationError naming the first violated condition.
void assert_triple(const ReducedInstance& ri, const ITriple& tr);

// Decompose the non-circuit cycle D_I offset by side into circuit components
// (repeatedly extracting the lexicographically least circuit), group the
// component holding the least retained element against the rest, and return
// the resulting verified triple.
ITriple split_to_triple(const ReducedInstance& ri, const std::vector<int>& idx, Side side);

// Sign vector tau, run-length blocks sigma, and prefix sums omega of a triple.
SignProfile sign_of(const ReducedInstance& ri, const ITriple& tr);

// Given a block profile sigma = s_1..s_l, the family offset h, and disjoint
// consecutive index sets Q_1 < ... < Q_l with |Q_i| >= s_i of matching
// parity, build the extended triple (odd-position Q's against even-position
// Q's, same offset) and verify it in full.
ITriple extend_triple(const ReducedInstance& ri, const std::vector<int>& sigma, HTag h,
                      const std::vector<std::vector<int>>& q_sets);

}  // namespace bmt
