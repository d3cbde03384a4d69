// Combinatorics on simple 0/1 matrices and integer sequences: unavoidable
// configurations (identity, complemented identity, lower triangular), the
// (2l)^(2^l) threshold, Dilworth chain-or-antichain extraction, balanced
// sequences, and the four-set interleaving construction.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bmt/common.hpp"
#include "bmt/gf2.hpp"

namespace bmt {

// (2l)^(2^l), exactly.
boost::multiprecision::cpp_int beta(int l);

enum class PatternKind { Identity, ComplementIdentity, LowerTriangular };

// A located configuration: pattern(i, j) = a(row_indices[row_perm[i]],
//                                            col_indices[col_perm[j]]).
struct PatternHit {
    PatternKind kind = PatternKind::Identity;
    int order = 0;
    std::vector<int> row_indices;  // ascending
    std::vector<int> col_indices;  // ascending
    std::vector<int> row_perm;
    std::vector<int> col_perm;
};

// True iff applying the permutations reproduces the pattern bit for bit.
bool hit_matches(const GF2Matrix& a, const PatternHit& hit);

// First configuration of the given order in a simple matrix (distinct rows
// required), searching kinds in the fixed order Identity, ComplementIdentity,
// LowerTriangular, and row/column selections lexicographically. Absent only
// when no such configuration exists (possible below the beta threshold).
std::optional<PatternHit> find_unavoidable(const GF2Matrix& a, int l);

enum class ChainKind { Chain, Antichain };

struct ChainResult {
    ChainKind kind = ChainKind::Chain;
    std::vector<int> items;  // chain: in relation order; antichain: ascending
};

// Given a strict partial order (less[i][j] means i < j; irreflexive and
// transitive, both checked), return a chain or antichain of size at least
// ceil(sqrt(n)): the longest chain when tall enough, otherwise the largest
// level set of the height function.
ChainResult chain_or_antichain(int n, const std::vector<std::vector<bool>>& less);

struct BalancedSeq {
    std::vector<int> s;   // source block sizes
    std::vector<int> t;   // extended block sizes, t_i >= s_i, same parity
    std::vector<int> mu;  // mu_0..mu_l with mu_{i-1} + mu_i = t_i
};

// Extend positive block sizes (even total, at least two blocks) to a balanced
// sequence: zero alternating sum with all alternating prefix sums
// nonnegative. Deterministic minimal sweep raising entries in steps of two.
BalancedSeq balance_extend(const std::vector<int>& s);

struct UInterleave {
    std::array<ElementSet, 4> u;                 // U_1..U_4
    std::vector<std::vector<ElementSet>> pieces;  // pieces[i][j] = U_{i+1, j+1}
    bool odd_branch = false;                      // built from an odd block count
};

// Allocate the blocks U_{i,j} as consecutive runs of [0, q) in the required
// interleaving order, with |U_{1,j}| = t_{2j-1}, |U_{4,j}| = t_{2j} and
// |U_{2,j}| = |U_{3,j}| = mu_j. Every ordering family and all pair-union
// size identities are asserted on the result.
UInterleave interleave_u_sets(const BalancedSeq& seq, int q);

}  // namespace bmt
