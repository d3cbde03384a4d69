// Binary matroids represented by GF(2) matrices (columns = elements):
// rank, closure, circuits, cycles, minors, connectivity quantities, and
// element-set relations.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmt/common.hpp"
#include "bmt/gf2.hpp"

namespace bmt {

struct BinaryMatroid {
    GF2Matrix rep;
    // Optional display names, one per element when non-empty.
    std::vector<std::string> labels;

    int ground_size() const { return rep.cols(); }
};

// Vertex-edge incidence matrix over GF(2); a self-loop becomes a zero column
// (a matroid loop). Elements are labeled "u-v" with 1-based vertex ids.
BinaryMatroid incidence_matroid(int vertex_count,
                                const std::vector<std::pair<int, int>>& edges);

// GF(2) rank of the columns indexed by a; rank_of(empty) = 0.
int rank_of(const BinaryMatroid& m, const ElementSet& a);

// Rank of the whole ground set.
int rank(const BinaryMatroid& m);

// {e : rank_of(a + e) = rank_of(a)}; contains a and is idempotent.
ElementSet closure(const BinaryMatroid& m, const ElementSet& a);

// Minimal dependent set: the columns sum to zero and every proper subset is
// independent (equivalently, rank = |c| - 1 together with the zero sum).
bool is_circuit(const BinaryMatroid& m, const ElementSet& c);

// Disjoint union of circuits, i.e. the characteristic vector lies in the
// kernel of the representation; the empty set is a cycle.
bool is_cycle(const BinaryMatroid& m, const ElementSet& s);

// All circuits of size <= max_size (no bound when absent), sorted
// lexicographically. Enumerates the cycle space, so the nullity must be
// at most 26 (BudgetError otherwise).
std::vector<ElementSet> circuits(const BinaryMatroid& m,
                                 std::optional<int> max_size = std::nullopt);

// Size of a largest circuit; invalid_argument when no circuit exists.
int circumference(const BinaryMatroid& m);

// Connectivity function r(A) + r(E-A) - r(M); symmetric in A and E-A.
int lambda(const BinaryMatroid& m, const ElementSet& a);

// Local connectivity r(X) + r(Y) - r(X u Y); inputs may intersect.
int local_pi(const BinaryMatroid& m, const ElementSet& x, const ElementSet& y);

// Disjoint sets with local connectivity zero; non-disjoint inputs are
// rejected with invalid_argument.
bool is_skew(const BinaryMatroid& m, const ElementSet& x, const ElementSet& y);

enum class MinorOp { Delete, Contract };

struct MinorStep {
    int element;  // index in the matroid the steps were recorded against
    MinorOp op;
};

struct MinorTrace {
    std::vector<MinorStep> steps;
    BinaryMatroid result;
    // result element index -> original element index (strictly increasing).
    std::vector<int> surviving;
};

// Delete and contract the given disjoint sets (deletions first, each set in
// ascending order). An element of the contract set that is a loop when its
// turn comes is deleted instead and recorded as Delete. Always:
// rank(result) = rank_of(m, E - del) - rank_of(m, con); in particular,
// rank(result) = rank(m) - rank_of(m, con) whenever the undeleted elements
// still span.
MinorTrace minor(const BinaryMatroid& m, const ElementSet& del, const ElementSet& con);

struct SetRelation {
    bool parallel;            // x and y disjoint
    bool nested_strict;       // x strictly inside y, or y strictly inside x
    bool nested_or_equal;     // one contains the other
    bool bowtie;              // complements within the universe are disjoint
    bool parallel_or_bowtie;  // either of the two
};

// Relations between x and y inside the given universe (both must be subsets
// of it).
SetRelation set_relation(const ElementSet& x, const ElementSet& y,
                         const ElementSet& universe);

}  // namespace bmt
