// Linkage kappa, the constructive Tutte-linking and spanning reductions, and
// assembly of the reduced instance (the minor N with circuits C1, C2, the
// retained elements X and their fundamental circuits D_i).
#pragma once

#include <vector>

#include "bmt/common.hpp"
#include "bmt/matroid.hpp"

namespace bmt {

struct ReducedInstance {
    BinaryMatroid n;
    ElementSet c1;          // positions in n
    ElementSet c2;          // positions in n
    std::vector<int> x;     // x_1..x_t as positions in n, ascending
    int t = 0;
    std::vector<ElementSet> d;  // d[i] is the fundamental circuit of x[i]
    MinorTrace trace;           // from the input matroid down to n
};

// Exact min of lambda(A) over X <= A <= E - Y, by branch and bound over the
// free elements with incremental column bases (identical values to plain
// enumeration). The number of free elements must not exceed the budget.
int kappa(const BinaryMatroid& m, const ElementSet& x, const ElementSet& y,
          int budget = 30);

// Reduce to a minor on exactly X u Y while preserving kappa(X, Y): every
// other element is processed in ascending order and deleted when deletion
// keeps kappa, contracted otherwise. The result satisfies
// local_pi = kappa = kappa of the input, with both restrictions unchanged.
MinorTrace tutte_reduce(const BinaryMatroid& m, const ElementSet& x,
                        const ElementSet& y, int budget = 30);

// Remove elements outside the closure of X u Y (least index first, deletion
// preferred, kappa preserved at every step) until X u Y spans the result.
MinorTrace spanning_reduce(const BinaryMatroid& m, const ElementSet& x,
                           const ElementSet& y, int budget = 30);

// Full pipeline for disjoint skew circuits c1, c2: spanning reduction,
// deletion of the closure surplus cl(C_i) - C_i, the linking pass (keeping
// the would-be contractions as X), and fundamental-circuit extraction over
// the greedy ascending basis inside C1 u C2. Every ReducedInstance invariant
// is asserted before returning.
ReducedInstance build_reduced_instance(const BinaryMatroid& m, const ElementSet& c1,
                                       const ElementSet& c2, int budget = 30);

}  // namespace bmt
