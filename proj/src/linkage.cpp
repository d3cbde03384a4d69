#include "bmt/linkage.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace bmt {

namespace {

// Incremental GF(2) column basis with undo, for the kappa search and the
// greedy basis extraction. Vectors are packed over the matrix rows.
class ColumnBasis {
  public:
    explicit ColumnBasis(int bits) : lead_of_(bits, -1) {}

    // Reduce v against the basis; returns true (and keeps v) when v extends
    // the span. A false return leaves the basis untouched.
    bool insert(std::vector<std::uint64_t> v) {
        int h;
        while ((h = highest_bit(v)) >= 0) {
            int at = lead_of_[h];
            if (at < 0) {
                lead_of_[h] = static_cast<int>(vecs_.size());
                vecs_.push_back(std::move(v));
                leads_.push_back(h);
                return true;
            }
            for (size_t k = 0; k < v.size(); ++k) v[k] ^= vecs_[at][k];
        }
        return false;
    }

    // Undo the most recent successful insert.
    void pop() {
        lead_of_[leads_.back()] = -1;
        leads_.pop_back();
        vecs_.pop_back();
    }

    int size() const { return static_cast<int>(vecs_.size()); }

  private:
    static int highest_bit(const std::vector<std::uint64_t>& v) {
        for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k)
            if (v[k]) return k * 64 + 63 - std::countl_zero(v[k]);
        return -1;
    }

    std::vector<std::vector<std::uint64_t>> vecs_;
    std::vector<int> leads_;
    std::vector<int> lead_of_;
};

struct KappaSearch {
    const std::vector<std::vector<std::uint64_t>>& cols;
    const std::vector<int>& free;
    int rank_m;
    int best = INT_MAX;
    ColumnBasis side_a;
    ColumnBasis side_b;

    void run(size_t idx) {
        // Ranks only grow as the remaining elements are assigned, so the
        // current deficit is a valid lower bound for the whole subtree.
        int bound = std::max(side_a.size() + side_b.size() - rank_m, 0);
        if (bound >= best) return;
        if (idx == free.size()) {
            best = bound;
            return;
        }
        bool added = side_a.insert(cols[free[idx]]);
        run(idx + 1);
        if (added) side_a.pop();
        if (best == 0) return;
        added = side_b.insert(cols[free[idx]]);
        run(idx + 1);
        if (added) side_b.pop();
    }
};

// Working state for the reductions: the current minor, the map back to the
// matroid the reduction started from, and the steps taken so far (recorded
// in the coordinates of that starting matroid).
struct ReductionState {
    BinaryMatroid w;
    std::vector<int> surv;
    std::vector<MinorStep> steps;

    static ReductionState initial(const BinaryMatroid& m) {
        std::vector<int> id(m.ground_size());
        for (int e = 0; e < m.ground_size(); ++e) id[e] = e;
        return ReductionState{m, std::move(id), {}};
    }

    int position_of(int origin) const {
        auto it = std::lower_bound(surv.begin(), surv.end(), origin);
        if (it == surv.end() || *it != origin)
            throw std::logic_error("reduction state: element no longer present");
        return static_cast<int>(it - surv.begin());
    }

    ElementSet positions_of(const ElementSet& origin_set) const {
        ElementSet out;
        out.reserve(origin_set.size());
        for (int e : origin_set) out.push_back(position_of(e));
        return out;
    }

    bool has(int origin) const {
        return std::binary_search(surv.begin(), surv.end(), origin);
    }

    void apply(const ElementSet& del_local, const ElementSet& con_local) {
        MinorTrace mt = minor(w, del_local, con_local);
        for (const MinorStep& s : mt.steps) steps.push_back({surv[s.element], s.op});
        std::vector<int> next;
        next.reserve(mt.surviving.size());
        for (int c : mt.surviving) next.push_back(surv[c]);
        surv = std::move(next);
        w = std::move(mt.result);
    }
};

int kappa_local(const BinaryMatroid& m, const ElementSet& x, const ElementSet& y,
                int budget) {
    return kappa(m, x, y, budget);
}

// Restriction preservation: every subset of the named set must keep its rank
// across the reduction. Exhaustive up to 12 elements, the full set and its
// singletons beyond that.
void check_restriction(const BinaryMatroid& before, const ElementSet& set_before,
                       const BinaryMatroid& after, const ElementSet& set_after,
                       const char* who) {
    size_t n = set_before.size();
    auto check_pair = [&](const ElementSet& sb, const ElementSet& sa) {
        if (rank_of(before, sb) != rank_of(after, sa))
            throw VerificationError(std::string(who) + ": restriction rank changed");
    };
    if (n <= 12) {
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            ElementSet sb, sa;
            for (size_t i = 0; i < n; ++i) {
                if (mask >> i & 1) {
                    sb.push_back(set_before[i]);
                    sa.push_back(set_after[i]);
                }
            }
            check_pair(sb, sa);
        }
    } else {
        check_pair(set_before, set_after);
        for (size_t i = 0; i < n; ++i) check_pair({set_before[i]}, {set_after[i]});
    }
}

}  // namespace

int kappa(const BinaryMatroid& m, const ElementSet& x, const ElementSet& y, int budget) {
    if (!is_disjoint(x, y)) throw std::invalid_argument("kappa: sets must be disjoint");
    for (const ElementSet* s : {&x, &y})
        for (int e : *s)
            if (e < 0 || e >= m.ground_size())
                throw std::out_of_range("kappa: element outside the ground set");
    ElementSet free_set = set_difference(complement_in(m.ground_size(), x), y);
    if (static_cast<int>(free_set.size()) > budget)
        throw BudgetError("kappa: " + std::to_string(free_set.size()) +
                          " free elements exceed the exact-search budget of " +
                          std::to_string(budget));
    std::vector<std::vector<std::uint64_t>> cols;
    cols.reserve(m.ground_size());
    for (int c = 0; c < m.ground_size(); ++c) cols.push_back(m.rep.packed_column(c));

    int bits = std::max(m.rep.rows(), 1);
    KappaSearch search{cols, free_set, rank(m), INT_MAX, ColumnBasis(bits),
                       ColumnBasis(bits)};
    for (int e : x) search.side_a.insert(cols[e]);
    for (int e : y) search.side_b.insert(cols[e]);
    search.run(0);
    return search.best;
}

MinorTrace tutte_reduce(const BinaryMatroid& m, const ElementSet& x, const ElementSet& y,
                        int budget) {
    int target = kappa(m, x, y, budget);
    ElementSet keep = set_union(x, y);
    ReductionState st = ReductionState::initial(m);
    for (int e = 0; e < m.ground_size(); ++e) {
        if (contains(keep, e)) continue;
        ReductionState trial = st;
        trial.apply({st.position_of(e)}, {});
        if (kappa_local(trial.w, trial.positions_of(x), trial.positions_of(y), budget) ==
            target) {
            st = std::move(trial);
        } else {
            // The linking lemma guarantees contraction preserves kappa here;
            // e cannot be a loop (deleting a loop never changes kappa).
            st.apply({}, {st.position_of(e)});
            if (st.steps.back().op != MinorOp::Contract)
                throw VerificationError("tutte_reduce: contraction target was a loop");
            if (kappa_local(st.w, st.positions_of(x), st.positions_of(y), budget) != target)
                throw VerificationError("tutte_reduce: kappa not preserved by contraction");
        }
    }
    ElementSet xs = st.positions_of(x), ys = st.positions_of(y);
    if (st.w.ground_size() != static_cast<int>(keep.size()))
        throw VerificationError("tutte_reduce: ground set is not X u Y");
    if (local_pi(st.w, xs, ys) != target)
        throw VerificationError("tutte_reduce: local connectivity differs from kappa");
    check_restriction(m, x, st.w, xs, "tutte_reduce");
    check_restriction(m, y, st.w, ys, "tutte_reduce");
    return MinorTrace{std::move(st.steps), std::move(st.w), std::move(st.surv)};
}

MinorTrace spanning_reduce(const BinaryMatroid& m, const ElementSet& x, const ElementSet& y,
                           int budget) {
    int target = kappa(m, x, y, budget);
    int pi = local_pi(m, x, y);
    ReductionState st = ReductionState::initial(m);
    for (;;) {
        ElementSet xy = set_union(st.positions_of(x), st.positions_of(y));
        ElementSet cl = closure(st.w, xy);
        int pick = -1;
        for (int p = 0; p < st.w.ground_size(); ++p) {
            if (!contains(cl, p)) {
                pick = p;  // least position is the least original index
                break;
            }
        }
        if (pick < 0) break;
        ReductionState trial = st;
        trial.apply({pick}, {});
        if (kappa_local(trial.w, trial.positions_of(x), trial.positions_of(y), budget) ==
            target) {
            st = std::move(trial);
        } else {
            st.apply({}, {pick});
            if (kappa_local(st.w, st.positions_of(x), st.positions_of(y), budget) != target)
                throw VerificationError("spanning_reduce: kappa not preserved");
        }
    }
    ElementSet xs = st.positions_of(x), ys = st.positions_of(y);
    if (local_pi(st.w, xs, ys) != pi)
        throw VerificationError("spanning_reduce: local connectivity changed");
    check_restriction(m, x, st.w, xs, "spanning_reduce");
    check_restriction(m, y, st.w, ys, "spanning_reduce");
    return MinorTrace{std::move(st.steps), std::move(st.w), std::move(st.surv)};
}

ReducedInstance build_reduced_instance(const BinaryMatroid& m, const ElementSet& c1,
                                       const ElementSet& c2, int budget) {
    if (!is_disjoint(c1, c2))
        throw std::invalid_argument("build_reduced_instance: circuits must be disjoint");
    if (!is_circuit(m, c1) || !is_circuit(m, c2))
        throw std::invalid_argument("build_reduced_instance: inputs must be circuits");
    if (!is_skew(m, c1, c2))
        throw std::invalid_argument("build_reduced_instance: circuits must be skew");
    int target = kappa(m, c1, c2, budget);

    MinorTrace sp = spanning_reduce(m, c1, c2, budget);
    ReductionState st{std::move(sp.result), std::move(sp.surviving), std::move(sp.steps)};

    // Elements spanned by one circuit alone can always be deleted without
    // touching kappa; afterwards no fundamental circuit can miss a side.
    {
        ElementSet c1p = st.positions_of(c1), c2p = st.positions_of(c2);
        ElementSet spill = set_union(
            set_difference(set_difference(closure(st.w, c1p), c1p), c2p),
            set_difference(set_difference(closure(st.w, c2p), c2p), c1p));
        if (!spill.empty()) st.apply(spill, {});
        if (kappa_local(st.w, st.positions_of(c1), st.positions_of(c2), budget) != target)
            throw VerificationError("build_reduced_instance: closure deletions broke kappa");
    }

    // Linking pass. Decisions are made on a working copy that really applies
    // the contractions; the instance itself only applies the deletions, so
    // the contracted elements remain present as X.
    ElementSet keep = set_union(c1, c2);
    std::vector<int> x_origin;
    {
        ReductionState work = st;
        for (int e : std::vector<int>(st.surv)) {
            if (contains(keep, e)) continue;
            ReductionState trial = work;
            trial.apply({work.position_of(e)}, {});
            if (kappa_local(trial.w, trial.positions_of(c1), trial.positions_of(c2),
                            budget) == target) {
                work = std::move(trial);
                st.apply({st.position_of(e)}, {});
            } else {
                work.apply({}, {work.position_of(e)});
                if (kappa_local(work.w, work.positions_of(c1), work.positions_of(c2),
                                budget) != target)
                    throw VerificationError("build_reduced_instance: kappa lost in pass");
                x_origin.push_back(e);
            }
        }
        if (work.w.ground_size() != static_cast<int>(keep.size()))
            throw VerificationError("build_reduced_instance: pass left extra elements");
    }

    ReducedInstance ri;
    ri.c1 = st.positions_of(c1);
    ri.c2 = st.positions_of(c2);
    ri.x.clear();
    for (int e : x_origin) ri.x.push_back(st.position_of(e));
    std::sort(ri.x.begin(), ri.x.end());
    ri.t = static_cast<int>(ri.x.size());
    ri.n = st.w;

    // Invariant block. Each failure here is a hard defect.
    if (!is_circuit(ri.n, ri.c1) || !is_circuit(ri.n, ri.c2))
        throw VerificationError("reduced instance: C1/C2 no longer circuits");
    if (local_pi(ri.n, ri.c1, ri.c2) != 0)
        throw VerificationError("reduced instance: C1 and C2 are not skew");
    ElementSet c12 = set_union(ri.c1, ri.c2);
    if (rank_of(ri.n, c12) != rank(ri.n))
        throw VerificationError("reduced instance: C1 u C2 does not span");
    if (kappa(ri.n, ri.c1, ri.c2, budget) != ri.t || ri.t != target)
        throw VerificationError("reduced instance: kappa(C1, C2) != |X|");
    ElementSet xset(ri.x.begin(), ri.x.end());
    for (const ElementSet* ci : {&ri.c1, &ri.c2}) {
        // Nullity of C_i u X must be exactly 1, which makes C_i the only
        // circuit in there and every C_i u X' rank r(C_i) + |X'|.
        ElementSet cx = set_union(*ci, xset);
        if (rank_of(ri.n, cx) != static_cast<int>(ci->size()) - 1 + ri.t)
            throw VerificationError("reduced instance: C_i is not the only circuit in C_i u X");
    }

    // Greedy ascending basis inside C1 u C2, then one fundamental circuit per
    // retained element.
    std::vector<std::vector<std::uint64_t>> cols;
    for (int c = 0; c < ri.n.ground_size(); ++c) cols.push_back(ri.n.rep.packed_column(c));
    ColumnBasis basis(std::max(ri.n.rep.rows(), 1));
    std::vector<int> base_cols;
    for (int e : c12)
        if (basis.insert(cols[e])) base_cols.push_back(e);
    if (basis.size() != rank(ri.n))
        throw VerificationError("reduced instance: basis extraction failed");
    GF2Matrix base_matrix = ri.n.rep.select_columns(base_cols);
    for (int xi : ri.x) {
        GF2Vector b(ri.n.rep.rows());
        for (int r = 0; r < ri.n.rep.rows(); ++r)
            b[r] = static_cast<std::uint8_t>(ri.n.rep.get(r, xi));
        std::optional<GF2Vector> coef = solve(base_matrix, b);
        if (!coef) throw VerificationError("reduced instance: x_i not spanned by C1 u C2");
        ElementSet di;
        for (size_t j = 0; j < base_cols.size(); ++j)
            if ((*coef)[j]) di.push_back(base_cols[j]);
        di.push_back(xi);
        di = normalized(di);
        if (!is_circuit(ri.n, di))
            throw VerificationError("reduced instance: fundamental set is not a circuit");
        ElementSet d1 = set_intersection(di, ri.c1), d2 = set_intersection(di, ri.c2);
        if (d1.empty() || d2.empty() || d1 == ri.c1 || d2 == ri.c2)
            throw VerificationError("reduced instance: D_i side part not a proper nonempty part");
        ri.d.push_back(std::move(di));
    }

    ri.trace = MinorTrace{std::move(st.steps), ri.n, std::move(st.surv)};
    return ri;
}

}  // namespace bmt
