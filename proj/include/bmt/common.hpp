// Shared basic types: element sets (sorted, duplicate-free index vectors)
// and the toolkit-wide exception hierarchy.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmt {

// Elements of a matroid are column indices; a set of elements is kept as a
// sorted vector without duplicates so set algebra is a linear merge.
using ElementSet = std::vector<int>;

// Raised when an exact search would exceed its configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a constructed object fails its own invariant re-check.
// Seeing this means either a bug or a genuine counterexample candidate.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the instance/certificate readers, with input coordinates.
struct ParseError : std::runtime_error {
    int line;
    int col;  // 0 when the error has no meaningful column
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) +
                             (col_ > 0 ? ", col " + std::to_string(col_) : std::string()) +
                             ": " + msg),
          line(line_),
          col(col_) {}
};

inline ElementSet normalized(ElementSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool contains(const ElementSet& s, int e) {
    return std::binary_search(s.begin(), s.end(), e);
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ElementSet sym_diff(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_disjoint(const ElementSet& a, const ElementSet& b) {
    return set_intersection(a, b).empty();
}

// All indices 0..ground-1 not in s.
inline ElementSet complement_in(int ground, const ElementSet& s) {
    ElementSet out;
    out.reserve(ground - s.size());
    for (int e = 0; e < ground; ++e)
        if (!contains(s, e)) out.push_back(e);
    return out;
}

}  // namespace bmt
