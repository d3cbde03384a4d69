// Shared test instances. Dense (oracle) form only; tests convert to the
// packed library types where needed.
#pragma once

#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "oracles.hpp"

namespace fixtures {

using Edge = std::pair<int, int>;

inline oracle::Mat incidence(int nv, const std::vector<Edge>& edges) {
    oracle::Mat a(nv, std::vector<int>(edges.size(), 0));
    for (size_t j = 0; j < edges.size(); ++j) {
        auto [u, v] = edges[j];
        if (u != v) {
            a[u][j] ^= 1;
            a[v][j] ^= 1;
        }
    }
    return a;
}

// K4: vertices 0..3, edges in fixed order.
inline std::vector<Edge> k4_edges() {
    return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
}
inline oracle::Mat k4() { return incidence(4, k4_edges()); }

// Circular ladder CL_m: outer cycle edges 0..m-1, inner m..2m-1,
// rungs 2m..3m-1 (rung j joins outer vertex j to inner vertex m+j).
// CL_3 is the prism.
inline std::vector<Edge> circular_ladder_edges(int m) {
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
    for (int i = 0; i < m; ++i) e.emplace_back(m + i, m + (i + 1) % m);
    for (int i = 0; i < m; ++i) e.emplace_back(i, m + i);
    return e;
}
inline oracle::Mat circular_ladder(int m) {
    return incidence(2 * m, circular_ladder_edges(m));
}
inline std::vector<int> ladder_c1(int m) {
    std::vector<int> s(m);
    std::iota(s.begin(), s.end(), 0);
    return s;
}
inline std::vector<int> ladder_c2(int m) {
    std::vector<int> s(m);
    std::iota(s.begin(), s.end(), m);
    return s;
}

// Two disjoint cycles of a and b edges (direct sum).
inline oracle::Mat disjoint_cycles(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i) e.emplace_back(i, (i + 1) % a);
    for (int i = 0; i < b; ++i) e.emplace_back(a + i, a + (i + 1) % b);
    return incidence(a + b, e);
}

// Directly constructed reduced-shape instance. Columns, in order:
//   C1 block: u_1..u_{n1-1} (standard basis) plus their sum  -> a circuit of n1
//   C2 block: w_1..w_{n2-1} plus their sum                   -> a circuit of n2
//   x_i = sum of P1[i] (within u's) + sum of P2[i] (within w's)
// so the fundamental circuit of x_i over the greedy basis is
// P1[i] ∪ P2[i] ∪ {x_i}. P sets use 0-based positions into u's / w's.
inline oracle::Mat constructed(int n1, int n2,
                               const std::vector<std::vector<int>>& p1,
                               const std::vector<std::vector<int>>& p2) {
    int r1 = n1 - 1, r2 = n2 - 1;
    int t = static_cast<int>(p1.size());
    oracle::Mat a(r1 + r2, std::vector<int>(n1 + n2 + t, 0));
    for (int j = 0; j < r1; ++j) a[j][j] = 1;
    for (int j = 0; j < r1; ++j) a[j][r1] = 1;
    for (int j = 0; j < r2; ++j) a[r1 + j][n1 + j] = 1;
    for (int j = 0; j < r2; ++j) a[r1 + j][n1 + r2] = 1;
    for (int i = 0; i < t; ++i) {
        for (int pos : p1[i]) a[pos][n1 + n2 + i] ^= 1;
        for (int pos : p2[i]) a[r1 + pos][n1 + n2 + i] ^= 1;
    }
    return a;
}

// Staircase C1-parts (nested chain) + singleton C2-parts (pairwise disjoint):
// every pair sum D_i xor D_j xor C1 splits as D_i ⊔ (D_j xor C1), so no
// k-subset passes the circuit test on side C1. Needs n1, n2 >= t + 2.
inline oracle::Mat staircase_identity(int t, int n1, int n2) {
    std::vector<std::vector<int>> p1(t), p2(t);
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j <= i; ++j) p1[i].push_back(j);
        p2[i] = {i};
    }
    return constructed(n1, n2, p1, p2);
}
inline std::vector<int> constructed_c1(int n1) {
    std::vector<int> s(n1);
    std::iota(s.begin(), s.end(), 0);
    return s;
}
inline std::vector<int> constructed_c2(int n1, int n2) {
    std::vector<int> s(n2);
    std::iota(s.begin(), s.end(), n1);
    return s;
}

inline oracle::Mat random_mat(int r, int n, unsigned seed) {
    std::mt19937 gen(seed);
    oracle::Mat a(r, std::vector<int>(n, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = static_cast<int>(gen() & 1u);
    return a;
}

}  // namespace fixtures
