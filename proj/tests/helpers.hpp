// Conversions between the dense oracle types and the packed library types,
// shared by every test binary.
#pragma once

#include <vector>

#include "bmt/gf2.hpp"
#include "bmt/matroid.hpp"

#include "oracles.hpp"

namespace helpers {

inline bmt::GF2Matrix pack(const oracle::Mat& a) {
    int r = oracle::rows(a), c = oracle::cols(a);
    bmt::GF2Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (a[i][j]) m.set(i, j, 1);
    return m;
}

inline oracle::Mat unpack(const bmt::GF2Matrix& m) {
    oracle::Mat a(m.rows(), std::vector<int>(m.cols(), 0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m.get(i, j);
    return a;
}

inline bmt::BinaryMatroid matroid(const oracle::Mat& a) { return {pack(a), {}}; }

}  // namespace helpers
