// Bit-packed linear algebra over GF(2): the substrate for every matroid
// computation in the toolkit. Rows are stored as 64-bit words; all results
// are independent of the packing width.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmt/common.hpp"

namespace bmt {

// A 0/1 vector with explicit length; entries are 0 or 1.
using GF2Vector = std::vector<std::uint8_t>;

class GF2Matrix {
  public:
    GF2Matrix() = default;
    GF2Matrix(int rows, int cols);

    // Build from literal rows like {"101", "010"}; rows may be empty.
    static GF2Matrix from_rows(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int get(int r, int c) const;
    void set(int r, int c, int v);

    // row dst ^= row src (both in range).
    void xor_row(int dst, int src);
    void swap_rows(int a, int b);

    // Matrix with the same rows restricted to the listed columns, in the
    // listed order (indices may repeat; each must be in range).
    GF2Matrix select_columns(const std::vector<int>& idx) const;

    // Column c as a packed word vector over the rows ((rows+63)/64 words).
    std::vector<std::uint64_t> packed_column(int c) const;

    bool operator==(const GF2Matrix& o) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    int wpr_ = 0;  // words per row
    std::vector<std::uint64_t> w_;
};

// GF(2) rank; 0 for empty or all-zero matrices.
int rank(const GF2Matrix& m);

// Basis of the null space {v : m v = 0}; size is cols - rank; deterministic
// (one basis vector per non-pivot column, ascending).
std::vector<GF2Vector> kernel_basis(const GF2Matrix& m);

// Some x with m x = b, or absent when inconsistent. Deterministic: pivots are
// chosen least-row, least-column, and free variables are set to zero.
std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& b);

}  // namespace bmt
