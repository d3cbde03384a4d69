#include "bmt/gf2.hpp"

#include <stdexcept>

namespace bmt {

GF2Matrix::GF2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("GF2Matrix: negative dimension");
    wpr_ = (cols + 63) / 64;
    w_.assign(static_cast<size_t>(rows) * wpr_, 0);
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::string>& rows) {
    int r = static_cast<int>(rows.size());
    int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    GF2Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("GF2Matrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) {
            char ch = rows[i][j];
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("GF2Matrix::from_rows: entry not 0/1");
            if (ch == '1') m.set(i, j, 1);
        }
    }
    return m;
}

int GF2Matrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("GF2Matrix::get: index out of range");
    return static_cast<int>(w_[static_cast<size_t>(r) * wpr_ + c / 64] >> (c % 64) & 1u);
}

void GF2Matrix::set(int r, int c, int v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("GF2Matrix::set: index out of range");
    std::uint64_t& word = w_[static_cast<size_t>(r) * wpr_ + c / 64];
    std::uint64_t bit = 1ull << (c % 64);
    if (v)
        word |= bit;
    else
        word &= ~bit;
}

void GF2Matrix::xor_row(int dst, int src) {
    for (int k = 0; k < wpr_; ++k)
        w_[static_cast<size_t>(dst) * wpr_ + k] ^= w_[static_cast<size_t>(src) * wpr_ + k];
}

void GF2Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int k = 0; k < wpr_; ++k)
        std::swap(w_[static_cast<size_t>(a) * wpr_ + k], w_[static_cast<size_t>(b) * wpr_ + k]);
}

GF2Matrix GF2Matrix::select_columns(const std::vector<int>& idx) const {
    GF2Matrix out(rows_, static_cast<int>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j) {
        int c = idx[j];
        if (c < 0 || c >= cols_)
            throw std::out_of_range("GF2Matrix::select_columns: index out of range");
        for (int i = 0; i < rows_; ++i)
            if (get(i, c)) out.set(i, static_cast<int>(j), 1);
    }
    return out;
}

std::vector<std::uint64_t> GF2Matrix::packed_column(int c) const {
    std::vector<std::uint64_t> col((rows_ + 63) / 64, 0);
    for (int i = 0; i < rows_; ++i)
        if (get(i, c)) col[i / 64] |= 1ull << (i % 64);
    return col;
}

bool GF2Matrix::operator==(const GF2Matrix& o) const {
    // set() keeps padding bits zero, so raw word comparison is exact.
    return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
}

namespace {

// In-place reduced row echelon form. Pivots are found scanning columns
// ascending and, within a column, the least remaining row — this is the
// least-row/least-column rule the interface promises. Returns the pivot
// columns; pivot i sits in row i.
std::vector<int> rref_in_place(GF2Matrix& a) {
    std::vector<int> pivots;
    int next_row = 0;
    for (int col = 0; col < a.cols() && next_row < a.rows(); ++col) {
        int pivot = -1;
        for (int i = next_row; i < a.rows(); ++i) {
            if (a.get(i, col)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        a.swap_rows(next_row, pivot);
        for (int i = 0; i < a.rows(); ++i)
            if (i != next_row && a.get(i, col)) a.xor_row(i, next_row);
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

}  // namespace

int rank(const GF2Matrix& m) {
    GF2Matrix a = m;
    return static_cast<int>(rref_in_place(a).size());
}

std::vector<GF2Vector> kernel_basis(const GF2Matrix& m) {
    GF2Matrix a = m;
    std::vector<int> pivots = rref_in_place(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    // One basis vector per free column f: x[f] = 1 and, for every pivot row i
    // with pivot column p, x[p] = a(i, f) so the row sums cancel.
    std::vector<GF2Vector> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        GF2Vector v(m.cols(), 0);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = static_cast<std::uint8_t>(a.get(static_cast<int>(i), f));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: right-hand side length != rows");
    // Eliminate the augmented matrix [m | b]; a pivot in the last column
    // means b is outside the column space.
    GF2Matrix a(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) a.set(i, j, 1);
        if (b[i]) a.set(i, m.cols(), 1);
    }
    std::vector<int> pivots = rref_in_place(a);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    GF2Vector x(m.cols(), 0);
    for (size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = static_cast<std::uint8_t>(a.get(static_cast<int>(i), m.cols()));
    return x;
}

}  // namespace bmt
