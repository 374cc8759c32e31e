#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "specseq/ints.hpp"

namespace specseq {

// Dense matrix over Z, row-major. Empty shapes (0 rows and/or 0 columns) are
// valid and behave as the corresponding zero objects.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVec>& cols);
    static IntMatrix column(const IntVec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Int& c) const;

    IntVec apply(const IntVec& v) const;       // this * v
    IntVec column_vec(std::size_t j) const;
    IntVec row_vec(std::size_t i) const;
    void set_column(std::size_t j, const IntVec& v);

    // [this | o] side by side; stacked vertically.
    IntMatrix hcat(const IntMatrix& o) const;
    IntMatrix vcat(const IntMatrix& o) const;
    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    // Block-diagonal sum: this ⊕ o.
    IntMatrix diag_sum(const IntMatrix& o) const;

    // Exact determinant (Bareiss fraction-free elimination); square only.
    Int det() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);   // row dst += c*row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

inline IntVec operator+(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline IntVec operator-(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
bool is_zero_vec(const IntVec& v);

}  // namespace specseq
