#ifndef HSS_MATRIX_HPP
#define HSS_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>

#include "hss/rational.hpp"

namespace hss {

// Dense matrix over an exact field (Rat or GRat).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }

  void append_row(const std::vector<T>& row) {
    assert(cols_ == 0 || row.size() == cols_);
    if (cols_ == 0) cols_ = row.size();
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// Fraction-free (Bareiss) elimination rank. Pivoting is deterministic:
// first nonzero entry in canonical row order.
template <typename T>
std::size_t rank(Matrix<T> m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  T prev(1);
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m(p, c) == T(0)) ++p;
    if (p == nr) continue;
    if (p != r)
      for (std::size_t j = c; j < nc; ++j) std::swap(m(r, j), m(p, j));
    const T pivot = m(r, c);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j)
        m(i, j) = (m(i, j) * pivot - m(i, c) * m(r, j)) / prev;
      m(i, c) = T(0);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

// Reduced row echelon form in place; returns pivot column indices.
template <typename T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m(p, c) == T(0)) ++p;
    if (p == nr) continue;
    if (p != r)
      for (std::size_t j = 0; j < nc; ++j) std::swap(m(r, j), m(p, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t j = 0; j < nc; ++j) m(r, j) = inv * m(r, j);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m(i, c) == T(0)) continue;
      const T f = m(i, c);
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of the right null space {x : M x = 0}, one vector per row of the result.
template <typename T>
Matrix<T> kernel_basis(Matrix<T> m) {
  const std::size_t nc = m.cols();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<T> ker(0, nc);
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(nc);
    v[f] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    ker.append_row(v);
  }
  return ker;
}

// True iff every row of `sub` lies in the row space of `space`.
template <typename T>
bool row_space_contains(const Matrix<T>& space, const Matrix<T>& sub) {
  if (sub.rows() == 0) return true;
  assert(space.cols() == sub.cols());
  Matrix<T> stacked = space;
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    std::vector<T> row(sub.cols());
    for (std::size_t j = 0; j < sub.cols(); ++j) row[j] = sub(i, j);
    stacked.append_row(row);
  }
  return rank(stacked) == rank(space);
}

template <typename T>
bool row_spaces_equal(const Matrix<T>& a, const Matrix<T>& b) {
  return row_space_contains(a, b) && row_space_contains(b, a);
}

}  // namespace hss

#endif
