#ifndef GALOIS_MATRIX_HPP
#define GALOIS_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "galois/rational.hpp"

namespace galois {

/// Dense matrix of exact rationals, row-major.
class QMatrix {
 public:
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("QMatrix::apply: size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

/// Basis of the right null space by exact Gauss-Jordan elimination.
/// Pivot choice is the first nonzero entry in each column, so the
/// result is deterministic. Each basis vector has a single free
/// variable set to 1. Empty exactly when the matrix has full column
/// rank.
inline std::vector<std::vector<Rational>> kernel(QMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(rank, j));
    Rational inv = m.at(rank, c).inverse();
    for (std::size_t j = 0; j < cols; ++j) m.at(rank, j) = m.at(rank, j) * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m.at(r, c).is_zero()) continue;
      Rational factor = m.at(r, c);
      for (std::size_t j = 0; j < cols; ++j) m.at(r, j) -= factor * m.at(rank, j);
    }
    pivot_of_col[c] = static_cast<long>(rank);
    ++rank;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_of_col[c] >= 0)
        v[c] = -m.at(static_cast<std::size_t>(pivot_of_col[c]), free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace galois

#endif  // GALOIS_MATRIX_HPP
