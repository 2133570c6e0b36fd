#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "walkspec/errors.hpp"
#include "walkspec/exact/int_matrix.hpp"

namespace walkspec::exact {

using Rat = mpq_class;

// Dense matrix over exact rationals. Entries are kept canonical (lowest
// terms, positive denominator) by mpq semantics.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("RatMatrix: empty dimension");
  }

  explicit RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("RatMatrix multiply: dimension mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    for (auto& x : r.data_) x.canonicalize();
    return r;
  }

  bool isIntegral() const {
    for (const auto& x : data_)
      if (x.get_den() != 1) return false;
    return true;
  }

  // Entrywise numerator matrix of s * this; throws if the result is not integral.
  IntMatrix scaledToInt(const Int& s) const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        Rat v = (*this)(i, j) * s;
        v.canonicalize();
        if (v.get_den() != 1) throw DimensionError("scaledToInt: result not integral");
        m(i, j) = v.get_num();
      }
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

// Smallest positive x with x*q integral: lcm of the entry denominators.
inline Int level(const RatMatrix& q) {
  Int l = 1;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q(i, j).get_den().get_mpz_t());
  return l;
}

// Exact inverse via Gauss-Jordan over the rationals.
inline RatMatrix inverseRational(const IntMatrix& m) {
  if (!m.isSquare()) throw DimensionError("inverseRational: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix a(m);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw SingularMatrixError("inverseRational: singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
    Rat d = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= d;
      inv(c, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rat f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

inline RatMatrix operator*(const IntMatrix& a, const RatMatrix& b) {
  return RatMatrix(a) * b;
}
inline RatMatrix operator*(const RatMatrix& a, const IntMatrix& b) {
  return a * RatMatrix(b);
}

}  // namespace walkspec::exact
