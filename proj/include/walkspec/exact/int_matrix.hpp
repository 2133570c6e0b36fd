#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "walkspec/errors.hpp"

namespace walkspec::exact {

using Int = mpz_class;

// Dense matrix over arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("IntMatrix: empty dimension");
  }

  IntMatrix(std::initializer_list<std::initializer_list<long>> init)
      : rows_(init.size()), cols_(init.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("IntMatrix multiply: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  std::vector<Int> matVec(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw DimensionError("IntMatrix matVec: dimension mismatch");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

// Fraction-free single-step Bareiss elimination. Exact, no rationals.
inline Int det(const IntMatrix& m) {
  if (!m.isSquare()) throw DimensionError("det: matrix not square");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return Int(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

// Rank of m reduced entrywise mod p, by Gaussian elimination over F_p.
// p must be prime (caller's responsibility; small enough for 64-bit arithmetic).
inline std::size_t rankModP(const IntMatrix& m, unsigned long p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<unsigned long>> a(rows, std::vector<unsigned long>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Int r = m(i, j) % static_cast<long>(p);
      if (r < 0) r += static_cast<long>(p);
      a[i][j] = r.get_ui();
    }
  auto powmod = [p](unsigned long b, unsigned long e) {
    unsigned long r = 1;
    while (e) {
      if (e & 1) r = (unsigned long)((unsigned long long)r * b % p);
      b = (unsigned long)((unsigned long long)b * b % p);
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    unsigned long inv = powmod(a[rank][c], p - 2);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      unsigned long f = (unsigned long)((unsigned long long)a[i][c] * inv % p);
      for (std::size_t j = c; j < cols; ++j) {
        unsigned long long sub = (unsigned long long)f * a[rank][j] % p;
        a[i][j] = (unsigned long)((a[i][j] + p - sub) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace walkspec::exact
