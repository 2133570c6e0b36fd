#pragma once

#include <vector>

#include "walkspec/errors.hpp"
#include "walkspec/exact/int_matrix.hpp"

namespace walkspec::spectral {

// Monic characteristic polynomial det(xI - m), exact integer coefficients,
// returned lowest degree first (coeffs[n] = 1). Faddeev-LeVerrier: for an
// integral matrix every division by k is exact, so the whole run stays in Z.
inline std::vector<exact::Int> charPoly(const exact::IntMatrix& m) {
  if (!m.isSquare()) throw DimensionError("charPoly: matrix not square");
  const std::size_t n = m.rows();
  std::vector<exact::Int> coeffs(n + 1);
  coeffs[n] = 1;
  exact::IntMatrix mk = exact::IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    exact::Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
    exact::Int c;
    mpz_divexact_ui(c.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c = -c;
    coeffs[n - k] = c;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c;
  }
  return coeffs;
}

inline exact::Int evalPoly(const std::vector<exact::Int>& coeffs, const exact::Int& x) {
  exact::Int r = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
  return r;
}

}  // namespace walkspec::spectral
