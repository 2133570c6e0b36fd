#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "walkspec/exact/int_matrix.hpp"
#include "walkspec/exact/numtheory.hpp"
#include "walkspec/exact/smith.hpp"
#include "walkspec/graph/graph.hpp"
#include "walkspec/spectral/char_poly.hpp"

namespace walkspec::spectral {

using exact::Int;

// W(G), its determinant, SNF, 2-adic normalisation and odd-part factorisation.
struct WalkMatrixInfo {
  exact::IntMatrix walkMatrix;
  Int determinant;
  bool controllable = false;                 // det != 0
  std::optional<Int> normalizedDet;          // det / 2^floor(n/2), when divisible
  exact::Factorization oddPart;              // factorisation of |odd part of det|
  unsigned twoAdicValuation = 0;             // v2(|det|)
  std::optional<exact::SmithForm> snf;       // present iff controllable
};

inline exact::IntMatrix walkMatrix(const graph::Graph& g) {
  const std::size_t n = g.order();
  exact::IntMatrix a = graph::adjacencyMatrix(g);
  exact::IntMatrix w(n, n);
  std::vector<Int> col(n, Int(1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) w(i, j) = col[i];
    if (j + 1 < n) col = a.matVec(col);
  }
  return w;
}

inline WalkMatrixInfo walkMatrixInfo(const graph::Graph& g) {
  const std::size_t n = g.order();
  WalkMatrixInfo info{walkMatrix(g), 0};
  info.determinant = exact::det(info.walkMatrix);
  info.controllable = info.determinant != 0;
  if (!info.controllable) return info;

  Int absDet = abs(info.determinant);
  info.twoAdicValuation =
      static_cast<unsigned>(mpz_scan1(absDet.get_mpz_t(), 0));
  const unsigned half = static_cast<unsigned>(n / 2);
  if (info.twoAdicValuation >= half) {
    Int norm;
    mpz_tdiv_q_2exp(norm.get_mpz_t(), info.determinant.get_mpz_t(), half);
    info.normalizedDet = norm;
  }
  Int odd;
  mpz_tdiv_q_2exp(odd.get_mpz_t(), absDet.get_mpz_t(), info.twoAdicValuation);
  info.oddPart = exact::factor(odd);
  info.snf = exact::smithNormalForm(info.walkMatrix);
  return info;
}

// Exact pair of characteristic polynomials of A(G) and A(complement(G)).
struct GeneralizedSpectrumKey {
  std::vector<Int> charPolyG;
  std::vector<Int> charPolyComplement;

  bool operator==(const GeneralizedSpectrumKey& o) const {
    return charPolyG == o.charPolyG && charPolyComplement == o.charPolyComplement;
  }
  bool operator<(const GeneralizedSpectrumKey& o) const {
    auto lex = [](const std::vector<Int>& a, const std::vector<Int>& b) {
      return std::lexicographical_compare(
          a.begin(), a.end(), b.begin(), b.end(),
          [](const Int& x, const Int& y) { return x < y; });
    };
    if (charPolyG != o.charPolyG) return lex(charPolyG, o.charPolyG);
    return lex(charPolyComplement, o.charPolyComplement);
  }
};

inline GeneralizedSpectrumKey generalizedSpectrumKey(const graph::Graph& g) {
  return GeneralizedSpectrumKey{charPoly(graph::adjacencyMatrix(g)),
                                charPoly(graph::adjacencyMatrix(g.complement()))};
}

}  // namespace walkspec::spectral
