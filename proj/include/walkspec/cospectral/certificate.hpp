#pragma once

#include <string>
#include <vector>

#include "walkspec/errors.hpp"
#include "walkspec/exact/numtheory.hpp"
#include "walkspec/exact/rat_matrix.hpp"
#include "walkspec/exact/smith.hpp"
#include "walkspec/graph/graph.hpp"
#include "walkspec/graph/graph6.hpp"
#include "walkspec/spectral/walk_matrix.hpp"

namespace walkspec::cospectral {

using exact::Int;

// The unique regular rational orthogonal Q with Q^T A(g) Q = A(h) for
// controllable g: Q = W(g) W(h)^{-1}.
inline exact::RatMatrix reconstructQ(const graph::Graph& g, const graph::Graph& h) {
  if (g.order() != h.order()) throw DimensionError("reconstructQ: order mismatch");
  if (!(spectral::generalizedSpectrumKey(g) == spectral::generalizedSpectrumKey(h)))
    throw NotCospectralError("reconstructQ: generalized spectra differ");
  exact::IntMatrix wg = spectral::walkMatrix(g);
  exact::IntMatrix wh = spectral::walkMatrix(h);
  if (exact::det(wg) == 0) throw SingularMatrixError("reconstructQ: W(G) singular");
  return wg * exact::inverseRational(wh);  // inverseRational throws if W(H) singular
}

struct PrimeRankLQ {
  Int prime;
  std::size_t rank;  // rank_p of level(Q) * Q
};

struct LevelConstraints {
  bool dividesGcdLastInvariants = false;  // level | gcd(d_n(W_G), d_n(W_H))
  bool levelOdd = false;
  bool levelSquareFree = false;
};

struct GcmCertificate {
  graph::Graph graphG;
  graph::Graph graphH;
  exact::RatMatrix q;
  Int level = 0;
  bool isRegular = false;        // Qe = e
  bool isOrthogonal = false;     // Q^T Q = I
  bool conjugationHolds = false; // Q^T A(G) Q = A(H)
  bool isPermutation = false;
  bool isPrimitive = false;      // level odd, rank_p(level*Q) = 1 for all p | level
  std::vector<PrimeRankLQ> perPrimeRanks;
  LevelConstraints levelConstraints;

  bool valid() const { return isRegular && isOrthogonal && conjugationHolds; }
};

inline bool isPermutationMatrix(const exact::RatMatrix& q) {
  const std::size_t n = q.rows();
  if (q.cols() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& v = q(i, j);
      if (v == 1)
        ++ones;
      else if (v != 0)
        return false;
    }
    if (ones != 1) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (q(i, j) == 1) ++ones;
    if (ones != 1) return false;
  }
  return true;
}

inline bool isPrimitiveMatrix(const exact::RatMatrix& q,
                              std::vector<PrimeRankLQ>* ranks = nullptr) {
  Int l = exact::level(q);
  if (mpz_even_p(l.get_mpz_t())) return false;
  exact::IntMatrix lq = q.scaledToInt(l);
  bool primitive = true;
  for (const auto& [p, e] : exact::factor(l)) {
    std::size_t r = exact::rankModP(lq, p.get_ui());
    if (ranks) ranks->push_back({p, r});
    if (r != 1) primitive = false;
  }
  return primitive;
}

inline GcmCertificate verifyPair(const graph::Graph& g, const graph::Graph& h) {
  exact::RatMatrix q = reconstructQ(g, h);
  const std::size_t n = g.order();
  GcmCertificate cert{g, h, q};
  cert.level = exact::level(q);

  cert.isOrthogonal = q.transpose() * q == exact::RatMatrix::identity(n);
  cert.isRegular = true;
  for (std::size_t i = 0; i < n && cert.isRegular; ++i) {
    exact::Rat row = 0;
    for (std::size_t j = 0; j < n; ++j) row += q(i, j);
    if (row != 1) cert.isRegular = false;
  }
  cert.conjugationHolds =
      q.transpose() * graph::adjacencyMatrix(g) * q ==
      exact::RatMatrix(graph::adjacencyMatrix(h));
  cert.isPermutation = isPermutationMatrix(q);
  cert.isPrimitive = isPrimitiveMatrix(q, &cert.perPrimeRanks);

  Int dnG = exact::lastInvariantFactor(spectral::walkMatrix(g));
  Int dnH = exact::lastInvariantFactor(spectral::walkMatrix(h));
  Int gcdDn;
  mpz_gcd(gcdDn.get_mpz_t(), dnG.get_mpz_t(), dnH.get_mpz_t());
  cert.levelConstraints.dividesGcdLastInvariants =
      mpz_divisible_p(gcdDn.get_mpz_t(), cert.level.get_mpz_t()) != 0;
  cert.levelConstraints.levelOdd = mpz_odd_p(cert.level.get_mpz_t());
  cert.levelConstraints.levelSquareFree = exact::isSquareFree(cert.level);
  return cert;
}

}  // namespace walkspec::cospectral
