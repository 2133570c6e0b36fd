#pragma once

#include <cstdint>
#include <vector>

#include "walkspec/errors.hpp"
#include "walkspec/exact/numtheory.hpp"
#include "walkspec/spectral/walk_matrix.hpp"

namespace walkspec::spectral {

struct PrimeRankCheck {
  Int prime;
  std::size_t rank;
  bool satisfied;  // rank == n - 1
};

struct FamilyClassification {
  bool inHn = false;
  bool inFn = false;
  unsigned kOddPrimesSquared = 0;      // distinct odd primes p with p^2 | det W
  unsigned kFromLastInvariant = 0;     // same count read from d_n(W) instead
  std::uint64_t mateBound = 0;         // 2^k - 1, meaningful iff inFn
  std::vector<PrimeRankCheck> perPrimeRanks;
};

inline std::uint64_t mateBound(unsigned k) {
  if (k > 62) throw DimensionError("mateBound: k exceeds overflow guard");
  return (std::uint64_t(1) << k) - 1;
}

// Membership in F_n / H_n. Requires det W != 0, 2^floor(n/2) dividing det W
// exactly (odd cofactor), cofactor cube-free, and rank_p W = n-1 for every
// odd prime p dividing det W. H_n additionally needs the cofactor to be
// p^2 * b with b square-free and a single squared prime.
inline FamilyClassification classifyFamily(const WalkMatrixInfo& info) {
  FamilyClassification out;
  if (!info.controllable) return out;
  const std::size_t n = info.walkMatrix.rows();

  const bool exactTwoPower = info.twoAdicValuation == static_cast<unsigned>(n / 2);
  bool cubeFree = true;
  unsigned squaredPrimes = 0, singlePrimes = 0;
  for (const auto& [p, e] : info.oddPart) {
    if (e >= 3) cubeFree = false;
    if (e == 2) ++squaredPrimes;
    if (e == 1) ++singlePrimes;
  }
  out.kOddPrimesSquared = squaredPrimes;

  bool allRanksOk = true;
  for (const auto& [p, e] : info.oddPart) {
    std::size_t r = exact::rankModP(info.walkMatrix, p.get_ui());
    bool ok = r == n - 1;
    out.perPrimeRanks.push_back({p, r, ok});
    if (!ok) allRanksOk = false;
  }

  out.inFn = exactTwoPower && cubeFree && allRanksOk;
  out.inHn = out.inFn && squaredPrimes == 1 &&
             static_cast<std::size_t>(squaredPrimes + singlePrimes) == info.oddPart.size();
  if (out.inFn) out.mateBound = mateBound(out.kOddPrimesSquared);

  // Cross-check: the bound also counts its primes via p^2 | d_n(W(G)).
  if (info.snf) {
    const Int& dn = info.snf->invariants.back();
    for (const auto& [p, e] : info.oddPart)
      if (mpz_divisible_p(dn.get_mpz_t(), Int(p * p).get_mpz_t()))
        ++out.kFromLastInvariant;
  }
  return out;
}

}  // namespace walkspec::spectral
