#pragma once

#include <vector>

#include "walkspec/cospectral/certificate.hpp"
#include "walkspec/exact/numtheory.hpp"
#include "walkspec/exact/rat_matrix.hpp"

namespace walkspec::cospectral {

// Lemma-style predicates report a third state when their hypotheses fail:
// "not applicable" must stay distinguishable from "verified" in sweeps.
enum class LemmaOutcome { Verified, Violated, NotApplicable };

// xQ integral and xQ == 0 (mod k)  =>  level(Q) | x/k.
inline LemmaOutcome checkLemmaLevelMod(const exact::RatMatrix& q, const Int& x, const Int& k) {
  if (x <= 0 || k <= 0) return LemmaOutcome::NotApplicable;
  exact::IntMatrix xq(q.rows(), q.cols());
  try {
    xq = q.scaledToInt(x);
  } catch (const DimensionError&) {
    return LemmaOutcome::NotApplicable;  // xQ not integral
  }
  if (!mpz_divisible_p(x.get_mpz_t(), k.get_mpz_t())) return LemmaOutcome::NotApplicable;
  for (std::size_t i = 0; i < xq.rows(); ++i)
    for (std::size_t j = 0; j < xq.cols(); ++j)
      if (!mpz_divisible_p(xq(i, j).get_mpz_t(), k.get_mpz_t()))
        return LemmaOutcome::NotApplicable;
  Int quot = x / k;
  Int l = exact::level(q);
  return mpz_divisible_p(quot.get_mpz_t(), l.get_mpz_t()) ? LemmaOutcome::Verified
                                                          : LemmaOutcome::Violated;
}

// u, v nonzero mod p, dependent over F_p, u'u = v'v == 0 (mod p^2)
//   =>  u'v == 0 (mod p^2).
inline LemmaOutcome checkLemmaUV(const std::vector<Int>& u, const std::vector<Int>& v,
                                 const Int& p) {
  if (u.size() != v.size() || u.empty()) return LemmaOutcome::NotApplicable;
  if (p < 3 || !exact::isPrime(p)) return LemmaOutcome::NotApplicable;
  const Int p2 = p * p;
  auto nonzeroModP = [&](const std::vector<Int>& w) {
    for (const auto& x : w)
      if (!mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) return true;
    return false;
  };
  if (!nonzeroModP(u) || !nonzeroModP(v)) return LemmaOutcome::NotApplicable;

  // dependence over F_p: all 2x2 minors of (u | v) vanish mod p
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      Int minor = u[i] * v[j] - u[j] * v[i];
      if (!mpz_divisible_p(minor.get_mpz_t(), p.get_mpz_t()))
        return LemmaOutcome::NotApplicable;
    }

  auto dot = [](const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  Int uu = dot(u, u), vv = dot(v, v);
  if (!mpz_divisible_p(uu.get_mpz_t(), p2.get_mpz_t()) ||
      !mpz_divisible_p(vv.get_mpz_t(), p2.get_mpz_t()))
    return LemmaOutcome::NotApplicable;

  Int uv = dot(u, v);
  return mpz_divisible_p(uv.get_mpz_t(), p2.get_mpz_t()) ? LemmaOutcome::Verified
                                                         : LemmaOutcome::Violated;
}

namespace detail {

// Both lQ matrices have rank 1 mod p, so their column spaces coincide iff the
// first nonzero columns are proportional: cross-products vanish mod p.
inline bool sameRankOneColumnSpace(const exact::IntMatrix& a, const exact::IntMatrix& b,
                                   const Int& p) {
  auto firstNonzeroColumn = [&](const exact::IntMatrix& m) {
    std::vector<Int> col;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      col.clear();
      bool nonzero = false;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Int r = m(i, j) % p;
        if (r < 0) r += p;
        if (r != 0) nonzero = true;
        col.push_back(r);
      }
      if (nonzero) return col;
    }
    col.assign(m.rows(), Int(0));
    return col;
  };
  std::vector<Int> x = firstNonzeroColumn(a), y = firstNonzeroColumn(b);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      Int minor = x[i] * y[j] - x[j] * y[i];
      if (!mpz_divisible_p(minor.get_mpz_t(), p.get_mpz_t())) return false;
    }
  return true;
}

}  // namespace detail

// Primitive Q1, Q2 of equal square-free level with coinciding column spaces
// of lQ over F_p for all p | l  =>  Q1^T Q2 is a permutation matrix.
inline LemmaOutcome checkSameLevelPermutation(const exact::RatMatrix& q1,
                                              const exact::RatMatrix& q2) {
  if (q1.rows() != q2.rows() || q1.cols() != q2.cols()) return LemmaOutcome::NotApplicable;
  if (!isPrimitiveMatrix(q1) || !isPrimitiveMatrix(q2)) return LemmaOutcome::NotApplicable;
  Int l1 = exact::level(q1), l2 = exact::level(q2);
  if (l1 != l2 || !exact::isSquareFree(l1)) return LemmaOutcome::NotApplicable;
  exact::IntMatrix lq1 = q1.scaledToInt(l1);
  exact::IntMatrix lq2 = q2.scaledToInt(l2);
  for (const auto& [p, e] : exact::factor(l1))
    if (!detail::sameRankOneColumnSpace(lq1, lq2, p)) return LemmaOutcome::NotApplicable;
  return isPermutationMatrix(q1.transpose() * q2) ? LemmaOutcome::Verified
                                                  : LemmaOutcome::Violated;
}

}  // namespace walkspec::cospectral
