#pragma once

#include <cstddef>
#include <cstdlib>
#include <utility>
#include <vector>

#include "walkspec/errors.hpp"
#include "walkspec/exact/int_matrix.hpp"

namespace walkspec::exact {

// M = leftTransform * diag(invariants) * rightTransform, both transforms
// unimodular, d_i | d_{i+1}, all d_i > 0 for full-rank input.
struct SmithForm {
  std::vector<Int> invariants;
  IntMatrix leftTransform;
  IntMatrix rightTransform;

  IntMatrix reconstruct() const {
    const std::size_t n = invariants.size();
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = invariants[i];
    return leftTransform * d * rightTransform;
  }
};

// Elementary row/column reduction with minimal-|pivot| selection and explicit
// transform tracking. Entries in column/row t are cleared with one-shot
// extended-gcd 2x2 unimodular combinations, which keeps coefficient growth
// tame at the orders this project handles (n <= 12).
inline SmithForm smithNormalForm(const IntMatrix& m) {
  if (!m.isSquare()) throw DimensionError("smithNormalForm: matrix not square");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(n);   // accumulates inverses of row ops
  IntMatrix right = IntMatrix::identity(n);  // accumulates inverses of col ops

  auto rowSwap = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(left(r, i), left(r, j));
  };
  auto colSwap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(right(i, c), right(j, c));
  };
  // rows t,i <- [p q; -bg ag] * rows t,i, with p*a(t,t)+q*a(i,t) = g,
  // ag = a(t,t)/g, bg = a(i,t)/g; the 2x2 block has determinant 1
  auto rowCombine = [&](std::size_t t, std::size_t i, const Int& p, const Int& q,
                        const Int& ag, const Int& bg) {
    for (std::size_t c = 0; c < n; ++c) {
      Int at = a(t, c), ai = a(i, c);
      a(t, c) = p * at + q * ai;
      a(i, c) = ag * ai - bg * at;
    }
    for (std::size_t r = 0; r < n; ++r) {  // left *= inverse of the block
      Int lt = left(r, t), li = left(r, i);
      left(r, t) = ag * lt + bg * li;
      left(r, i) = p * li - q * lt;
    }
  };
  auto colCombine = [&](std::size_t t, std::size_t j, const Int& p, const Int& q,
                        const Int& ag, const Int& bg) {
    for (std::size_t r = 0; r < n; ++r) {
      Int at = a(r, t), aj = a(r, j);
      a(r, t) = p * at + q * aj;
      a(r, j) = ag * aj - bg * at;
    }
    for (std::size_t c = 0; c < n; ++c) {
      Int rt = right(t, c), rj = right(j, c);
      right(t, c) = ag * rt + bg * rj;
      right(j, c) = p * rj - q * rt;
    }
  };
  auto rowAdd = [&](std::size_t dst, std::size_t src) {  // row dst += row src
    for (std::size_t c = 0; c < n; ++c) a(dst, c) += a(src, c);
    for (std::size_t r = 0; r < n; ++r) left(r, src) -= left(r, dst);
  };
  auto rowSub = [&](std::size_t i, std::size_t t, const Int& q) {  // row i -= q*row t
    for (std::size_t c = 0; c < n; ++c) a(i, c) -= q * a(t, c);
    for (std::size_t r = 0; r < n; ++r) left(r, t) += q * left(r, i);
  };
  auto colSub = [&](std::size_t j, std::size_t t, const Int& q) {  // col j -= q*col t
    for (std::size_t r = 0; r < n; ++r) a(r, j) -= q * a(r, t);
    for (std::size_t c = 0; c < n; ++c) right(t, c) += q * right(j, c);
  };
  auto rowNegate = [&](std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) = -a(i, c);
    for (std::size_t r = 0; r < n; ++r) left(r, i) = -left(r, i);
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // minimal non-zero |entry| in the trailing submatrix becomes the pivot
      std::size_t pr = n, pc = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a(i, j) == 0) continue;
          if (pr == n || cmp(abs(a(i, j)), abs(a(pr, pc))) < 0) {
            pr = i;
            pc = j;
          }
        }
      if (pr == n) throw SingularMatrixError("smithNormalForm: singular matrix");
      if (pr != t) rowSwap(t, pr);
      if (pc != t) colSwap(t, pc);

      // a gcd combine strictly shrinks |pivot|, so it only fires when the
      // pivot fails to divide; everything else clears by exact quotients,
      // which cannot refill the parts already cleared
      bool reduced = false;
      for (std::size_t i = t + 1; i < n && !reduced; ++i)
        if (a(i, t) % a(t, t) != 0) {
          Int g, p, q;
          mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a(t, t).get_mpz_t(),
                     a(i, t).get_mpz_t());
          rowCombine(t, i, p, q, a(t, t) / g, a(i, t) / g);
          reduced = true;
        }
      if (reduced) continue;
      for (std::size_t j = t + 1; j < n && !reduced; ++j)
        if (a(t, j) % a(t, t) != 0) {
          Int g, p, q;
          mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a(t, t).get_mpz_t(),
                     a(t, j).get_mpz_t());
          colCombine(t, j, p, q, a(t, t) / g, a(t, j) / g);
          reduced = true;
        }
      if (reduced) continue;
      for (std::size_t i = t + 1; i < n; ++i)
        if (a(i, t) != 0) rowSub(i, t, a(i, t) / a(t, t));
      for (std::size_t j = t + 1; j < n; ++j)
        if (a(t, j) != 0) colSub(j, t, a(t, j) / a(t, t));

      // pivot must divide the trailing submatrix; fold an offending row in
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == n) break;
      rowAdd(t, bad);
    }
    if (a(t, t) < 0) rowNegate(t);
  }

  SmithForm f{std::vector<Int>(n), std::move(left), std::move(right)};
  for (std::size_t i = 0; i < n; ++i) f.invariants[i] = a(i, i);
  return f;
}

inline Int lastInvariantFactor(const IntMatrix& m) {
  return smithNormalForm(m).invariants.back();
}

}  // namespace walkspec::exact
