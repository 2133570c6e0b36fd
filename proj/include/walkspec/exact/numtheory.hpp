#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "walkspec/exact/int_matrix.hpp"

namespace walkspec::exact {

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool isPrime64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline bool isPrime(const Int& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return isPrime64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace detail {

inline std::uint64_t pollardRho(std::uint64_t n) {
  if ((n & 1) == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [n, c](std::uint64_t x) { return (mulmod64(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      std::uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

inline void factorInto(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (isPrime64(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollardRho(n);
  factorInto(d, out);
  factorInto(n / d, out);
}

}  // namespace detail

using Factorization = std::vector<std::pair<Int, unsigned>>;  // sorted by prime

// Trial division first, then deterministic Miller-Rabin + Pollard rho on the
// cofactor. Values here are walk-matrix determinants at small order, so the
// 64-bit path covers everything in practice; a GMP fallback handles the rest.
inline Factorization factor(Int n) {
  Factorization out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  auto push = [&out](const Int& p) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1u);
  };
  for (std::uint64_t d : {2ull, 3ull, 5ull}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      push(Int(static_cast<unsigned long>(d)));
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  for (std::uint64_t d = 7; d <= 1000000 && n > 1; d += 2) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), d)) continue;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      push(Int(static_cast<unsigned long>(d)));
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  if (n > 1) {
    if (n.fits_ulong_p()) {
      std::vector<std::uint64_t> primes;
      detail::factorInto(n.get_ui(), primes);
      std::sort(primes.begin(), primes.end());
      for (std::uint64_t p : primes) push(Int(static_cast<unsigned long>(p)));
    } else {
      // Beyond 64 bits: peel factors with GMP-backed rho.
      while (n > 1 && !isPrime(n)) {
        Int x = 2, y = 2, d = 1, c = 1;
        while (d == 1) {
          x = (x * x + c) % n;
          y = (y * y + c) % n;
          y = (y * y + c) % n;
          Int diff = abs(x - y);
          mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
          if (d == n) {
            ++c;
            x = y = 2;
            d = 1;
          }
        }
        // d may be composite; recurse via repeated peeling
        while (!isPrime(d)) d = factor(d).front().first;
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
          push(d);
          mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        }
      }
      if (n > 1) push(n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool isSquareFree(const Int& n) {
  for (const auto& [p, e] : factor(n))
    if (e > 1) return false;
  return true;
}

inline bool isCubeFree(const Int& n) {
  for (const auto& [p, e] : factor(n))
    if (e > 2) return false;
  return true;
}

}  // namespace walkspec::exact
