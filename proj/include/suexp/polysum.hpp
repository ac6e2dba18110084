// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "suexp/polynomial.hpp"

namespace suexp {

/// Parameters of sum_{0<=k<=n, k = r (mod m)} binom(n,k) (-1)^k f((k-r)/m).
struct ResidueClassSum {
  std::uint64_t n = 0;
  std::int64_t r = 0;
  std::uint64_t modulus = 1;
  IntPolynomial f = IntPolynomial::constant(1);
};

/// binom(n, k), zero outside 0 <= k <= n.
BigInt binom_exact(std::uint64_t n, std::int64_t k);

BigInt alt_sum(const ResidueClassSum& spec);
BigInt alt_sum(std::uint64_t n, std::int64_t r, std::uint64_t m, const IntPolynomial& f);

/// alt_sum with f = x^l for every l in [0, l_max], sharing one pass over k.
std::vector<BigInt> alt_sum_powers(std::uint64_t n, std::int64_t r, std::uint64_t m,
                                   unsigned l_max);

/// alt_sum with f = binom(x, l) for every l in [0, l_max]; the values are
/// integers because binom(x, l) is, for every integer x.
std::vector<BigInt> alt_sum_binomials(std::uint64_t n, std::int64_t r, std::uint64_t m,
                                      unsigned l_max);

/// sum_{k=0}^n binom(n,k) (-1)^k f(floor((k-r)/m)).
BigInt alt_floor_sum(std::uint64_t n, std::int64_t r, std::uint64_t m,
                     const IntPolynomial& f);

struct IdentitySides {
  BigInt lhs;
  BigInt rhs;
  bool equal() const { return lhs == rhs; }
};

/// Both sides of Sun's finite-difference identity:
///   alt_floor_sum(n, r, m, f)
///     = sum_{k = rbar (mod m)} binom(n-1,k) (-1)^(k-1) (Df)((k-rbar)/m),
/// with rbar = r - 1 + m. Requires n, m >= 1.
IdentitySides sun_identity_sides(std::uint64_t n, std::uint64_t m, std::int64_t r,
                                 const IntPolynomial& f);
bool check_sun_identity(std::uint64_t n, std::uint64_t m, std::int64_t r,
                        const IntPolynomial& f);

/// Both sides of the residue-class expansion
///   S(f) - f(floor((n-r)/m)) S(1)
///     = -sum_{j<n} binom(n,j) [sum_{i = r} binom(j,i)(-1)^i]
///                 [sum_{k = r_j} binom(n-j-1,k)(-1)^k (Df)((k-r_j)/m)],
/// where S(g) = alt_sum(n, r, m, g) and r_j = r - j + m - 1.
IdentitySides lemma33_sides(std::uint64_t n, std::uint64_t m, std::int64_t r,
                            const IntPolynomial& f);
bool check_lemma_3_3(std::uint64_t n, std::uint64_t m, std::int64_t r,
                     const IntPolynomial& f);

}  // namespace suexp
