// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

std::optional<std::uint64_t> ord(std::uint64_t p, mpz_class x) {
  if (x == 0) return std::nullopt;
  std::uint64_t v = 0;
  while (x % static_cast<unsigned long>(p) == 0) {
    x /= static_cast<unsigned long>(p);
    ++v;
  }
  return v;
}

mpz_class factorial(std::uint64_t m) {
  mpz_class out = 1;
  for (std::uint64_t i = 2; i <= m; ++i) out *= static_cast<unsigned long>(i);
  return out;
}

mpz_class binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

std::vector<std::vector<mpz_class>> stirling_triangle(std::uint64_t k_max,
                                                      std::uint64_t m_max) {
  std::vector<std::vector<mpz_class>> s(k_max + 1, std::vector<mpz_class>(m_max + 1, 0));
  s[0][0] = 1;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    for (std::uint64_t m = 1; m <= std::min(k, m_max); ++m) {
      s[k][m] = static_cast<unsigned long>(m) * s[k - 1][m] + s[k - 1][m - 1];
    }
  }
  return s;
}

mpz_class stirling_explicit(std::uint64_t k, std::uint64_t m) {
  mpz_class total = 0;
  for (std::uint64_t j = 0; j <= m; ++j) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), j, k);
    mpz_class term = binom(m, j) * power;
    if ((m - j) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total / factorial(m);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t residue(std::int64_t a, std::int64_t m) { return a - m * floor_div(a, m); }

mpz_class class_sum(std::uint64_t n, std::int64_t r, std::uint64_t m,
                    const std::vector<long>& coeffs) {
  mpz_class total = 0;
  const auto sm = static_cast<std::int64_t>(m);
  for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k) {
    if (residue(k - r, sm) != 0) continue;
    const long x = static_cast<long>((k - r) / sm);
    mpz_class value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * x + *it;
    mpz_class term = binom(static_cast<std::int64_t>(n), k) * value;
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

mpz_class class_sum_power(std::uint64_t n, std::int64_t r, std::uint64_t m, unsigned l) {
  std::vector<long> coeffs(l + 1, 0);
  coeffs[l] = 1;
  return class_sum(n, r, m, coeffs);
}

std::uint64_t e_p_small(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  if (k < n) throw std::invalid_argument("oracle::e_p_small needs k >= n");
  auto s = stirling_triangle(k, k);
  std::optional<std::uint64_t> best;
  for (std::uint64_t m = n; m <= k; ++m) {
    auto v = ord(p, factorial(m) * s[k][m]);
    if (v && (!best || *v < *best)) best = v;
  }
  return *best;
}

}  // namespace oracle
