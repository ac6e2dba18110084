// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include "suexp/polysum.hpp"

#include <stdexcept>

namespace suexp {

namespace {

void require_modulus(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("residue-class modulus must be >= 1");
}

/// Calls visit(k, signed_binomial, quotient) for k in [0, n] with
/// k = r (mod m), where quotient = (k - r) / m.
template <typename Visit>
void for_each_class_member(std::uint64_t n, std::int64_t r, std::uint64_t m,
                           Visit&& visit) {
  require_modulus(m);
  const auto step = static_cast<std::int64_t>(m);
  const auto top = static_cast<std::int64_t>(n);
  BigInt binomial;
  for (std::int64_t k = least_residue(r, step); k <= top; k += step) {
    mpz_bin_uiui(binomial.get_mpz_t(), n, static_cast<unsigned long>(k));
    if (k % 2 != 0) binomial = -binomial;
    visit(k, binomial, (k - r) / step);
  }
}

}  // namespace

BigInt binom_exact(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

BigInt alt_sum(const ResidueClassSum& spec) {
  return alt_sum(spec.n, spec.r, spec.modulus, spec.f);
}

BigInt alt_sum(std::uint64_t n, std::int64_t r, std::uint64_t m, const IntPolynomial& f) {
  BigInt total = 0;
  for_each_class_member(n, r, m, [&](std::int64_t, const BigInt& c, std::int64_t x) {
    total += c * f(BigInt(static_cast<long>(x)));
  });
  return total;
}

std::vector<BigInt> alt_sum_powers(std::uint64_t n, std::int64_t r, std::uint64_t m,
                                   unsigned l_max) {
  std::vector<BigInt> totals(l_max + 1, BigInt(0));
  BigInt term;
  for_each_class_member(n, r, m, [&](std::int64_t, const BigInt& c, std::int64_t x) {
    term = c;
    for (unsigned l = 0; l <= l_max; ++l) {
      totals[l] += term;
      term *= static_cast<long>(x);
    }
  });
  return totals;
}

std::vector<BigInt> alt_sum_binomials(std::uint64_t n, std::int64_t r, std::uint64_t m,
                                      unsigned l_max) {
  std::vector<BigInt> totals(l_max + 1, BigInt(0));
  BigInt falling;
  for_each_class_member(n, r, m, [&](std::int64_t, const BigInt& c, std::int64_t x) {
    falling = 1;  // binom(x, l)
    for (unsigned l = 0; l <= l_max; ++l) {
      if (l > 0) {
        falling *= static_cast<long>(x - static_cast<std::int64_t>(l) + 1);
        mpz_divexact_ui(falling.get_mpz_t(), falling.get_mpz_t(), l);
      }
      totals[l] += c * falling;
    }
  });
  return totals;
}

BigInt alt_floor_sum(std::uint64_t n, std::int64_t r, std::uint64_t m,
                     const IntPolynomial& f) {
  require_modulus(m);
  BigInt total = 0;
  BigInt binomial;
  for (std::uint64_t k = 0; k <= n; ++k) {
    mpz_bin_uiui(binomial.get_mpz_t(), n, k);
    std::int64_t x = floor_div(static_cast<std::int64_t>(k) - r, static_cast<std::int64_t>(m));
    BigInt term = binomial * f(BigInt(static_cast<long>(x)));
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

IdentitySides sun_identity_sides(std::uint64_t n, std::uint64_t m, std::int64_t r,
                                 const IntPolynomial& f) {
  if (n == 0) throw std::invalid_argument("sun identity requires n >= 1");
  require_modulus(m);
  const std::int64_t rbar = r - 1 + static_cast<std::int64_t>(m);
  // (-1)^(k-1) = -(-1)^k
  BigInt rhs = -alt_sum(n - 1, rbar, m, poly_delta(f));
  return {alt_floor_sum(n, r, m, f), rhs};
}

bool check_sun_identity(std::uint64_t n, std::uint64_t m, std::int64_t r,
                        const IntPolynomial& f) {
  return sun_identity_sides(n, m, r, f).equal();
}

IdentitySides lemma33_sides(std::uint64_t n, std::uint64_t m, std::int64_t r,
                            const IntPolynomial& f) {
  if (n == 0) throw std::invalid_argument("class-sum identity requires n >= 1");
  require_modulus(m);
  const auto one = IntPolynomial::constant(1);
  const auto sm = static_cast<std::int64_t>(m);
  const auto sn = static_cast<std::int64_t>(n);

  BigInt lhs = alt_sum(n, r, m, f) -
               f(BigInt(static_cast<long>(floor_div(sn - r, sm)))) * alt_sum(n, r, m, one);

  const IntPolynomial df = poly_delta(f);
  BigInt rhs = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    BigInt inner_class = alt_sum(j, r, m, one);
    if (inner_class == 0) continue;
    const std::int64_t rj = r - static_cast<std::int64_t>(j) + sm - 1;
    rhs -= binom_exact(n, static_cast<std::int64_t>(j)) * inner_class *
           alt_sum(n - j - 1, rj, m, df);
  }
  return {lhs, rhs};
}

bool check_lemma_3_3(std::uint64_t n, std::uint64_t m, std::int64_t r,
                     const IntPolynomial& f) {
  return lemma33_sides(n, m, r, f).equal();
}

}  // namespace suexp
