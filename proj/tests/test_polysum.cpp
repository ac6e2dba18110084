// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "suexp/polysum.hpp"

namespace suexp {
namespace {

std::vector<long> coeffs_of(const IntPolynomial& f) {
  std::vector<long> out;
  for (const auto& c : f.coefficients()) out.push_back(c.get_si());
  return out;
}

TEST(AltSum, MatchesDirectSummation) {
  const auto f = IntPolynomial::parse("3*x^3-x+2");
  for (std::uint64_t n = 0; n <= 40; n += 3) {
    for (std::uint64_t m = 1; m <= 9; ++m) {
      for (std::int64_t r = -12; r <= 12; ++r) {
        EXPECT_EQ(alt_sum(n, r, m, f), oracle::class_sum(n, r, m, coeffs_of(f)))
            << n << " " << m << " " << r;
      }
    }
  }
}

TEST(AltSum, BatchedPowersMatchSingleSums) {
  for (std::uint64_t n : {1u, 17u, 60u}) {
    for (std::int64_t r : {-10, -1, 0, 3, 8}) {
      auto sums = alt_sum_powers(n, r, 4, 12);
      for (unsigned l = 0; l <= 12; ++l) {
        EXPECT_EQ(sums[l], alt_sum(n, r, 4, IntPolynomial::monomial(l)));
        EXPECT_EQ(sums[l], oracle::class_sum_power(n, r, 4, l));
      }
    }
  }
}

TEST(AltSum, BatchedBinomialsMatchFallingFactorialOverLFactorial) {
  for (std::uint64_t n : {5u, 27u, 40u}) {
    for (std::int64_t r : {-3, 0, 2}) {
      auto sums = alt_sum_binomials(n, r, 3, 10);
      for (unsigned l = 0; l <= 10; ++l) {
        BigInt direct = alt_sum(n, r, 3, binom_poly(l)) / oracle::factorial(l);
        EXPECT_EQ(sums[l], direct) << n << " " << r << " " << l;
      }
    }
  }
}

TEST(AltSum, FullAlternatingSumVanishes) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    EXPECT_EQ(alt_sum(n, 0, 1, IntPolynomial::constant(1)), 0);
  }
  EXPECT_EQ(alt_sum(0, 5, 1, IntPolynomial::constant(1)), 1);
  EXPECT_THROW(alt_sum(4, 0, 0, IntPolynomial::constant(1)), std::invalid_argument);
}

TEST(AltSum, ClassCutsOffNegativeIndices) {
  // r = -3 mod 4 picks k = 1, 5.
  EXPECT_EQ(alt_sum(5, -3, 4, IntPolynomial::constant(1)), -5 - 1);
}

TEST(SunIdentity, HoldsOnFixedCases) {
  EXPECT_TRUE(check_sun_identity(10, 3, 2, IntPolynomial::parse("x^3-2*x")));
  EXPECT_TRUE(check_sun_identity(1, 1, 0, IntPolynomial::parse("5")));
  EXPECT_THROW(sun_identity_sides(0, 3, 1, IntPolynomial::parse("x")), std::invalid_argument);
}

TEST(SunIdentity, FloorSumMatchesDirect) {
  auto f = IntPolynomial::parse("x^2+x-3");
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::int64_t r = -5; r <= 5; ++r) {
      BigInt expected = 0;
      for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k) {
        BigInt term = oracle::binom(n, k) * f(static_cast<long>(oracle::floor_div(k - r, 3)));
        expected += k % 2 == 0 ? term : BigInt(-term);
      }
      EXPECT_EQ(alt_floor_sum(n, r, 3, f), expected);
    }
  }
}

TEST(Identities, RandomPolynomialsSatisfyBoth) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t n = 1 + rng() % 40;
    const std::uint64_t m = 1 + rng() % 9;
    const std::int64_t r = static_cast<std::int64_t>(rng() % 25) - 12;
    IntPolynomial f;
    const unsigned deg = rng() % 6;
    for (unsigned d = 0; d <= deg; ++d) {
      f = f + IntPolynomial::monomial(d, static_cast<long>(rng() % 19) - 9);
    }
    auto sun = sun_identity_sides(n, m, r, f);
    EXPECT_EQ(sun.lhs, sun.rhs) << n << " " << m << " " << r << " " << f.to_string();
    auto l33 = lemma33_sides(n, m, r, f);
    EXPECT_EQ(l33.lhs, l33.rhs) << n << " " << m << " " << r << " " << f.to_string();
  }
}

}  // namespace
}  // namespace suexp
