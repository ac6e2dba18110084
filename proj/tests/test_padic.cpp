// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "suexp/padic.hpp"

namespace suexp {
namespace {

TEST(Valuation, InfiniteIsGreatest) {
  EXPECT_LT(Valuation::finite(1000), Valuation::infinite());
  EXPECT_EQ(Valuation::infinite(), Valuation::infinite());
  EXPECT_EQ(Valuation::infinite().to_string(), "inf");
  EXPECT_THROW(Valuation::infinite().value(), std::logic_error);
  EXPECT_EQ(Valuation::finite(7).value(), 7u);
}

TEST(TruncatedValuation, ThreeValuedComparisons) {
  auto exact = TruncatedValuation::exact(5);
  auto floor = TruncatedValuation::at_least(8);
  EXPECT_EQ(exact.geq(5), Tri::True);
  EXPECT_EQ(exact.geq(6), Tri::False);
  EXPECT_EQ(exact.equals(5), Tri::True);
  EXPECT_EQ(floor.geq(8), Tri::True);
  EXPECT_EQ(floor.geq(9), Tri::Undetermined);
  EXPECT_EQ(floor.less(8), Tri::False);
  EXPECT_EQ(floor.equals(3), Tri::False);
  EXPECT_EQ(floor.equals(9), Tri::Undetermined);
  EXPECT_EQ(exact.less(floor), Tri::True);
  EXPECT_EQ(floor.less(exact), Tri::False);
  EXPECT_EQ(floor.less(TruncatedValuation::at_least(3)), Tri::Undetermined);
  EXPECT_EQ(exact.to_string(), "5");
  EXPECT_EQ(floor.to_string(), ">=8");
}

TEST(Primes, Basics) {
  for (std::uint64_t p : {2, 3, 5, 7, 97, 7919}) EXPECT_TRUE(is_prime(p)) << p;
  for (std::uint64_t p : {0, 1, 4, 9, 91, 7917}) EXPECT_FALSE(is_prime(p)) << p;
  EXPECT_THROW(require_prime(6), std::invalid_argument);
  EXPECT_THROW(ipow(3, 41), std::overflow_error);
  EXPECT_EQ(ipow(3, 40), 12157665459056928801ull);
  EXPECT_EQ(big_pow(3, 50), BigInt("717897987691852588770249"));
}

TEST(OrdInt, MatchesRepeatedDivision) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (long x = -500; x <= 500; ++x) {
      auto expected = oracle::ord(p, x);
      Valuation v = ord_int(p, BigInt(x));
      if (!expected) {
        EXPECT_TRUE(v.is_infinite());
      } else {
        EXPECT_EQ(v.value(), *expected) << p << " " << x;
      }
    }
  }
  EXPECT_EQ(ord_int(3, big_pow(3, 200) * 10).value(), 200u);
}

TEST(OrdFactorial, LegendreMatchesFactorial) {
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    for (std::uint64_t m = 0; m <= 300; ++m) {
      EXPECT_EQ(ord_factorial(p, m), *oracle::ord(p, oracle::factorial(m))) << p << " " << m;
    }
  }
  EXPECT_EQ(ord_factorial(3, 1000000), 499993u);
}

TEST(Residues, LeastResidueAndFloorDiv) {
  for (std::int64_t a = -60; a <= 60; ++a) {
    for (std::int64_t m = 1; m <= 13; ++m) {
      EXPECT_EQ(least_residue(a, m), oracle::residue(a, m));
      EXPECT_EQ(floor_div(a, m), oracle::floor_div(a, m));
      EXPECT_EQ(floor_div(a, -m), oracle::floor_div(a, -m));
    }
  }
  EXPECT_EQ(least_residue(BigInt(-7), BigInt(9)), 2);
  EXPECT_THROW(least_residue(3, 0), std::invalid_argument);
  EXPECT_THROW(floor_div(3, 0), std::invalid_argument);
}

TEST(Carries, KummerAgreesOnSmallRange) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint64_t a = 0; a <= 80; ++a) {
      for (std::uint64_t b = 0; b <= 80; ++b) {
        auto expected = oracle::ord(p, oracle::binom(a + b, a));
        EXPECT_EQ(carries(p, a, b), *expected) << p << " " << a << " " << b;
      }
    }
  }
  EXPECT_EQ(carries(3, 1, 8), 2u);
}

TEST(EulerPhi, CountsUnits) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint64_t alpha = 1; alpha <= 4; ++alpha) {
      const std::uint64_t q = ipow(p, alpha);
      std::uint64_t units = 0;
      for (std::uint64_t x = 1; x <= q; ++x) units += x % p != 0;
      EXPECT_EQ(euler_phi_prime_power(p, alpha), units);
    }
  }
  EXPECT_THROW(euler_phi_prime_power(3, 0), std::invalid_argument);
}

TEST(ModPE, RingArithmetic) {
  ModPE a(BigInt(-1), 3, 4);
  EXPECT_EQ(a.residue(), 80);
  ModPE b(BigInt(27), 3, 4);
  EXPECT_EQ((a * b).residue(), 54);
  EXPECT_EQ((a + b).residue(), 26);
  EXPECT_EQ((b * b).residue(), 0);
  EXPECT_EQ(trunc_val(b * b), TruncatedValuation::at_least(4));
  EXPECT_EQ(trunc_val(b), TruncatedValuation::exact(3));
  EXPECT_THROW(a + ModPE(BigInt(1), 3, 5), std::invalid_argument);
  EXPECT_THROW(a + ModPE(BigInt(1), 5, 4), std::invalid_argument);
  EXPECT_THROW(ModPE(BigInt(1), 3, 0), std::invalid_argument);
}

TEST(PrimePowerCtx, Validates) {
  PrimePowerCtx ctx(3, 2, 10);
  EXPECT_EQ(ctx.class_modulus(), 9u);
  EXPECT_EQ(ctx.modulus(), 59049);
  EXPECT_THROW(PrimePowerCtx(4, 1, 10), std::invalid_argument);
  EXPECT_THROW(PrimePowerCtx(3, 1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace suexp
