// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include <numeric>

#include <gtest/gtest.h>

#include "suexp/exponent.hpp"

namespace suexp {
namespace {

BigInt direct_pow(const BigInt& j, const BigInt& k, const BigInt& modulus) {
  BigInt out;
  mpz_powm(out.get_mpz_t(), j.get_mpz_t(), k.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

std::uint64_t brute_lambda(std::uint64_t q) {
  std::uint64_t lcm = 1;
  for (std::uint64_t x = 1; x < q; ++x) {
    if (std::gcd(x, q) != 1) continue;
    std::uint64_t order = 1;
    for (std::uint64_t y = x % q; y != 1; y = y * x % q) ++order;
    lcm = std::lcm(lcm, order);
  }
  return lcm;
}

TEST(Exponent, ParseForms) {
  auto k = StructuredExponent::parse("2*3^40+28");
  EXPECT_TRUE(k.is_tower());
  EXPECT_EQ(k.coefficient(), 2);
  EXPECT_EQ(k.base(), 3u);
  EXPECT_EQ(k.level(), 40u);
  EXPECT_EQ(k.offset(), 28);
  EXPECT_EQ(StructuredExponent::parse("2*3^L+28", 40), k);
  EXPECT_EQ(StructuredExponent::parse("3^4").to_plain(), 81);
  EXPECT_EQ(StructuredExponent::parse("5*2^3").to_plain(), 40);
  EXPECT_EQ(StructuredExponent::parse("12345").to_plain(), 12345);
  EXPECT_EQ(StructuredExponent::parse("2*3^L+28", 2).to_plain(), 46);
}

TEST(Exponent, ParseErrors) {
  EXPECT_THROW(StructuredExponent::parse("2*3^L+28"), ParseError);
  EXPECT_THROW(StructuredExponent::parse(""), ParseError);
  EXPECT_THROW(StructuredExponent::parse("2*4^3+1"), ParseError);
  EXPECT_THROW(StructuredExponent::parse("2*3^"), ParseError);
  EXPECT_THROW(StructuredExponent::parse("abc"), ParseError);
  EXPECT_THROW(StructuredExponent::parse("-5"), ParseError);
}

TEST(Exponent, HugeTowersStayStructured) {
  auto k = StructuredExponent::tower(2, 3, 1000, 28);
  EXPECT_FALSE(k.is_convertible());
  EXPECT_THROW(k.to_plain(), std::domain_error);
  EXPECT_EQ(k.compare(BigInt(1) << 64), 1);
  EXPECT_EQ(StructuredExponent::tower(2, 3, 3, 1).compare(55), 0);
  EXPECT_EQ(StructuredExponent::tower(2, 3, 3, 1).compare(56), -1);
  EXPECT_EQ(StructuredExponent::tower(6, 3, 999, 28), StructuredExponent::tower(2, 3, 1000, 28));
}

TEST(Exponent, ExponentModMatchesMaterialised) {
  for (std::uint64_t L = 0; L <= 12; ++L) {
    auto k = StructuredExponent::tower(7, 5, L, 11);
    BigInt value = k.to_plain();
    for (long M : {1L, 2L, 7L, 100L, 4374L, 999983L}) {
      EXPECT_EQ(exponent_mod(k, BigInt(M)), value % M) << L << " " << M;
    }
  }
}

TEST(Exponent, CarmichaelMatchesBruteForce) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::uint64_t q = p;
    for (unsigned E = 1; q <= 3000; ++E, q *= p) {
      EXPECT_EQ(carmichael_prime_power(p, E), brute_lambda(q)) << p << "^" << E;
    }
  }
}

TEST(Exponent, PowModMatchesBigIntegerPower) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned E : {1u, 5u, 17u}) {
      const BigInt modulus = big_pow(p, E);
      for (std::uint64_t L = 0; L <= 10; ++L) {
        for (long c : {1L, 2L, 4L}) {
          auto k = StructuredExponent::tower(c, p, L, 3);
          for (long j = 0; j <= 30; ++j) {
            EXPECT_EQ(pow_mod(j, k, p, E).residue(), direct_pow(j, k.to_plain(), modulus))
                << p << " " << E << " " << L << " " << c << " " << j;
          }
        }
      }
    }
  }
}

TEST(Exponent, PowModZeroCases) {
  EXPECT_THROW(pow_mod(0, StructuredExponent::plain(0), 3, 5), std::invalid_argument);
  EXPECT_EQ(pow_mod(0, StructuredExponent::plain(4), 3, 5).residue(), 0);
  EXPECT_EQ(pow_mod(6, StructuredExponent::tower(1, 3, 500, 0), 3, 20).residue(), 0);
  EXPECT_EQ(pow_mod(7, StructuredExponent::plain(0), 3, 5).residue(), 1);
}

}  // namespace
}  // namespace suexp
