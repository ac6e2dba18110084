// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "suexp/stirling.hpp"
#include "suexp/verifiers.hpp"

namespace suexp {
namespace {

std::uint64_t ipow_small(std::uint64_t p, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e--) out *= p;
  return out;
}

TEST(Judge, ThreeValuedSemantics) {
  CheckOutcome o;
  o.bound = 5;
  o.lhs = TruncatedValuation::at_least(5);
  judge(o);
  EXPECT_EQ(o.holds, Tri::True);
  EXPECT_FALSE(o.slack);
  o.lhs = TruncatedValuation::at_least(4);
  judge(o);
  EXPECT_EQ(o.holds, Tri::Undetermined);
  o.lhs = TruncatedValuation::exact(4);
  judge(o);
  EXPECT_EQ(o.holds, Tri::False);
  EXPECT_EQ(o.slack, -1);
  o.lhs = Valuation::infinite();
  judge(o);
  EXPECT_EQ(o.holds, Tri::True);
  o.lhs = Valuation::finite(9);
  judge(o);
  EXPECT_EQ(o.slack, 4);
  o.bound = -3;
  o.lhs = Valuation::finite(0);
  judge(o);
  EXPECT_EQ(o.holds, Tri::True);
}

TEST(Combthm, Examples) {
  auto o = check_combthm(2, 2, 100, 0, IntPolynomial::parse("x^25"));
  EXPECT_EQ(o.bound, 22);
  EXPECT_EQ(o.slack, 0);
  EXPECT_EQ(o.holds, Tri::True);
  for (std::uint64_t n = 0; n < 9; ++n) {
    auto small = check_combthm(3, 2, n, 4, IntPolynomial::parse("x^3+1"));
    EXPECT_EQ(small.bound, 0);
    EXPECT_EQ(small.holds, Tri::True);
  }
  auto d = check_combthm(3, 2, 100, 1, IntPolynomial::parse("x^7"));
  EXPECT_EQ(std::get<Valuation>(d.lhs).value(), *oracle::ord(3, oracle::class_sum_power(100, 1, 9, 7)));
  EXPECT_EQ(d.bound, static_cast<std::int64_t>(*oracle::ord(3, oracle::factorial(11))));
  EXPECT_EQ(d.holds, Tri::True);
}

TEST(Strthm, Examples) {
  auto o = check_strthm(3, 2, 9, 1, 4);
  EXPECT_EQ(strthm_excess(3, 2, 9, 1), 2);
  EXPECT_EQ(o.bound, 2);
  EXPECT_EQ(o.holds, Tri::True);
  for (std::int64_t r : {-18, -9, 0, 9, 27}) EXPECT_EQ(strthm_excess(3, 2, 50, r), 0);
  auto d = check_strthm(3, 2, 22, 5, 7);
  EXPECT_EQ(std::get<Valuation>(d.lhs).value(), *oracle::ord(3, oracle::class_sum_power(22, 5, 9, 7)));
  EXPECT_EQ(d.holds, Tri::True);
}

TEST(Strthm, DominatesCombthmByTau) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint64_t alpha = 0; alpha <= 3; ++alpha) {
      for (std::uint64_t n = 0; n <= 60; n += 7) {
        for (std::int64_t r = -10; r <= 20; ++r) {
          const auto excess = strthm_bound(p, alpha, n, r) - combthm_bound(p, alpha, n);
          EXPECT_EQ(excess, strthm_excess(p, alpha, static_cast<std::int64_t>(n), r));
          EXPECT_GE(excess, 0);
          EXPECT_LE(excess, static_cast<std::int64_t>(alpha));
        }
      }
    }
  }
}

TEST(Conj52, ModulusAndFirstL) {
  EXPECT_EQ(conj52_modulus(3, 1, 8), 2u);
  EXPECT_EQ(conj52_modulus(3, 1, 9), 6u);
  EXPECT_EQ(conj52_modulus(2, 2, 100), 16u);
  EXPECT_FALSE(conj52_first_l(3, 1, 4, 0));
  auto l = conj52_first_l(3, 1, 8, 0);
  ASSERT_TRUE(l);
  EXPECT_GE(*l, 2u);
  EXPECT_EQ((*l - (0 / 3 + 8 / 3)) % 2, 0u);
}

TEST(Conj52, Examples) {
  const auto l = static_cast<unsigned>(*conj52_first_l(3, 1, 8, 0));
  auto o = check_conj52(3, 1, 8, 0, l);
  EXPECT_FALSE(o.skipped);
  EXPECT_EQ(o.slack, 0);
  EXPECT_EQ(o.holds, Tri::True);
  EXPECT_TRUE(check_conj52(3, 1, 8, 0, 1).skipped);
  EXPECT_TRUE(check_conj52(3, 1, 8, 0, l + 1).skipped);
  EXPECT_TRUE(check_conj52(3, 1, 4, 0, 5).skipped);
  EXPECT_TRUE(check_conj52(3, 1, 5, 0, *conj52_first_l(3, 1, 5, 0)).flagged);
  EXPECT_FALSE(o.flagged);
}

TEST(Cor35, Examples) {
  for (unsigned l = 0; l <= 6; ++l) {
    auto o = check_cor35(3, 1, 27, 2, l);
    EXPECT_EQ(o.holds, Tri::True) << l;
  }
  auto zero = check_cor35(3, 2, 50, 4, 0);
  auto plain = check_combthm(3, 2, 50, 4, IntPolynomial::constant(1));
  EXPECT_EQ(zero.bound, plain.bound);
  EXPECT_EQ(to_string(zero.lhs), to_string(plain.lhs));
  auto neg = check_cor35(2, 2, 40, -3, 3);
  EXPECT_EQ(neg.holds, Tri::True);
  EXPECT_EQ(neg.bound, 8 - 1);
  auto deep = check_cor35(2, 0, 3, 0, 30);
  EXPECT_LT(deep.bound, 0);
  EXPECT_EQ(deep.holds, Tri::True);
}

TEST(Lemma31, Examples) {
  auto zero = check_lemma31(3, 0, 10, 4);
  EXPECT_TRUE(std::get<Valuation>(zero.lhs).is_infinite());
  EXPECT_EQ(zero.holds, Tri::True);
  EXPECT_EQ(zero.bound, static_cast<std::int64_t>(*oracle::ord(3, oracle::factorial(30))));
  EXPECT_EQ(check_lemma31(3, 2, 40, 5).holds, Tri::True);
  EXPECT_EQ(check_lemma31(2, 3, 100, 1).holds, Tri::True);
  EXPECT_EQ(check_lemma31(3, 2, 40, 5).bound,
            static_cast<std::int64_t>(*oracle::ord(3, oracle::factorial(13))));
}

TEST(Weisman, Examples) {
  auto o = check_weisman(3, 2, 40, 5);
  EXPECT_EQ(o.bound, (40 - 3) / 6);
  EXPECT_EQ(o.holds, Tri::True);
  auto edge = check_weisman(3, 2, 3, 1);
  EXPECT_EQ(edge.bound, 0);
  EXPECT_EQ(edge.holds, Tri::True);
  EXPECT_EQ(check_weisman(2, 4, 200, 7).holds, Tri::True);
  EXPECT_TRUE(check_weisman(3, 0, 10, 1).skipped);
  EXPECT_TRUE(check_weisman(3, 3, 8, 1).skipped);
}

/// Exact left side of the l-th difference statement from the Stirling triangle.
std::optional<std::uint64_t> thm14i_exact(std::uint64_t p, std::uint64_t alpha, std::uint64_t h,
                                          std::uint64_t l, std::uint64_t m, std::uint64_t n) {
  const std::uint64_t step = h * (p - 1) * ipow_small(p, alpha);
  auto triangle = oracle::stirling_triangle(l * step + n, m);
  mpz_class total = 0;
  for (std::uint64_t k = 0; k <= l; ++k) {
    mpz_class term = oracle::binom(l, k) * triangle[k * step + n - 1][m];
    total += k % 2 == 0 ? term : mpz_class(-term);
  }
  return oracle::ord(p, oracle::factorial(m) * total);
}

TEST(Thm14i, Examples) {
  auto zero = check_thm14i(3, 1, 1, 0, 12, 10);
  EXPECT_TRUE(std::get<Valuation>(zero.lhs).is_infinite());
  EXPECT_EQ(zero.holds, Tri::True);

  auto a = check_thm14i(3, 1, 1, 1, 29, 29);
  EXPECT_EQ(a.holds, Tri::True);
  EXPECT_EQ(a.bound, std::min<std::int64_t>(2, 28 + 3));
  auto b = check_thm14i(2, 2, 1, 2, 12, 10);
  EXPECT_EQ(b.holds, Tri::True);
  EXPECT_EQ(b.bound, std::min<std::int64_t>(6, 9 + 4));
}

TEST(Thm14i, TruncatedValueMatchesExact) {
  for (auto [p, alpha, h, l, m, n] :
       std::vector<std::array<std::uint64_t, 6>>{{3, 1, 1, 1, 29, 29}, {2, 2, 1, 2, 12, 10},
                                                 {3, 0, 2, 3, 14, 9}, {2, 1, 2, 3, 20, 6},
                                                 {5, 1, 1, 2, 11, 7}}) {
    auto o = check_thm14i(p, alpha, h, l, m, n);
    auto exact = thm14i_exact(p, alpha, h, l, m, n);
    const auto& t = std::get<TruncatedValuation>(o.lhs);
    if (t.is_exact()) {
      ASSERT_TRUE(exact);
      EXPECT_EQ(t.value(), *exact);
    } else {
      EXPECT_TRUE(!exact || *exact >= t.value());
    }
    EXPECT_EQ(o.holds, Tri::True);
  }
}

TEST(FactorialEq, Examples) {
  for (std::uint64_t n : {4u, 6u, 20u}) {
    auto o = check_factorial_eq(n);
    EXPECT_EQ(o.holds, Tri::True) << n << " " << o.note;
    EXPECT_EQ(o.bound, static_cast<std::int64_t>(*oracle::ord(2, oracle::factorial(n - 1))));
  }
  EXPECT_EQ(check_factorial_eq(4).bound, 1);
  EXPECT_EQ(check_factorial_eq(6).bound, 3);
  EXPECT_TRUE(check_factorial_eq(7).skipped);
  EXPECT_TRUE(check_factorial_eq(2).skipped);
}

TEST(Identities, InstancesHold) {
  auto f = IntPolynomial::parse("2*x^4-x+3");
  EXPECT_EQ(check_sun_instance(17, 4, -3, f).holds, Tri::True);
  EXPECT_EQ(check_lemma33_instance(17, 4, -3, f).holds, Tri::True);
}

TEST(Batches, MatchSingleChecks) {
  const std::vector<unsigned> ls = {0, 1, 5, 12};
  auto comb = combthm_powers_batch(3, 1, 40, -2, ls);
  auto str = strthm_batch(3, 1, 40, -2, ls);
  auto cor = cor35_batch(3, 1, 40, -2, ls);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    auto c1 = check_combthm(3, 1, 40, -2, IntPolynomial::monomial(ls[i]));
    EXPECT_EQ(to_string(comb[i].lhs), to_string(c1.lhs));
    EXPECT_EQ(comb[i].bound, c1.bound);
    auto s1 = check_strthm(3, 1, 40, -2, ls[i]);
    EXPECT_EQ(to_string(str[i].lhs), to_string(s1.lhs));
    EXPECT_EQ(str[i].bound, s1.bound);
    auto k1 = check_cor35(3, 1, 40, -2, ls[i]);
    EXPECT_EQ(to_string(cor[i].lhs), to_string(k1.lhs));
    EXPECT_EQ(cor[i].bound, k1.bound);
  }
  auto thm = thm14i_batch(2, 1, 1, 15, 8, {0, 1, 2, 3});
  for (std::uint64_t l = 0; l <= 3; ++l) {
    EXPECT_EQ(to_string(thm[l].lhs), to_string(check_thm14i(2, 1, 1, l, 15, 8).lhs));
  }
}

}  // namespace
}  // namespace suexp
