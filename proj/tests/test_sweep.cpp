// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "suexp/render.hpp"
#include "suexp/sweep.hpp"

namespace suexp {
namespace {

TEST(Sweep, CatalogCoversEveryCheck) {
  std::vector<std::string> names;
  for (const auto& c : check_catalog()) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"combthm", "strthm", "conj52", "cor35", "lemma31",
                                             "weisman", "thm14i", "factorial-eq",
                                             "sun-identity", "lemma33"}));
  for (const auto& c : check_catalog()) {
    EXPECT_NO_THROW(GridSpec::parse(c.default_grid)) << c.name;
  }
  EXPECT_THROW(check_info("nope"), UnknownCheckError);
  EXPECT_THROW(sweep("nope", "p=2"), UnknownCheckError);
}

TEST(Sweep, SmallCombthmGridIsClean) {
  auto r = sweep("combthm", "p=2,3; alpha=0..2; n=1..40; r=-5..10; l=0..12");
  EXPECT_EQ(r.checked, 2u * 3 * 40 * 16 * 13);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.undetermined, 0u);
  ASSERT_EQ(r.slices.size(), 6u);
  EXPECT_EQ(r.slices[0].key, "p=2 alpha=0");
  EXPECT_EQ(r.slices[5].key, "p=3 alpha=2");
  for (const auto& s : r.slices) {
    ASSERT_TRUE(s.min_slack);
    EXPECT_GE(*s.min_slack, 0);
  }
}

TEST(Sweep, ReportIndependentOfJobs) {
  const char* grid = "p=2,3,5; alpha=1..2; n=1..30; r=-3..2*p^alpha; l=0..8";
  for (const char* check : {"strthm", "cor35", "conj52"}) {
    auto one = sweep(check, check == std::string("conj52") ? "default" : grid, {1, 1});
    auto three = sweep(check, check == std::string("conj52") ? "default" : grid, {3, 1});
    EXPECT_EQ(render_report(one, Format::Json), render_report(three, Format::Json)) << check;
    EXPECT_EQ(render_report(one, Format::Markdown), render_report(three, Format::Markdown));
  }
}

TEST(Sweep, RandomizedSuitesAreSeeded) {
  const char* grid = "trials=300; n=1..30; m=1..9; r=-12..12; deg=0..5; coef=-9..9";
  auto a = sweep("sun-identity", grid, {1, 42});
  auto b = sweep("sun-identity", grid, {2, 42});
  EXPECT_EQ(a.checked, 300u);
  EXPECT_TRUE(a.violations.empty());
  EXPECT_EQ(render_report(a, Format::Json), render_report(b, Format::Json));
  auto c = sweep("lemma33", grid, {1, 43});
  EXPECT_EQ(c.checked, 300u);
  EXPECT_TRUE(c.violations.empty());
}

TEST(Sweep, ConjectureSkipsAndFlags) {
  auto r = sweep("conj52", "p=3; alpha=1; n=4..12; r=0..n; l=auto");
  EXPECT_GT(r.skipped, 0u);
  EXPECT_GT(r.flagged.size(), 0u);
  EXPECT_TRUE(r.conjecture);
  for (const auto& f : r.flagged) EXPECT_EQ(f.instance[2].value, 5);
  auto explicit_l = sweep("conj52", "p=3; alpha=1; n=8; r=0; l=0..10");
  EXPECT_EQ(explicit_l.checked + explicit_l.skipped, 11u);
}

TEST(Sweep, GridShapeErrors) {
  EXPECT_THROW(sweep("combthm", "p=2; alpha=0; n=1..3; r=0"), std::invalid_argument);
  EXPECT_THROW(sweep("combthm", "alpha=0; p=2; n=1..3; r=0; l=0"), std::invalid_argument);
  EXPECT_THROW(sweep("combthm", "p=2; alpha=0; n=1..3; r=0; l=auto"), std::invalid_argument);
  EXPECT_THROW(sweep("combthm", "p=4; alpha=0; n=1..3; r=0; l=0"), std::invalid_argument);
  EXPECT_THROW(sweep("combthm", "p=2; alpha=0; n=1..3; r=0; l=-1"), std::invalid_argument);
}

TEST(Sweep, FactorialEqDefaultGrid) {
  auto r = sweep("factorial-eq", "default", {2, 1});
  EXPECT_EQ(r.checked, 19u);
  EXPECT_EQ(r.equalities, 19u);
  EXPECT_TRUE(r.clean());
}

TEST(Sweep, Thm14iSmallGrid) {
  auto r = sweep("thm14i", "p=2,3; alpha=0..3; n=2..8; m=n..n+5; h=1..2; l=0..3");
  EXPECT_TRUE(r.clean());
  EXPECT_EQ(r.checked, 2u * 4 * 7 * 6 * 2 * 4);
}

}  // namespace
}  // namespace suexp
