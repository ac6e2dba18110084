// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "json.hpp"
#include "suexp/render.hpp"

namespace suexp {
namespace {

TEST(Render, Formats) {
  EXPECT_EQ(parse_format("md"), Format::Markdown);
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Render, Table1Csv) {
  std::vector<Table1Row> rows = {{19, 20, 21, 20, {}, 0}, {20, 21, 22, 21, {}, 0}};
  EXPECT_EQ(render_table1(rows, Format::Csv), "n,stable,bound\n19,20,20\n20,21,21\n");
  rows[0].max_observed = 21;
  rows[1].max_observed = 22;
  EXPECT_EQ(render_table1(rows, Format::Csv),
            "n,stable,bound,max_observed\n19,20,20,21\n20,21,21,22\n");
  EXPECT_NE(render_table1(rows, Format::Markdown).find("not proven maximal"), std::string::npos);
}

TEST(Render, JsonCarriesSchema) {
  auto j = nlohmann::json::parse(render_table2(emit_table2(), Format::Json));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["rows"][0][1], 2);
  DeltaOptions o;
  auto d = nlohmann::json::parse(render_delta(emit_delta(o), o, Format::Json));
  EXPECT_EQ(d["schema"], 1);
  EXPECT_EQ(d["values"].size(), 21u);
  EXPECT_EQ(d["values"][4]["delta"], 2);
}

TEST(Render, DeltaInfiniteIsDistinct) {
  std::vector<DeltaEntry> entries = {{3, std::nullopt}, {4, 2}};
  DeltaOptions o;
  EXPECT_EQ(render_delta(entries, o, Format::Csv), "l,delta\n3,inf\n4,2\n");
  auto j = nlohmann::json::parse(render_delta(entries, o, Format::Json));
  EXPECT_TRUE(j["values"][0]["delta"].is_null());
  EXPECT_EQ(j["values"][0]["infinite"], true);
}

TEST(Render, ReportShapes) {
  SweepReport r;
  r.check = "combthm";
  r.grid = "p=2";
  r.checked = 4;
  CheckOutcome bad;
  bad.instance = {{"p", 2}, {"n", 5}};
  bad.lhs = Valuation::finite(1);
  bad.bound = 3;
  judge(bad);
  r.violations.push_back(bad);
  r.slices.push_back({"p=2 alpha=0", 4, 1, -2, 3});
  r.wall_time_s = 12.5;
  auto j = nlohmann::json::parse(render_report(r, Format::Json));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["violations"][0]["slack"], -2);
  EXPECT_EQ(j["violations"][0]["instance"]["n"], 5);
  EXPECT_EQ(j["slices"][0]["min_slack"], -2);
  EXPECT_FALSE(j.contains("wall_time"));
  auto md = render_report(r, Format::Markdown);
  EXPECT_NE(md.find("## Violations"), std::string::npos);
  EXPECT_EQ(md.find("12.5"), std::string::npos);
  EXPECT_EQ(render_report(r, Format::Csv),
            "instance,lhs,bound,slack,holds,note\np=2 n=5,1,3,-2,false,\n");
}

}  // namespace
}  // namespace suexp
