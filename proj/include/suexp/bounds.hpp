// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suexp/exponent.hpp"
#include "suexp/padic.hpp"
#include "suexp/stirling.hpp"

namespace suexp {

/// n - 1 + ord_p(floor(n/p)!), the lower bound on exp_p(SU(n)). n >= 2.
std::uint64_t lower_bound(std::uint64_t p, std::uint64_t n);
/// n - 1 + floor((n+2p-3)/p^2) + floor((n+p^2-p-1)/p^3). Odd p only;
/// std::domain_error for p = 2.
std::uint64_t old_bound(std::uint64_t p, std::uint64_t n);
/// n - 1 + sum_{i>=2} floor(n/p^i).
std::uint64_t restated_bound(std::uint64_t p, std::uint64_t n);

struct BoundReport {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t new_bound = 0;
  std::optional<std::uint64_t> old_bound;
  std::uint64_t restated = 0;
  std::string annotation;
};

BoundReport bound_report(std::uint64_t p, std::uint64_t n);

struct ReductionValue {
  /// e_p(n, k), or e_2(n, k) - 1 when p = 2 and n is even.
  std::int64_t value = 0;
  bool shifted = false;
  EpResult detail;
};

/// Lower bound on exp_p(SU(n)) implied by one k >= n. Throws
/// UndeterminedError when e_p(n, k) is not certified.
ReductionValue redn_value(std::uint64_t p, std::uint64_t n, const StructuredExponent& k,
                          const EpOptions& options = {});

struct Table1Row {
  std::uint64_t n = 0;
  /// e_3(n, 2*3^L + n - 1) at L = stable_L.
  std::uint64_t stable = 0;
  std::uint64_t stable_L = 0;
  /// n - 1 + ord_3(floor(n/3)!).
  std::uint64_t bound = 0;
  /// Observed maximum of e_3(n, k) over the searched k; not proven maximal.
  std::optional<std::uint64_t> max_observed;
  std::uint64_t k_searched_to = 0;
};

struct Table1Options {
  bool max_search = false;
  /// Finite k in [n, n + k_budget] are searched.
  std::uint64_t k_budget = 120;
  unsigned jobs = 1;
};

std::vector<Table1Row> emit_table1(std::uint64_t n_from, std::uint64_t n_to,
                                   const Table1Options& options = {});

/// entry[n][r] = tau_3({r}_9, {n-r}_9) for residues n, r mod 9.
using Table2 = std::array<std::array<std::uint64_t, 9>, 9>;
Table2 emit_table2();

struct DeltaOptions {
  std::uint64_t p = 2;
  std::uint64_t alpha = 2;
  std::uint64_t n = 100;
  std::int64_t baseline = 22;
  unsigned l_from = 25;
  unsigned l_to = 45;
};

struct DeltaEntry {
  unsigned l = 0;
  /// ord_p(sum) - baseline; empty when the sum vanishes.
  std::optional<std::int64_t> delta;
};

/// delta(l) = ord_p(sum_{k = 0 mod p^alpha} binom(n,k)(-1)^k (k/p^alpha)^l) - baseline.
std::vector<DeltaEntry> emit_delta(const DeltaOptions& options = {});

struct GoldenTable1Row {
  std::uint64_t n;
  std::uint64_t stable;
  std::uint64_t bound;
};

/// Published values for n = 19..41.
const std::vector<GoldenTable1Row>& golden_table1();
const Table2& golden_table2();
/// Published delta(l) for l = 25..45 with the default DeltaOptions.
const std::vector<std::int64_t>& golden_delta();

struct Mismatch {
  std::string where;
  std::string expected;
  std::string actual;
};

/// Rows without published data are ignored.
std::vector<Mismatch> compare_table1(const std::vector<Table1Row>& rows);
std::vector<Mismatch> compare_table2(const Table2& table);
/// Requires the default options; other settings are reported as a mismatch.
std::vector<Mismatch> compare_delta(const std::vector<DeltaEntry>& entries,
                                    const DeltaOptions& options);

struct SoftSample {
  /// k - (28 + 8*3^20).
  std::int64_t offset = 0;
  BigInt k;
  std::optional<std::uint64_t> engine;
  std::string certificate;
  std::uint64_t predicted = 0;
  bool agrees = false;
};

/// e_3(29, k) against min{ord_3(k - 28 - 8*3^20) + 12, 34} for `samples`
/// fixed k = 10 (mod 18) within 3^10 of 28 + 8*3^20.
std::vector<SoftSample> n29_soft_check(unsigned samples = 20);

}  // namespace suexp
