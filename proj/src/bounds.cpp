// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include "suexp/bounds.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "parallel.hpp"
#include "suexp/polysum.hpp"

namespace suexp {

namespace {

void require_n(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
}

std::string row_label(std::uint64_t n) { return "n=" + std::to_string(n); }

}  // namespace

std::uint64_t lower_bound(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  require_n(n);
  return n - 1 + ord_factorial(p, n / p);
}

std::uint64_t old_bound(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  require_n(n);
  if (p == 2) throw std::domain_error("the comparison bound is stated for odd p only");
  return n - 1 + (n + 2 * p - 3) / (p * p) + (n + p * p - p - 1) / (p * p * p);
}

std::uint64_t restated_bound(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  require_n(n);
  std::uint64_t total = n - 1;
  for (std::uint64_t q = p * p; q <= n; q *= p) {
    total += n / q;
    if (q > n / p) break;
  }
  return total;
}

BoundReport bound_report(std::uint64_t p, std::uint64_t n) {
  BoundReport r;
  r.p = p;
  r.n = n;
  r.new_bound = lower_bound(p, n);
  r.restated = restated_bound(p, n);
  if (p != 2) r.old_bound = old_bound(p, n);
  if (p == 2 && n == 2) {
    r.annotation = "pi_6(SU(2)) = Z/12, so the true 2-exponent of SU(2) is larger";
  }
  return r;
}

ReductionValue redn_value(std::uint64_t p, std::uint64_t n, const StructuredExponent& k,
                          const EpOptions& options) {
  ReductionValue out;
  out.detail = e_p(p, n, k, options);
  if (!out.detail.certified || !out.detail.value.is_exact()) {
    throw UndeterminedError("e_p(" + std::to_string(p) + ", " + std::to_string(n) + ", " +
                                k.to_string() + ") is not certified",
                            out.detail);
  }
  out.value = static_cast<std::int64_t>(out.detail.value.value());
  if (p == 2 && n % 2 == 0) {
    out.value -= 1;
    out.shifted = true;
  }
  return out;
}

std::vector<Table1Row> emit_table1(std::uint64_t n_from, std::uint64_t n_to,
                                   const Table1Options& options) {
  if (n_from < 2 || n_from > n_to) {
    throw std::invalid_argument("table rows need 2 <= from <= to");
  }
  std::vector<Table1Row> rows(n_to - n_from + 1);
  std::vector<std::exception_ptr> errors(rows.size());
  detail::run_parallel(rows.size(), options.jobs, [&](std::size_t i) {
    try {
      Table1Row& row = rows[i];
      row.n = n_from + i;
      StableValue sv = e_p_stable(3, row.n);
      row.stable = sv.value;
      row.stable_L = sv.L;
      row.bound = lower_bound(3, row.n);
      if (options.max_search) {
        std::uint64_t best = row.stable;
        for (std::uint64_t k = row.n; k <= row.n + options.k_budget; ++k) {
          EpResult r = e_p(3, row.n, StructuredExponent::plain(k));
          if (r.certified && r.value.is_exact()) best = std::max(best, r.value.value());
        }
        row.max_observed = best;
        row.k_searched_to = row.n + options.k_budget;
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

Table2 emit_table2() {
  Table2 t{};
  for (std::int64_t n = 0; n < 9; ++n) {
    for (std::int64_t r = 0; r < 9; ++r) {
      t[n][r] = carries(3, static_cast<std::uint64_t>(r),
                        static_cast<std::uint64_t>(least_residue(n - r, 9)));
    }
  }
  return t;
}

std::vector<DeltaEntry> emit_delta(const DeltaOptions& options) {
  if (options.l_from > options.l_to) throw std::invalid_argument("need l_from <= l_to");
  const auto sums = alt_sum_powers(options.n, 0, ipow(options.p, options.alpha), options.l_to);
  std::vector<DeltaEntry> out;
  for (unsigned l = options.l_from; l <= options.l_to; ++l) {
    DeltaEntry e;
    e.l = l;
    Valuation v = ord_int(options.p, sums[l]);
    if (v.is_finite()) e.delta = static_cast<std::int64_t>(v.value()) - options.baseline;
    out.push_back(e);
  }
  return out;
}

const std::vector<GoldenTable1Row>& golden_table1() {
  static const std::vector<GoldenTable1Row> rows = {
      {19, 20, 20}, {20, 21, 21}, {21, 22, 22}, {22, 25, 23}, {23, 26, 24}, {24, 28, 25},
      {25, 28, 26}, {26, 30, 27}, {27, 31, 30}, {28, 32, 31}, {29, 32, 32}, {30, 33, 33},
      {31, 34, 34}, {32, 35, 35}, {33, 37, 36}, {34, 37, 37}, {35, 39, 38}, {36, 41, 40},
      {37, 41, 41}, {38, 42, 42}, {39, 43, 43}, {40, 44, 44}, {41, 45, 45},
  };
  return rows;
}

const Table2& golden_table2() {
  static const Table2 table = {{
      {0, 2, 2, 1, 2, 2, 1, 2, 2},
      {0, 0, 2, 1, 1, 2, 1, 1, 2},
      {0, 0, 0, 1, 1, 1, 1, 1, 1},
      {0, 1, 1, 0, 2, 2, 1, 2, 2},
      {0, 0, 1, 0, 0, 2, 1, 1, 2},
      {0, 0, 0, 0, 0, 0, 1, 1, 1},
      {0, 1, 1, 0, 1, 1, 0, 2, 2},
      {0, 0, 1, 0, 0, 1, 0, 0, 2},
      {0, 0, 0, 0, 0, 0, 0, 0, 0},
  }};
  return table;
}

const std::vector<std::int64_t>& golden_delta() {
  static const std::vector<std::int64_t> values = {0, 0, 0, 0, 2, 3, 2, 4, 1, 1, 1,
                                                   1, 2, 2, 4, 1, 0, 0, 0, 0, 3};
  return values;
}

std::vector<Mismatch> compare_table1(const std::vector<Table1Row>& rows) {
  std::vector<Mismatch> out;
  for (const auto& row : rows) {
    auto it = std::find_if(golden_table1().begin(), golden_table1().end(),
                           [&](const GoldenTable1Row& g) { return g.n == row.n; });
    if (it == golden_table1().end()) continue;
    if (it->stable != row.stable) {
      out.push_back({row_label(row.n) + " stable", std::to_string(it->stable),
                     std::to_string(row.stable)});
    }
    if (it->bound != row.bound) {
      out.push_back({row_label(row.n) + " bound", std::to_string(it->bound),
                     std::to_string(row.bound)});
    }
  }
  return out;
}

std::vector<Mismatch> compare_table2(const Table2& table) {
  std::vector<Mismatch> out;
  for (std::size_t n = 0; n < 9; ++n) {
    for (std::size_t r = 0; r < 9; ++r) {
      if (table[n][r] != golden_table2()[n][r]) {
        out.push_back({"n=" + std::to_string(n) + " r=" + std::to_string(r),
                       std::to_string(golden_table2()[n][r]), std::to_string(table[n][r])});
      }
    }
  }
  return out;
}

std::vector<Mismatch> compare_delta(const std::vector<DeltaEntry>& entries,
                                    const DeltaOptions& options) {
  const DeltaOptions defaults;
  if (options.p != defaults.p || options.alpha != defaults.alpha || options.n != defaults.n ||
      options.baseline != defaults.baseline) {
    return {{"options", "p=2 alpha=2 n=100 baseline=22", "other"}};
  }
  std::vector<Mismatch> out;
  for (const auto& e : entries) {
    if (e.l < defaults.l_from || e.l > defaults.l_to) continue;
    const std::int64_t expected = golden_delta()[e.l - defaults.l_from];
    if (!e.delta || *e.delta != expected) {
      out.push_back({"l=" + std::to_string(e.l), std::to_string(expected),
                     e.delta ? std::to_string(*e.delta) : "inf"});
    }
  }
  return out;
}

std::vector<SoftSample> n29_soft_check(unsigned samples) {
  static const std::int64_t kSteps[] = {0,   1,    -1,  2,    3,    -3,   5,
                                        9,   -9,   27,  -27,  81,   -81,  243,
                                        -243, 729, -729, 2187, -2187, 1000};
  constexpr std::int64_t kMaxStep = 3280;  // 18 * 3280 <= 3^10
  const BigInt center = BigInt(28) + 8 * big_pow(3, 20);

  std::vector<SoftSample> out;
  for (unsigned i = 0; i < samples; ++i) {
    std::int64_t t = i < std::size(kSteps)
                         ? kSteps[i]
                         : (i % 2 == 0 ? 1 : -1) * (1 + (113 * static_cast<std::int64_t>(i)) % kMaxStep);
    SoftSample s;
    s.offset = 18 * t;
    s.k = center + static_cast<long>(s.offset);
    Valuation shift = ord_int(3, BigInt(static_cast<long>(s.offset)));
    s.predicted = shift.is_infinite() ? 34 : std::min<std::uint64_t>(shift.value() + 12, 34);
    try {
      EpResult r = e_p(3, 29, StructuredExponent::plain(s.k));
      s.certificate = to_string(r.certificate);
      if (r.certified && r.value.is_exact()) s.engine = r.value.value();
    } catch (const UndeterminedError& e) {
      s.certificate = "undetermined";
    }
    s.agrees = s.engine && *s.engine == s.predicted;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace suexp
