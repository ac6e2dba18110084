// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include "suexp/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>

#include "parallel.hpp"
#include "suexp/exponent.hpp"

namespace suexp {

namespace {

const std::string kPowerGrid = "p=2,3,5; alpha=0..3; n=1..200; r=-10..2*p^alpha; l=0..30";
const std::string kClassGrid = "p=2,3,5; alpha=0..3; n=1..200; r=-10..2*p^alpha";
const std::string kIdentityGrid =
    "trials=10000; n=1..60; m=1..9; r=-12..12; deg=0..5; coef=-9..9";

struct WorkItem {
  std::vector<std::int64_t> prefix;
  std::vector<std::int64_t> last;
  bool auto_last = false;
};

struct RandomInstance {
  std::uint64_t trial;
  std::uint64_t n;
  std::uint64_t m;
  std::int64_t r;
  IntPolynomial f;
};

struct ItemSummary {
  std::uint64_t checked = 0;
  std::uint64_t undetermined = 0;
  std::uint64_t skipped = 0;
  std::uint64_t equalities = 0;
  std::vector<CheckOutcome> violations;
  std::vector<CheckOutcome> undetermined_cases;
  std::vector<CheckOutcome> flagged;
  std::optional<std::int64_t> min_slack;
  std::optional<std::int64_t> max_slack;
  std::string slice;
  std::exception_ptr error;
};

std::uint64_t nonneg(std::int64_t v, const char* axis) {
  if (v < 0) {
    throw std::invalid_argument(std::string("axis '") + axis + "' must be nonnegative, got " +
                                std::to_string(v));
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t positive(std::int64_t v, const char* axis) {
  if (v <= 0) {
    throw std::invalid_argument(std::string("axis '") + axis + "' must be positive, got " +
                                std::to_string(v));
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t prime_axis(std::int64_t v) {
  auto p = nonneg(v, "p");
  require_prime(p);
  return p;
}

std::vector<unsigned> as_unsigned(const std::vector<std::int64_t>& values, const char* axis) {
  std::vector<unsigned> out;
  out.reserve(values.size());
  for (auto v : values) {
    auto u = nonneg(v, axis);
    if (u > 100000) throw std::invalid_argument(std::string("axis '") + axis + "' too large");
    out.push_back(static_cast<unsigned>(u));
  }
  return out;
}

std::vector<CheckOutcome> run_item(const std::string& check, const WorkItem& item) {
  const auto& x = item.prefix;
  if (check == "combthm" || check == "strthm" || check == "cor35" || check == "conj52") {
    const auto p = prime_axis(x[0]);
    const auto alpha = nonneg(x[1], "alpha");
    const auto n = nonneg(x[2], "n");
    const std::int64_t r = x[3];
    if (check == "conj52") {
      std::vector<unsigned> ls;
      if (item.auto_last) {
        auto first = conj52_first_l(p, alpha, n, r);
        ls.push_back(static_cast<unsigned>(first ? *first : n / ipow(p, alpha)));
      } else {
        ls = as_unsigned(item.last, "l");
      }
      return conj52_batch(p, alpha, n, r, ls);
    }
    const auto ls = as_unsigned(item.last, "l");
    if (check == "combthm") return combthm_powers_batch(p, alpha, n, r, ls);
    if (check == "strthm") return strthm_batch(p, alpha, n, r, ls);
    return cor35_batch(p, alpha, n, r, ls);
  }
  if (check == "lemma31" || check == "weisman") {
    const auto p = prime_axis(x[0]);
    const auto alpha = nonneg(x[1], "alpha");
    const auto n = nonneg(x[2], "n");
    std::vector<CheckOutcome> outs;
    for (std::int64_t r : item.last) {
      outs.push_back(check == "lemma31" ? check_lemma31(p, alpha, n, r)
                                        : check_weisman(p, alpha, n, r));
    }
    return outs;
  }
  if (check == "thm14i") {
    std::vector<std::uint64_t> ls;
    for (auto l : item.last) ls.push_back(nonneg(l, "l"));
    return thm14i_batch(prime_axis(x[0]), nonneg(x[1], "alpha"), nonneg(x[4], "h"),
                        nonneg(x[3], "m"), positive(x[2], "n"), ls);
  }
  if (check == "factorial-eq") {
    std::vector<CheckOutcome> outs;
    for (auto n : item.last) outs.push_back(check_factorial_eq(nonneg(n, "n")));
    return outs;
  }
  throw UnknownCheckError("unknown check '" + check + "'");
}

void absorb(ItemSummary& s, CheckOutcome&& out) {
  if (out.skipped) {
    ++s.skipped;
    return;
  }
  ++s.checked;
  if (out.slack) {
    if (*out.slack == 0) ++s.equalities;
    s.min_slack = s.min_slack ? std::min(*s.min_slack, *out.slack) : *out.slack;
    s.max_slack = s.max_slack ? std::max(*s.max_slack, *out.slack) : *out.slack;
  }
  if (out.holds == Tri::Undetermined) {
    ++s.undetermined;
    s.undetermined_cases.push_back(out);
  } else if (out.holds == Tri::False) {
    s.violations.push_back(out);
  }
  if (out.flagged) s.flagged.push_back(std::move(out));
}

std::string slice_key(const CheckInfo& info, const std::vector<std::int64_t>& prefix) {
  if (info.randomized || info.axes.size() < 3) return "all";
  return info.axes[0] + "=" + std::to_string(prefix[0]) + " " + info.axes[1] + "=" +
         std::to_string(prefix[1]);
}

void enumerate(const GridSpec& grid, std::size_t depth, Bindings& bindings,
               std::vector<std::int64_t>& prefix, std::size_t chunk,
               std::vector<WorkItem>& items) {
  const auto& axes = grid.axes();
  const Axis& axis = axes[depth];
  if (depth + 1 == axes.size()) {
    if (axis.is_auto) {
      items.push_back({prefix, {}, true});
      return;
    }
    auto values = axis.values(bindings);
    if (chunk == 0 || values.size() <= chunk) {
      if (!values.empty()) items.push_back({prefix, std::move(values), false});
      return;
    }
    for (std::size_t i = 0; i < values.size(); i += chunk) {
      std::size_t end = std::min(values.size(), i + chunk);
      items.push_back({prefix, {values.begin() + i, values.begin() + end}, false});
    }
    return;
  }
  if (axis.is_auto) {
    throw std::invalid_argument("only the last axis may be 'auto'");
  }
  for (std::int64_t v : axis.values(bindings)) {
    bindings.emplace_back(axis.name, v);
    prefix.push_back(v);
    enumerate(grid, depth + 1, bindings, prefix, chunk, items);
    prefix.pop_back();
    bindings.pop_back();
  }
}

std::vector<RandomInstance> draw_instances(const GridSpec& grid, std::uint64_t seed) {
  const Bindings none;
  auto values_of = [&](const char* name) {
    auto v = grid.find(name)->values(none);
    if (v.empty()) throw std::invalid_argument(std::string("axis '") + name + "' is empty");
    return v;
  };
  const auto trials = values_of("trials");
  const auto ns = values_of("n");
  const auto ms = values_of("m");
  const auto rs = values_of("r");
  const auto degs = values_of("deg");
  const auto coefs = values_of("coef");
  if (trials.size() != 1) throw std::invalid_argument("axis 'trials' takes a single count");

  std::mt19937_64 rng(seed);
  auto pick = [&rng](const std::vector<std::int64_t>& v) { return v[rng() % v.size()]; };
  std::vector<RandomInstance> out;
  const auto count = nonneg(trials[0], "trials");
  out.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    RandomInstance inst;
    inst.trial = t;
    inst.n = positive(pick(ns), "n");
    inst.m = positive(pick(ms), "m");
    inst.r = pick(rs);
    const auto deg = nonneg(pick(degs), "deg");
    IntPolynomial f;
    for (std::uint64_t d = 0; d <= deg; ++d) {
      f = f + IntPolynomial::monomial(static_cast<unsigned>(d)) *
                  BigInt(static_cast<long>(pick(coefs)));
    }
    inst.f = std::move(f);
    out.push_back(std::move(inst));
  }
  return out;
}

void validate_axes(const CheckInfo& info, const GridSpec& grid) {
  std::vector<std::string> names;
  for (const auto& a : grid.axes()) names.push_back(a.name);
  if (names != info.axes) {
    std::string expected;
    for (const auto& a : info.axes) expected += (expected.empty() ? "" : ", ") + a;
    throw std::invalid_argument("check '" + info.name + "' expects axes " + expected +
                                " in that order");
  }
  for (std::size_t i = 0; i + 1 < grid.axes().size(); ++i) {
    if (grid.axes()[i].is_auto) throw std::invalid_argument("only the last axis may be 'auto'");
  }
  if (grid.axes().back().is_auto && info.name != "conj52") {
    throw std::invalid_argument("'auto' is only meaningful for conj52's l axis");
  }
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = {
      {"combthm", {"p", "alpha", "n", "r", "l"}, false, false, kPowerGrid,
       "class sums of x^l against ord_p(floor(n/p^alpha)!)"},
      {"strthm", {"p", "alpha", "n", "r", "l"}, false, false, kPowerGrid,
       "class sums of x^l against the carry-strengthened bound"},
      {"conj52", {"p", "alpha", "n", "r", "l"}, true, false,
       "p=2,3,5; alpha=1..2; n=2*p^alpha-1..120; r=0..n; l=auto",
       "equality in the carry-strengthened bound (conjecture)"},
      {"cor35", {"p", "alpha", "n", "r", "l"}, false, false, kPowerGrid,
       "class sums of binom(x, l) against the bound minus ord_p(l!)"},
      {"lemma31", {"p", "alpha", "n", "r"}, false, false, kClassGrid,
       "plain class sums against ord_p(floor(n/p^(alpha-1))!)"},
      {"weisman", {"p", "alpha", "n", "r"}, false, false, kClassGrid,
       "plain class sums against floor((n-p^(alpha-1))/phi(p^alpha))"},
      {"thm14i", {"p", "alpha", "n", "m", "h", "l"}, false, false,
       "p=2,3; alpha=0..3; n=2..30; m=n..n+20; h=1..2; l=0..3",
       "l-th differences of m! S(k h (p-1) p^alpha + n - 1, m)"},
      {"factorial-eq", {"n"}, false, false, "n=4..40:2",
       "e_2(n-1, 2^L+n-1) = ord_2((n-1)!)"},
      {"sun-identity", {"trials", "n", "m", "r", "deg", "coef"}, false, true, kIdentityGrid,
       "floor-sum finite-difference identity on random polynomials"},
      {"lemma33", {"trials", "n", "m", "r", "deg", "coef"}, false, true, kIdentityGrid,
       "class-sum integer identity on random polynomials"},
  };
  return catalog;
}

const CheckInfo& check_info(std::string_view name) {
  for (const auto& info : check_catalog()) {
    if (info.name == name) return info;
  }
  std::string known;
  for (const auto& info : check_catalog()) known += (known.empty() ? "" : ", ") + info.name;
  throw UnknownCheckError("unknown check '" + std::string(name) + "' (known: " + known + ")");
}

SweepReport sweep(std::string_view check, std::string_view grid_text,
                  const SweepOptions& options) {
  const CheckInfo& info = check_info(check);
  return sweep(check, GridSpec::parse(grid_text == "default" ? info.default_grid : grid_text),
               options);
}

SweepReport sweep(std::string_view check, const GridSpec& grid, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const CheckInfo& info = check_info(check);
  validate_axes(info, grid);

  SweepReport report;
  report.check = info.name;
  report.grid = grid.to_string();
  report.seed = options.seed;
  report.conjecture = info.conjecture;

  std::vector<ItemSummary> summaries;
  if (info.randomized) {
    const auto instances = draw_instances(grid, options.seed);
    constexpr std::size_t kChunk = 100;
    const std::size_t count = (instances.size() + kChunk - 1) / kChunk;
    summaries.resize(count);
    const bool sun = info.name == "sun-identity";
    detail::run_parallel(count, options.jobs, [&](std::size_t i) {
      ItemSummary& s = summaries[i];
      s.slice = "all";
      try {
        const std::size_t end = std::min(instances.size(), (i + 1) * kChunk);
        for (std::size_t t = i * kChunk; t < end; ++t) {
          const auto& inst = instances[t];
          CheckOutcome out = sun ? check_sun_instance(inst.n, inst.m, inst.r, inst.f)
                                 : check_lemma33_instance(inst.n, inst.m, inst.r, inst.f);
          out.instance.insert(out.instance.begin(),
                              Param{"trial", static_cast<std::int64_t>(inst.trial)});
          absorb(s, std::move(out));
        }
      } catch (...) {
        s.error = std::current_exception();
      }
    });
  } else {
    std::vector<WorkItem> items;
    Bindings bindings;
    std::vector<std::int64_t> prefix;
    const std::size_t chunk = info.axes.size() == 1 ? 1 : 0;
    enumerate(grid, 0, bindings, prefix, chunk, items);
    summaries.resize(items.size());
    detail::run_parallel(items.size(), options.jobs, [&](std::size_t i) {
      ItemSummary& s = summaries[i];
      s.slice = slice_key(info, items[i].prefix);
      try {
        for (auto& out : run_item(info.name, items[i])) {
          absorb(s, std::move(out));
        }
      } catch (...) {
        s.error = std::current_exception();
      }
    });
  }

  for (auto& s : summaries) {
    if (s.error) std::rethrow_exception(s.error);
    report.checked += s.checked;
    report.undetermined += s.undetermined;
    report.skipped += s.skipped;
    report.equalities += s.equalities;
    std::move(s.violations.begin(), s.violations.end(), std::back_inserter(report.violations));
    std::move(s.undetermined_cases.begin(), s.undetermined_cases.end(),
              std::back_inserter(report.undetermined_cases));
    std::move(s.flagged.begin(), s.flagged.end(), std::back_inserter(report.flagged));

    auto it = std::find_if(report.slices.begin(), report.slices.end(),
                           [&](const SliceStats& st) { return st.key == s.slice; });
    if (it == report.slices.end()) {
      report.slices.push_back({s.slice, 0, 0, std::nullopt, std::nullopt});
      it = report.slices.end() - 1;
    }
    SliceStats& st = *it;
    st.checked += s.checked;
    st.equalities += s.equalities;
    if (s.min_slack) st.min_slack = st.min_slack ? std::min(*st.min_slack, *s.min_slack) : s.min_slack;
    if (s.max_slack) st.max_slack = st.max_slack ? std::max(*st.max_slack, *s.max_slack) : s.max_slack;
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace suexp
