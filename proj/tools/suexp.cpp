// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

// suexp: p-adic orders of Stirling sums, v1-periodic exponent bounds for
// SU(n), and sweeps over the supporting congruences.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "suexp/bounds.hpp"
#include "suexp/exponent.hpp"
#include "suexp/padic.hpp"
#include "suexp/polysum.hpp"
#include "suexp/render.hpp"
#include "suexp/stirling.hpp"
#include "suexp/sweep.hpp"

namespace {

using namespace suexp;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitUsage = 64;

struct Settings {
  std::optional<unsigned> precision;
  std::uint64_t window = 60;
  unsigned jobs = 1;
  std::string format = "md";
  bool strict = false;
};

std::optional<long long> env_integer(const char* name) {
  const char* text = std::getenv(name);
  if (!text || !*text) return std::nullopt;
  char* end = nullptr;
  long long v = std::strtoll(text, &end, 10);
  if (*end != '\0' || v < 1) {
    throw std::invalid_argument(std::string(name) + " must be a positive integer");
  }
  return v;
}

EpOptions ep_options(const Settings& s) {
  EpOptions o;
  o.window = s.window;
  o.precision = s.precision;
  return o;
}

std::string ep_provenance(const EpResult& r, const std::optional<std::uint64_t>& L) {
  std::string out = std::string(r.certified ? "certified: " : "uncertified: ") +
                    to_string(r.certificate);
  if (L) out += ", L=" + std::to_string(*L);
  out += ", E=" + std::to_string(r.precision) + ", m=" + std::to_string(r.m_lo) + ".." +
         std::to_string(r.m_hi);
  return out;
}

/// Parses a structured exponent that may mention `L`, resolving `--L auto`.
StructuredExponent exponent_arg(const std::string& text, const std::string& L_text,
                                std::uint64_t p, std::uint64_t n,
                                std::optional<std::uint64_t>& L_used,
                                std::optional<StableParams>& params) {
  if (text.find('L') == std::string::npos) return StructuredExponent::parse(text);
  if (L_text.empty()) throw ParseError("--k mentions L; pass --L <value> or --L auto");
  if (L_text == "auto") {
    params = stable_params(p, n);
    L_used = std::max(params->N, params->N0);
  } else {
    std::size_t used = 0;
    unsigned long long v = std::stoull(L_text, &used);
    if (used != L_text.size()) throw ParseError("--L expects an integer or 'auto'");
    L_used = v;
  }
  return StructuredExponent::parse(text, L_used);
}

int run_main(int argc, char** argv) {
  Settings settings;
  if (auto v = env_integer("SUEXP_PRECISION")) settings.precision = static_cast<unsigned>(*v);
  if (auto v = env_integer("SUEXP_JOBS")) settings.jobs = static_cast<unsigned>(*v);

  CLI::App app{"p-adic Stirling sums and v1-periodic exponent bounds for SU(n)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", settings.precision, "starting precision E for mod p^E scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--window", settings.window, "m-scan window")->check(CLI::PositiveNumber);
  app.add_option("--jobs", settings.jobs, "worker threads")->check(CLI::PositiveNumber);

  int exit_code = kExitOk;

  // compute ---------------------------------------------------------------
  auto* compute = app.add_subcommand("compute", "single computations");
  compute->require_subcommand(1);
  std::uint64_t p = 3, n = 0, m = 0, a = 0, b = 0;
  std::string x_text, k_text, L_text;
  unsigned E = 20;

  auto* ord = compute->add_subcommand("ord", "ord_p(x)");
  ord->add_option("--p", p)->required();
  ord->add_option("--x", x_text)->required();
  ord->callback([&] {
    BigInt x;
    if (x.set_str(x_text, 10) != 0) throw ParseError("--x expects a decimal integer");
    std::cout << ord_int(p, x).to_string() << "\n";
  });

  auto* ordf = compute->add_subcommand("ord-factorial", "ord_p(m!)");
  ordf->add_option("--p", p)->required();
  ordf->add_option("--m", m)->required();
  ordf->callback([&] {
    require_prime(p);
    std::cout << ord_factorial(p, m) << "\n";
  });

  auto* tau = compute->add_subcommand("tau", "carries when adding a and b in base p");
  tau->add_option("--p", p)->required();
  tau->add_option("--a", a)->required();
  tau->add_option("--b", b)->required();
  tau->callback([&] {
    require_prime(p);
    std::cout << carries(p, a, b) << "\n";
  });

  std::int64_t k_signed = 0;
  std::optional<std::uint64_t> p_opt;
  auto* binom = compute->add_subcommand("binom", "binom(n, k), optionally with ord_p");
  binom->add_option("--n", n)->required();
  binom->add_option("--k", k_signed)->required();
  binom->add_option("--p", p_opt);
  binom->callback([&] {
    BigInt v = binom_exact(n, k_signed);
    std::cout << v.get_str();
    if (p_opt) std::cout << " (ord_" << *p_opt << "=" << ord_int(*p_opt, v).to_string() << ")";
    std::cout << "\n";
  });

  std::uint64_t k_plain = 0;
  auto* stirling = compute->add_subcommand("stirling", "S(k, m) exactly");
  stirling->add_option("--k", k_plain)->required();
  stirling->add_option("--m", m)->required();
  stirling->callback([&] { std::cout << stirling_exact(k_plain, m).get_str() << "\n"; });

  auto* mstirling = compute->add_subcommand("mstirling", "m! S(k, m) mod p^E");
  mstirling->add_option("--k", k_text, "integer or c*p^L+d")->required();
  mstirling->add_option("--L", L_text);
  mstirling->add_option("--m", m)->required();
  mstirling->add_option("--p", p)->required();
  mstirling->add_option("--E", E)->check(CLI::PositiveNumber);
  mstirling->callback([&] {
    std::optional<std::uint64_t> L_used;
    std::optional<StableParams> params;
    auto k = exponent_arg(k_text, L_text, p, std::max<std::uint64_t>(m, 1), L_used, params);
    ModPE v = mstirling_mod(k, m, p, E);
    std::cout << v.residue().get_str() << " (mod " << p << "^" << E
              << ", ord=" << trunc_val(v).to_string() << ")\n";
  });

  auto* ep = compute->add_subcommand("ep", "e_p(n, k) = min_{m>=n} ord_p(m! S(k, m))");
  ep->add_option("--p", p)->required();
  ep->add_option("--n", n)->required();
  ep->add_option("--k", k_text, "integer or c*p^L+d; L is replaced by --L")->required();
  ep->add_option("--L", L_text, "integer or 'auto' = max(N, N0)");
  ep->callback([&] {
    std::optional<std::uint64_t> L_used;
    std::optional<StableParams> params;
    auto k = exponent_arg(k_text, L_text, p, n, L_used, params);
    EpOptions opts = ep_options(settings);
    opts.stable_hint = params;
    if (!L_used && k.is_tower()) L_used = k.level();
    try {
      EpResult r = e_p(p, n, k, opts);
      if (!r.certified) {
        std::cerr << r.value.to_string() << " (" << ep_provenance(r, L_used) << ")\n";
        exit_code = kExitUndetermined;
        return;
      }
      std::cout << r.value.to_string() << " (" << ep_provenance(r, L_used) << ")\n";
    } catch (const UndeterminedError& e) {
      std::cerr << e.what() << "\n"
                << e.partial().value.to_string() << " (" << ep_provenance(e.partial(), L_used)
                << ")\n";
      exit_code = kExitUndetermined;
    }
  });

  auto* stable = compute->add_subcommand("stable", "e_p(n, (p-1)p^L + n - 1) at L = max(N, N0)");
  stable->add_option("--p", p)->required();
  stable->add_option("--n", n)->required();
  stable->callback([&] {
    StableValue sv = e_p_stable(p, n, ep_options(settings));
    const auto& sp = sv.params;
    std::cout << sv.value << " (" << ep_provenance(sv.detail, sv.L) << ", N=" << sp.N
              << ", N0=" << sp.N0 << ", L0=" << sp.L0 << ", m0=" << sp.m0 << ")\n";
  });

  auto* bound = compute->add_subcommand("bound", "lower bounds on exp_p(SU(n))");
  bound->add_option("--p", p)->required();
  bound->add_option("--n", n)->required();
  bound->callback([&] {
    BoundReport r = bound_report(p, n);
    std::cout << "new=" << r.new_bound << " old="
              << (r.old_bound ? std::to_string(*r.old_bound) : "n/a")
              << " restated=" << r.restated << "\n";
    if (!r.annotation.empty()) std::cout << "note: " << r.annotation << "\n";
  });

  DeltaOptions delta_opts;
  unsigned l_single = 25;
  auto* delta = compute->add_subcommand("delta", "ord_p of the class sum of (k/p^alpha)^l minus baseline");
  delta->add_option("--l", l_single)->required();
  delta->add_option("--p", delta_opts.p);
  delta->add_option("--alpha", delta_opts.alpha);
  delta->add_option("--n", delta_opts.n);
  delta->add_option("--baseline", delta_opts.baseline);
  delta->callback([&] {
    DeltaOptions o = delta_opts;
    o.l_from = o.l_to = l_single;
    auto entries = emit_delta(o);
    std::cout << (entries.front().delta ? std::to_string(*entries.front().delta) : "inf")
              << "\n";
  });

  // table -----------------------------------------------------------------
  auto* table = app.add_subcommand("table", "emit a table");
  table->require_subcommand(1);
  bool golden = false;
  std::uint64_t from = 19, to = 41, k_budget = 120;
  bool max_search = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--golden", golden, "compare with the published values; exit 1 on mismatch");
    sub->add_option("--format", settings.format, "md, csv or json");
  };

  auto* one = table->add_subcommand("one", "p = 3 exponents for n in [from, to]");
  add_common(one);
  one->add_option("--from", from);
  one->add_option("--to", to);
  one->add_flag("--max-search", max_search, "also report an observed maximum over small k");
  one->add_option("--k-budget", k_budget, "search k in [n, n + budget]");
  one->callback([&] {
    Format fmt = parse_format(settings.format);
    Table1Options o;
    o.max_search = max_search;
    o.k_budget = k_budget;
    o.jobs = settings.jobs;
    auto rows = emit_table1(from, to, o);
    std::cout << render_table1(rows, fmt);
    if (golden) {
      auto mism = compare_table1(rows);
      std::cerr << render_mismatches(mism);
      if (!mism.empty()) exit_code = kExitFailed;
    }
  });

  auto* two = table->add_subcommand("two", "tau_3({r}_9, {n-r}_9)");
  add_common(two);
  two->callback([&] {
    Format fmt = parse_format(settings.format);
    Table2 t = emit_table2();
    std::cout << render_table2(t, fmt);
    if (golden) {
      auto mism = compare_table2(t);
      std::cerr << render_mismatches(mism);
      if (!mism.empty()) exit_code = kExitFailed;
    }
  });

  auto* delta_table = table->add_subcommand("delta", "delta(l) over a range of l");
  add_common(delta_table);
  delta_table->add_option("--p", delta_opts.p);
  delta_table->add_option("--alpha", delta_opts.alpha);
  delta_table->add_option("--n", delta_opts.n);
  delta_table->add_option("--baseline", delta_opts.baseline);
  delta_table->add_option("--from", delta_opts.l_from);
  delta_table->add_option("--to", delta_opts.l_to);
  delta_table->callback([&] {
    Format fmt = parse_format(settings.format);
    auto entries = emit_delta(delta_opts);
    std::cout << render_delta(entries, delta_opts, fmt);
    if (golden) {
      auto mism = compare_delta(entries, delta_opts);
      std::cerr << render_mismatches(mism);
      if (!mism.empty()) exit_code = kExitFailed;
    }
  });

  // verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "sweep a check over a parameter grid");
  std::string check;
  std::string grid = "default";
  std::uint64_t seed = 1;
  verify->add_option("check", check, "combthm, strthm, conj52, cor35, lemma31, weisman, "
                                     "thm14i, factorial-eq, sun-identity, lemma33")
      ->required();
  verify->add_option("--grid", grid, "'default' or e.g. \"p=2,3; alpha=0..2; n=1..50\"");
  verify->add_option("--seed", seed, "seed for randomized grids");
  verify->add_flag("--strict", settings.strict, "conjecture non-equalities fail the run");
  verify->add_option("--format", settings.format, "md, csv or json");
  verify->callback([&] {
    Format fmt = parse_format(settings.format);
    SweepReport r = sweep(check, grid, {settings.jobs, seed});
    std::cout << render_report(r, fmt);
    std::cerr << "wall time " << r.wall_time_s << " s\n";
    if (r.undetermined > 0) exit_code = kExitUndetermined;
    if (!r.violations.empty() && (!r.conjecture || settings.strict)) exit_code = kExitFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const suexp::UndeterminedError& e) {
    std::cerr << "undetermined: " << e.what() << "\n";
    return kExitUndetermined;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}
