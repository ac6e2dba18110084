// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "suexp/exponent.hpp"
#include "suexp/padic.hpp"

namespace suexp {

/// Largest k accepted by the exact Stirling recurrence.
inline constexpr std::uint64_t kExactStirlingMaxK = 10000;

/// The exact path was asked for more than it supports.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Two independent computations that must agree did not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// S(k, m), Stirling numbers of the second kind, with S(0,0) = 1.
BigInt stirling_exact(std::uint64_t k, std::uint64_t m);

/// table[k][m] = S(k, m) for k <= k_max, m <= m_max.
std::vector<std::vector<BigInt>> stirling_table(std::uint64_t k_max, std::uint64_t m_max);

/// m! S(k, m) mod p^E through
///   m! S(k, m) = sum_{j=0}^m binom(m, j) (-1)^(m-j) j^k,
/// with 0^0 = 1 so that k = m = 0 gives 1.
ModPE mstirling_mod(const StructuredExponent& k, std::uint64_t m, std::uint64_t p,
                    unsigned E);

/// mstirling_mod for every m in [m_lo, m_hi], sharing the power table.
std::vector<ModPE> mstirling_mod_range(const StructuredExponent& k, std::uint64_t m_lo,
                                       std::uint64_t m_hi, std::uint64_t p, unsigned E);

enum class Certificate {
  /// k is small: every m with S(k, m) != 0 was scanned.
  ExactFiniteK,
  /// k = (p-1)p^L + n - 1 with L >= max(N, N0); the value is L0.
  StableFamily,
  /// Scan ran until ord_p(floor(m/p)!) reached the running minimum; every
  /// later m has ord_p(m! S(k, m)) >= ord_p(floor(m/p)!).
  TailBound,
  /// The m cap was hit first. Not certified.
  HeuristicWindow,
};

const char* to_string(Certificate c);

/// Inputs to the stable family k = (p-1)p^L + n - 1.
struct StableParams {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  /// n - 1 + floor(n / (p(p-1))).
  std::uint64_t N = 0;
  /// ord_p of the first nonzero S_m.
  std::uint64_t N0 = 0;
  /// min_m ord_p(S_m), attained first at m0.
  std::uint64_t L0 = 0;
  std::uint64_t m0 = 0;
  std::uint64_t m_first_nonzero = 0;
  std::uint64_t m_scanned_to = 0;
  /// The tail bound covered every m beyond the scan.
  bool certified = false;
};

struct EpOptions {
  std::uint64_t window = 60;
  std::uint64_t extend_step = 30;
  std::uint64_t stability_run = 25;
  /// Scans stop at n + max_extra_m.
  std::uint64_t max_extra_m = 4000;
  /// Starting precision; default_precision(p, n) when unset.
  std::optional<unsigned> precision;
  unsigned max_retries = 4;
  /// Extend past the heuristic window until the tail bound certifies.
  bool tail_certify = true;
  /// Skip recomputing stable_params for stable-family exponents.
  std::optional<StableParams> stable_hint;
};

struct EpResult {
  TruncatedValuation value = TruncatedValuation::at_least(0);
  std::uint64_t m_lo = 0;
  std::uint64_t m_hi = 0;
  /// Smallest scanned m attaining the minimum.
  std::uint64_t m_argmin = 0;
  bool certified = false;
  Certificate certificate = Certificate::HeuristicWindow;
  unsigned precision = 0;
};

/// Precision cap exceeded before any scanned term was nonzero mod p^E.
class UndeterminedError : public std::runtime_error {
 public:
  UndeterminedError(const std::string& what, EpResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const EpResult& partial() const { return partial_; }

 private:
  EpResult partial_;
};

/// floor((n-1)(1 + 1/(p-1) + 1/(p-1)^2)), the known cap on v1-periodic
/// exponents of SU(n).
std::uint64_t dsu_cap(std::uint64_t p, std::uint64_t n);
/// dsu_cap + 8.
unsigned default_precision(std::uint64_t p, std::uint64_t n);
/// ord_p(floor(m/p)!), a lower bound for ord_p(m! S(k, m)) valid for all k.
std::uint64_t tail_bound(std::uint64_t p, std::uint64_t m);

/// e_p(n, k) = min_{m >= n} ord_p(m! S(k, m)). Throws std::invalid_argument
/// if k < n, UndeterminedError if the precision cap is reached.
EpResult e_p(std::uint64_t p, std::uint64_t n, const StructuredExponent& k,
             const EpOptions& options = {});

/// N = n - 1 + floor(n / (p(p-1))).
std::uint64_t stable_N(std::uint64_t p, std::uint64_t n);

/// Scans the exact sums S_m = sum_{p !| j} binom(m,j)(-1)^j j^(n-1) for
/// m >= n and extracts N0, L0 and m0.
StableParams stable_params(std::uint64_t p, std::uint64_t n, std::uint64_t m_window = 60);

struct StableValue {
  std::uint64_t L = 0;
  std::uint64_t value = 0;
  StableParams params;
  EpResult detail;
};

/// e_p(n, (p-1)p^L + n - 1) at L = max(N, N0), checked against L0.
StableValue e_p_stable(std::uint64_t p, std::uint64_t n, const EpOptions& options = {});

}  // namespace suexp
