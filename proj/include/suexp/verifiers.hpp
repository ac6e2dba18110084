// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "suexp/padic.hpp"
#include "suexp/polynomial.hpp"

namespace suexp {

struct Param {
  std::string name;
  std::int64_t value = 0;
};

using LhsOrder = std::variant<std::monostate, Valuation, TruncatedValuation>;

std::string to_string(const LhsOrder& lhs);

/// Result of one instance of one check.
///
/// holds is False only for a finite (or Exact) lhs strictly below bound.
/// An AtLeast(E) lhs with E >= bound counts as True.
struct CheckOutcome {
  std::vector<Param> instance;
  /// Non-integer instance data, e.g. the polynomial f.
  std::string detail;
  LhsOrder lhs;
  std::int64_t bound = 0;
  /// lhs - bound when lhs is finite or Exact.
  std::optional<std::int64_t> slack;
  Tri holds = Tri::Undetermined;
  /// A precondition failed; lhs and bound are not meaningful.
  bool skipped = false;
  /// Boundary instance reported separately (conjecture checks).
  bool flagged = false;
  std::string note;

  std::string instance_string() const;
};

/// Fills slack and holds from lhs and bound.
void judge(CheckOutcome& out);

/// ord_p(floor(n / p^alpha)!).
std::int64_t combthm_bound(std::uint64_t p, std::uint64_t alpha, std::uint64_t n);
/// tau_p({r}, {n-r}) over residues mod p^alpha.
std::int64_t strthm_excess(std::uint64_t p, std::uint64_t alpha, std::int64_t n,
                           std::int64_t r);
std::int64_t strthm_bound(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                          std::int64_t r);

CheckOutcome check_combthm(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                           std::int64_t r, const IntPolynomial& f);
CheckOutcome check_strthm(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                          std::int64_t r, unsigned l);

/// Modulus (p-1) p^e of the conjectured congruence on l, where e is the
/// largest integer with p^(alpha+e) <= n. Requires n >= p^alpha.
std::uint64_t conj52_modulus(std::uint64_t p, std::uint64_t alpha, std::uint64_t n);
/// Smallest l >= floor(n/p^alpha) in the conjectured class, or nullopt when
/// n < 2p^alpha - 1.
std::optional<std::uint64_t> conj52_first_l(std::uint64_t p, std::uint64_t alpha,
                                            std::uint64_t n, std::int64_t r);
/// holds is True iff the strengthened bound is attained. Instances failing
/// the preconditions are skipped; n = 2p^alpha - 1 is flagged.
CheckOutcome check_conj52(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                          std::int64_t r, unsigned l);

/// Sum with f = binom(x, l), assembled as alt_sum with the falling factorial
/// divided exactly by l!. The bound ord_p(floor(n/p^alpha)!) - ord_p(l!) may
/// be negative.
CheckOutcome check_cor35(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                         std::int64_t r, unsigned l);
CheckOutcome check_lemma31(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                           std::int64_t r);
CheckOutcome check_weisman(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                           std::int64_t r);
CheckOutcome check_thm14i(std::uint64_t p, std::uint64_t alpha, std::uint64_t h,
                          std::uint64_t l, std::uint64_t m, std::uint64_t n);
/// e_2(n-1, 2^L + n-1) = ord_2((n-1)!). Uncertified values are Undetermined.
CheckOutcome check_factorial_eq(std::uint64_t n, std::uint64_t L);
/// Same with L = max(N, N0) for (2, n-1).
CheckOutcome check_factorial_eq(std::uint64_t n);

/// Both sides of the floor-sum identity; bound and slack are unused.
CheckOutcome check_sun_instance(std::uint64_t n, std::uint64_t m, std::int64_t r,
                                const IntPolynomial& f);
CheckOutcome check_lemma33_instance(std::uint64_t n, std::uint64_t m, std::int64_t r,
                                    const IntPolynomial& f);

// Batched forms sharing one pass over the binomials; outcome i matches the
// single check at ls[i].
std::vector<CheckOutcome> combthm_powers_batch(std::uint64_t p, std::uint64_t alpha,
                                               std::uint64_t n, std::int64_t r,
                                               const std::vector<unsigned>& ls);
std::vector<CheckOutcome> strthm_batch(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                                       std::int64_t r, const std::vector<unsigned>& ls);
std::vector<CheckOutcome> cor35_batch(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                                      std::int64_t r, const std::vector<unsigned>& ls);
std::vector<CheckOutcome> conj52_batch(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                                       std::int64_t r, const std::vector<unsigned>& ls);
std::vector<CheckOutcome> thm14i_batch(std::uint64_t p, std::uint64_t alpha, std::uint64_t h,
                                       std::uint64_t m, std::uint64_t n,
                                       const std::vector<std::uint64_t>& ls);

}  // namespace suexp
