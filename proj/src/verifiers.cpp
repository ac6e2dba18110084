// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include "suexp/verifiers.hpp"

#include <algorithm>
#include <stdexcept>

#include "suexp/exponent.hpp"
#include "suexp/polysum.hpp"
#include "suexp/stirling.hpp"

namespace suexp {

namespace {

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::vector<Param> params(std::initializer_list<Param> list) { return list; }

unsigned max_of(const std::vector<unsigned>& ls) {
  return ls.empty() ? 0 : *std::max_element(ls.begin(), ls.end());
}

std::uint64_t class_modulus(std::uint64_t p, std::uint64_t alpha) {
  require_prime(p);
  return ipow(p, alpha);
}

/// e with p^(alpha+e) <= n < p^(alpha+e+1).
std::uint64_t log_excess(std::uint64_t p, std::uint64_t alpha, std::uint64_t n) {
  std::uint64_t q = n / ipow(p, alpha);
  std::uint64_t e = 0;
  while (q >= p) {
    q /= p;
    ++e;
  }
  return e;
}

CheckOutcome skipped(std::vector<Param> instance, std::string note) {
  CheckOutcome out;
  out.instance = std::move(instance);
  out.skipped = true;
  out.note = std::move(note);
  return out;
}

CheckOutcome identity_outcome(std::vector<Param> instance, const IntPolynomial& f,
                              const IdentitySides& sides) {
  CheckOutcome out;
  out.instance = std::move(instance);
  out.detail = "f=" + f.to_string();
  out.holds = sides.equal() ? Tri::True : Tri::False;
  if (!sides.equal()) {
    out.note = "lhs=" + sides.lhs.get_str() + " rhs=" + sides.rhs.get_str();
  }
  return out;
}

}  // namespace

std::string to_string(const LhsOrder& lhs) {
  if (const auto* v = std::get_if<Valuation>(&lhs)) return v->to_string();
  if (const auto* t = std::get_if<TruncatedValuation>(&lhs)) return t->to_string();
  return "-";
}

std::string CheckOutcome::instance_string() const {
  std::string out;
  for (const auto& p : instance) {
    if (!out.empty()) out += ' ';
    out += p.name + "=" + std::to_string(p.value);
  }
  if (!detail.empty()) {
    if (!out.empty()) out += ' ';
    out += detail;
  }
  return out;
}

void judge(CheckOutcome& out) {
  out.slack.reset();
  if (const auto* v = std::get_if<Valuation>(&out.lhs)) {
    if (v->is_infinite()) {
      out.holds = Tri::True;
      return;
    }
    out.slack = as_signed(v->value()) - out.bound;
  } else if (const auto* t = std::get_if<TruncatedValuation>(&out.lhs)) {
    if (!t->is_exact()) {
      out.holds = as_signed(t->value()) >= out.bound ? Tri::True : Tri::Undetermined;
      return;
    }
    out.slack = as_signed(t->value()) - out.bound;
  } else {
    out.holds = Tri::Undetermined;
    return;
  }
  out.holds = *out.slack >= 0 ? Tri::True : Tri::False;
}

std::int64_t combthm_bound(std::uint64_t p, std::uint64_t alpha, std::uint64_t n) {
  return as_signed(ord_factorial(p, n / class_modulus(p, alpha)));
}

std::int64_t strthm_excess(std::uint64_t p, std::uint64_t alpha, std::int64_t n,
                           std::int64_t r) {
  const auto q = as_signed(class_modulus(p, alpha));
  return as_signed(carries(p, static_cast<std::uint64_t>(least_residue(r, q)),
                           static_cast<std::uint64_t>(least_residue(n - r, q))));
}

std::int64_t strthm_bound(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                          std::int64_t r) {
  return combthm_bound(p, alpha, n) + strthm_excess(p, alpha, as_signed(n), r);
}

CheckOutcome check_combthm(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                           std::int64_t r, const IntPolynomial& f) {
  CheckOutcome out;
  out.instance = params({{"p", as_signed(p)}, {"alpha", as_signed(alpha)},
                         {"n", as_signed(n)}, {"r", r}});
  out.detail = "f=" + f.to_string();
  out.bound = combthm_bound(p, alpha, n);
  out.lhs = ord_int(p, alt_sum(n, r, class_modulus(p, alpha), f));
  judge(out);
  return out;
}

CheckOutcome check_strthm(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                          std::int64_t r, unsigned l) {
  CheckOutcome out;
  out.instance = params({{"p", as_signed(p)}, {"alpha", as_signed(alpha)},
                         {"n", as_signed(n)}, {"r", r}, {"l", l}});
  out.bound = strthm_bound(p, alpha, n, r);
  out.lhs = ord_int(p, alt_sum(n, r, class_modulus(p, alpha), IntPolynomial::monomial(l)));
  judge(out);
  return out;
}

std::uint64_t conj52_modulus(std::uint64_t p, std::uint64_t alpha, std::uint64_t n) {
  require_prime(p);
  if (n < ipow(p, alpha)) {
    throw std::domain_error("conjectured modulus needs n >= p^alpha");
  }
  return (p - 1) * ipow(p, log_excess(p, alpha, n));
}

std::optional<std::uint64_t> conj52_first_l(std::uint64_t p, std::uint64_t alpha,
                                            std::uint64_t n, std::int64_t r) {
  const std::uint64_t q = class_modulus(p, alpha);
  if (n + 1 < 2 * q) return std::nullopt;
  const auto sq = as_signed(q);
  const std::int64_t target = floor_div(r, sq) + floor_div(as_signed(n) - r, sq);
  const auto M = as_signed(conj52_modulus(p, alpha, n));
  const auto l_min = as_signed(n / q);
  return static_cast<std::uint64_t>(l_min + least_residue(target - l_min, M));
}

CheckOutcome check_conj52(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                          std::int64_t r, unsigned l) {
  return conj52_batch(p, alpha, n, r, {l}).front();
}

CheckOutcome check_cor35(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                         std::int64_t r, unsigned l) {
  CheckOutcome out;
  out.instance = params({{"p", as_signed(p)}, {"alpha", as_signed(alpha)},
                         {"n", as_signed(n)}, {"r", r}, {"l", l}});
  out.bound = combthm_bound(p, alpha, n) - as_signed(ord_factorial(p, l));
  BigInt sum = alt_sum(n, r, class_modulus(p, alpha), binom_poly(l));
  BigInt l_factorial;
  mpz_fac_ui(l_factorial.get_mpz_t(), l);
  if (!mpz_divisible_p(sum.get_mpz_t(), l_factorial.get_mpz_t())) {
    throw std::logic_error("falling-factorial sum not divisible by l!");
  }
  mpz_divexact(sum.get_mpz_t(), sum.get_mpz_t(), l_factorial.get_mpz_t());
  out.lhs = ord_int(p, sum);
  judge(out);
  return out;
}

CheckOutcome check_lemma31(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                           std::int64_t r) {
  CheckOutcome out;
  out.instance = params({{"p", as_signed(p)}, {"alpha", as_signed(alpha)},
                         {"n", as_signed(n)}, {"r", r}});
  const std::uint64_t q = class_modulus(p, alpha);
  // floor(n / p^(alpha-1)), which is n*p when alpha = 0.
  const std::uint64_t shifted = alpha == 0 ? n * p : n / (q / p);
  out.bound = as_signed(ord_factorial(p, shifted));
  const std::uint64_t rhs = n / q + ord_factorial(p, n / q);
  if (as_signed(rhs) != out.bound) {
    throw ConsistencyError("Legendre recursion failed at n=" + std::to_string(n));
  }
  out.lhs = ord_int(p, alt_sum(n, r, q, IntPolynomial::constant(1)));
  judge(out);
  return out;
}

CheckOutcome check_weisman(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                           std::int64_t r) {
  auto instance = params({{"p", as_signed(p)}, {"alpha", as_signed(alpha)},
                          {"n", as_signed(n)}, {"r", r}});
  if (alpha == 0) return skipped(std::move(instance), "needs alpha >= 1");
  const std::uint64_t q = class_modulus(p, alpha);
  const std::uint64_t lower = q / p;
  if (n < lower) return skipped(std::move(instance), "needs n >= p^(alpha-1)");
  CheckOutcome out;
  out.instance = std::move(instance);
  out.bound = as_signed((n - lower) / euler_phi_prime_power(p, alpha));
  out.lhs = ord_int(p, alt_sum(n, r, q, IntPolynomial::constant(1)));
  judge(out);
  return out;
}

CheckOutcome check_thm14i(std::uint64_t p, std::uint64_t alpha, std::uint64_t h,
                          std::uint64_t l, std::uint64_t m, std::uint64_t n) {
  return thm14i_batch(p, alpha, h, m, n, {l}).front();
}

CheckOutcome check_factorial_eq(std::uint64_t n, std::uint64_t L) {
  auto instance = params({{"n", as_signed(n)}, {"L", as_signed(L)}});
  if (n <= 2 || n % 2 != 0) return skipped(std::move(instance), "needs even n > 2");
  CheckOutcome out;
  out.instance = std::move(instance);
  out.bound = as_signed(ord_factorial(2, n - 1));
  const auto k = StructuredExponent::tower(1, 2, L, static_cast<unsigned long>(n - 1));
  try {
    EpResult r = e_p(2, n - 1, k);
    out.lhs = r.value;
    out.note = std::string(to_string(r.certificate)) + " m=" + std::to_string(r.m_lo) + ".." +
               std::to_string(r.m_hi);
    if (r.value.is_exact()) out.slack = as_signed(r.value.value()) - out.bound;
    out.holds = r.certified ? r.value.equals(out.bound) : Tri::Undetermined;
  } catch (const UndeterminedError& e) {
    out.lhs = e.partial().value;
    out.holds = Tri::Undetermined;
    out.note = e.what();
  }
  return out;
}

CheckOutcome check_factorial_eq(std::uint64_t n) {
  if (n <= 2 || n % 2 != 0) {
    return skipped(params({{"n", as_signed(n)}}), "needs even n > 2");
  }
  StableParams sp = stable_params(2, n - 1);
  return check_factorial_eq(n, std::max(sp.N, sp.N0));
}

CheckOutcome check_sun_instance(std::uint64_t n, std::uint64_t m, std::int64_t r,
                                const IntPolynomial& f) {
  return identity_outcome(params({{"n", as_signed(n)}, {"m", as_signed(m)}, {"r", r}}), f,
                          sun_identity_sides(n, m, r, f));
}

CheckOutcome check_lemma33_instance(std::uint64_t n, std::uint64_t m, std::int64_t r,
                                    const IntPolynomial& f) {
  return identity_outcome(params({{"n", as_signed(n)}, {"m", as_signed(m)}, {"r", r}}), f,
                          lemma33_sides(n, m, r, f));
}

std::vector<CheckOutcome> combthm_powers_batch(std::uint64_t p, std::uint64_t alpha,
                                               std::uint64_t n, std::int64_t r,
                                               const std::vector<unsigned>& ls) {
  const auto sums = alt_sum_powers(n, r, class_modulus(p, alpha), max_of(ls));
  const std::int64_t bound = combthm_bound(p, alpha, n);
  std::vector<CheckOutcome> outs;
  outs.reserve(ls.size());
  for (unsigned l : ls) {
    CheckOutcome out;
    out.instance = params({{"p", as_signed(p)}, {"alpha", as_signed(alpha)},
                           {"n", as_signed(n)}, {"r", r}, {"l", l}});
    out.bound = bound;
    out.lhs = ord_int(p, sums[l]);
    judge(out);
    outs.push_back(std::move(out));
  }
  return outs;
}

std::vector<CheckOutcome> strthm_batch(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                                       std::int64_t r, const std::vector<unsigned>& ls) {
  auto outs = combthm_powers_batch(p, alpha, n, r, ls);
  const std::int64_t bound = strthm_bound(p, alpha, n, r);
  for (auto& out : outs) {
    out.bound = bound;
    judge(out);
  }
  return outs;
}

std::vector<CheckOutcome> cor35_batch(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                                      std::int64_t r, const std::vector<unsigned>& ls) {
  const auto sums = alt_sum_binomials(n, r, class_modulus(p, alpha), max_of(ls));
  const std::int64_t base = combthm_bound(p, alpha, n);
  std::vector<CheckOutcome> outs;
  outs.reserve(ls.size());
  for (unsigned l : ls) {
    CheckOutcome out;
    out.instance = params({{"p", as_signed(p)}, {"alpha", as_signed(alpha)},
                           {"n", as_signed(n)}, {"r", r}, {"l", l}});
    out.bound = base - as_signed(ord_factorial(p, l));
    out.lhs = ord_int(p, sums[l]);
    judge(out);
    outs.push_back(std::move(out));
  }
  return outs;
}

std::vector<CheckOutcome> conj52_batch(std::uint64_t p, std::uint64_t alpha, std::uint64_t n,
                                       std::int64_t r, const std::vector<unsigned>& ls) {
  const std::uint64_t q = class_modulus(p, alpha);
  const auto first = conj52_first_l(p, alpha, n, r);
  const bool boundary = n + 1 == 2 * q;

  std::vector<unsigned> live;
  for (unsigned l : ls) {
    if (first && l >= *first && (l - *first) % conj52_modulus(p, alpha, n) == 0) {
      live.push_back(l);
    }
  }
  std::vector<CheckOutcome> computed;
  if (!live.empty()) computed = strthm_batch(p, alpha, n, r, live);

  std::vector<CheckOutcome> outs;
  outs.reserve(ls.size());
  std::size_t next = 0;
  for (unsigned l : ls) {
    if (next < live.size() && live[next] == l) {
      CheckOutcome out = std::move(computed[next++]);
      out.holds = out.slack && *out.slack == 0 ? Tri::True : Tri::False;
      out.flagged = boundary;
      if (boundary) out.note = "n = 2p^alpha - 1, modulus p - 1";
      outs.push_back(std::move(out));
      continue;
    }
    auto instance = params({{"p", as_signed(p)}, {"alpha", as_signed(alpha)},
                            {"n", as_signed(n)}, {"r", r}, {"l", l}});
    if (!first) {
      outs.push_back(skipped(std::move(instance), "needs n >= 2p^alpha - 1"));
    } else if (l < n / q) {
      outs.push_back(skipped(std::move(instance), "needs l >= floor(n/p^alpha)"));
    } else {
      outs.push_back(skipped(std::move(instance), "l outside the congruence class"));
    }
  }
  return outs;
}

std::vector<CheckOutcome> thm14i_batch(std::uint64_t p, std::uint64_t alpha, std::uint64_t h,
                                       std::uint64_t m, std::uint64_t n,
                                       const std::vector<std::uint64_t>& ls) {
  require_prime(p);
  if (n == 0) throw std::invalid_argument("n must be positive");
  const std::uint64_t cap = n - 1 + ord_factorial(p, m / p);
  const auto E = static_cast<unsigned>(cap + 8);
  const std::uint64_t l_max = ls.empty() ? 0 : *std::max_element(ls.begin(), ls.end());

  // terms[k] = m! S(k h (p-1) p^alpha + n - 1, m) mod p^E
  std::vector<ModPE> terms;
  terms.reserve(l_max + 1);
  for (std::uint64_t k = 0; k <= l_max; ++k) {
    BigInt c = BigInt(static_cast<unsigned long>(k)) * static_cast<unsigned long>(h) *
               static_cast<unsigned long>(p - 1);
    const auto exponent =
        StructuredExponent::tower(c, p, alpha, BigInt(static_cast<unsigned long>(n - 1)));
    terms.push_back(mstirling_mod(exponent, m, p, E));
  }

  std::vector<CheckOutcome> outs;
  outs.reserve(ls.size());
  for (std::uint64_t l : ls) {
    ModPE total(0, p, E);
    BigInt binomial;
    for (std::uint64_t k = 0; k <= l; ++k) {
      mpz_bin_uiui(binomial.get_mpz_t(), l, k);
      if (k % 2 != 0) binomial = -binomial;
      total += ModPE(binomial, p, E) * terms[k];
    }
    CheckOutcome out;
    out.instance = params({{"p", as_signed(p)}, {"alpha", as_signed(alpha)},
                           {"n", as_signed(n)}, {"m", as_signed(m)}, {"h", as_signed(h)},
                           {"l", as_signed(l)}});
    out.bound = as_signed(std::min(l * (alpha + 1), cap));
    if (l == 0 && n - 1 <= kExactStirlingMaxK) {
      BigInt m_factorial;
      mpz_fac_ui(m_factorial.get_mpz_t(), m);
      out.lhs = ord_int(p, m_factorial * stirling_exact(n - 1, m));
    } else {
      out.lhs = trunc_val(total);
    }
    judge(out);
    outs.push_back(std::move(out));
  }
  return outs;
}

}  // namespace suexp
