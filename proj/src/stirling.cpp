// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include "suexp/stirling.hpp"

#include <algorithm>
#include <variant>

namespace suexp {

namespace {

/// Z / M Z with M < 2^62; products go through 128-bit integers.
struct SmallRing {
  using Elem = std::uint64_t;
  std::uint64_t modulus;

  Elem from(const BigInt& x) const { return BigInt(x % BigInt(modulus)).get_ui(); }
  BigInt to_big(Elem x) const { return BigInt(static_cast<unsigned long>(x)); }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % modulus);
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= modulus ? s - modulus : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (modulus - b); }
};

struct BigRing {
  using Elem = BigInt;
  BigInt modulus;

  Elem from(const BigInt& x) const {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return r;
  }
  BigInt to_big(const Elem& x) const { return x; }
  Elem mul(const Elem& a, const Elem& b) const {
    BigInt r = a * b;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    return r;
  }
  Elem add(const Elem& a, const Elem& b) const {
    BigInt s = a + b;
    if (s >= modulus) s -= modulus;
    return s;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    BigInt s = a - b;
    if (s < 0) s += modulus;
    return s;
  }
};

/// Evaluates m! S(k, m) mod p^E for growing m. Binomials are carried as
/// p^v * u with u a unit, so each row is built with multiplications and
/// unit inverses only.
template <typename Ring>
class SurjectionScanner {
 public:
  using Elem = typename Ring::Elem;

  SurjectionScanner(Ring ring, const StructuredExponent& k, std::uint64_t p, unsigned E)
      : ring_(std::move(ring)), k_(k), p_(p), E_(E), modulus_(big_pow(p, E)) {
    unit_exponent_ = exponent_mod(k_, carmichael_prime_power(p_, E_));
    for (unsigned v = 0; v < E_; ++v) prime_powers_.push_back(ring_.from(big_pow(p_, v)));
    // Index 0 is a placeholder; j = 0 is handled separately.
    powers_.push_back(ring_.from(0));
    valuations_.push_back(0);
    units_.push_back(ring_.from(1));
    inverses_.push_back(ring_.from(1));
  }

  BigInt value(std::uint64_t m) {
    ensure(m);
    Elem total = ring_.from(0);
    if (k_.is_zero()) {
      // 0^0 = 1 contributes (-1)^m.
      total = m % 2 == 0 ? ring_.from(1) : ring_.from(BigInt(modulus_ - 1));
    }
    std::uint64_t v = 0;
    Elem u = ring_.from(1);
    for (std::uint64_t j = 1; j <= m; ++j) {
      const std::uint64_t up = m - j + 1;
      v = v + valuations_[up] - valuations_[j];
      u = ring_.mul(ring_.mul(u, units_[up]), inverses_[j]);
      if (v >= E_) continue;
      Elem term = ring_.mul(ring_.mul(u, prime_powers_[v]), powers_[j]);
      total = (m - j) % 2 == 0 ? ring_.add(total, term) : ring_.sub(total, term);
    }
    return ring_.to_big(total);
  }

 private:
  void ensure(std::uint64_t m) {
    BigInt prime(static_cast<unsigned long>(p_));
    for (std::uint64_t j = powers_.size(); j <= m; ++j) {
      BigInt bj(static_cast<unsigned long>(j));
      BigInt unit;
      auto v = mpz_remove(unit.get_mpz_t(), bj.get_mpz_t(), prime.get_mpz_t());
      BigInt inverse;
      mpz_invert(inverse.get_mpz_t(), unit.get_mpz_t(), modulus_.get_mpz_t());
      valuations_.push_back(v);
      units_.push_back(ring_.from(unit));
      inverses_.push_back(ring_.from(inverse));
      if (v == 0) {
        BigInt power;
        mpz_powm(power.get_mpz_t(), bj.get_mpz_t(), unit_exponent_.get_mpz_t(),
                 modulus_.get_mpz_t());
        powers_.push_back(ring_.from(power));
      } else {
        powers_.push_back(ring_.from(pow_mod(bj, k_, p_, E_).residue()));
      }
    }
  }

  Ring ring_;
  StructuredExponent k_;
  std::uint64_t p_;
  unsigned E_;
  BigInt modulus_;
  BigInt unit_exponent_;
  std::vector<Elem> prime_powers_;
  std::vector<Elem> powers_;
  std::vector<std::uint64_t> valuations_;
  std::vector<Elem> units_;
  std::vector<Elem> inverses_;
};

/// Chooses the 64-bit ring when p^E is small enough.
class Scanner {
 public:
  Scanner(const StructuredExponent& k, std::uint64_t p, unsigned E) : p_(p), E_(E) {
    require_prime(p);
    if (E == 0) throw std::invalid_argument("precision E must be >= 1");
    BigInt modulus = big_pow(p, E);
    if (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= 62) {
      impl_.emplace<SurjectionScanner<SmallRing>>(SmallRing{modulus.get_ui()}, k, p, E);
    } else {
      impl_.emplace<SurjectionScanner<BigRing>>(BigRing{modulus}, k, p, E);
    }
  }

  ModPE value(std::uint64_t m) {
    BigInt residue = std::visit(
        [m](auto& impl) -> BigInt {
          if constexpr (std::is_same_v<std::decay_t<decltype(impl)>, std::monostate>) {
            return 0;
          } else {
            return impl.value(m);
          }
        },
        impl_);
    return ModPE(residue, p_, E_);
  }

 private:
  std::uint64_t p_;
  unsigned E_;
  std::variant<std::monostate, SurjectionScanner<SmallRing>, SurjectionScanner<BigRing>>
      impl_;
};

bool is_stable_family(std::uint64_t p, std::uint64_t n, const StructuredExponent& k) {
  return k.is_tower() && k.base() == p && k.coefficient() == static_cast<unsigned long>(p - 1) &&
         k.offset() == static_cast<unsigned long>(n - 1);
}

/// Running minimum over an ascending scan of truncated valuations at one
/// precision. Exact values are always below AtLeast(E).
struct RunningMin {
  std::optional<TruncatedValuation> best;
  std::uint64_t argmin = 0;
  std::uint64_t last_change = 0;

  void offer(std::uint64_t m, const TruncatedValuation& v) {
    bool better = !best || (v.is_exact() && (!best->is_exact() || v.value() < best->value()));
    if (better) {
      best = v;
      argmin = m;
      last_change = m;
    }
  }
};

}  // namespace

BigInt stirling_exact(std::uint64_t k, std::uint64_t m) {
  if (k > kExactStirlingMaxK) {
    throw CapacityError("stirling_exact: k = " + std::to_string(k) +
                        " exceeds the exact-path bound; use mstirling_mod");
  }
  if (m > k) return k == 0 && m == 0 ? 1 : 0;
  return stirling_table(k, m)[k][m];
}

std::vector<std::vector<BigInt>> stirling_table(std::uint64_t k_max, std::uint64_t m_max) {
  if (k_max > kExactStirlingMaxK) {
    throw CapacityError("stirling_table: k_max exceeds the exact-path bound");
  }
  std::vector<std::vector<BigInt>> table(k_max + 1, std::vector<BigInt>(m_max + 1, BigInt(0)));
  table[0][0] = 1;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const std::uint64_t top = std::min(k, m_max);
    for (std::uint64_t m = 1; m <= top; ++m) {
      table[k][m] = table[k - 1][m] * static_cast<unsigned long>(m) + table[k - 1][m - 1];
    }
  }
  return table;
}

ModPE mstirling_mod(const StructuredExponent& k, std::uint64_t m, std::uint64_t p,
                    unsigned E) {
  return Scanner(k, p, E).value(m);
}

std::vector<ModPE> mstirling_mod_range(const StructuredExponent& k, std::uint64_t m_lo,
                                       std::uint64_t m_hi, std::uint64_t p, unsigned E) {
  Scanner scanner(k, p, E);
  std::vector<ModPE> out;
  for (std::uint64_t m = m_lo; m <= m_hi; ++m) out.push_back(scanner.value(m));
  return out;
}

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::ExactFiniteK:
      return "exact-finite-k";
    case Certificate::StableFamily:
      return "stable-family";
    case Certificate::TailBound:
      return "tail-bound";
    case Certificate::HeuristicWindow:
      break;
  }
  return "heuristic-window";
}

std::uint64_t dsu_cap(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n == 0) return 0;
  const std::uint64_t q = p - 1;
  return (n - 1) * (q * q + q + 1) / (q * q);
}

unsigned default_precision(std::uint64_t p, std::uint64_t n) {
  return static_cast<unsigned>(dsu_cap(p, n) + 8);
}

std::uint64_t tail_bound(std::uint64_t p, std::uint64_t m) { return ord_factorial(p, m / p); }

std::uint64_t stable_N(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n < 1) throw std::invalid_argument("stable_N requires n >= 1");
  return n - 1 + n / (p * (p - 1));
}

EpResult e_p(std::uint64_t p, std::uint64_t n, const StructuredExponent& k,
             const EpOptions& options) {
  require_prime(p);
  if (n == 0) throw std::invalid_argument("e_p requires n >= 1");
  if (options.window == 0) throw std::invalid_argument("e_p: window must be >= 1");
  if (k.compare(BigInt(static_cast<unsigned long>(n))) < 0) {
    throw std::invalid_argument("e_p requires k >= n, got k = " + k.to_string());
  }
  const bool finite = k.is_convertible() &&
                      k.compare(BigInt(static_cast<unsigned long>(n + options.window))) <= 0;
  const std::uint64_t m_cap = n + std::max(options.max_extra_m, options.window);

  unsigned E = options.precision.value_or(default_precision(p, n));
  if (E == 0) throw std::invalid_argument("e_p: precision must be >= 1");

  EpResult result;
  for (unsigned attempt = 0; attempt <= options.max_retries; ++attempt, E *= 2) {
    Scanner scanner(k, p, E);
    RunningMin running;
    std::uint64_t m_hi = finite ? k.to_plain().get_ui() : n + options.window;
    std::uint64_t m = n;
    auto scan_to = [&](std::uint64_t top) {
      for (; m <= top; ++m) running.offer(m, trunc_val(scanner.value(m)));
    };
    scan_to(m_hi);

    result = EpResult{};
    result.m_lo = n;
    result.precision = E;
    Certificate certificate = Certificate::ExactFiniteK;
    if (!finite) {
      while (m_hi - running.last_change < options.stability_run && m_hi < m_cap) {
        m_hi = std::min(m_hi + options.extend_step, m_cap);
        scan_to(m_hi);
      }
      certificate = Certificate::HeuristicWindow;
      if (options.tail_certify && running.best->is_exact()) {
        while (tail_bound(p, m_hi + 1) < running.best->value() && m_hi < m_cap) {
          ++m_hi;
          scan_to(m_hi);
        }
        if (tail_bound(p, m_hi + 1) >= running.best->value()) {
          certificate = Certificate::TailBound;
        }
      }
    }
    result.m_hi = m_hi;
    result.value = *running.best;
    result.m_argmin = running.argmin;
    if (!running.best->is_exact()) continue;

    result.certificate = certificate;
    result.certified = certificate != Certificate::HeuristicWindow;
    if (is_stable_family(p, n, k) && n >= 2) {
      StableParams sp = options.stable_hint && options.stable_hint->p == p &&
                                options.stable_hint->n == n
                            ? *options.stable_hint
                            : stable_params(p, n);
      if (sp.certified && k.level() >= std::max(sp.N, sp.N0)) {
        if (result.value.value() != sp.L0) {
          throw ConsistencyError("e_p(" + std::to_string(n) + ", " + k.to_string() +
                                 ") = " + result.value.to_string() +
                                 " disagrees with L0 = " + std::to_string(sp.L0));
        }
        result.certificate = Certificate::StableFamily;
        result.certified = true;
      }
    }
    return result;
  }
  throw UndeterminedError("e_p(" + std::to_string(n) + ", " + k.to_string() +
                              "): every scanned term vanished mod p^" +
                              std::to_string(result.precision),
                          result);
}

StableParams stable_params(std::uint64_t p, std::uint64_t n, std::uint64_t m_window) {
  require_prime(p);
  if (n < 2) throw std::invalid_argument("stable_params requires n >= 2");
  if (m_window == 0) throw std::invalid_argument("stable_params: window must be >= 1");
  constexpr std::uint64_t kStep = 30;
  constexpr std::uint64_t kStabilityRun = 25;
  const std::uint64_t m_cap = n + std::max<std::uint64_t>(4000, m_window);

  StableParams sp;
  sp.p = p;
  sp.n = n;
  sp.N = stable_N(p, n);

  // Row of binomials binom(m, j), advanced in place, and j^(n-1) for p !| j.
  std::vector<BigInt> row{BigInt(1)};
  std::vector<BigInt> powers{BigInt(0)};
  auto advance_row = [&]() {
    row.push_back(0);
    for (std::size_t j = row.size() - 1; j > 0; --j) row[j] += row[j - 1];
    BigInt pw;
    const auto j = static_cast<unsigned long>(powers.size());
    if (j % p != 0) mpz_ui_pow_ui(pw.get_mpz_t(), j, n - 1);
    powers.push_back(pw);
  };
  while (row.size() <= n) advance_row();

  std::optional<std::uint64_t> best;
  std::uint64_t last_change = n;
  auto scan_one = [&](std::uint64_t m) {
    BigInt s = 0;
    for (std::uint64_t j = 1; j <= m; ++j) {
      if (j % p == 0) continue;
      if (j % 2 == 0) {
        s += row[j] * powers[j];
      } else {
        s -= row[j] * powers[j];
      }
    }
    if (s == 0) return;
    std::uint64_t v = ord_int(p, s).value();
    if (!best) {
      sp.N0 = v;
      sp.m_first_nonzero = m;
    }
    if (!best || v < *best) {
      best = v;
      sp.m0 = m;
      last_change = m;
    }
  };

  std::uint64_t m = n;
  std::uint64_t m_hi = n + m_window;
  auto scan_to = [&](std::uint64_t top) {
    for (; m <= top; ++m) {
      scan_one(m);
      advance_row();
    }
  };
  scan_to(m_hi);
  while ((!best || m_hi - last_change < kStabilityRun) && m_hi < m_cap) {
    m_hi = std::min(m_hi + kStep, m_cap);
    scan_to(m_hi);
  }
  if (!best) {
    throw std::runtime_error("stable_params(" + std::to_string(p) + ", " +
                             std::to_string(n) + "): S_m vanished for every m up to " +
                             std::to_string(m_hi));
  }
  while (tail_bound(p, m_hi + 1) < *best && m_hi < m_cap) {
    ++m_hi;
    scan_to(m_hi);
  }
  sp.L0 = *best;
  sp.m_scanned_to = m_hi;
  sp.certified = tail_bound(p, m_hi + 1) >= *best;
  return sp;
}

StableValue e_p_stable(std::uint64_t p, std::uint64_t n, const EpOptions& options) {
  StableValue out;
  out.params = stable_params(p, n);
  out.L = std::max(out.params.N, out.params.N0);
  EpOptions opts = options;
  opts.stable_hint = out.params;
  out.detail = e_p(p, n, StructuredExponent::tower(p - 1, p, out.L, n - 1), opts);
  if (out.detail.certificate != Certificate::StableFamily) {
    throw ConsistencyError("e_p_stable(" + std::to_string(p) + ", " + std::to_string(n) +
                           "): stable-family certificate not obtained");
  }
  out.value = out.detail.value.value();
  return out;
}

}  // namespace suexp
