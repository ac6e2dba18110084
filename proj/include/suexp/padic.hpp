// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace suexp {

using BigInt = mpz_class;

/// Three-valued truth for statements about truncated p-adic orders.
enum class Tri { False, True, Undetermined };

const char* to_string(Tri t);

/// Exact p-adic order of an integer: a finite exponent, or +infinity for 0.
class Valuation {
 public:
  static Valuation finite(std::uint64_t v) { return Valuation(v); }
  static Valuation infinite() { return Valuation(); }

  bool is_infinite() const { return !v_.has_value(); }
  bool is_finite() const { return v_.has_value(); }
  /// Throws std::logic_error for the infinite valuation.
  std::uint64_t value() const;

  bool operator==(const Valuation&) const = default;
  std::strong_ordering operator<=>(const Valuation& o) const;

  /// "inf" or the decimal exponent.
  std::string to_string() const;

 private:
  Valuation() = default;
  explicit Valuation(std::uint64_t v) : v_(v) {}
  std::optional<std::uint64_t> v_;
};

/// p-adic order recovered from a residue mod p^E. Exact(v) has v < E;
/// AtLeast(E) means the residue vanished and the true order is >= E
/// (possibly infinite). Comparisons are three-valued.
class TruncatedValuation {
 public:
  static TruncatedValuation exact(std::uint64_t v) { return {v, true}; }
  static TruncatedValuation at_least(std::uint64_t e) { return {e, false}; }

  bool is_exact() const { return exact_; }
  /// The exponent for Exact, or the floor E for AtLeast.
  std::uint64_t value() const { return v_; }

  Tri geq(std::int64_t bound) const;
  Tri less(std::int64_t bound) const;
  Tri equals(std::int64_t v) const;
  /// this < other, three-valued.
  Tri less(const TruncatedValuation& other) const;

  /// Structural equality (same kind, same number); not a statement about
  /// the underlying orders.
  bool operator==(const TruncatedValuation&) const = default;

  /// "7" or ">=7".
  std::string to_string() const;

 private:
  TruncatedValuation(std::uint64_t v, bool exact) : v_(v), exact_(exact) {}
  std::uint64_t v_;
  bool exact_;
};

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t p);
/// Throws std::invalid_argument unless p is prime.
void require_prime(std::uint64_t p);

/// p^e, throwing std::overflow_error if it does not fit in 64 bits.
std::uint64_t ipow(std::uint64_t p, std::uint64_t e);
BigInt big_pow(std::uint64_t p, std::uint64_t e);

/// ord_p(x); the sign of x is ignored and ord_p(0) is infinite.
Valuation ord_int(std::uint64_t p, const BigInt& x);

/// Legendre's formula: sum_{i>=1} floor(m / p^i), without forming m!.
std::uint64_t ord_factorial(std::uint64_t p, std::uint64_t m);

/// {a}_m, the least nonnegative residue of a modulo m (m >= 1).
std::int64_t least_residue(std::int64_t a, std::int64_t m);
BigInt least_residue(const BigInt& a, const BigInt& m);

/// floor(a / b) rounding toward -infinity, b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Number of carries when adding a and b in base p (Kummer's tau_p).
std::uint64_t carries(std::uint64_t p, std::uint64_t a, std::uint64_t b);

/// phi(p^alpha) = (p-1) p^(alpha-1) for alpha >= 1.
std::uint64_t euler_phi_prime_power(std::uint64_t p, std::uint64_t alpha);

/// The symbols p, alpha and a working precision E, validated once.
class PrimePowerCtx {
 public:
  PrimePowerCtx(std::uint64_t p, std::uint64_t alpha, unsigned precision);

  std::uint64_t p() const { return p_; }
  std::uint64_t alpha() const { return alpha_; }
  unsigned precision() const { return precision_; }
  /// p^alpha, the residue-class modulus.
  std::uint64_t class_modulus() const;
  /// p^E.
  BigInt modulus() const { return big_pow(p_, precision_); }

 private:
  std::uint64_t p_;
  std::uint64_t alpha_;
  unsigned precision_;
};

/// An element of Z / p^E Z. Mixed-(p, E) arithmetic throws
/// std::invalid_argument.
class ModPE {
 public:
  ModPE(const BigInt& value, std::uint64_t p, unsigned precision);

  const BigInt& residue() const { return residue_; }
  std::uint64_t prime() const { return p_; }
  unsigned precision() const { return precision_; }
  const BigInt& modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  ModPE operator+(const ModPE& o) const;
  ModPE operator-(const ModPE& o) const;
  ModPE operator*(const ModPE& o) const;
  ModPE operator-() const;
  ModPE& operator+=(const ModPE& o) { return *this = *this + o; }
  ModPE& operator-=(const ModPE& o) { return *this = *this - o; }
  ModPE& operator*=(const ModPE& o) { return *this = *this * o; }

  bool operator==(const ModPE& o) const;

 private:
  ModPE(BigInt residue, BigInt modulus, std::uint64_t p, unsigned precision);
  void require_same_ring(const ModPE& o) const;

  BigInt residue_;
  BigInt modulus_;
  std::uint64_t p_;
  unsigned precision_;
};

/// Exact(ord_p(residue)) for a nonzero residue, AtLeast(E) for zero.
TruncatedValuation trunc_val(const ModPE& x);

}  // namespace suexp
