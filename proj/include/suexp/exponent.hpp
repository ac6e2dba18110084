// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "suexp/padic.hpp"

namespace suexp {

/// Raised by the small text grammars (exponents, polynomials, grids).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A nonnegative exponent, either a plain integer or the structured form
/// c * base^L + d. Towers let exponents such as 2*3^40 + 28 be reduced
/// modulo a Carmichael value without ever being written out.
class StructuredExponent {
 public:
  /// Largest L a tower may have and still be converted to a plain integer.
  static constexpr std::uint64_t kMaxConvertibleL = 64;

  static StructuredExponent plain(BigInt k);
  static StructuredExponent plain(std::uint64_t k) { return plain(BigInt(static_cast<unsigned long>(k))); }
  static StructuredExponent tower(BigInt c, std::uint64_t base, std::uint64_t L,
                                  BigInt d);

  /// Decimal literal or `c*p^L+d` (the `c*` and `+d` parts may be omitted).
  /// A literal `L` in the exponent slot is replaced by `L_value`; without
  /// one it is a parse error.
  static StructuredExponent parse(std::string_view text,
                                  std::optional<std::uint64_t> L_value = {});

  bool is_tower() const { return tower_; }
  const BigInt& coefficient() const { return c_; }
  std::uint64_t base() const { return base_; }
  std::uint64_t level() const { return L_; }
  const BigInt& offset() const { return d_; }

  /// True when the denoted value can be materialised (plain, c = 0, or
  /// L <= kMaxConvertibleL).
  bool is_convertible() const;
  /// The denoted value; std::domain_error when not convertible.
  BigInt to_plain() const;
  bool is_zero() const;

  /// Sign of (value - x); exact even for huge towers.
  int compare(const BigInt& x) const;

  /// Equality of denoted values.
  bool operator==(const StructuredExponent& o) const;

  std::string to_string() const;

 private:
  StructuredExponent() = default;
  /// Same value with factors of base moved from c into L, or plain if c = 0.
  StructuredExponent normalized() const;

  bool tower_ = false;
  BigInt c_ = 0;
  std::uint64_t base_ = 0;
  std::uint64_t L_ = 0;
  BigInt d_ = 0;
};

/// Denoted value of k reduced modulo M (M >= 1).
BigInt exponent_mod(const StructuredExponent& k, const BigInt& M);

/// Carmichael lambda(p^E): (p-1)p^(E-1) for odd p; 1, 2, 2^(E-2) for p = 2.
BigInt carmichael_prime_power(std::uint64_t p, unsigned E);

/// j^k mod p^E. Units use exponent reduction modulo lambda(p^E); multiples
/// of p vanish once ord_p(j) * k >= E. 0^0 throws std::invalid_argument.
ModPE pow_mod(const BigInt& j, const StructuredExponent& k, std::uint64_t p,
              unsigned E);

}  // namespace suexp
