// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "suexp/padic.hpp"

namespace suexp {

/// Polynomial in Z[x]; coefficients_[i] multiplies x^i. Trailing zeros are
/// stripped, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(unsigned degree, const BigInt& c = 1);

  /// Grammar: signed sum of terms `c`, `x`, `c*x`, `x^e`, `c*x^e`, e.g.
  /// "3*x^2-1". Throws ParseError naming the offending token.
  static IntPolynomial parse(std::string_view text);

  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  BigInt operator()(const BigInt& x) const;
  BigInt operator()(long x) const { return (*this)(BigInt(x)); }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const BigInt& s) const;

  bool operator==(const IntPolynomial&) const = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coefficients_;
};

/// Forward difference f(x+1) - f(x).
IntPolynomial poly_delta(const IntPolynomial& f);

/// x(x-1)...(x-l+1) = l! * binom(x, l).
IntPolynomial binom_poly(unsigned l);

}  // namespace suexp
