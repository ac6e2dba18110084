// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include "suexp/polynomial.hpp"

#include <cctype>

#include "suexp/exponent.hpp"

namespace suexp {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(unsigned degree, const BigInt& c) {
  std::vector<BigInt> coefficients(degree + 1, BigInt(0));
  coefficients[degree] = c;
  return IntPolynomial(std::move(coefficients));
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(coefficients_.size(), o.coefficients_.size()),
                          BigInt(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
  for (std::size_t i = 0; i < o.coefficients_.size(); ++i) out[i] += o.coefficients_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  return *this + o * BigInt(-1);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(coefficients_.size() + o.coefficients_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < o.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * o.coefficients_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
  std::vector<BigInt> out = coefficients_;
  for (auto& c : out) c *= s;
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    BigInt magnitude = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (i == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial IntPolynomial::parse(std::string_view input) {
  std::string stripped;
  for (char ch : input) {
    if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
  }
  const std::string_view text = stripped;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(what + " in polynomial '" + std::string(text) + "'");
  };
  auto unexpected = [&]() {
    if (pos >= text.size()) fail("unexpected end of input");
    fail("unexpected token '" + std::string(1, text[pos]) + "' at position " +
         std::to_string(pos));
  };
  auto digits = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  if (text.empty()) fail("empty polynomial");
  IntPolynomial result;
  bool first = true;
  while (pos < text.size()) {
    BigInt sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      unexpected();
    }
    first = false;

    BigInt coefficient = 1;
    bool has_coefficient = false;
    std::string c = digits();
    if (!c.empty()) {
      coefficient = BigInt(c);
      has_coefficient = true;
    }
    unsigned degree = 0;
    if (pos < text.size() && text[pos] == '*') {
      if (!has_coefficient) unexpected();
      ++pos;
      if (pos >= text.size() || text[pos] != 'x') unexpected();
    }
    if (pos < text.size() && text[pos] == 'x') {
      ++pos;
      degree = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::string e = digits();
        if (e.empty()) unexpected();
        BigInt exponent(e);
        if (!exponent.fits_uint_p() || exponent > 100000) fail("degree '" + e + "' too large");
        degree = static_cast<unsigned>(exponent.get_ui());
      }
    } else if (!has_coefficient) {
      unexpected();
    }
    result = result + monomial(degree, sign * coefficient);
  }
  return result;
}

IntPolynomial poly_delta(const IntPolynomial& f) {
  // f(x+1) by expanding each (x+1)^i with binomial coefficients.
  const auto& a = f.coefficients();
  std::vector<BigInt> shifted(a.size(), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    BigInt binomial = 1;
    for (std::size_t t = 0; t <= i; ++t) {
      shifted[t] += a[i] * binomial;
      binomial *= static_cast<unsigned long>(i - t);
      binomial /= static_cast<unsigned long>(t + 1);
    }
  }
  return IntPolynomial(std::move(shifted)) - f;
}

IntPolynomial binom_poly(unsigned l) {
  IntPolynomial result = IntPolynomial::constant(1);
  for (unsigned i = 0; i < l; ++i) {
    result = result * IntPolynomial({BigInt(-static_cast<long>(i)), BigInt(1)});
  }
  return result;
}

}  // namespace suexp
