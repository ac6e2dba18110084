// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include "suexp/exponent.hpp"

#include <cctype>

namespace suexp {

namespace {

class ExponentParser {
 public:
  ExponentParser(std::string_view text, std::optional<std::uint64_t> L_value)
      : text_(text), L_value_(L_value) {}

  StructuredExponent parse() {
    if (text_.empty()) fail("empty exponent");
    BigInt first = number("a decimal integer");
    if (at_end()) return StructuredExponent::plain(first);

    BigInt coefficient = 1;
    BigInt base_value = first;
    if (peek() == '*') {
      ++pos_;
      coefficient = first;
      base_value = number("the tower base");
    }
    expect('^');
    std::uint64_t level = parse_level();
    BigInt offset = 0;
    if (!at_end()) {
      expect('+');
      offset = number("the offset d");
    }
    if (!at_end()) unexpected();
    if (!base_value.fits_ulong_p() || !is_prime(base_value.get_ui())) {
      throw ParseError("tower base '" + base_value.get_str() +
                       "' is not a prime in exponent '" + std::string(text_) + "'");
    }
    return StructuredExponent::tower(coefficient, base_value.get_ui(), level, offset);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in exponent '" + std::string(text_) + "'");
  }

  [[noreturn]] void unexpected() const {
    fail("unexpected token '" + std::string(1, text_[pos_]) + "' at position " +
         std::to_string(pos_));
  }

  void expect(char c) {
    if (at_end()) fail(std::string("expected '") + c + "' at end of input");
    if (peek() != c) unexpected();
    ++pos_;
  }

  BigInt number(const char* what) {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) {
      if (at_end()) fail(std::string("expected ") + what + " at end of input");
      unexpected();
    }
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint64_t parse_level() {
    if (!at_end() && peek() == 'L') {
      if (!L_value_) {
        fail("token 'L' at position " + std::to_string(pos_) + " needs a value for L");
      }
      ++pos_;
      return *L_value_;
    }
    BigInt level = number("the level L");
    if (!level.fits_ulong_p()) fail("level '" + level.get_str() + "' is too large");
    return level.get_ui();
  }

  std::string_view text_;
  std::optional<std::uint64_t> L_value_;
  std::size_t pos_ = 0;
};

int sign_of(int c) { return (c > 0) - (c < 0); }

}  // namespace

StructuredExponent StructuredExponent::plain(BigInt k) {
  if (k < 0) throw std::invalid_argument("exponent must be nonnegative");
  StructuredExponent e;
  e.d_ = std::move(k);
  return e;
}

StructuredExponent StructuredExponent::tower(BigInt c, std::uint64_t base,
                                             std::uint64_t L, BigInt d) {
  if (c < 0 || d < 0) {
    throw std::invalid_argument("tower coefficients must be nonnegative");
  }
  require_prime(base);
  StructuredExponent e;
  e.tower_ = true;
  e.c_ = std::move(c);
  e.base_ = base;
  e.L_ = L;
  e.d_ = std::move(d);
  return e;
}

StructuredExponent StructuredExponent::parse(std::string_view text,
                                             std::optional<std::uint64_t> L_value) {
  return ExponentParser(text, L_value).parse();
}

bool StructuredExponent::is_convertible() const {
  return !tower_ || c_ == 0 || L_ <= kMaxConvertibleL;
}

BigInt StructuredExponent::to_plain() const {
  if (!tower_) return d_;
  if (!is_convertible()) {
    throw std::domain_error("exponent " + to_string() +
                            " is too large to convert to a plain integer");
  }
  return c_ * big_pow(base_, L_) + d_;
}

bool StructuredExponent::is_zero() const { return c_ == 0 && d_ == 0; }

int StructuredExponent::compare(const BigInt& x) const {
  if (is_convertible()) return sign_of(cmp(to_plain(), x));
  if (x < 0) return 1;
  // Here c >= 1 and L > 64, so the value is at least 2^L.
  if (mpz_sizeinbase(x.get_mpz_t(), 2) <= L_) return 1;
  return sign_of(cmp(c_ * big_pow(base_, L_) + d_, x));
}

StructuredExponent StructuredExponent::normalized() const {
  if (!tower_) return *this;
  if (c_ == 0) return plain(d_);
  StructuredExponent n = *this;
  while (mpz_divisible_ui_p(n.c_.get_mpz_t(), base_)) {
    n.c_ /= static_cast<unsigned long>(base_);
    ++n.L_;
  }
  return n;
}

bool StructuredExponent::operator==(const StructuredExponent& o) const {
  StructuredExponent a = normalized();
  StructuredExponent b = o.normalized();
  if (a.is_convertible() && b.is_convertible()) return a.to_plain() == b.to_plain();
  if (a.is_convertible()) return b.compare(a.to_plain()) == 0;
  if (b.is_convertible()) return a.compare(b.to_plain()) == 0;
  if (a.base_ == b.base_ && a.L_ == b.L_ && a.c_ == b.c_ && a.d_ == b.d_) return true;
  // With a common huge modulus B = base^L and offsets below 2^L <= B, the
  // pair (c, d) is the quotient and remainder by B, hence unique.
  if (a.base_ == b.base_ && a.L_ == b.L_ &&
      mpz_sizeinbase(a.d_.get_mpz_t(), 2) <= a.L_ &&
      mpz_sizeinbase(b.d_.get_mpz_t(), 2) <= b.L_) {
    return false;
  }
  throw std::domain_error("cannot compare exponents " + to_string() + " and " +
                          o.to_string());
}

std::string StructuredExponent::to_string() const {
  if (!tower_) return d_.get_str();
  return c_.get_str() + "*" + std::to_string(base_) + "^" + std::to_string(L_) +
         "+" + d_.get_str();
}

BigInt exponent_mod(const StructuredExponent& k, const BigInt& M) {
  if (M < 1) throw std::invalid_argument("exponent_mod: modulus must be >= 1");
  BigInt r;
  if (!k.is_tower()) {
    mpz_fdiv_r(r.get_mpz_t(), k.offset().get_mpz_t(), M.get_mpz_t());
    return r;
  }
  BigInt base(static_cast<unsigned long>(k.base()));
  BigInt level(static_cast<unsigned long>(k.level()));
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), level.get_mpz_t(), M.get_mpz_t());
  r *= k.coefficient();
  r += k.offset();
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), M.get_mpz_t());
  return r;
}

BigInt carmichael_prime_power(std::uint64_t p, unsigned E) {
  require_prime(p);
  if (E == 0) throw std::invalid_argument("carmichael: E must be >= 1");
  if (p == 2) {
    if (E == 1) return 1;
    if (E == 2) return 2;
    return big_pow(2, E - 2);
  }
  return BigInt(static_cast<unsigned long>(p - 1)) * big_pow(p, E - 1);
}

ModPE pow_mod(const BigInt& j, const StructuredExponent& k, std::uint64_t p,
              unsigned E) {
  require_prime(p);
  if (E == 0) throw std::invalid_argument("pow_mod: precision must be >= 1");
  if (j < 0) throw std::invalid_argument("pow_mod: base must be nonnegative");
  if (j == 0) {
    if (k.is_zero()) throw std::invalid_argument("pow_mod: 0^0 is undefined");
    return ModPE(0, p, E);
  }
  BigInt modulus = big_pow(p, E);
  BigInt result;
  std::uint64_t v = ord_int(p, j).value();
  if (v == 0) {
    BigInt e = exponent_mod(k, carmichael_prime_power(p, E));
    mpz_powm(result.get_mpz_t(), j.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
    return ModPE(result, p, E);
  }
  if (!k.is_convertible()) return ModPE(0, p, E);
  BigInt kv = k.to_plain();
  if (kv * static_cast<unsigned long>(v) >= E) return ModPE(0, p, E);
  mpz_powm(result.get_mpz_t(), j.get_mpz_t(), kv.get_mpz_t(), modulus.get_mpz_t());
  return ModPE(result, p, E);
}

}  // namespace suexp
