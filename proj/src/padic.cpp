// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include "suexp/padic.hpp"

#include <limits>
#include <stdexcept>

namespace suexp {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::Undetermined:
      break;
  }
  return "undetermined";
}

std::uint64_t Valuation::value() const {
  if (!v_) throw std::logic_error("value() of an infinite valuation");
  return *v_;
}

std::strong_ordering Valuation::operator<=>(const Valuation& o) const {
  if (is_infinite() || o.is_infinite()) {
    return is_infinite() <=> o.is_infinite();
  }
  return *v_ <=> *o.v_;
}

std::string Valuation::to_string() const {
  return v_ ? std::to_string(*v_) : std::string("inf");
}

Tri TruncatedValuation::geq(std::int64_t bound) const {
  if (bound <= 0) return Tri::True;
  auto b = static_cast<std::uint64_t>(bound);
  if (exact_) return v_ >= b ? Tri::True : Tri::False;
  return v_ >= b ? Tri::True : Tri::Undetermined;
}

Tri TruncatedValuation::less(std::int64_t bound) const {
  switch (geq(bound)) {
    case Tri::True:
      return Tri::False;
    case Tri::False:
      return Tri::True;
    case Tri::Undetermined:
      break;
  }
  return Tri::Undetermined;
}

Tri TruncatedValuation::equals(std::int64_t v) const {
  if (v < 0) return Tri::False;
  auto u = static_cast<std::uint64_t>(v);
  if (exact_) return v_ == u ? Tri::True : Tri::False;
  return u < v_ ? Tri::False : Tri::Undetermined;
}

Tri TruncatedValuation::less(const TruncatedValuation& other) const {
  if (exact_ && other.exact_) return v_ < other.v_ ? Tri::True : Tri::False;
  if (exact_) return v_ < other.v_ ? Tri::True : Tri::Undetermined;
  if (other.exact_) return other.v_ <= v_ ? Tri::False : Tri::Undetermined;
  return Tri::Undetermined;
}

std::string TruncatedValuation::to_string() const {
  return exact_ ? std::to_string(v_) : ">=" + std::to_string(v_);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("not a prime: " + std::to_string(p));
  }
}

std::uint64_t ipow(std::uint64_t p, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (p != 0 && r > std::numeric_limits<std::uint64_t>::max() / p) {
      throw std::overflow_error("power exceeds 64 bits");
    }
    r *= p;
  }
  return r;
}

BigInt big_pow(std::uint64_t p, std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

Valuation ord_int(std::uint64_t p, const BigInt& x) {
  require_prime(p);
  if (x == 0) return Valuation::infinite();
  if (p == 2) return Valuation::finite(mpz_scan1(x.get_mpz_t(), 0));
  BigInt rest;
  BigInt prime(static_cast<unsigned long>(p));
  auto v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
  return Valuation::finite(v);
}

std::uint64_t ord_factorial(std::uint64_t p, std::uint64_t m) {
  std::uint64_t total = 0;
  for (std::uint64_t q = m / p; q > 0; q /= p) total += q;
  return total;
}

std::int64_t least_residue(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("least_residue: modulus must be >= 1");
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

BigInt least_residue(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw std::invalid_argument("least_residue: modulus must be >= 1");
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::invalid_argument("floor_div by zero");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::uint64_t carries(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  require_prime(p);
  std::uint64_t count = 0;
  std::uint64_t carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    std::uint64_t digit_sum = a % p + b % p + carry;
    carry = digit_sum >= p ? 1 : 0;
    count += carry;
    a /= p;
    b /= p;
  }
  return count;
}

std::uint64_t euler_phi_prime_power(std::uint64_t p, std::uint64_t alpha) {
  require_prime(p);
  if (alpha == 0) {
    throw std::invalid_argument("euler_phi_prime_power: alpha must be >= 1");
  }
  return (p - 1) * ipow(p, alpha - 1);
}

PrimePowerCtx::PrimePowerCtx(std::uint64_t p, std::uint64_t alpha,
                             unsigned precision)
    : p_(p), alpha_(alpha), precision_(precision) {
  require_prime(p);
  if (precision == 0) throw std::invalid_argument("precision E must be >= 1");
}

std::uint64_t PrimePowerCtx::class_modulus() const { return ipow(p_, alpha_); }

ModPE::ModPE(const BigInt& value, std::uint64_t p, unsigned precision)
    : modulus_(big_pow(p, precision)), p_(p), precision_(precision) {
  if (p < 2) throw std::invalid_argument("ModPE: p must be prime");
  if (precision == 0) throw std::invalid_argument("ModPE: precision must be >= 1");
  mpz_fdiv_r(residue_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

ModPE::ModPE(BigInt residue, BigInt modulus, std::uint64_t p, unsigned precision)
    : residue_(std::move(residue)),
      modulus_(std::move(modulus)),
      p_(p),
      precision_(precision) {}

void ModPE::require_same_ring(const ModPE& o) const {
  if (p_ != o.p_ || precision_ != o.precision_) {
    throw std::invalid_argument("ModPE: operands live in different rings");
  }
}

ModPE ModPE::operator+(const ModPE& o) const {
  require_same_ring(o);
  BigInt r = residue_ + o.residue_;
  if (r >= modulus_) r -= modulus_;
  return ModPE(std::move(r), modulus_, p_, precision_);
}

ModPE ModPE::operator-(const ModPE& o) const {
  require_same_ring(o);
  BigInt r = residue_ - o.residue_;
  if (r < 0) r += modulus_;
  return ModPE(std::move(r), modulus_, p_, precision_);
}

ModPE ModPE::operator*(const ModPE& o) const {
  require_same_ring(o);
  BigInt r = residue_ * o.residue_;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
  return ModPE(std::move(r), modulus_, p_, precision_);
}

ModPE ModPE::operator-() const {
  BigInt r = residue_ == 0 ? BigInt(0) : BigInt(modulus_ - residue_);
  return ModPE(std::move(r), modulus_, p_, precision_);
}

bool ModPE::operator==(const ModPE& o) const {
  return p_ == o.p_ && precision_ == o.precision_ && residue_ == o.residue_;
}

TruncatedValuation trunc_val(const ModPE& x) {
  if (x.is_zero()) return TruncatedValuation::at_least(x.precision());
  return TruncatedValuation::exact(ord_int(x.prime(), x.residue()).value());
}

}  // namespace suexp
