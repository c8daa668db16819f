/*
 * Copyright 2026 The braidhopf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "braidhopf/scalar.hpp"

#include <cctype>
#include <sstream>

namespace braidhopf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::shape: return "shape";
    case ErrorKind::composition: return "composition";
    case ErrorKind::degree: return "degree";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::consistency: return "consistency";
    case ErrorKind::field: return "field";
    case ErrorKind::parse: return "parse";
    case ErrorKind::load: return "load";
    case ErrorKind::lookup: return "lookup";
  }
  return "unknown";
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_class modulus(std::to_string(p));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return std::stoull(r.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime(p)) {
    throw Error(ErrorKind::field, "modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (p_ == 0) return Scalar(mpq_class(static_cast<long>(v)));
  return Scalar(p_, reduce(v, p_));
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw Error(ErrorKind::field, "zero denominator");
  return from_int(num) / from_int(den);
}

Scalar Field::parse(std::string_view literal) const {
  auto bad = [&]() {
    return Error(ErrorKind::field, "not an exact literal: '" + std::string(literal) + "'");
  };
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::size_t slash = literal.find('/');
  std::string_view num = literal.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : literal.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  std::string num_s(num);
  if (!num_s.empty() && num_s[0] == '+') num_s.erase(0, 1);
  mpz_class n(num_s), d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::field, "zero denominator in '" + std::string(literal) + "'");
  if (p_ == 0) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  std::uint64_t dr = reduce(d, p_);
  if (dr == 0) throw Error(ErrorKind::field, "denominator divisible by p in '" + std::string(literal) + "'");
  return Scalar(p_, reduce(n, p_)) / Scalar(p_, dr);
}

bool Field::has_element_of_order(std::uint64_t n) const {
  if (n == 0) return false;
  if (p_ == 0) return n == 1 || n == 2;
  return (p_ - 1) % n == 0;
}

Scalar Field::smallest_element_of_order(std::uint64_t n) const {
  if (!has_element_of_order(n)) {
    throw Error(ErrorKind::field, describe() + " has no element of multiplicative order " + std::to_string(n));
  }
  if (p_ == 0) return from_int(n == 1 ? 1 : -1);
  for (std::uint64_t a = 1; a < p_; ++a) {
    if (powmod(a, n, p_) != 1) continue;
    bool exact = true;
    for (std::uint64_t d = 1; d < n; ++d) {
      if (n % d == 0 && powmod(a, d, p_) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return Scalar(p_, a);
  }
  throw Error(ErrorKind::field, "no element of order " + std::to_string(n));
}

std::string Field::describe() const {
  return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

bool Scalar::is_zero() const {
  if (p_ == 0) return sgn(std::get<mpq_class>(v_)) == 0;
  return std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
  if (p_ == 0) return std::get<mpq_class>(v_) == 1;
  return std::get<std::uint64_t>(v_) == 1;
}

void Scalar::same_field(const Scalar& o) const {
  if (p_ != o.p_) {
    throw Error(ErrorKind::field, "arithmetic between scalars of different fields");
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  same_field(o);
  if (p_ == 0) {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  } else {
    std::uint64_t s = std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_);
    if (s >= p_) s -= p_;
    v_ = s;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  same_field(o);
  if (p_ == 0) {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  } else {
    std::uint64_t a = std::get<std::uint64_t>(v_), b = std::get<std::uint64_t>(o.v_);
    v_ = a >= b ? a - b : a + p_ - b;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  same_field(o);
  if (p_ == 0) {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  } else {
    v_ = mulmod(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), p_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (p_ == 0) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
  std::uint64_t a = std::get<std::uint64_t>(v_);
  return Scalar(p_, a == 0 ? 0 : p_ - a);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::field, "division by zero");
  if (p_ == 0) return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
  return Scalar(p_, powmod(std::get<std::uint64_t>(v_), p_ - 2, p_));
}

Scalar Scalar::operator/(const Scalar& o) const {
  same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(std::int64_t e) const {
  Scalar base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Scalar r = p_ == 0 ? Scalar(mpq_class(1)) : Scalar(p_, 1 % p_);
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

std::uint64_t Scalar::residue() const {
  if (p_ == 0) throw Error(ErrorKind::field, "residue() on a rational scalar");
  return std::get<std::uint64_t>(v_);
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw Error(ErrorKind::field, "rational() on a residue");
  return std::get<mpq_class>(v_);
}

std::string Scalar::to_string() const {
  if (p_ == 0) return std::get<mpq_class>(v_).get_str();
  return std::to_string(std::get<std::uint64_t>(v_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.same_field(b);
  if (a.p_ == 0) return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
  return std::get<std::uint64_t>(a.v_) == std::get<std::uint64_t>(b.v_);
}

}  // namespace braidhopf
