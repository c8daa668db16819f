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

#ifndef BRAIDHOPF_SCALAR_HPP
#define BRAIDHOPF_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "braidhopf/error.hpp"

namespace braidhopf {

class Scalar;

/// An exact field: the rationals (characteristic 0) or F_p for a prime p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  /// Throws Error(field) unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;
  /// Exact literal: an integer "-3" or a fraction "2/5". Anything else,
  /// including decimal points and exponents, is rejected.
  Scalar parse(std::string_view literal) const;

  /// Smallest element of multiplicative order exactly n, if any.
  bool has_element_of_order(std::uint64_t n) const;
  Scalar smallest_element_of_order(std::uint64_t n) const;

  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Element of a Field. Residues are kept canonical in [0, p).
class Scalar {
 public:
  Scalar() : p_(0), v_(mpq_class(0)) {}

  Field field() const { return Field(p_); }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  /// Residue representative for prime fields; throws for rationals.
  std::uint64_t residue() const;
  const mpq_class& rational() const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  friend class Field;
  Scalar(std::uint64_t p, std::uint64_t r) : p_(p), v_(r) {}
  explicit Scalar(mpq_class q) : p_(0), v_(std::move(q)) {}

  void same_field(const Scalar& o) const;

  std::uint64_t p_;
  std::variant<mpq_class, std::uint64_t> v_;
};

}  // namespace braidhopf

#endif  // BRAIDHOPF_SCALAR_HPP
