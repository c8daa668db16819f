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

// Shared generators for the property tests. Seeds are fixed so failures
// reproduce; set BRAIDHOPF_SEED to explore.

#ifndef BRAIDHOPF_TESTS_SUPPORT_HPP
#define BRAIDHOPF_TESTS_SUPPORT_HPP

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "braidhopf/graded.hpp"

namespace bh_test {

using namespace braidhopf;

inline std::uint64_t seed() {
  const char* s = std::getenv("BRAIDHOPF_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 20261014u;
}

class Gen {
 public:
  explicit Gen(std::uint64_t s = seed()) : rng_(s) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Scalar scalar(const Field& k, bool allow_zero = true) {
    for (;;) {
      std::int64_t num = static_cast<std::int64_t>(below(7)) - 3;
      Scalar v = k.is_rational() && coin(0.3) ? k.from_fraction(num, static_cast<std::int64_t>(below(3)) + 2)
                                              : k.from_int(num);
      if (allow_zero || !v.is_zero()) return v;
    }
  }

  GradedSpace space(const AmbientPtr& amb, std::size_t max_dim, const std::string& prefix) {
    std::size_t n = below(max_dim + 1);
    std::vector<BasisElement> b;
    for (std::size_t i = 0; i < n; ++i) {
      b.push_back({prefix + std::to_string(i), Degree{static_cast<std::uint32_t>(below(amb->group.order()))}});
    }
    return GradedSpace(amb, std::move(b), prefix);
  }

  GradedMap map(const GradedSpace& dom, const GradedSpace& cod, double density = 0.6) {
    Matrix m(dom.field(), cod.dim(), dom.dim());
    for (std::size_t c = 0; c < dom.dim(); ++c) {
      for (std::size_t r = 0; r < cod.dim(); ++r) {
        if (cod.degree(r) == dom.degree(c) && coin(density)) m.set(r, c, scalar(dom.field()));
      }
    }
    return GradedMap(dom, cod, std::move(m));
  }

 private:
  std::mt19937_64 rng_;
};

inline Matrix dense(const Field& k, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& v) {
  Matrix m(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, k.from_int(v.at(r * cols + c)));
  }
  return m;
}

}  // namespace bh_test

#endif
