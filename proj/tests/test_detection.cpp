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

// Detection power: every single structure constant that the grading allows
// to change, changed by one, must be caught by the axiom checker.

#include <gtest/gtest.h>

#include "braidhopf/examples.hpp"
#include "braidhopf/structure.hpp"
#include "support.hpp"

using namespace braidhopf;

namespace {

struct Tally {
  std::size_t tried = 0;
  std::vector<std::string> silent;
};

const GradedMap& role(const HopfStructure& h, const std::string& which) {
  if (which == "m") return *h.m;
  if (which == "eta") return *h.eta;
  if (which == "delta") return *h.delta;
  if (which == "eps") return *h.eps;
  return *h.s;
}

// `stride` > 1 visits every stride-th admissible entry, for the big examples.
Tally sweep(const HopfStructure& h, std::size_t stride = 1, const Scalar* by = nullptr) {
  Tally t;
  Scalar d = by ? *by : h.carrier.field().one();
  std::size_t seen = 0;
  for (const char* which : {"m", "eta", "delta", "eps", "S"}) {
    const GradedMap& f = role(h, which);
    for (std::size_t r = 0; r < f.cod().dim(); ++r) {
      for (std::size_t c = 0; c < f.dom().dim(); ++c) {
        if (!(f.cod().degree(r) == f.dom().degree(c))) continue;
        if (seen++ % stride) continue;
        ++t.tried;
        if (check_structure(perturb(h, which, r, c, d)).passed()) {
          t.silent.push_back(std::string(which) + "[" + f.cod().label(r) + ", " + f.dom().label(c) + "]");
        }
      }
    }
  }
  return t;
}

void expect_no_silent(const HopfStructure& h, std::size_t stride = 1) {
  Tally t = sweep(h, stride);
  EXPECT_GT(t.tried, 0u);
  std::string list;
  for (const auto& s : t.silent) list += " " + s;
  EXPECT_TRUE(t.silent.empty()) << h.name << ": " << t.silent.size() << " of " << t.tried << " undetected:" << list;
}

}  // namespace

TEST(Detection, ZeroPerturbationIsIdentity) {
  HopfStructure h = sweedler();
  HopfStructure same = perturb(h, "m", 0, 0, h.carrier.field().zero());
  EXPECT_TRUE(same.m->same_constants(*h.m));
  EXPECT_EQ(same.name, h.name);
  EXPECT_TRUE(check_structure(same).passed());
  EXPECT_THROW(perturb(h, "nope", 0, 0, h.carrier.field().one()), Error);
}

TEST(Detection, GroupAlgebras) {
  expect_no_silent(group_algebra(Field::rationals(), Group({2})));
  expect_no_silent(group_algebra(Field::prime(7), Group({3})));
  expect_no_silent(group_algebra(Field::rationals(), Group({2, 2})));
}

TEST(Detection, DualGroupAlgebras) {
  expect_no_silent(dual_group_algebra(Field::rationals(), Group({2})));
  expect_no_silent(dual_group_algebra(Field::prime(7), Group({3})));
}

TEST(Detection, Sweedler) { expect_no_silent(sweedler()); }

TEST(Detection, BraidedLines) {
  for (auto [n, p] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{2, 3}, {3, 7}, {4, 5}}) {
    BraidedLine b = braided_line(n, p);
    expect_no_silent(b.line);
    expect_no_silent(b.group);
    expect_no_silent(mirror_braided_line(n, p).line);
  }
}

TEST(Detection, Taft) { expect_no_silent(build_example("taft(3,7)").hopf, 3); }

TEST(Detection, OtherShifts) {
  // Shifting by any nonzero scalar, not just one, is caught.
  HopfStructure h = sweedler();
  bh_test::Gen g;
  for (int i = 0; i < 4; ++i) {
    Scalar d = g.scalar(h.carrier.field(), false);
    Tally t = sweep(h, 5, &d);
    EXPECT_TRUE(t.silent.empty()) << d.to_string();
  }
}
