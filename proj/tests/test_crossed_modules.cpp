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

#include <gtest/gtest.h>

#include "braidhopf/crossed_modules.hpp"
#include "braidhopf/examples.hpp"
#include "support.hpp"

using namespace braidhopf;

namespace {

::testing::AssertionResult all_pass(const Report& r) {
  if (r.passed()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << r.summary();
}

std::vector<HopfStructure> samples() {
  return {group_algebra(Field::rationals(), Group({2})), sweedler(), braided_line(3, 7).line, braided_line(5, 11).line};
}

}  // namespace

TEST(CrossedModule, UnitAndAdjointExamplesPass) {
  for (const HopfStructure& h : samples()) {
    EXPECT_TRUE(all_pass(check_crossed_module(h, unit_crossed_module(h)))) << h.name;
    AdjointCrossed a = adjoint_crossed_module(h);
    EXPECT_TRUE(all_pass(check_crossed_module(h, a.ad))) << h.name;
    EXPECT_TRUE(all_pass(check_crossed_module(h, a.coad))) << h.name;
  }
}

TEST(CrossedModule, CommutativeAdjointActionIsTrivial) {
  HopfStructure h = group_algebra(Field::rationals(), Group({2}));
  AdjointCrossed a = adjoint_crossed_module(h);
  EXPECT_EQ(a.ad.right_action(), compose(tensor(h.id(), h.counit()), id(tensor(h.carrier, h.carrier))).renamed(""));
}

TEST(CrossedModule, RegularActionFailsOnSweedler) {
  HopfStructure h = sweedler();
  CrossedModule x;
  x.name = "H4reg";
  x.carrier = h.carrier;
  x.mu_r = h.mul();
  x.nu_r = h.comul();
  Report r = check_crossed_module(h, x);
  EXPECT_EQ(r.find("compatibility")->status, Status::fail);
  ASSERT_TRUE(r.find("compatibility")->residual);
  EXPECT_GT(r.find("compatibility")->residual->nonzero, 0u);
  EXPECT_EQ(r.find("module.associativity")->status, Status::pass);
}

TEST(CrossedModule, BraidedLineCrossedStructureReproducesQBraiding) {
  for (auto [n, p] : {std::pair{3u, 7u}, std::pair{5u, 11u}, std::pair{4u, 13u}}) {
    BraidedLine b = braided_line(n, p);
    ASSERT_TRUE(all_pass(check_crossed_module(b.group, b.crossed))) << n;
    GradedMap d = yd_braiding(b.group, b.crossed, b.crossed);
    // Oracle: x^i⊗x^j ↦ q^{ij} x^j⊗x^i.
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        Scalar want = b.q.pow(static_cast<std::int64_t>(i * j));
        EXPECT_EQ(d.at(j * n + i, i * n + j), want);
      }
    }
    EXPECT_EQ(d.matrix().nnz(), static_cast<std::size_t>(n * n));
    EXPECT_EQ(d.matrix(), b.line.psi_hh().matrix());
  }
}

TEST(CrossedModule, BraidingInverseHexagonsAndYangBaxter) {
  for (const HopfStructure& h : samples()) {
    AdjointCrossed a = adjoint_crossed_module(h);
    CrossedModule one = unit_crossed_module(h);
    EXPECT_TRUE(all_pass(check_yd_braiding(h, a.ad, a.ad, one))) << h.name;
    EXPECT_TRUE(all_pass(check_yd_braiding(h, a.ad, a.coad, a.ad))) << h.name;
    EXPECT_TRUE(all_pass(check_yd_braiding(h, a.coad, one, a.ad))) << h.name;
    EXPECT_TRUE(all_pass(check_yang_baxter(h, a.ad))) << h.name;
    EXPECT_TRUE(all_pass(check_yang_baxter(h, a.coad))) << h.name;
  }
}

TEST(CrossedModule, InverseRequiresAntipode) {
  HopfStructure h = sweedler();
  AdjointCrossed a = adjoint_crossed_module(h);
  HopfStructure b = h;
  b.level = Level::bialgebra;
  b.s.reset();
  EXPECT_NO_THROW(yd_braiding(b, a.ad, a.ad));
  try {
    yd_braiding(b, a.ad, a.ad, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition);
  }
}

TEST(CrossedModule, TensorProductsAreCrossed) {
  for (const HopfStructure& h : samples()) {
    AdjointCrossed a = adjoint_crossed_module(h);
    CrossedModule t = yd_tensor(h, a.ad, a.ad);
    EXPECT_TRUE(all_pass(check_crossed_module(h, t))) << h.name;
    EXPECT_TRUE(all_pass(check_crossed_module(h, yd_tensor(h, a.coad, a.ad)))) << h.name;
    CrossedModule x1 = yd_tensor(h, a.ad, unit_crossed_module(h));
    EXPECT_EQ(x1.carrier, a.ad.carrier);
    EXPECT_EQ(x1.right_action(), a.ad.right_action());
    EXPECT_EQ(x1.right_coaction(), a.ad.right_coaction());
  }
}

TEST(CrossedModule, NaturalityAlongMorphisms) {
  for (const HopfStructure& h : samples()) {
    AdjointCrossed a = adjoint_crossed_module(h);
    CrossedModule one = unit_crossed_module(h);
    GradedMap eta = h.unit();
    GradedMap pi = compose(h.unit(), h.counit());
    ASSERT_TRUE(all_pass(check_crossed_morphism(h, one, a.ad, eta)));
    ASSERT_TRUE(all_pass(check_crossed_morphism(h, a.coad, a.ad, pi)));
    EXPECT_TRUE(all_pass(check_yd_naturality(h, one, a.ad, eta, a.coad, a.ad, pi)));
    GradedMap br = yd_braiding(h, a.ad, a.coad);
    CrossedModule l = yd_tensor(h, a.ad, a.coad), r = yd_tensor(h, a.coad, a.ad);
    ASSERT_TRUE(all_pass(check_crossed_morphism(h, l, r, br)));
    EXPECT_TRUE(all_pass(check_yd_naturality(h, l, r, br, a.ad, a.ad, a.ad.id())));
  }
}

TEST(CrossedModule, SideConversions) {
  for (const HopfStructure& h : samples()) {
    AdjointCrossed a = adjoint_crossed_module(h);
    EXPECT_TRUE(all_pass(check_side_conversions(h, a.ad))) << h.name;
    EXPECT_TRUE(all_pass(check_side_conversions(h, a.coad))) << h.name;
    CrossedModule one = unit_crossed_module(h);
    EXPECT_TRUE(all_pass(check_side_conversions(h, one)));
    for (const char* v : {"X^S", "^SX"}) {
      CrossedModule c = side_convert(h, one, v);
      EXPECT_TRUE(c.left_action().same_constants(one.right_action())) << v;
      EXPECT_TRUE(c.left_coaction().same_constants(one.right_coaction())) << v;
    }
  }
  EXPECT_THROW(side_convert(sweedler(), unit_crossed_module(sweedler()), "S^X"), Error);
}

TEST(CrossedModule, BraidedLineUsesInverseAntipode) {
  HopfStructure h = braided_line(3, 7).line;
  auto sinv = antipode_inverse(h);
  ASSERT_TRUE(sinv);
  EXPECT_FALSE(*sinv == h.antipode());
  AdjointCrossed a = adjoint_crossed_module(h);
  CrossedModule s1 = side_convert(h, a.ad, "^SX");
  EXPECT_TRUE(all_pass(check_left_crossed_module(h, s1)));
  // A broken left structure is caught.
  CrossedModule bad = s1;
  bad.nu_l = compose(h.psi_hh(), h.comul());
  EXPECT_FALSE(check_left_crossed_module(h, bad).passed());
}

TEST(CrossedModule, RandomPerturbationsAreDetected) {
  bh_test::Gen gen;
  HopfStructure h = sweedler();
  AdjointCrossed a = adjoint_crossed_module(h);
  int caught = 0;
  for (int t = 0; t < 20; ++t) {
    CrossedModule x = a.ad;
    GradedMap mu = x.right_action();
    Matrix m = mu.matrix();
    std::size_t c = gen.below(mu.dom().dim());
    std::size_t r = gen.below(mu.cod().dim());
    if (!(mu.cod().degree(r) == mu.dom().degree(c))) continue;
    m.add(r, c, Field::rationals().one());
    x.mu_r = GradedMap(mu.dom(), mu.cod(), m);
    caught += check_crossed_module(h, x).passed() ? 0 : 1;
    EXPECT_FALSE(check_crossed_module(h, x).passed()) << r << "," << c;
  }
  EXPECT_GT(caught, 0);
}
