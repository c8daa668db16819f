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

#include "braidhopf/examples.hpp"
#include "braidhopf/hopf_modules.hpp"
#include "support.hpp"

using namespace braidhopf;

namespace {

::testing::AssertionResult all_pass(const Report& r) {
  if (r.passed()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << r.summary();
}

std::vector<HopfStructure> samples() {
  return {group_algebra(Field::rationals(), Group({2})), sweedler(), braided_line(3, 7).line};
}

// H⊗W with m⊗id and the diagonal coaction, W a left comodule. Coinvariants
// are not spanned by 1⊗w here, so this exercises Π beyond the free case.
HopfModule cofree(const HopfStructure& h, const GradedMap& nu_w) {
  HopfModule x;
  x.name = "cofree";
  x.carrier = tensor(h.carrier, nu_w.dom());
  x.mu_l = tensor(h.mul(), id(nu_w.dom()));
  x.nu_l = diagonal_left_coaction(h, h.comul(), nu_w);
  return x;
}

}  // namespace

TEST(HopfModule, RegularPiIsEtaEpsilon) {
  for (const HopfStructure& h : samples()) {
    HopfModule r = regular(h);
    EXPECT_TRUE(all_pass(check_hopf_module(h, r))) << h.name;
    EXPECT_TRUE(all_pass(check_pi(h, r)));
    GradedMap pi = pi_idempotent(h, r);
    // Oracle: column j of ηε is ε(b_j) times the unit vector.
    Matrix want(h.carrier.field(), h.carrier.dim(), h.carrier.dim());
    for (std::size_t j = 0; j < h.carrier.dim(); ++j) want.set(0, j, h.counit().at(0, j));
    EXPECT_EQ(pi.matrix(), want) << h.name;
    Split s = coinvariants(h, r);
    EXPECT_EQ(s.object.dim(), 1u);
    EXPECT_TRUE(s.object.is_unit());
    EXPECT_TRUE(all_pass(check_coinvariant_legs(h, r, s)));
  }
}

TEST(HopfModule, FreeModulePiIsEtaEpsilonTensorId) {
  for (const HopfStructure& h : samples()) {
    for (const GradedSpace& v : sample_spaces(h, 3)) {
      HopfModule x = smash_embed(h, v);
      ASSERT_TRUE(all_pass(check_hopf_module(h, x)));
      GradedMap want = tensor(compose(h.unit(), h.counit()), id(v));
      EXPECT_TRUE(pi_idempotent(h, x).same_constants(want)) << h.name << " " << v.describe();
      EXPECT_EQ(coinvariants(h, x).object.dim(), v.dim());
    }
  }
}

TEST(HopfModule, CofreeModuleHasDimHCoinvariantsFree) {
  for (const HopfStructure& h : samples()) {
    HopfModule x = cofree(h, h.comul());
    ASSERT_TRUE(all_pass(check_hopf_module(h, x))) << h.name;
    NaturalIsos ni = natural_isos(h, x);
    EXPECT_EQ(ni.coinv.object.dim(), h.carrier.dim());
    EXPECT_TRUE(all_pass(check_natural_isos(h, x, ni)));
    EXPECT_TRUE(all_pass(check_coinvariant_legs(h, x, ni.coinv)));
  }
}

TEST(HopfModule, PerturbedCoactionFails) {
  HopfStructure h = sweedler();
  HopfModule x = regular(h);
  // Twisting the coaction by the antipode keeps the shapes but breaks compatibility.
  x.nu_l = compose(tensor(h.id(), h.antipode()), h.comul());
  Report r = check_hopf_module(h, x);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.find("compatibility")->status == Status::pass && r.find("comodule.coassociativity")->status == Status::pass,
            false);
  HopfModule y = regular(h);
  Matrix m = y.left_action().matrix();
  m.add(1, 5, Field::rationals().one());
  y.mu_l = GradedMap(y.left_action().dom(), y.carrier, m);
  EXPECT_FALSE(check_hopf_module(h, y).passed());
}

TEST(HopfModule, FactorizationsThroughLegs) {
  for (const HopfStructure& h : samples()) {
    HopfModule x = cofree(h, h.comul());
    Split s = coinvariants(h, x);
    auto g = factor_through_equalizer(h, x, s, s.i);
    ASSERT_TRUE(g);
    EXPECT_EQ(*g, id(s.object));
    EXPECT_FALSE(factor_through_equalizer(h, x, s, x.id()) && h.carrier.dim() > 1);
    auto k = factor_through_coequalizer(h, x, s, s.p);
    ASSERT_TRUE(k);
    EXPECT_EQ(*k, id(s.object));
  }
}

TEST(HopfModule, SmashEmbeddingIsFullAndFaithful) {
  bh_test::Gen gen;
  HopfStructure h = braided_line(3, 7).line;
  for (int t = 0; t < 10; ++t) {
    GradedSpace v = gen.space(h.carrier.ambient(), 3, "v"), w = gen.space(h.carrier.ambient(), 3, "w");
    GradedMap g = gen.map(v, w);
    GradedMap f = smash_embed(h, g);
    EXPECT_TRUE(all_pass(check_hopf_module_morphism(h, smash_embed(h, v), smash_embed(h, w), f)));
    EXPECT_EQ(smash_full(h, f), g);
  }
  // h⊗v ↦ hg⊗v over k[Z/2] is a module map but not a comodule map.
  HopfStructure z2 = group_algebra(Field::rationals(), Group({2}));
  GradedSpace v = sample_spaces(z2, 2)[2];
  GradedMap right_g = compose(z2.mul(), tensor(z2.id(), GradedMap(z2.one(), z2.carrier, bh_test::dense(Field::rationals(), 2, 1, {0, 1}))));
  GradedMap f = tensor(right_g, id(v));
  EXPECT_FALSE(check_hopf_module_morphism(z2, smash_embed(z2, v), smash_embed(z2, v), f).passed());
  EXPECT_THROW(smash_full(z2, f), Error);
}

TEST(HopfModule, TensorAndCotensorOverH) {
  for (const HopfStructure& h : samples()) {
    for (const GradedSpace& v : sample_spaces(h, 2)) {
      HopfModule m = smash_embed(h, v);
      TensorOverH t = tensor_over_h(h, h.mul(), m);
      EXPECT_TRUE(all_pass(check_tensor_over_h(h, h.mul(), m, t)));
      auto f = factor_through_lambda(h, h.mul(), m, t, m.left_action());
      ASSERT_TRUE(f);
      EXPECT_TRUE(is_mono(*f) && is_epi(*f));
      CotensorOverH c = cotensor_over_h(h, h.comul(), m);
      EXPECT_TRUE(all_pass(check_cotensor_over_h(h, h.comul(), m, c)));
      auto k = factor_through_rho(h, h.comul(), m, c, m.left_coaction());
      ASSERT_TRUE(k);
      EXPECT_TRUE(all_pass(check_phi(h, h.mul(), h.comul(), m)));
      EXPECT_FALSE(factor_through_lambda(h, h.mul(), m, t, tensor(h.id(), m.id())) && v.dim() > 0);
    }
  }
}

TEST(HopfModule, BraidingHexagonsAndNaturality) {
  for (const HopfStructure& h : samples()) {
    auto sp = sample_spaces(h, 2);
    HopfModule a = smash_embed(h, sp[1]), b = smash_embed(h, sp[2]), c = cofree(h, h.comul());
    EXPECT_TRUE(all_pass(check_hopfmod_braiding(h, a, b, c))) << h.name;
    EXPECT_TRUE(all_pass(check_hopfmod_braiding(h, c, a, b))) << h.name;
    EXPECT_TRUE(all_pass(check_hopfmod_braiding(h, a, regular(h), b))) << h.name;
    bh_test::Gen gen;
    GradedMap g = gen.map(sp[2], sp[2]);
    GradedMap f = gen.map(sp[1], sp[1]);
    EXPECT_TRUE(all_pass(check_hopfmod_naturality(h, a, a, smash_embed(h, f), b, b, smash_embed(h, g))));
    NaturalIsos ni = natural_isos(h, c);
    HopfModule free = smash_embed(h, ni.coinv.object);
    EXPECT_TRUE(all_pass(check_hopfmod_naturality(h, c, free, ni.nu_x, a, a, a.id())));
  }
}

TEST(HopfModule, BraidingOverGroupAlgebraIsTheFlip) {
  HopfStructure h = group_algebra(Field::rationals(), Group({2}));
  auto sp = sample_spaces(h, 2);
  HopfModule a = smash_embed(h, sp[2]), b = smash_embed(h, sp[1]);
  GradedMap br = hopfmod_braiding(h, a, b);
  // Oracle: g^s⊗v ⊗ w ↦ g^s⊗w ⊗ v, reindexed left-major.
  std::size_t nv = 2, nw = 1;
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t i = 0; i < nv; ++i) {
      std::size_t col = (s * nv + i) * nw;
      std::size_t row = (s * nw) * nv + i;
      EXPECT_TRUE(br.at(row, col).is_one());
    }
  }
  EXPECT_EQ(br.matrix().nnz(), 4u);
}

TEST(StructureTheorem, HoldsOnStandardSamples) {
  for (const HopfStructure& h : samples()) {
    std::vector<HopfModule> mods = {regular(h), cofree(h, h.comul()), smash_embed(h, sample_spaces(h, 2)[2])};
    Report r = verify_structure_theorem(h, mods, sample_spaces(h, 3));
    EXPECT_TRUE(all_pass(r)) << h.name;
    EXPECT_GT(r.size(), 50u);
    ASSERT_TRUE(r.find("space[3].roundtrip_verbatim"));
    ASSERT_TRUE(r.find("unit_cells.left"));
  }
}

TEST(StructureTheorem, BrokenModuleIsReported) {
  HopfStructure h = sweedler();
  HopfModule x = regular(h);
  x.nu_l = compose(tensor(h.id(), h.antipode()), h.comul());
  Report r = verify_structure_theorem(h, {x}, {});
  EXPECT_FALSE(r.passed());
}

TEST(Twofold, RegularAndInducedTwofoldModules) {
  for (const HopfStructure& h : samples()) {
    TwofoldHopfModule r = regular(h);
    r.nu_r.reset();
    ASSERT_TRUE(all_pass(check_twofold(h, r))) << h.name;
    TwofoldResult ops = twofold_ops(h, r);
    EXPECT_TRUE(all_pass(ops.report)) << h.name;
    // ₕH is the unit, acted on by ε.
    EXPECT_TRUE(ops.coinv_action.same_constants(h.counit()));
    TwofoldHopfModule t = twofold_tensor(h, r, h.mul());
    ASSERT_TRUE(all_pass(check_twofold(h, t))) << h.name;
    TwofoldResult ot = twofold_ops(h, t);
    EXPECT_TRUE(all_pass(ot.report)) << h.name;
    EXPECT_EQ(ot.coinv.object.dim(), h.carrier.dim());
  }
}

TEST(Twofold, ChecksRightHopfAndLeftRight) {
  for (const HopfStructure& h : samples()) {
    StructuredObject r = regular(h);
    EXPECT_TRUE(all_pass(check_right_hopf_module(h, r.right_action(), r.right_coaction())));
    EXPECT_TRUE(all_pass(check_left_right_compatibility(h, r.left_action(), r.right_coaction())));
    EXPECT_TRUE(all_pass(check_right_left_compatibility(h, r.right_action(), r.left_coaction())));
  }
}
