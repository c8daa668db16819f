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
#include "braidhopf/structure.hpp"

using namespace braidhopf;

namespace {

::testing::AssertionResult all_pass(const Report& r) {
  if (r.passed()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << r.summary();
}

bool any_fail(const Report& r) { return !r.passed(); }

}  // namespace

TEST(CheckStructure, GroupAlgebraZ2) {
  HopfStructure h = group_algebra(Field::rationals(), Group({2}));
  EXPECT_TRUE(all_pass(check_structure(h)));
  EXPECT_EQ(h.antipode(), h.id().renamed(""));
  EXPECT_EQ(check_structure(h).size(), 12u);
}

TEST(CheckStructure, DualGroupAlgebra) {
  EXPECT_TRUE(all_pass(check_structure(dual_group_algebra(Field::rationals(), Group({3})))));
  EXPECT_TRUE(all_pass(check_structure(dual_group_algebra(Field::prime(5), Group({2, 2})))));
}

TEST(CheckStructure, SweedlerAndItsSquaredAntipode) {
  HopfStructure h = sweedler();
  EXPECT_TRUE(all_pass(check_structure(h)));
  EXPECT_TRUE(all_pass(check_antipode_laws(h)));
  // S²(g^a x^b) = (-1)^b g^a x^b
  GradedMap s2 = compose(h.antipode(), h.antipode());
  const Field& k = h.carrier.field();
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t r = 0; r < 4; ++r) {
      Scalar want = r == c ? k.from_int(c >= 2 ? -1 : 1) : k.zero();
      EXPECT_EQ(s2.at(r, c), want) << r << "," << c;
    }
  }
}

TEST(CheckStructure, BraidedLinePassesAndWrongOrderFails) {
  BraidedLine b = braided_line(3, 7);
  EXPECT_EQ(b.q.residue(), 2u);
  EXPECT_TRUE(all_pass(check_structure(b.line)));
  EXPECT_TRUE(all_pass(check_antipode_laws(b.line)));
  // x³ = 0 is forced: (3 choose k)_q vanishes for 0 < k < 3.
  Scalar q = b.q;
  EXPECT_TRUE((q.field().one() + q + q * q).is_zero());
  for (std::uint64_t wrong : {1u, 6u}) {
    BraidedLine w = braided_line(3, 7, Field::prime(7).from_int(static_cast<std::int64_t>(wrong)));
    EXPECT_TRUE(any_fail(check_structure(w.line))) << "q = " << wrong;
  }
  BraidedLine b5 = braided_line(5, 11);
  EXPECT_TRUE(all_pass(check_structure(b5.line)));
}

TEST(CheckStructure, ShapeErrorComesFirst) {
  HopfStructure h = sweedler();
  h.m = h.comul();
  EXPECT_THROW(check_structure(h), Error);
  HopfStructure a = sweedler();
  a.level = Level::algebra;
  a.delta.reset();
  a.eps.reset();
  a.s.reset();
  EXPECT_TRUE(all_pass(check_structure(a)));
}

TEST(SolveAntipode, RecoversKnownAntipodes) {
  for (HopfStructure h : {sweedler(), group_algebra(Field::rationals(), Group({3})), braided_line(3, 7).line}) {
    auto s = solve_antipode(h);
    ASSERT_TRUE(s) << h.name;
    EXPECT_EQ(s->matrix(), h.antipode().matrix()) << h.name;
  }
}

TEST(TensorProduct, TrivialAlgebra) {
  HopfStructure t = group_algebra(Field::rationals(), Group({1}));
  HopfStructure tt = tensor_product_structure(t, t);
  EXPECT_EQ(tt.carrier.dim(), 1u);
  EXPECT_TRUE(all_pass(check_structure(tt)));
}

TEST(TensorProduct, GroupAlgebrasMultiply) {
  Field k = Field::rationals();
  HopfStructure z2 = group_algebra(k, Group({2}));
  HopfStructure t = tensor_product_structure(z2, z2);
  HopfStructure v4 = group_algebra(k, Group({2, 2}));
  ASSERT_EQ(t.level, Level::hopf);
  EXPECT_TRUE(t.mul().same_constants(v4.mul()));
  EXPECT_TRUE(t.comul().same_constants(v4.comul()));
  EXPECT_TRUE(t.antipode().same_constants(v4.antipode()));
  EXPECT_TRUE(t.unit().same_constants(v4.unit()));
}

TEST(TensorProduct, BraidedLineSquared) {
  HopfStructure b = braided_line(3, 7).line;
  HopfStructure t = tensor_product_structure(b, b);
  HopfStructure ta = t, tc = t;
  ta.level = Level::algebra;
  tc.level = Level::coalgebra;
  EXPECT_TRUE(all_pass(check_structure(ta)));
  EXPECT_TRUE(all_pass(check_structure(tc)));
  // Not a bialgebra: the braiding between the factors is not symmetric.
  HopfStructure tb = t;
  tb.level = Level::bialgebra;
  EXPECT_EQ(check_structure(tb).find("delta_multiplicative")->status, Status::fail);
}

TEST(TensorProduct, Associativity) {
  HopfStructure h = sweedler();
  HopfStructure z = group_algebra(Field::rationals(), Group({2}));
  HopfStructure l = tensor_product_structure(tensor_product_structure(h, z), h);
  HopfStructure r = tensor_product_structure(h, tensor_product_structure(z, h));
  EXPECT_EQ(l.carrier, r.carrier);
  EXPECT_EQ(l.mul(), r.mul());
  EXPECT_EQ(l.comul(), r.comul());
}

TEST(MirrorOpposites, SweedlerAndBraidedLine) {
  for (HopfStructure h : {sweedler(), braided_line(3, 7).line, braided_line(5, 11).line}) {
    Opposites o = mirror_opposites(h);
    EXPECT_TRUE(all_pass(check_structure(o.op))) << h.name;
    EXPECT_TRUE(all_pass(check_structure(o.cop))) << h.name;
    EXPECT_EQ(compose(o.op.antipode(), h.antipode()), h.id());
  }
  // The mirror context of the braided line has character q⁻¹.
  BraidedLine b = braided_line(3, 7);
  Opposites o = mirror_opposites(b.line);
  EXPECT_EQ(o.mirror->chi(Degree{1}, Degree{1}), b.q.inverse());
}

TEST(MirrorOpposites, CommutativeCocommutativeIsFixed) {
  HopfStructure h = group_algebra(Field::rationals(), Group({3}));
  Opposites o = mirror_opposites(h);
  EXPECT_EQ(o.op.mul(), h.mul());
  EXPECT_EQ(o.cop.comul(), h.comul());
}

TEST(Modules, RegularAndTrivial) {
  for (HopfStructure h : {sweedler(), braided_line(3, 7).line}) {
    StructuredObject x = regular(h);
    EXPECT_TRUE(all_pass(check_bimodule(h, x.left_action(), x.right_action())));
    EXPECT_TRUE(all_pass(check_bicomodule(h, x.left_coaction(), x.right_coaction())));
    StructuredObject t = trivial_object(h);
    EXPECT_TRUE(all_pass(check_bimodule(h, t.left_action(), t.right_action())));
    EXPECT_TRUE(all_pass(check_bicomodule(h, t.left_coaction(), t.right_coaction())));
  }
}

TEST(AdjointAction, UnitLawAndCommutativeCase) {
  HopfStructure h = group_algebra(Field::rationals(), Group({2}));
  GradedMap ad = adjoint_right(h, h.mul(), h.mul());
  EXPECT_EQ(compose(ad, tensor(h.id(), h.unit())), h.id());
  // Commutative: x◁h = ε(h) x.
  EXPECT_EQ(ad, tensor(h.id(), h.counit()));
}

TEST(AdjointAction, IsAnActionOnSweedlerAndBraidedLine) {
  for (HopfStructure h : {sweedler(), braided_line(3, 7).line}) {
    EXPECT_TRUE(all_pass(check_right_module(h, adjoint_right(h, h.mul(), h.mul())))) << h.name;
    EXPECT_TRUE(all_pass(check_left_module(h, adjoint_left(h, h.mul(), h.mul())))) << h.name;
    EXPECT_TRUE(all_pass(check_right_comodule(h, coadjoint_right(h, h.comul(), h.comul())))) << h.name;
    EXPECT_TRUE(all_pass(check_left_comodule(h, coadjoint_left(h, h.comul(), h.comul())))) << h.name;
  }
}

TEST(Pullback, IdentityAndCounit) {
  HopfStructure h = sweedler();
  Pullback pb = pullback_bimodule(h, h, h.id());
  EXPECT_EQ(pb.ad_f, adjoint_right(h, h.mul(), h.mul()));
  Pullback tr = pullback_bimodule(h, h, compose(h.unit(), h.counit()));
  EXPECT_EQ(tr.ad_f, tensor(h.id(), h.counit()));
  EXPECT_THROW(pullback_bimodule(h, h, h.antipode()), Error);
}
