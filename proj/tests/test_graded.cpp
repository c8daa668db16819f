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

#include "braidhopf/graded.hpp"
#include "support.hpp"

using namespace braidhopf;
using bh_test::dense;

namespace {

AmbientPtr trivial_q() { return make_ambient(Field::rationals(), Group{}); }

GradedSpace plain(const AmbientPtr& a, std::vector<std::string> labels, std::string name) {
  std::vector<BasisElement> b;
  for (auto& l : labels) b.push_back({l, Degree{}});
  return GradedSpace(a, std::move(b), std::move(name));
}

}  // namespace

TEST(Scalar, RationalArithmeticIsExact) {
  Field q = Field::rationals();
  Scalar a = q.parse("2/6"), b = q.parse("-1/3");
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_EQ((a * q.from_int(3)).to_string(), "1");
  EXPECT_EQ(a.inverse().to_string(), "3");
  EXPECT_THROW(q.parse("0.5"), Error);
  EXPECT_THROW(q.parse("1e3"), Error);
  EXPECT_THROW(q.parse("1/0"), Error);
}

TEST(Scalar, PrimeFieldCanonicalResidues) {
  Field f7 = Field::prime(7);
  EXPECT_EQ(f7.from_int(-1).residue(), 6u);
  EXPECT_EQ(f7.parse("1/2").residue(), 4u);
  EXPECT_EQ(f7.smallest_element_of_order(3).residue(), 2u);
  EXPECT_FALSE(f7.has_element_of_order(4));
  EXPECT_THROW(Field::prime(9), Error);
  EXPECT_THROW(f7.one() + Field::rationals().one(), Error);
}

TEST(Matrix, ProductKronTranspose) {
  Field q = Field::rationals();
  Matrix a = dense(q, 2, 2, {1, 2, 0, 3});
  Matrix b = dense(q, 2, 2, {0, 1, 1, 0});
  EXPECT_EQ(a * b, dense(q, 2, 2, {2, 1, 3, 0}));
  EXPECT_EQ(Matrix::kron(a, b), dense(q, 4, 4, {0, 1, 0, 2, 1, 0, 2, 0, 0, 0, 0, 3, 0, 0, 3, 0}));
  EXPECT_EQ(a.transpose(), dense(q, 2, 2, {1, 0, 2, 3}));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Group, MixedRadixArithmetic) {
  Group g({2, 3});
  EXPECT_EQ(g.order(), 6u);
  Degree a = g.from_coords({1, 2}), b = g.from_coords({1, 2});
  EXPECT_EQ(g.coords(g.add(a, b)), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(g.add(a, g.neg(a)), g.zero());
}

TEST(Compose, IdentityAndZero) {
  auto amb = trivial_q();
  auto x = plain(amb, {"a", "b"}, "X");
  auto y = plain(amb, {"c"}, "Y");
  GradedMap g(x, y, dense(amb->field, 1, 2, {3, -1}), "g");
  EXPECT_EQ(compose(g, id(x)), g);
  EXPECT_TRUE(compose(g, GradedMap::zero(x, x)).matrix().is_zero());
  EXPECT_THROW(compose(g, g), Error);
}

// Counit axiom of Sweedler's H4, basis (1, g, x, gx), with the coproduct
// written out by hand: Δg = g⊗g, Δx = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx.
TEST(Compose, SweedlerCounitOracle) {
  auto amb = trivial_q();
  const Field& k = amb->field;
  auto h = plain(amb, {"1", "g", "x", "gx"}, "H");
  auto hh = tensor(h, h);
  auto idx = [](int a, int b) { return static_cast<std::size_t>(4 * a + b); };
  Matrix d(k, 16, 4);
  d.set(idx(0, 0), 0, k.one());
  d.set(idx(1, 1), 1, k.one());
  d.set(idx(2, 0), 2, k.one());
  d.set(idx(1, 2), 2, k.one());
  d.set(idx(3, 1), 3, k.one());
  d.set(idx(0, 3), 3, k.one());
  GradedMap delta(h, hh, d, "delta");
  auto one = GradedSpace::unit(amb);
  GradedMap eps(h, one, dense(k, 1, 4, {1, 1, 0, 0}), "eps");
  EXPECT_EQ(compose(tensor(eps, id(h)), delta), id(h));
  EXPECT_EQ(compose(tensor(id(h), eps), delta), id(h));
}

TEST(Tensor, UnitIsStrictAndLabelsAssociate) {
  auto amb = trivial_q();
  auto x = plain(amb, {"a", "b"}, "X");
  auto y = plain(amb, {"c"}, "Y");
  auto z = plain(amb, {"d", "e"}, "Z");
  auto one = GradedSpace::unit(amb);
  EXPECT_EQ(tensor(x, one), x);
  EXPECT_EQ(tensor(one, x), x);
  EXPECT_EQ(tensor(tensor(x, y), z), tensor(x, tensor(y, z)));
  EXPECT_EQ(tensor(id(x), id(y)), id(tensor(x, y)));
  auto zero = GradedSpace::zero(amb);
  auto f = GradedMap::zero(zero, zero);
  EXPECT_EQ(tensor(f, id(x)).dom().dim(), 0u);
}

TEST(Tensor, Functoriality) {
  bh_test::Gen gen;
  auto amb = make_ambient(Field::rationals(), Group({2}));
  for (int t = 0; t < 50; ++t) {
    auto x1 = gen.space(amb, 2, "a"), x2 = gen.space(amb, 2, "b"), x3 = gen.space(amb, 2, "c");
    auto y1 = gen.space(amb, 2, "d"), y2 = gen.space(amb, 2, "e"), y3 = gen.space(amb, 2, "f");
    auto f1 = gen.map(x1, x2), f2 = gen.map(x2, x3), g1 = gen.map(y1, y2), g2 = gen.map(y2, y3);
    EXPECT_EQ(tensor(compose(f2, f1), compose(g2, g1)), compose(tensor(f2, g2), tensor(f1, g1)));
  }
}

TEST(Degree, ConstructorRejectsDegreeChange) {
  auto amb = make_ambient(Field::rationals(), Group({2}));
  GradedSpace x(amb, {{"e", Degree{0}}}, "X");
  GradedSpace y(amb, {{"o", Degree{1}}}, "Y");
  Matrix m(amb->field, 1, 1);
  m.set(0, 0, amb->field.one());
  EXPECT_THROW(GradedMap(x, y, m), Error);
}

TEST(Braiding, SymmetricCaseIsTransposition) {
  auto amb = trivial_q();
  auto ctx = BraidedContext::symmetric(amb);
  auto x = plain(amb, {"a", "b"}, "X");
  auto y = plain(amb, {"c", "d", "e"}, "Y");
  auto psi = ctx.psi(x, y);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(psi.at(j * 2 + i, i * 3 + j).is_one());
  }
  EXPECT_EQ(psi.matrix().nnz(), 6u);
}

TEST(Braiding, SuperSignRule) {
  auto amb = make_ambient(Field::rationals(), Group({2}));
  BraidedContext ctx(amb, {{amb->field.from_int(-1)}});
  GradedSpace odd(amb, {{"v", Degree{1}}}, "V");
  auto psi = ctx.psi(odd, odd);
  EXPECT_EQ(psi.at(0, 0).to_string(), "-1");
}

TEST(Braiding, RejectsIllDefinedBicharacter) {
  auto amb = make_ambient(Field::prime(7), Group({3}));
  EXPECT_THROW(BraidedContext(amb, {{amb->field.from_int(3)}}), Error);
  EXPECT_NO_THROW(BraidedContext(amb, {{amb->field.from_int(2)}}));
}

TEST(Braiding, HexagonsNaturalityInverse) {
  bh_test::Gen gen;
  auto amb = make_ambient(Field::prime(7), Group({3, 3}));
  BraidedContext ctx(amb, {{amb->field.from_int(2), amb->field.from_int(4)}, {amb->field.from_int(1), amb->field.from_int(2)}});
  for (int t = 0; t < 40; ++t) {
    auto x = gen.space(amb, 3, "x"), y = gen.space(amb, 3, "y"), z = gen.space(amb, 3, "z");
    EXPECT_EQ(ctx.psi(x, tensor(y, z)), compose(tensor(id(y), ctx.psi(x, z)), tensor(ctx.psi(x, y), id(z))));
    EXPECT_EQ(ctx.psi(tensor(x, y), z), compose(tensor(ctx.psi(x, z), id(y)), tensor(id(x), ctx.psi(y, z))));
    EXPECT_EQ(compose(ctx.psi_inv(x, y), ctx.psi(x, y)), id(tensor(x, y)));
    EXPECT_EQ(compose(ctx.psi(x, y), ctx.psi_inv(x, y)), id(tensor(y, x)));
    auto x2 = gen.space(amb, 3, "u"), y2 = gen.space(amb, 3, "v");
    auto f = gen.map(x, x2), g = gen.map(y, y2);
    EXPECT_EQ(compose(ctx.psi(x2, y2), tensor(f, g)), compose(tensor(g, f), ctx.psi(x, y)));
  }
}

TEST(Braiding, MirrorIsInverseReversed) {
  auto amb = make_ambient(Field::prime(7), Group({3}));
  BraidedContext ctx(amb, {{amb->field.from_int(2)}});
  auto mir = ctx.mirror();
  GradedSpace x(amb, {{"a", Degree{1}}, {"b", Degree{2}}}, "X");
  GradedSpace y(amb, {{"c", Degree{1}}}, "Y");
  EXPECT_EQ(mir.psi(x, y), ctx.psi_inv(y, x));
  EXPECT_EQ(mir.mirror(), ctx);
}

TEST(Split, IdentityZeroAndDiag) {
  auto amb = trivial_q();
  const Field& k = amb->field;
  auto x = plain(amb, {"a", "b"}, "X");
  auto s = split_idempotent(id(x));
  EXPECT_EQ(s.object, x);
  EXPECT_EQ(s.i, id(x));
  EXPECT_EQ(s.p, id(x));
  auto z = split_idempotent(GradedMap::zero(x, x));
  EXPECT_EQ(z.object.dim(), 0u);
  GradedMap e(x, x, dense(k, 2, 2, {1, 0, 0, 0}));
  auto d = split_idempotent(e);
  ASSERT_EQ(d.object.dim(), 1u);
  EXPECT_EQ(d.i.matrix(), dense(k, 2, 1, {1, 0}));
  EXPECT_EQ(d.p.matrix(), dense(k, 1, 2, {1, 0}));
  GradedMap bad(x, x, dense(k, 2, 2, {1, 1, 0, 2}));
  EXPECT_THROW(split_idempotent(bad), Error);
}

TEST(Split, RoundtripOnRandomIdempotents) {
  bh_test::Gen gen;
  auto amb = make_ambient(Field::rationals(), Group({2}));
  for (int t = 0; t < 40; ++t) {
    // e = a∘b where b∘a = id, built from a random graded retraction.
    auto x = gen.space(amb, 4, "x");
    auto y = gen.space(amb, 4, "y");
    auto f = gen.map(x, y);
    auto r = solve_left(f, id(x));
    if (!r) continue;  // f not mono
    GradedMap e = compose(f, *r);
    auto s = split_idempotent(e);
    EXPECT_EQ(compose(s.i, s.p), e);
    EXPECT_EQ(compose(s.p, s.i), id(s.object));
    auto s2 = split_idempotent(e);
    EXPECT_EQ(s2.i, s.i);
    EXPECT_EQ(s2.p, s.p);
  }
}

TEST(Solve, InverseAndRank) {
  auto amb = trivial_q();
  const Field& k = amb->field;
  auto x = plain(amb, {"a", "b"}, "X");
  GradedMap f(x, x, dense(k, 2, 2, {2, 1, 1, 1}));
  auto inv = inverse(f);
  ASSERT_TRUE(inv);
  EXPECT_EQ(compose(*inv, f), id(x));
  GradedMap g(x, x, dense(k, 2, 2, {1, 1, 1, 1}));
  EXPECT_FALSE(inverse(g));
  EXPECT_EQ(rank(g), 1u);
}
