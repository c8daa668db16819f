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

#include "braidhopf/dsl.hpp"
#include "braidhopf/examples.hpp"
#include "support.hpp"

using namespace braidhopf;
using K = MorTerm::Kind;

namespace {

MorTerm g(const char* n) { return MorTerm::generator(n); }
ObjExpr ob(std::vector<std::string> f) { return ObjExpr{std::move(f)}; }

Environment env_for(const HopfStructure& h) {
  Environment e(h.ctx);
  e.bind_structure("H", h);
  return e;
}

}  // namespace

TEST(Dsl, ParseShapes) {
  MorTerm t = parse_term("m o (S x id(H)) o delta");
  MorTerm want = MorTerm::compose({g("m"), MorTerm::tensor({g("S"), MorTerm::identity(ob({"H"}))}), g("delta")});
  EXPECT_EQ(t, want);
  ASSERT_EQ(t.kind, K::compose);
  EXPECT_EQ(t.children.size(), 3u);

  MorTerm rhs = parse_term("(m x mu_l) o (id(H) x braid(H,H) x id(X)) o (delta x nu_l)");
  MorTerm hand = MorTerm::compose(
      {MorTerm::tensor({g("m"), g("mu_l")}),
       MorTerm::tensor({MorTerm::identity(ob({"H"})), MorTerm::braid(ob({"H"}), ob({"H"})), MorTerm::identity(ob({"X"}))}),
       MorTerm::tensor({g("delta"), g("nu_l")})});
  EXPECT_EQ(rhs, hand);

  // Parentheses and the unit flatten away.
  EXPECT_EQ(parse_term("(a o b) o c"), parse_term("a o (b o c)"));
  EXPECT_EQ(parse_term("id((H x 1) x X)"), MorTerm::identity(ob({"H", "X"})));
  EXPECT_EQ(parse_term("id(1)"), MorTerm::identity(ob({})));
  EXPECT_EQ(parse_term("H.m\n o H.delta").children[1].line, 2u);
}

TEST(Dsl, SyntaxErrors) {
  try {
    parse_term("m o o delta");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_NE(std::string(e.what()).find("line 1, column 5"), std::string::npos) << e.what();
  }
  for (const char* bad : {"", "m o", "(m", "m)", "id H", "braid(H)", "m x x m", "3", "m$", "a..b", "id()"}) {
    EXPECT_THROW(parse_term(bad), Error) << bad;
  }
  // Unknown names are not a parse error.
  EXPECT_NO_THROW(parse_term("nothing_here"));
}

TEST(Dsl, PrintRoundTrip) {
  for (const char* s : {"m o (S x id(H)) o delta", "(m x mu_l) o (id(H) x braid(H, H) x id(X)) o (delta x nu_l)",
                        "braid_inv(H x X, 1) o (a o b x c)", "id(1)", "H.m x (H.S o H.S)"}) {
    MorTerm t = parse_term(s);
    EXPECT_EQ(parse_term(print(t)), t) << s << " -> " << print(t);
  }
  EXPECT_EQ(print(parse_term("m o (S x id(H)) o delta")), "m o S x id(H) o delta");
}

TEST(Dsl, UnitAndAntipodeLaws) {
  for (const HopfStructure& h : {group_algebra(Field::rationals(), Group({3})), sweedler(), braided_line(3, 7).line}) {
    Environment e = env_for(h);
    EXPECT_EQ(evaluate(parse_term("m o (eta x id(H))"), e), h.id()) << h.name;
    EXPECT_TRUE(assert_equal("antipode", "m o (S x id(H)) o delta", "eta o eps", e).passed()) << h.name;
  }
  // On H4 the antipode composite is the rank one map with row 1 = ε.
  GradedMap a = evaluate(parse_term("m o (S x id(H)) o delta"), env_for(sweedler()));
  EXPECT_EQ(a.matrix(), bh_test::dense(Field::rationals(), 4, 4, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(rank(a), 1u);
}

TEST(Dsl, HopfModuleIdentities) {
  for (const HopfStructure& h : {sweedler(), braided_line(3, 7).line}) {
    Environment e = env_for(h);
    e.bind_object("X", regular(h));
    EXPECT_TRUE(assert_equal("pi", "mu_l o (S x id(X)) o nu_l", "eta o eps", e).passed()) << h.name;
    EXPECT_TRUE(assert_equal("compat", "nu_l o mu_l", "(m x mu_l) o (id(H) x braid(H,H) x id(X)) o (delta x nu_l)", e)
                    .passed())
        << h.name;
    // act_l is an alias for mu_l.
    EXPECT_EQ(evaluate(parse_term("X.act_l"), e), evaluate(parse_term("X.mu_l"), e));
  }
}

TEST(Dsl, BraidIdentitiesAndSwap) {
  BraidedLine bl = braided_line(3, 7);
  bh_test::Gen gen;
  AmbientPtr amb = bl.line.carrier.ambient();
  for (int trial = 0; trial < 5; ++trial) {
    Environment e(bl.line.ctx);
    e.add_object("X", gen.space(amb, 3, "a"));
    e.add_object("Y", gen.space(amb, 3, "b"));
    e.add_object("Z", gen.space(amb, 2, "c"));
    EXPECT_TRUE(assert_equal("hex1", "braid(X, Y x Z)", "(id(Y) x braid(X,Z)) o (braid(X,Y) x id(Z))", e).passed());
    EXPECT_TRUE(assert_equal("hex2", "braid(X x Y, Z)", "(braid(X,Z) x id(Y)) o (id(X) x braid(Y,Z))", e).passed());
    EXPECT_TRUE(assert_equal("inv", "braid_inv(X,Y) o braid(X,Y)", "id(X x Y)", e).passed());
  }
  Environment e = env_for(bl.line);
  Report r = assert_equal("swapped", "braid(H,H)", "braid_inv(H,H)", e);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.checks()[0].status, Status::fail);
  ASSERT_TRUE(r.checks()[0].residual);
  EXPECT_GT(r.checks()[0].residual->nonzero, 0u);
}

TEST(Dsl, TypeAndLookupErrors) {
  Environment e = env_for(sweedler());
  try {
    evaluate(parse_term("m o m"), e);
    FAIL() << "no error";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::composition);
    EXPECT_NE(std::string(err.what()).find("'m' expects"), std::string::npos) << err.what();
  }
  EXPECT_THROW(evaluate(parse_term("nothing_here"), e), Error);
  e.bind_structure("K", sweedler());
  try {
    evaluate(parse_term("m"), e);
    FAIL() << "no error";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::lookup);
    EXPECT_NE(std::string(err.what()).find("H.m, K.m"), std::string::npos) << err.what();
  }
  EXPECT_NO_THROW(evaluate(parse_term("K.m o H.delta"), e));
  Report r = assert_equal("bad", "m", "H.m", e);
  EXPECT_EQ(r.checks()[0].status, Status::error);
  EXPECT_EQ(assert_equal("shape", "H.m", "H.delta", e).checks()[0].status, Status::fail);
  EXPECT_THROW(e.add_object("H", sweedler().carrier), Error);
  EXPECT_THROW(e.add_map("o", sweedler().id()), Error);
}

// Random well-typed terms built alongside their maps.
namespace {

struct Built {
  MorTerm term;
  GradedMap map;
  std::vector<std::string> cod;
};

Built layer(bh_test::Gen& gen, const Environment& e, const std::vector<std::string>& dom) {
  std::vector<MorTerm> parts;
  std::vector<GradedMap> maps;
  std::vector<std::string> cod;
  auto push = [&](const char* name, std::vector<std::string> out) {
    parts.push_back(MorTerm::generator(name));
    maps.push_back(e.map(name));
    cod.insert(cod.end(), out.begin(), out.end());
  };
  if (dom.empty() || gen.coin(0.15)) push("H.eta", {"H"});
  for (std::size_t i = 0; i < dom.size();) {
    bool pair = i + 1 < dom.size();
    std::size_t pick = gen.below(6);
    if (dom[i] == "H" && pick == 0) {
      push("H.S", {"H"});
    } else if (dom[i] == "H" && pick == 1 && dom.size() < 4) {
      push("H.delta", {"H", "H"});
    } else if (dom[i] == "H" && pick == 2) {
      push("H.eps", {});
    } else if (pair && dom[i] == "H" && dom[i + 1] == "H" && pick == 3) {
      push("H.m", {"H"});
      ++i;
    } else if (pair && pick == 4) {
      bool inv = gen.coin();
      ObjExpr a{{dom[i]}}, b{{dom[i + 1]}};
      // braid_inv(B,A) runs A⊗B → B⊗A.
      parts.push_back(inv ? MorTerm::braid(b, a, true) : MorTerm::braid(a, b));
      GradedSpace sa = e.object(dom[i]), sb = e.object(dom[i + 1]);
      maps.push_back(inv ? e.context()->psi_inv(sb, sa) : e.context()->psi(sa, sb));
      cod.push_back(dom[i + 1]);
      cod.push_back(dom[i]);
      ++i;
    } else {
      parts.push_back(MorTerm::identity(ObjExpr{{dom[i]}}));
      maps.push_back(id(e.object(dom[i])));
      cod.push_back(dom[i]);
    }
    ++i;
  }
  GradedMap m = maps[0];
  for (std::size_t k = 1; k < maps.size(); ++k) m = tensor(m, maps[k]);
  return {MorTerm::tensor(std::move(parts)), m, cod};
}

Built random_term(bh_test::Gen& gen, const Environment& e, std::vector<std::string> dom) {
  Built b = layer(gen, e, dom);
  std::vector<MorTerm> chain{b.term};
  std::size_t depth = 1 + gen.below(3);
  for (std::size_t d = 0; d < depth; ++d) {
    Built next = layer(gen, e, b.cod);
    chain.insert(chain.begin(), next.term);
    b.map = compose_relabel(next.map, b.map);
    b.cod = next.cod;
  }
  b.term = MorTerm::compose(std::move(chain));
  return b;
}

}  // namespace

TEST(DslProperty, EvaluationIsMonoidalAndPrintingRoundTrips) {
  bh_test::Gen gen;
  BraidedLine bl = braided_line(3, 7);
  for (const HopfStructure& h : {sweedler(), bl.line}) {
    Environment e = env_for(h);
    e.add_object("V", gen.space(h.carrier.ambient(), 3, "v"));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::string> dom;
      for (std::size_t k = gen.below(3); k > 0; --k) dom.push_back(gen.coin() ? "H" : "V");
      Built a = random_term(gen, e, dom), b = random_term(gen, e, {"H"});
      EXPECT_EQ(parse_term(print(a.term)), a.term) << print(a.term);
      GradedMap ea = evaluate(a.term, e);
      EXPECT_TRUE(ea.same_constants(a.map)) << print(a.term);
      MorTerm t = MorTerm::tensor({a.term, b.term});
      EXPECT_TRUE(evaluate(t, e).same_constants(tensor(a.map, b.map))) << print(t);
      EXPECT_EQ(parse_term(print(t)), t) << print(t);
    }
  }
}
