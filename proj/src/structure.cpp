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

#include "braidhopf/structure.hpp"

namespace braidhopf {

const char* to_string(Level l) {
  switch (l) {
    case Level::algebra: return "algebra";
    case Level::coalgebra: return "coalgebra";
    case Level::bialgebra: return "bialgebra";
    case Level::hopf: return "hopf";
  }
  return "?";
}

bool has_algebra(Level l) { return l != Level::coalgebra; }
bool has_coalgebra(Level l) { return l != Level::algebra; }

namespace {

const GradedMap& need(const std::optional<GradedMap>& f, const std::string& owner, const char* what) {
  if (!f) throw Error(ErrorKind::precondition, owner + " has no " + what);
  return *f;
}

void expect_type(const GradedMap& f, const GradedSpace& dom, const GradedSpace& cod, const std::string& what) {
  if (!(f.dom() == dom) || !(f.cod() == cod)) {
    throw Error(ErrorKind::shape, what + " has type " + f.dom().describe() + " -> " + f.cod().describe() +
                                      ", expected " + dom.describe() + " -> " + cod.describe());
  }
}

}  // namespace

const GradedMap& HopfStructure::mul() const { return need(m, name, "multiplication m"); }
const GradedMap& HopfStructure::unit() const { return need(eta, name, "unit eta"); }
const GradedMap& HopfStructure::comul() const { return need(delta, name, "comultiplication delta"); }
const GradedMap& HopfStructure::counit() const { return need(eps, name, "counit eps"); }
const GradedMap& HopfStructure::antipode() const { return need(s, name, "antipode S"); }

const GradedMap& StructuredObject::left_action() const { return need(mu_l, name, "left action"); }
const GradedMap& StructuredObject::right_action() const { return need(mu_r, name, "right action"); }
const GradedMap& StructuredObject::left_coaction() const { return need(nu_l, name, "left coaction"); }
const GradedMap& StructuredObject::right_coaction() const { return need(nu_r, name, "right coaction"); }

void check_shapes(const HopfStructure& h) {
  if (!h.ctx) throw Error(ErrorKind::precondition, h.name + " has no braided context");
  if (!(*h.carrier.ambient() == *h.ctx->ambient())) throw Error(ErrorKind::field, h.name + " lives outside its context");
  const GradedSpace& b = h.carrier;
  GradedSpace bb = tensor(b, b), one = h.one();
  if (has_algebra(h.level)) {
    expect_type(h.mul(), bb, b, h.name + ".m");
    expect_type(h.unit(), one, b, h.name + ".eta");
  }
  if (has_coalgebra(h.level)) {
    expect_type(h.comul(), b, bb, h.name + ".delta");
    expect_type(h.counit(), b, one, h.name + ".eps");
  }
  if (h.level == Level::hopf) expect_type(h.antipode(), b, b, h.name + ".S");
}

Report check_structure(const HopfStructure& h) { return check_structure(h, h.psi_hh()); }

Report check_structure(const HopfStructure& h, const GradedMap& psi_hh) {
  check_shapes(h);
  Report r;
  GradedMap i = h.id();
  if (has_algebra(h.level)) {
    const GradedMap &m = h.mul(), &eta = h.unit();
    check_equal(r, "associativity", compose(m, tensor(m, i)), compose(m, tensor(i, m)));
    check_equal(r, "unit_left", compose(m, tensor(eta, i)), i);
    check_equal(r, "unit_right", compose(m, tensor(i, eta)), i);
  }
  if (has_coalgebra(h.level)) {
    const GradedMap &d = h.comul(), &e = h.counit();
    check_equal(r, "coassociativity", compose(tensor(d, i), d), compose(tensor(i, d), d));
    check_equal(r, "counit_left", compose(tensor(e, i), d), i);
    check_equal(r, "counit_right", compose(tensor(i, e), d), i);
  }
  if (h.level == Level::bialgebra || h.level == Level::hopf) {
    const GradedMap &m = h.mul(), &eta = h.unit(), &d = h.comul(), &e = h.counit();
    GradedMap mm = compose(tensor(m, m), tensor(i, psi_hh, i));
    check_equal(r, "delta_multiplicative", compose(d, m), compose(mm, tensor(d, d)));
    check_equal(r, "delta_unital", compose(d, eta), tensor(eta, eta));
    check_equal(r, "eps_multiplicative", compose(e, m), tensor(e, e));
    check_equal(r, "eps_unital", compose(e, eta), id(h.one()));
  }
  if (h.level == Level::hopf) {
    const GradedMap &m = h.mul(), &d = h.comul(), &s = h.antipode();
    GradedMap ee = compose(h.unit(), h.counit());
    check_equal(r, "antipode_left", compose(m, tensor(s, i), d), ee);
    check_equal(r, "antipode_right", compose(m, tensor(i, s), d), ee);
  }
  return r;
}

Report check_antipode_laws(const HopfStructure& h) { return check_antipode_laws(h, h.psi_hh()); }

Report check_antipode_laws(const HopfStructure& h, const GradedMap& psi) {
  Report r;
  const GradedMap &m = h.mul(), &d = h.comul(), &s = h.antipode();
  check_equal(r, "antipode_antimultiplicative", compose(s, m), compose(m, psi, tensor(s, s)));
  check_equal(r, "antipode_anticomultiplicative", compose(d, s), compose(tensor(s, s), psi, d));
  return r;
}

std::optional<GradedMap> solve_antipode(const HopfStructure& b) {
  const GradedSpace& h = b.carrier;
  const Field& k = h.field();
  std::size_t n = h.dim();
  const Matrix& m = b.mul().matrix();
  const Matrix& d = b.comul().matrix();
  Matrix target = (b.unit().matrix() * b.counit().matrix());
  // Unknowns are the degree-preserving entries S(r, a).
  std::vector<std::int64_t> var(n * n, -1);
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t r = 0; r < n; ++r) {
      if (h.degree(r) == h.degree(a)) {
        var[r * n + a] = static_cast<std::int64_t>(vars.size());
        vars.push_back({r, a});
      }
    }
  }
  // Rows: (t, b) for m(S⊗id)Δ, then (t, b) for m(id⊗S)Δ.
  DenseMatrix sys(k, 2 * n * n, vars.size() + 1);
  for (std::size_t col = 0; col < n; ++col) {
    for (const Entry& de : d.column(col)) {
      std::size_t a = de.row / n, a2 = de.row % n;
      for (std::size_t r = 0; r < n; ++r) {
        if (std::int64_t v = var[r * n + a]; v >= 0) {
          for (const Entry& me : m.column(r * n + a2)) sys(me.row * n + col, v) += de.value * me.value;
        }
        if (std::int64_t v = var[r * n + a2]; v >= 0) {
          for (const Entry& me : m.column(a * n + r)) sys(n * n + me.row * n + col, v) += de.value * me.value;
        }
      }
    }
    for (const Entry& te : target.column(col)) {
      sys(te.row * n + col, vars.size()) = te.value;
      sys(n * n + te.row * n + col, vars.size()) = te.value;
    }
  }
  auto piv = rref(sys);
  if (!piv.empty() && piv.back() == vars.size()) return std::nullopt;
  if (piv.size() != vars.size()) return std::nullopt;
  Matrix s(k, n, n);
  for (std::size_t j = 0; j < piv.size(); ++j) s.set(vars[piv[j]].first, vars[piv[j]].second, sys(j, vars.size()));
  return GradedMap(h, h, std::move(s), b.name + ".S");
}

std::optional<GradedMap> antipode_inverse(const HopfStructure& h) { return inverse(h.antipode()); }

HopfStructure tensor_product_structure(const HopfStructure& u, const HopfStructure& v) {
  check_shapes(u);
  check_shapes(v);
  if (!(*u.ctx == *v.ctx)) throw Error(ErrorKind::precondition, "tensor_product_structure: factors in different contexts");
  bool alg = has_algebra(u.level) && has_algebra(v.level);
  bool coalg = has_coalgebra(u.level) && has_coalgebra(v.level);
  if (!alg && !coalg) {
    throw Error(ErrorKind::precondition, "tensor_product_structure: " + u.name + " (" + to_string(u.level) + ") and " +
                                             v.name + " (" + to_string(v.level) + ") share neither algebra nor coalgebra maps");
  }
  HopfStructure t;
  t.name = u.name + "⊗" + v.name;
  t.ctx = u.ctx;
  t.carrier = tensor(u.carrier, v.carrier);
  GradedMap iu = u.id(), iv = v.id();
  if (alg) {
    t.m = compose(tensor(u.mul(), v.mul()), tensor(iu, u.ctx->psi(v.carrier, u.carrier), iv)).renamed(t.name + ".m");
    t.eta = tensor(u.unit(), v.unit()).renamed(t.name + ".eta");
  }
  if (coalg) {
    t.delta = compose(tensor(iu, u.ctx->psi(u.carrier, v.carrier), iv), tensor(u.comul(), v.comul())).renamed(t.name + ".delta");
    t.eps = tensor(u.counit(), v.counit()).renamed(t.name + ".eps");
  }
  t.level = alg && coalg ? Level::bialgebra : (alg ? Level::algebra : Level::coalgebra);
  if (u.level == Level::hopf && v.level == Level::hopf) {
    // Try the two obvious candidates before the linear solve.
    GradedMap ss = tensor(u.antipode(), v.antipode());
    GradedMap twisted = compose(u.ctx->psi(v.carrier, u.carrier), u.ctx->psi(u.carrier, v.carrier), ss);
    GradedMap ee = compose(*t.eta, *t.eps);
    for (const GradedMap& c : {ss, twisted}) {
      if (compose(*t.m, tensor(c, id(t.carrier)), *t.delta) == ee && compose(*t.m, tensor(id(t.carrier), c), *t.delta) == ee) {
        t.s = c.renamed(t.name + ".S");
        t.level = Level::hopf;
        return t;
      }
    }
    if (auto s = solve_antipode(t)) {
      t.s = *s;
      t.level = Level::hopf;
    }
  }
  return t;
}

Opposites mirror_opposites(const HopfStructure& h) {
  check_shapes(h);
  if (h.level != Level::hopf) throw Error(ErrorKind::precondition, "mirror_opposites: " + h.name + " is not a Hopf algebra");
  auto sinv = antipode_inverse(h);
  if (!sinv) throw Error(ErrorKind::precondition, "mirror_opposites: antipode of " + h.name + " is not invertible");
  auto mir = std::make_shared<const BraidedContext>(h.ctx->mirror());
  GradedMap pinv = h.ctx->psi_inv(h.carrier, h.carrier);
  Opposites o{h, h, mir};
  o.op.name = h.name + "^op";
  o.op.ctx = mir;
  o.op.m = compose(h.mul(), pinv).renamed(o.op.name + ".m");
  o.op.s = sinv->renamed(o.op.name + ".S");
  o.cop.name = h.name + "_op";
  o.cop.ctx = mir;
  o.cop.delta = compose(pinv, h.comul()).renamed(o.cop.name + ".delta");
  o.cop.s = sinv->renamed(o.cop.name + ".S");
  return o;
}

// ---- modules ------------------------------------------------------------

namespace {

GradedSpace right_object(const HopfStructure& h, const GradedMap& mu) {
  // mu: X⊗H → X; recover X from the codomain.
  if (!(mu.dom() == tensor(mu.cod(), h.carrier))) {
    throw Error(ErrorKind::shape, "right action " + mu.describe() + " is not of type X⊗" + h.name + " -> X");
  }
  return mu.cod();
}

GradedSpace left_object(const HopfStructure& h, const GradedMap& mu) {
  if (!(mu.dom() == tensor(h.carrier, mu.cod()))) {
    throw Error(ErrorKind::shape, "left action " + mu.describe() + " is not of type " + h.name + "⊗X -> X");
  }
  return mu.cod();
}

GradedSpace right_coobject(const HopfStructure& h, const GradedMap& nu) {
  if (!(nu.cod() == tensor(nu.dom(), h.carrier))) {
    throw Error(ErrorKind::shape, "right coaction " + nu.describe() + " is not of type X -> X⊗" + h.name);
  }
  return nu.dom();
}

GradedSpace left_coobject(const HopfStructure& h, const GradedMap& nu) {
  if (!(nu.cod() == tensor(h.carrier, nu.dom()))) {
    throw Error(ErrorKind::shape, "left coaction " + nu.describe() + " is not of type X -> " + h.name + "⊗X");
  }
  return nu.dom();
}

}  // namespace

Report check_left_module(const HopfStructure& h, const GradedMap& mu) {
  GradedSpace x = left_object(h, mu);
  Report r;
  check_equal(r, "unit", compose(mu, tensor(h.unit(), id(x))), id(x));
  check_equal(r, "associativity", compose(mu, tensor(h.mul(), id(x))), compose(mu, tensor(h.id(), mu)));
  return r;
}

Report check_right_module(const HopfStructure& h, const GradedMap& mu) {
  GradedSpace x = right_object(h, mu);
  Report r;
  check_equal(r, "unit", compose(mu, tensor(id(x), h.unit())), id(x));
  check_equal(r, "associativity", compose(mu, tensor(id(x), h.mul())), compose(mu, tensor(mu, h.id())));
  return r;
}

Report check_left_comodule(const HopfStructure& h, const GradedMap& nu) {
  GradedSpace x = left_coobject(h, nu);
  Report r;
  check_equal(r, "counit", compose(tensor(h.counit(), id(x)), nu), id(x));
  check_equal(r, "coassociativity", compose(tensor(h.comul(), id(x)), nu), compose(tensor(h.id(), nu), nu));
  return r;
}

Report check_right_comodule(const HopfStructure& h, const GradedMap& nu) {
  GradedSpace x = right_coobject(h, nu);
  Report r;
  check_equal(r, "counit", compose(tensor(id(x), h.counit()), nu), id(x));
  check_equal(r, "coassociativity", compose(tensor(id(x), h.comul()), nu), compose(tensor(nu, h.id()), nu));
  return r;
}

Report check_bimodule(const HopfStructure& h, const GradedMap& mu_l, const GradedMap& mu_r) {
  Report r;
  r.merge(check_left_module(h, mu_l), "left_module");
  r.merge(check_right_module(h, mu_r), "right_module");
  check_equal(r, "bimodule", compose(mu_l, tensor(h.id(), mu_r)), compose(mu_r, tensor(mu_l, h.id())));
  return r;
}

Report check_bicomodule(const HopfStructure& h, const GradedMap& nu_l, const GradedMap& nu_r) {
  Report r;
  r.merge(check_left_comodule(h, nu_l), "left_comodule");
  r.merge(check_right_comodule(h, nu_r), "right_comodule");
  check_equal(r, "bicomodule", compose(tensor(nu_l, h.id()), nu_r), compose(tensor(h.id(), nu_r), nu_l));
  return r;
}

StructuredObject regular(const HopfStructure& h) {
  StructuredObject x;
  x.name = h.name;
  x.carrier = h.carrier;
  if (has_algebra(h.level)) x.mu_l = x.mu_r = h.mul();
  if (has_coalgebra(h.level)) x.nu_l = x.nu_r = h.comul();
  return x;
}

StructuredObject trivial_object(const HopfStructure& h) {
  StructuredObject x;
  x.name = "1";
  x.carrier = h.one();
  if (has_coalgebra(h.level)) x.mu_l = x.mu_r = h.counit();
  if (has_algebra(h.level)) x.nu_l = x.nu_r = h.unit();
  return x;
}

GradedMap diagonal_right_action(const HopfStructure& h, const GradedMap& mu_u, const GradedMap& mu_v) {
  GradedSpace u = right_object(h, mu_u), v = right_object(h, mu_v);
  return compose(tensor(mu_u, mu_v), tensor(id(u), h.ctx->psi(v, h.carrier), h.id()),
                 tensor(id(u), id(v), h.comul()));
}

GradedMap diagonal_left_action(const HopfStructure& h, const GradedMap& mu_u, const GradedMap& mu_v) {
  GradedSpace u = left_object(h, mu_u), v = left_object(h, mu_v);
  return compose(tensor(mu_u, mu_v), tensor(h.id(), h.ctx->psi(h.carrier, u), id(v)),
                 tensor(h.comul(), id(u), id(v)));
}

GradedMap diagonal_right_coaction(const HopfStructure& h, const GradedMap& nu_u, const GradedMap& nu_v) {
  GradedSpace u = right_coobject(h, nu_u), v = right_coobject(h, nu_v);
  return compose(tensor(id(u), id(v), h.mul()), tensor(id(u), h.ctx->psi(h.carrier, v), h.id()),
                 tensor(nu_u, nu_v));
}

GradedMap diagonal_left_coaction(const HopfStructure& h, const GradedMap& nu_u, const GradedMap& nu_v) {
  GradedSpace u = left_coobject(h, nu_u), v = left_coobject(h, nu_v);
  return compose(tensor(h.mul(), id(u), id(v)), tensor(h.id(), h.ctx->psi(u, h.carrier), id(v)),
                 tensor(nu_u, nu_v));
}

GradedMap adjoint_right(const HopfStructure& h, const GradedMap& mu_l, const GradedMap& mu_r) {
  GradedSpace x = right_object(h, mu_r);
  return compose(mu_l, tensor(h.id(), mu_r), tensor(h.ctx->psi(x, h.carrier), h.id()),
                 tensor(id(x), compose(tensor(h.antipode(), h.id()), h.comul())))
      .renamed("ad_r");
}

GradedMap adjoint_left(const HopfStructure& h, const GradedMap& mu_l, const GradedMap& mu_r) {
  GradedSpace x = left_object(h, mu_l);
  return compose(mu_r, tensor(mu_l, h.antipode()), tensor(h.id(), h.ctx->psi(h.carrier, x)),
                 tensor(h.comul(), id(x)))
      .renamed("ad_l");
}

GradedMap coadjoint_right(const HopfStructure& h, const GradedMap& nu_l, const GradedMap& nu_r) {
  GradedSpace x = right_coobject(h, nu_r);
  return compose(tensor(id(x), compose(h.mul(), tensor(h.antipode(), h.id()))),
                 tensor(h.ctx->psi(h.carrier, x), h.id()), tensor(h.id(), nu_r), nu_l)
      .renamed("coad_r");
}

GradedMap coadjoint_left(const HopfStructure& h, const GradedMap& nu_l, const GradedMap& nu_r) {
  GradedSpace x = left_coobject(h, nu_l);
  return compose(tensor(h.mul(), id(x)), tensor(h.id(), h.ctx->psi(x, h.carrier)),
                 tensor(nu_l, h.antipode()), nu_r)
      .renamed("coad_l");
}

Report check_algebra_morphism(const HopfStructure& from, const HopfStructure& to, const GradedMap& f) {
  Report r;
  check_equal(r, "multiplicative", compose(f, from.mul()), compose(to.mul(), tensor(f, f)));
  check_equal(r, "unital", compose(f, from.unit()), to.unit());
  return r;
}

Report check_coalgebra_morphism(const HopfStructure& from, const HopfStructure& to, const GradedMap& f) {
  Report r;
  check_equal(r, "comultiplicative", compose(to.comul(), f), compose(tensor(f, f), from.comul()));
  check_equal(r, "counital", compose(to.counit(), f), from.counit());
  return r;
}

Pullback pullback_bimodule(const HopfStructure& a, const HopfStructure& h, const GradedMap& f) {
  Report r = check_algebra_morphism(h, a, f);
  if (!r.passed()) {
    throw Error(ErrorKind::precondition, "pullback_bimodule: " + f.describe() + " is not an algebra morphism\n" + r.summary());
  }
  StructuredObject b;
  b.name = a.name + "_f";
  b.carrier = a.carrier;
  b.mu_l = compose(a.mul(), tensor(f, a.id())).renamed("mu_l^f");
  b.mu_r = compose(a.mul(), tensor(a.id(), f)).renamed("mu_r^f");
  GradedMap ad = adjoint_right(h, *b.mu_l, *b.mu_r).renamed("ad_f");
  return {b, ad};
}

}  // namespace braidhopf
