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

#include "braidhopf/projections.hpp"

namespace braidhopf {

namespace {

GradedMap m_x(const HopfStructure& h, const HopfBimodule& x) { return compose(x.left_action(), tensor(h.id(), x.right_action())); }
GradedMap n_x(const HopfStructure& h, const HopfBimodule& x) { return compose(tensor(h.id(), x.right_coaction()), x.left_coaction()); }

// Compare after moving b onto a's spaces; label-only differences come from
// iterated coinvariants.
void check_aligned(Report& r, const std::string& name, const GradedMap& a, const GradedMap& b) {
  if (a.dom() == b.dom() && a.cod() == b.cod()) {
    check_equal(r, name, a, b);
    return;
  }
  check_equal(r, name, a, b.retyped(a.dom(), a.cod()));
}

bool same_map(const std::optional<GradedMap>& a, const std::optional<GradedMap>& b) {
  if (!a || !b) return !a && !b;
  return a->same_constants(*b);
}

}  // namespace

// ---- relative antipodes ---------------------------------------------------

GradedMap relative_antipode(const HopfStructure& h, const HopfBimodule& x) {
  const GradedMap& s = h.antipode();
  return compose(m_x(h, x), tensor(s, x.id(), s), n_x(h, x)).renamed("S_" + x.name + "/" + h.name);
}

GradedMap relative_antipode_inverse(const HopfStructure& h, const HopfBimodule& x) {
  auto sinv = antipode_inverse(h);
  if (!sinv) throw Error(ErrorKind::precondition, "relative_antipode_inverse: the antipode of " + h.name + " is not invertible");
  const BraidedContext& c = *h.ctx;
  const GradedSpace &hc = h.carrier, &xc = x.carrier;
  return compose(m_x(h, x), tensor(*sinv, c.psi_inv(xc, hc)), tensor(c.psi_inv(hc, hc), x.id()),
                 tensor(*sinv, c.psi_inv(hc, xc)), n_x(h, x))
      .renamed("S_" + x.name + "/" + h.name + "^-1");
}

RightCoinvariants right_coinvariants(const HopfStructure& h, const HopfBimodule& x) {
  RightCoinvariants out;
  out.split = split_idempotent(right_pi(h, x), x.name + "H");
  const Split& s = out.split;
  out.left.name = x.name + "_H";
  out.left.carrier = s.object;
  out.left.mu_l = compose(s.p, x.left_action(), tensor(h.id(), s.i));
  out.left.nu_l = compose(tensor(h.id(), s.p), coadjoint_left(h, x.left_coaction(), x.right_coaction()), s.i);
  return out;
}

Report check_relative_antipode_identities(const HopfStructure& h, const HopfBimodule& x, const HopfBimodule& y) {
  Report r;
  const BraidedContext& c = *h.ctx;
  const GradedSpace &hc = h.carrier, &xc = x.carrier;
  const GradedMap& s = h.antipode();
  GradedMap sx = relative_antipode(h, x);
  check_equal(r, "polarized.action_right", compose(sx, x.right_action()), compose(x.left_action(), c.psi(xc, hc), tensor(sx, s)));
  check_equal(r, "polarized.action_left", compose(sx, x.left_action()), compose(x.right_action(), c.psi(hc, xc), tensor(s, sx)));
  check_equal(r, "polarized.coaction_left", compose(x.left_coaction(), sx), compose(tensor(s, sx), c.psi(xc, hc), x.right_coaction()));
  check_equal(r, "polarized.coaction_right", compose(x.right_coaction(), sx), compose(tensor(sx, s), c.psi(hc, xc), x.left_coaction()));

  GradedMap lpi = pi_idempotent(h, x), rpi = right_pi(h, x);
  check_equal(r, "pi.s_rpi", compose(sx, rpi), compose(lpi, rpi));
  check_equal(r, "pi.lpi_s", compose(lpi, sx), compose(lpi, rpi));
  check_equal(r, "pi.s_lpi", compose(sx, lpi), compose(rpi, lpi));
  check_equal(r, "pi.rpi_s", compose(rpi, sx), compose(rpi, lpi));

  if (antipode_inverse(h)) {
    GradedMap si = relative_antipode_inverse(h, x);
    check_equal(r, "inverse.left", compose(si, sx), x.id());
    check_equal(r, "inverse.right", compose(sx, si), x.id());

    // ₓS: ₕX → X_H and S_X: X_H → ₕX against the side conversions.
    CoinvariantCrossed lc = to_crossed_module(h, x);
    RightCoinvariants rc = right_coinvariants(h, x);
    r.merge(check_left_crossed_module(h, rc.left), "right_coinvariants");
    const CrossedModule &yl = lc.y, &yr = rc.left;
    GradedMap xs = compose(rc.split.p, sx, lc.coinv.i);
    GradedMap sxr = compose(lc.coinv.p, sx, rc.split.i);
    // Each is a crossed-module map into a single converted structure.
    CrossedModule yr_s = side_convert(h, yr, "Y_S"), s_yl = side_convert(h, yl, "^SX");
    check_equal(r, "side.xs_module", compose(xs, yl.right_action()), compose(yr_s.right_action(), tensor(xs, h.id())));
    check_equal(r, "side.xs_comodule", compose(yr_s.right_coaction(), xs), compose(tensor(xs, h.id()), yl.right_coaction()));
    check_equal(r, "side.sx_module", compose(sxr, yr.left_action()), compose(s_yl.left_action(), tensor(h.id(), sxr)));
    check_equal(r, "side.sx_comodule", compose(s_yl.left_coaction(), sxr), compose(tensor(h.id(), sxr), yr.left_coaction()));
  }

  // The braided identity and its dual, over X⊗_H Y.
  HopfBimodule xy = hbm_tensor_over_h(h, x, y);
  GradedMap sxy = relative_antipode(h, xy), sy = relative_antipode(h, y);
  TensorOverH lxy = tensor_over_h(h, x.right_action(), y), lyx = tensor_over_h(h, y.right_action(), x);
  check_equal(r, "tensor.braided", compose(hbm_braiding(h, x, y), sxy, lxy.lambda),
              compose(lyx.lambda, c.psi(xc, y.carrier), tensor(sx, sy)));
  CotensorOverH rxy = cotensor_over_h(h, x.right_coaction(), y), ryx = cotensor_over_h(h, y.right_coaction(), x);
  check_equal(r, "tensor.braided_dual", compose(rxy.rho, sxy, hbm_braiding(h, y, x)),
              compose(tensor(sx, sy), c.psi(y.carrier, xc), ryx.rho));
  return r;
}

// ---- bialgebra projections -------------------------------------------------

Report check_crossed_bialgebra(const CrossedBialgebra& x) {
  Report r;
  const HopfStructure& h = x.h;
  r.merge(check_crossed_module(h, x.module), "crossed_module");
  if (!(x.alg.carrier == x.module.carrier)) {
    r.error("carrier", "algebra carrier " + x.alg.carrier.describe() + " differs from " + x.module.carrier.describe());
    return r;
  }
  CrossedModule one = unit_crossed_module(h), xx = yd_tensor(h, x.module, x.module);
  r.merge(check_crossed_morphism(h, xx, x.module, x.alg.mul()), "m");
  r.merge(check_crossed_morphism(h, one, x.module, x.alg.unit()), "eta");
  r.merge(check_crossed_morphism(h, x.module, xx, x.alg.comul()), "delta");
  r.merge(check_crossed_morphism(h, x.module, one, x.alg.counit()), "eps");
  r.merge(check_structure(x.alg, yd_braiding(h, x.module, x.module)), "bialgebra");
  return r;
}

Report check_projection(const BialgebraProjection& p) {
  Report r;
  r.merge(check_algebra_morphism(p.h, p.b, p.inj), "inj");
  r.merge(check_coalgebra_morphism(p.h, p.b, p.inj), "inj");
  r.merge(check_algebra_morphism(p.b, p.h, p.proj), "proj");
  r.merge(check_coalgebra_morphism(p.b, p.h, p.proj), "proj");
  check_equal(r, "retraction", compose(p.proj, p.inj), p.h.id());
  return r;
}

Report check_projection_morphism(const BialgebraProjection& p, const BialgebraProjection& q, const GradedMap& f) {
  Report r;
  r.merge(check_algebra_morphism(p.b, q.b, f), "f");
  r.merge(check_coalgebra_morphism(p.b, q.b, f), "f");
  check_equal(r, "f.inj", compose(f, p.inj), q.inj);
  check_equal(r, "f.proj", compose(q.proj, f), p.proj);
  return r;
}

HopfBimodule projection_to_hbm(const BialgebraProjection& p) {
  Report c = check_projection(p);
  if (!c.passed()) throw Error(ErrorKind::precondition, "projection_to_hbm: not a bialgebra projection: " + c.summary());
  HopfBimodule x;
  x.name = p.b.name;
  x.carrier = p.b.carrier;
  const GradedMap &m = p.b.mul(), &d = p.b.comul();
  GradedMap ib = p.b.id();
  x.mu_l = compose(m, tensor(p.inj, ib));
  x.mu_r = compose(m, tensor(ib, p.inj));
  x.nu_l = compose(tensor(p.proj, ib), d);
  x.nu_r = compose(tensor(ib, p.proj), d);
  return x;
}

HbmBialgebra project_F(const BialgebraProjection& p) {
  HbmBialgebra out;
  out.h = p.h;
  out.under = projection_to_hbm(p);
  Split s = coinvariants(p.h, out.under);
  GradedMap ib = p.b.id();
  out.m = compose(p.b.mul(), tensor(ib, s.i)).renamed("m_" + p.b.name);
  out.delta = compose(tensor(ib, s.p), p.b.comul()).renamed("delta_" + p.b.name);
  out.eta = p.inj;
  out.eps = p.proj;
  if (p.b.s) {
    out.s = compose(m_x(p.h, out.under), tensor(p.h.id(), *p.b.s, p.h.id()), n_x(p.h, out.under)).renamed("S_" + p.b.name);
  }
  return out;
}

Report check_hbm_bialgebra(const HbmBialgebra& b) {
  Report r;
  const HopfStructure& h = b.h;
  const HopfBimodule& x = b.under;
  Report hb = check_hopf_bimodule(h, x);
  r.merge(hb, "hopf_bimodule");
  if (!hb.passed()) return r;
  HopfBimodule xx = hbm_tensor_over_h(h, x, x), reg = regular(h);
  r.merge(check_hbm_morphism(h, xx, x, b.m), "m");
  r.merge(check_hbm_morphism(h, reg, x, b.eta), "eta");
  r.merge(check_hbm_morphism(h, x, xx, b.delta), "delta");
  r.merge(check_hbm_morphism(h, x, reg, b.eps), "eps");
  if (b.s) r.merge(check_hbm_morphism(h, x, x, *b.s), "S");
  GradedMap ix = x.id();
  NaturalIsos ni = natural_isos(h, x);

  check_aligned(r, "associativity", compose(b.m, hopfmod_tensor(h, b.m, x, x, ix)),
                compose(b.m, hopfmod_tensor(h, ix, xx, x, b.m)));
  check_equal(r, "unit_left", compose(b.m, hopfmod_tensor(h, b.eta, x, x, ix)), ni.mu_x);
  check_equal(r, "unit_right", compose(b.m, hopfmod_tensor(h, ix, reg, x, b.eta)), ix);
  check_aligned(r, "coassociativity", compose(hopfmod_tensor(h, b.delta, x, x, ix), b.delta),
                compose(hopfmod_tensor(h, ix, x, xx, b.delta), b.delta));
  check_equal(r, "counit_left", compose(hopfmod_tensor(h, b.eps, x, x, ix), b.delta), ni.nu_x);
  check_equal(r, "counit_right", compose(hopfmod_tensor(h, ix, x, reg, b.eps), b.delta), ix);

  // Δ̲∘m̲ = (m̲⊗_H m̲)(id⊗_H ᴴΨ⊗_H id)(Δ̲⊗_H Δ̲)
  HopfBimodule xx_x = hbm_tensor_over_h(h, xx, x);
  GradedMap dd = hopfmod_tensor(h, b.delta, x, xx, b.delta);
  GradedMap mid = hopfmod_tensor(h, ix, xx_x, xx_x, hopfmod_tensor(h, hbm_braiding(h, x, x), x, x, ix));
  GradedMap mm = hopfmod_tensor(h, b.m, xx, x, b.m);
  check_aligned(r, "multiplicative", compose(b.delta, b.m), compose_relabel(mm, compose_relabel(mid, dd)));
  check_equal(r, "unital", compose(b.delta, b.eta), hopfmod_tensor(h, b.eta, reg, x, b.eta));
  check_equal(r, "counital", compose(b.eps, b.m), hopfmod_tensor(h, b.eps, x, reg, b.eps));
  check_equal(r, "eps_eta", compose(b.eps, b.eta), h.id());
  if (b.s) {
    GradedMap ee = compose(b.eta, b.eps);
    check_equal(r, "antipode_left", compose(b.m, hopfmod_tensor(h, *b.s, x, x, ix), b.delta), ee);
    check_equal(r, "antipode_right", compose(b.m, hopfmod_tensor(h, ix, x, x, *b.s), b.delta), ee);
  }

  // (ν_r∘Π⊗id)∘Δ_B∘i = (id⊗ν_l)∘Δ_B∘i with Δ_B = ρ∘Δ̲.
  GradedMap delta_b = compose(cotensor_over_h(h, x.right_coaction(), x).rho, b.delta);
  Split s = coinvariants(h, x);
  check_equal(r, "coinvariant_coproduct", compose(tensor(compose(x.right_coaction(), pi_idempotent(h, x)), ix), delta_b, s.i),
              compose(tensor(ix, x.left_coaction()), delta_b, s.i));
  return r;
}


Report check_hbm_bialgebra_morphism(const HbmBialgebra& a, const HbmBialgebra& b, const GradedMap& f) {
  Report r;
  const HopfStructure& h = a.h;
  r.merge(check_hbm_morphism(h, a.under, b.under, f), "hopf_bimodule");
  GradedMap ff = hopfmod_tensor(h, f, a.under, b.under, f);
  check_equal(r, "multiplicative", compose(f, a.m), compose(b.m, ff));
  check_equal(r, "unital", compose(f, a.eta), b.eta);
  check_equal(r, "comultiplicative", compose(ff, a.delta), compose(b.delta, f));
  check_equal(r, "counital", compose(b.eps, f), a.eps);
  return r;
}

Recovered recover_G(const HbmBialgebra& b) {
  Recovered out;
  const HopfStructure& h = b.h;
  const HopfBimodule& x = b.under;
  HopfStructure& B = out.projection.b;
  B.name = x.name;
  B.ctx = h.ctx;
  B.carrier = x.carrier;
  B.m = compose(b.m, tensor_over_h(h, x.right_action(), x).lambda).renamed(x.name + ".m");
  B.eta = compose(b.eta, h.unit()).renamed(x.name + ".eta");
  B.delta = compose(cotensor_over_h(h, x.right_coaction(), x).rho, b.delta).renamed(x.name + ".delta");
  B.eps = compose(h.counit(), b.eps).renamed(x.name + ".eps");
  B.level = Level::bialgebra;
  if (b.s) {
    GradedMap rel = relative_antipode(h, x);
    GradedMap s1 = compose(*b.s, rel), s2 = compose(rel, *b.s);
    check_equal(out.report, "antipode_orders_agree", s1, s2);
    B.s = s1.renamed(x.name + ".S");
    B.level = Level::hopf;
  }
  out.projection.h = h;
  out.projection.inj = b.eta;
  out.projection.proj = b.eps;
  out.report.merge(check_structure(B), "structure");
  out.report.merge(check_projection(out.projection), "projection");
  return out;
}

Report verify_projection_theorem(const std::vector<BialgebraProjection>& samples,
                                 const std::vector<ProjectionMorphism>& morphisms) {
  Report r;
  std::vector<std::optional<HbmBialgebra>> fs(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const BialgebraProjection& p = samples[k];
    std::string tag = "sample[" + std::to_string(k) + "]";
    guarded(r, tag, [&] {
      Report c = check_projection(p);
      r.merge(c, tag + ".projection");
      if (!c.passed()) return;
      HbmBialgebra f = project_F(p);
      r.merge(check_hbm_bialgebra(f), tag + ".F");
      Recovered g = recover_G(f);
      r.merge(g.report, tag + ".G");
      const HopfStructure &b0 = p.b, &b1 = g.projection.b;
      bool gf = b1.mul() == b0.mul().renamed(b1.mul().name()) && same_map(b1.m, b0.m) && same_map(b1.eta, b0.eta) &&
                same_map(b1.delta, b0.delta) && same_map(b1.eps, b0.eps) && (!b0.s || same_map(b1.s, b0.s));
      if (gf) r.pass(tag + ".GF_identity");
      else r.fail(tag + ".GF_identity", "G(F(B)) changes the structure constants of " + b0.name);
      HbmBialgebra f2 = project_F(g.projection);
      bool fg = f2.m.same_constants(f.m) && f2.delta.same_constants(f.delta) && f2.eta.same_constants(f.eta) &&
                f2.eps.same_constants(f.eps) && same_map(f2.s, f.s) &&
                f2.under.left_action().same_constants(f.under.left_action()) &&
                f2.under.right_action().same_constants(f.under.right_action()) &&
                f2.under.left_coaction().same_constants(f.under.left_coaction()) &&
                f2.under.right_coaction().same_constants(f.under.right_coaction());
      if (fg) r.pass(tag + ".FG_identity");
      else r.fail(tag + ".FG_identity", "F(G(F(B))) differs from F(B)");
      fs[k] = std::move(f);
    });
  }
  for (std::size_t k = 0; k < morphisms.size(); ++k) {
    const ProjectionMorphism& pm = morphisms[k];
    std::string tag = "morphism[" + std::to_string(k) + "]";
    guarded(r, tag, [&] {
      if (pm.from >= samples.size() || pm.to >= samples.size() || !fs[pm.from] || !fs[pm.to]) {
        r.error(tag, "morphism refers to a sample that failed or does not exist");
        return;
      }
      r.merge(check_projection_morphism(samples[pm.from], samples[pm.to], pm.f), tag + ".projection");
      r.merge(check_hbm_bialgebra_morphism(*fs[pm.from], *fs[pm.to], pm.f), tag + ".F");
    });
  }
  return r;
}

// ---- smash (co)products and bosonization ----------------------------------

Report check_module_algebra(const HopfStructure& h, const HopfStructure& a, const GradedMap& mu_r) {
  Report r;
  r.merge(check_right_module(h, mu_r), "module");
  check_equal(r, "multiplicative", compose(mu_r, tensor(a.mul(), h.id())),
              compose(a.mul(), diagonal_right_action(h, mu_r, mu_r)));
  check_equal(r, "unital", compose(mu_r, tensor(a.unit(), h.id())), compose(a.unit(), h.counit()));
  return r;
}

Report check_comodule_coalgebra(const HopfStructure& h, const HopfStructure& c, const GradedMap& nu_r) {
  Report r;
  r.merge(check_right_comodule(h, nu_r), "comodule");
  check_equal(r, "comultiplicative", compose(tensor(c.comul(), h.id()), nu_r),
              compose(diagonal_right_coaction(h, nu_r, nu_r), c.comul()));
  check_equal(r, "counital", compose(tensor(c.counit(), h.id()), nu_r), compose(h.unit(), c.counit()));
  return r;
}

namespace {

GradedMap smash_m(const HopfStructure& h, const HopfStructure& a, const GradedMap& mu_r) {
  GradedMap ih = h.id(), ia = a.id();
  return compose(tensor(h.mul(), a.mul()), tensor(ih, ih, mu_r, ia), tensor(ih, h.ctx->psi(a.carrier, h.carrier), ih, ia),
                 tensor(ih, ia, h.comul(), ia));
}

GradedMap smash_delta(const HopfStructure& h, const HopfStructure& c, const GradedMap& nu_r) {
  GradedMap ih = h.id(), ic = c.id();
  return compose(tensor(ih, ic, h.mul(), ic), tensor(ih, nu_r, ih, ic), tensor(ih, h.ctx->psi(h.carrier, c.carrier), ic),
                 tensor(h.comul(), c.comul()));
}

}  // namespace

SmashProduct smash_product(const HopfStructure& h, const HopfStructure& a, const GradedMap& mu_r) {
  Report c = check_module_algebra(h, a, mu_r);
  if (!c.passed()) throw Error(ErrorKind::precondition, "smash_product: not a module algebra: " + c.summary());
  SmashProduct s;
  s.alg.name = h.name + "#" + a.name;
  s.alg.ctx = h.ctx;
  s.alg.carrier = tensor(h.carrier, a.carrier);
  s.alg.level = Level::algebra;
  s.alg.m = smash_m(h, a, mu_r).renamed(s.alg.name + ".m");
  s.alg.eta = tensor(h.unit(), a.unit()).renamed(s.alg.name + ".eta");
  s.i = tensor(h.unit(), a.id()).renamed("i");
  s.j = tensor(h.id(), a.unit()).renamed("j");
  return s;
}

SmashCoproduct smash_coproduct(const HopfStructure& h, const HopfStructure& c, const GradedMap& nu_r) {
  Report chk = check_comodule_coalgebra(h, c, nu_r);
  if (!chk.passed()) throw Error(ErrorKind::precondition, "smash_coproduct: not a comodule coalgebra: " + chk.summary());
  SmashCoproduct s;
  s.coalg.name = h.name + "#" + c.name;
  s.coalg.ctx = h.ctx;
  s.coalg.carrier = tensor(h.carrier, c.carrier);
  s.coalg.level = Level::coalgebra;
  s.coalg.delta = smash_delta(h, c, nu_r).renamed(s.coalg.name + ".delta");
  s.coalg.eps = tensor(h.counit(), c.counit()).renamed(s.coalg.name + ".eps");
  s.k = tensor(h.id(), c.counit()).renamed("k");
  s.l = tensor(h.counit(), c.id()).renamed("l");
  return s;
}

Report check_smash_universal(const HopfStructure& h, const HopfStructure& a, const GradedMap& mu_r,
                             const SmashProduct& s, const HopfStructure& u, const GradedMap& g, const GradedMap& f) {
  Report r;
  r.merge(check_structure(s.alg), "algebra");
  r.merge(check_algebra_morphism(a, s.alg, s.i), "i");
  r.merge(check_algebra_morphism(h, s.alg, s.j), "j");
  GradedMap ad_j = pullback_bimodule(s.alg, h, s.j).ad_f;
  check_equal(r, "i_module", compose(s.i, mu_r), compose(ad_j, tensor(s.i, h.id())));
  r.merge(check_algebra_morphism(h, u, g), "g");
  r.merge(check_algebra_morphism(a, u, f), "f");
  GradedMap ad_g = pullback_bimodule(u, h, g).ad_f;
  check_equal(r, "f_module", compose(f, mu_r), compose(ad_g, tensor(f, h.id())));
  GradedMap gf = compose(u.mul(), tensor(g, f));
  r.merge(check_algebra_morphism(s.alg, u, gf), "g_x_f");
  check_equal(r, "restricts_to_f", compose(gf, s.i), f);
  check_equal(r, "restricts_to_g", compose(gf, s.j), g);
  return r;
}

Bosonization bosonize(const CrossedBialgebra& x) {
  const HopfStructure &h = x.h, &a = x.alg;
  Bosonization out;
  HopfStructure& b = out.hopf;
  b.name = h.name + "x" + a.name;
  b.ctx = h.ctx;
  b.carrier = tensor(h.carrier, a.carrier);
  b.m = smash_m(h, a, x.module.right_action()).renamed(b.name + ".m");
  b.eta = tensor(h.unit(), a.unit()).renamed(b.name + ".eta");
  b.delta = smash_delta(h, a, x.module.right_coaction()).renamed(b.name + ".delta");
  b.eps = tensor(h.counit(), a.counit()).renamed(b.name + ".eps");
  b.level = Level::bialgebra;
  if (h.level == Level::hopf && a.level == Level::hopf) {
    if (auto s = solve_antipode(b)) {
      b.s = s->renamed(b.name + ".S");
      b.level = Level::hopf;
    }
  }
  out.projection = {h, b, tensor(h.id(), a.unit()).renamed("j"), tensor(h.id(), a.counit()).renamed("k")};
  return out;
}

Report check_admissible(const CrossedBialgebra& x) {
  Report r;
  const HopfStructure &h = x.h, &a = x.alg;
  Bosonization bos = bosonize(x);
  HopfStructure bi = bos.hopf;
  bi.level = Level::bialgebra;
  Report s = check_structure(bi);
  r.merge(s, "bialgebra");
  if (!s.passed()) return r;
  const GradedMap &mu = x.module.right_action(), &nu = x.module.right_coaction();
  check_equal(r, "relations.eps_m", compose(a.counit(), a.mul()), tensor(a.counit(), a.counit()));
  check_equal(r, "relations.eps_mu", compose(a.counit(), mu), tensor(a.counit(), h.counit()));
  check_equal(r, "relations.delta_eta", compose(a.comul(), a.unit()), tensor(a.unit(), a.unit()));
  check_equal(r, "relations.nu_eta", compose(nu, a.unit()), tensor(a.unit(), h.unit()));
  check_equal(r, "relations.eps_eta", compose(a.counit(), a.unit()), id(h.one()));
  r.merge(check_projection(bos.projection), "projection");
  return r;
}

CrossedBialgebra coinvariant_bialgebra(const BialgebraProjection& p) {
  const HopfStructure& h = p.h;
  HbmBialgebra f = project_F(p);
  CoinvariantCrossed cc = to_crossed_module(h, f.under);
  const Split& s = cc.coinv;
  CrossedBialgebra out;
  out.h = h;
  out.module = cc.y;
  HopfStructure& a = out.alg;
  a.name = "H" + p.b.name;
  a.ctx = h.ctx;
  a.carrier = s.object;
  a.m = compose(s.p, p.b.mul(), tensor(s.i, s.i)).renamed(a.name + ".m");
  a.eta = compose(s.p, p.b.unit()).renamed(a.name + ".eta");
  a.delta = compose(tensor(s.p, s.p), p.b.comul(), s.i).renamed(a.name + ".delta");
  a.eps = compose(p.b.counit(), s.i).renamed(a.name + ".eps");
  a.level = Level::bialgebra;
  if (f.s) {
    a.s = compose(s.p, *f.s, s.i).renamed(a.name + ".S");
    a.level = Level::hopf;
  }
  return out;
}

Report verify_bosonization(const std::vector<CrossedBialgebra>& samples) {
  Report r;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const CrossedBialgebra& x = samples[k];
    std::string tag = "sample[" + std::to_string(k) + "]";
    guarded(r, tag, [&] {
      Report in = check_crossed_bialgebra(x);
      r.merge(in, tag + ".input");
      if (!in.passed()) return;
      Report adm = check_admissible(x);
      r.merge(adm, tag + ".admissible");
      if (!adm.passed()) return;
      Bosonization bos = bosonize(x);
      CrossedBialgebra back = coinvariant_bialgebra(bos.projection);
      // Verbatim: same degrees and structure matrices as the input.
      bool verbatim = back.module.right_action().same_constants(x.module.right_action()) &&
                      back.module.right_coaction().same_constants(x.module.right_coaction()) &&
                      back.alg.mul().same_constants(x.alg.mul()) && back.alg.unit().same_constants(x.alg.unit()) &&
                      back.alg.comul().same_constants(x.alg.comul()) && back.alg.counit().same_constants(x.alg.counit()) &&
                      (!x.alg.s || !back.alg.s || back.alg.s->same_constants(*x.alg.s));
      if (verbatim) r.pass(tag + ".roundtrip_verbatim");
      else r.fail(tag + ".roundtrip_verbatim", "coinvariants of the bosonization differ from " + x.alg.name);
      r.merge(check_crossed_bialgebra(back), tag + ".recovered");
      Bosonization again = bosonize(back);
      bool same = again.hopf.mul().same_constants(bos.hopf.mul()) && again.hopf.comul().same_constants(bos.hopf.comul()) &&
                  again.hopf.unit().same_constants(bos.hopf.unit()) &&
                  again.hopf.counit().same_constants(bos.hopf.counit()) && same_map(again.hopf.s, bos.hopf.s);
      if (same) r.pass(tag + ".rebosonize_exact");
      else r.fail(tag + ".rebosonize_exact", "H×ₕF(H×X) differs from H×X");
      // The projection k = id⊗ε is a morphism onto the trivial pair and factors as id⊗ε_X.
      const HopfStructure& h = x.h;
      BialgebraProjection triv{h, h, h.id(), h.id()};
      r.merge(check_projection_morphism(bos.projection, triv, bos.projection.proj), tag + ".morphism");
      GradedMap fx = smash_full(h, bos.projection.proj);
      check_equal(r, tag + ".morphism_factorizes", fx, x.alg.counit().renamed(fx.name()));
    });
  }
  return r;
}

}  // namespace braidhopf
