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

#include "braidhopf/crossed_modules.hpp"

namespace braidhopf {

namespace {

const GradedMap& sinv_of(const HopfStructure& h, std::optional<GradedMap>& cache, const char* who) {
  if (!cache) {
    cache = antipode_inverse(h);
    if (!cache) throw Error(ErrorKind::precondition, std::string(who) + ": the antipode of " + h.name + " is not invertible");
  }
  return *cache;
}

CrossedModule make(const std::string& name, const GradedSpace& carrier, std::optional<GradedMap> mu_l,
                   std::optional<GradedMap> mu_r, std::optional<GradedMap> nu_l, std::optional<GradedMap> nu_r) {
  CrossedModule c;
  c.name = name;
  c.carrier = carrier;
  c.mu_l = std::move(mu_l);
  c.mu_r = std::move(mu_r);
  c.nu_l = std::move(nu_l);
  c.nu_r = std::move(nu_r);
  return c;
}

}  // namespace

Report check_crossed_module(const HopfStructure& h, const CrossedModule& x) {
  Report r;
  const GradedMap &mu = x.right_action(), &nu = x.right_coaction();
  r.merge(check_right_module(h, mu), "module");
  r.merge(check_right_comodule(h, nu), "comodule");
  const BraidedContext& c = *h.ctx;
  const GradedSpace& hc = h.carrier;
  GradedMap lhs = compose(tensor(x.id(), h.mul()), tensor(c.psi(hc, x.carrier), h.id()), tensor(h.id(), nu),
                          tensor(h.id(), mu), tensor(c.psi(x.carrier, hc), h.id()), tensor(x.id(), h.comul()));
  GradedMap rhs = compose(tensor(mu, h.mul()), tensor(x.id(), h.psi_hh(), h.id()), tensor(nu, h.comul()));
  check_equal(r, "compatibility", lhs, rhs);
  return r;
}

Report check_left_crossed_module(const HopfStructure& h, const CrossedModule& x) {
  Report r;
  const GradedMap &mu = x.left_action(), &nu = x.left_coaction();
  r.merge(check_left_module(h, mu), "module");
  r.merge(check_left_comodule(h, nu), "comodule");
  const BraidedContext& c = *h.ctx;
  const GradedSpace& hc = h.carrier;
  // h₁x₋₁ ⊗ h₂▷x₀ = (h₁▷x)₋₁h₂ ⊗ (h₁▷x)₀
  GradedMap lhs = compose(tensor(h.mul(), mu), tensor(h.id(), h.psi_hh(), x.id()), tensor(h.comul(), nu));
  GradedMap rhs = compose(tensor(h.mul(), x.id()), tensor(h.id(), c.psi(x.carrier, hc)), tensor(nu, h.id()),
                          tensor(mu, h.id()), tensor(h.id(), c.psi(hc, x.carrier)), tensor(h.comul(), x.id()));
  check_equal(r, "compatibility", lhs, rhs);
  return r;
}

Report check_crossed_morphism(const HopfStructure& h, const CrossedModule& x, const CrossedModule& y,
                              const GradedMap& f) {
  Report r;
  check_equal(r, "module_morphism", compose(f, x.right_action()), compose(y.right_action(), tensor(f, h.id())));
  check_equal(r, "comodule_morphism", compose(y.right_coaction(), f), compose(tensor(f, h.id()), x.right_coaction()));
  return r;
}

GradedMap yd_braiding(const HopfStructure& h, const CrossedModule& x, const CrossedModule& y, bool inverse) {
  const BraidedContext& c = *h.ctx;
  const GradedSpace &xc = x.carrier, &yc = y.carrier, &hc = h.carrier;
  if (!inverse) {
    return compose(tensor(id(yc), x.right_action()), tensor(c.psi(xc, yc), h.id()), tensor(id(xc), y.right_coaction()))
        .renamed("PsiD(" + x.name + "," + y.name + ")");
  }
  if (h.level != Level::hopf) throw Error(ErrorKind::precondition, "yd_braiding inverse: " + h.name + " is not a Hopf algebra");
  std::optional<GradedMap> cache;
  const GradedMap& sinv = sinv_of(h, cache, "yd_braiding inverse");
  return compose(tensor(x.right_action(), id(yc)), tensor(id(xc), c.psi_inv(hc, yc)), tensor(c.psi_inv(xc, yc), sinv),
                 tensor(id(yc), c.psi_inv(xc, hc)), tensor(y.right_coaction(), id(xc)))
      .renamed("PsiD^-1(" + x.name + "," + y.name + ")");
}

CrossedModule yd_tensor(const HopfStructure& h, const CrossedModule& x, const CrossedModule& y) {
  return make(x.name + "(x)" + y.name, tensor(x.carrier, y.carrier), std::nullopt,
              diagonal_right_action(h, x.right_action(), y.right_action()), std::nullopt,
              diagonal_right_coaction(h, x.right_coaction(), y.right_coaction()));
}

CrossedModule unit_crossed_module(const HopfStructure& h) {
  StructuredObject t = trivial_object(h);
  return make("1", t.carrier, std::nullopt, t.mu_r, std::nullopt, t.nu_r);
}

AdjointCrossed adjoint_crossed_module(const HopfStructure& h) {
  if (h.level != Level::hopf) throw Error(ErrorKind::precondition, "adjoint_crossed_module: " + h.name + " has no antipode");
  GradedMap ad = adjoint_right(h, h.mul(), h.mul());
  GradedMap coad = coadjoint_right(h, h.comul(), h.comul());
  return {make(h.name + "_ad", h.carrier, std::nullopt, ad, std::nullopt, h.comul()),
          make(h.name + "^ad", h.carrier, std::nullopt, h.mul(), std::nullopt, coad)};
}

CrossedModule side_convert(const HopfStructure& h, const CrossedModule& x, const std::string& variant) {
  if (h.level != Level::hopf) throw Error(ErrorKind::precondition, "side_convert: " + h.name + " has no antipode");
  std::optional<GradedMap> cache;
  const GradedMap& sinv = sinv_of(h, cache, "side_convert");
  const GradedMap& s = h.antipode();
  const BraidedContext& c = *h.ctx;
  const GradedSpace &xc = x.carrier, &hc = h.carrier;
  if (variant == "X^S") {
    return make(x.name + "^S", xc, compose(x.right_action(), c.psi_inv(xc, hc), tensor(sinv, x.id())), std::nullopt,
                compose(tensor(s, x.id()), c.psi(xc, hc), x.right_coaction()), std::nullopt);
  }
  if (variant == "^SX") {
    return make("^S" + x.name, xc, compose(x.right_action(), c.psi(hc, xc), tensor(s, x.id())), std::nullopt,
                compose(tensor(sinv, x.id()), c.psi_inv(hc, xc), x.right_coaction()), std::nullopt);
  }
  if (variant == "Y_S") {
    return make(x.name + "_S", xc, std::nullopt, compose(x.left_action(), c.psi(xc, hc), tensor(x.id(), s)),
                std::nullopt, compose(tensor(x.id(), sinv), c.psi_inv(xc, hc), x.left_coaction()));
  }
  if (variant == "_SY") {
    return make("_S" + x.name, xc, std::nullopt, compose(x.left_action(), c.psi_inv(hc, xc), tensor(x.id(), sinv)),
                std::nullopt, compose(tensor(x.id(), s), c.psi(hc, xc), x.left_coaction()));
  }
  throw Error(ErrorKind::precondition, "side_convert: unknown variant '" + variant + "' (expected X^S, ^SX, Y_S or _SY)");
}

Report check_side_conversions(const HopfStructure& h, const CrossedModule& x) {
  Report r;
  CrossedModule a = side_convert(h, x, "X^S"), b = side_convert(h, x, "^SX");
  r.merge(check_left_crossed_module(h, a), "X^S");
  r.merge(check_left_crossed_module(h, b), "^SX");
  CrossedModule a2 = side_convert(h, a, "Y_S"), b2 = side_convert(h, b, "_SY");
  check_equal(r, "X^S_S.action", a2.right_action(), x.right_action());
  check_equal(r, "X^S_S.coaction", a2.right_coaction(), x.right_coaction());
  check_equal(r, "_S^SX.action", b2.right_action(), x.right_action());
  check_equal(r, "_S^SX.coaction", b2.right_coaction(), x.right_coaction());
  return r;
}

Report check_yd_braiding(const HopfStructure& h, const CrossedModule& x, const CrossedModule& y,
                         const CrossedModule& z) {
  Report r;
  GradedMap b = yd_braiding(h, x, y);
  r.merge(check_crossed_morphism(h, yd_tensor(h, x, y), yd_tensor(h, y, x), b), "braiding");
  if (h.level == Level::hopf && antipode_inverse(h)) {
    GradedMap bi = yd_braiding(h, x, y, true);
    check_equal(r, "inverse_left", compose(bi, b), id(tensor(x.carrier, y.carrier)));
    check_equal(r, "inverse_right", compose(b, bi), id(tensor(y.carrier, x.carrier)));
  }
  CrossedModule one = unit_crossed_module(h);
  check_equal(r, "unit_right", yd_braiding(h, x, one), x.id());
  check_equal(r, "unit_left", yd_braiding(h, one, x), x.id());
  CrossedModule yz = yd_tensor(h, y, z), xy = yd_tensor(h, x, y);
  check_equal(r, "hexagon_left", yd_braiding(h, x, yz),
              compose(tensor(y.id(), yd_braiding(h, x, z)), tensor(b, z.id())));
  check_equal(r, "hexagon_right", yd_braiding(h, xy, z),
              compose(tensor(yd_braiding(h, x, z), y.id()), tensor(x.id(), yd_braiding(h, y, z))));
  return r;
}

Report check_yd_naturality(const HopfStructure& h, const CrossedModule& x, const CrossedModule& x2, const GradedMap& f,
                           const CrossedModule& y, const CrossedModule& y2, const GradedMap& g) {
  Report r;
  check_equal(r, "naturality", compose(yd_braiding(h, x2, y2), tensor(f, g)), compose(tensor(g, f), yd_braiding(h, x, y)));
  return r;
}

Report check_yang_baxter(const HopfStructure& h, const CrossedModule& x) {
  Report r;
  GradedMap b = yd_braiding(h, x, x), i = x.id();
  check_equal(r, "yang_baxter", compose(tensor(b, i), tensor(i, b), tensor(b, i)), compose(tensor(i, b), tensor(b, i), tensor(i, b)));
  return r;
}

}  // namespace braidhopf
