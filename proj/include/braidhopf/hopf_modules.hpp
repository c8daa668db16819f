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

#ifndef BRAIDHOPF_HOPF_MODULES_HPP
#define BRAIDHOPF_HOPF_MODULES_HPP

#include <optional>
#include <vector>

#include "braidhopf/structure.hpp"

namespace braidhopf {

/// Module, comodule and the compatibility ν_l∘μ_l = (m⊗μ_l)∘(id⊗Ψ⊗id)∘(Δ⊗ν_l).
Report check_hopf_module(const HopfStructure& h, const HopfModule& x);
/// Right-right version, for (μ_r, ν_r).
Report check_right_hopf_module(const HopfStructure& h, const GradedMap& mu_r, const GradedMap& nu_r);
/// Right action and left coaction: ν_l∘μ_r = (id⊗μ_r)∘(m⊗id⊗id)∘(id⊗Ψ_{X,H}⊗id)∘(ν_l⊗Δ).
Report check_right_left_compatibility(const HopfStructure& h, const GradedMap& mu_r, const GradedMap& nu_l);
/// Left action and right coaction: ν_r∘μ_l = (μ_l⊗m)∘(id⊗Ψ_{H,X}⊗id)∘(Δ⊗ν_r).
Report check_left_right_compatibility(const HopfStructure& h, const GradedMap& mu_l, const GradedMap& nu_r);
/// Left Hopf module, right-left Hopf module, and the bimodule law.
Report check_twofold(const HopfStructure& h, const TwofoldHopfModule& x);

/// Module and comodule morphism between left Hopf modules.
Report check_hopf_module_morphism(const HopfStructure& h, const HopfModule& x, const HopfModule& y, const GradedMap& f);

/// μ_l∘(S⊗id)∘ν_l; throws Error(consistency) if it is not idempotent.
GradedMap pi_idempotent(const HopfStructure& h, const HopfModule& x);
/// Idempotency and the two absorption identities ν_l∘Π = η⊗Π, Π∘μ_l = ε⊗Π.
Report check_pi(const HopfStructure& h, const HopfModule& x);

/// The canonical splitting of Π: the object ₕX with legs i and p.
Split coinvariants(const HopfStructure& h, const HopfModule& x);
/// i∘p = Π, p∘i = id, ν_l∘i = η⊗i and p∘μ_l = p∘(ε⊗id).
Report check_coinvariant_legs(const HopfStructure& h, const HopfModule& x, const Split& s);
/// For f: Z → X with ν_l∘f = η⊗f, the unique g with i∘g = f (namely p∘f).
std::optional<GradedMap> factor_through_equalizer(const HopfStructure& h, const HopfModule& x, const Split& s,
                                                  const GradedMap& f);
/// For f: X → Z with f∘μ_l = f∘(ε⊗id), the unique g with g∘p = f (namely f∘i).
std::optional<GradedMap> factor_through_coequalizer(const HopfStructure& h, const HopfModule& x, const Split& s,
                                                    const GradedMap& f);

/// H⋊V = (H⊗V, m⊗id, Δ⊗id).
HopfModule smash_embed(const HopfStructure& h, const GradedSpace& v);
GradedMap smash_embed(const HopfStructure& h, const GradedMap& g);
/// X⊗V with action and coaction induced by X.
HopfModule induced(const HopfStructure& h, const HopfModule& x, const GradedSpace& v);
/// For a Hopf module map f: H⋊V → H⋊W returns f_H = (ε⊗id)∘f∘(η⊗id);
/// throws Error(consistency) unless f = id⊗f_H.
GradedMap smash_full(const HopfStructure& h, const GradedMap& f);

struct NaturalIsos {
  Split coinv;
  GradedMap mu_x;  // H⊗ₕX → X
  GradedMap nu_x;  // X → H⊗ₕX
};
NaturalIsos natural_isos(const HopfStructure& h, const HopfModule& x);
/// ₓμ and ₓν mutually inverse Hopf module maps.
Report check_natural_isos(const HopfStructure& h, const HopfModule& x, const NaturalIsos& n);
/// f∘Π_X = Π_Y∘f for a Hopf module map f.
Report check_pi_naturality(const HopfStructure& h, const HopfModule& x, const HopfModule& y, const GradedMap& f);

/// The coinvariant functor on a Hopf module map, p_Y∘f∘i_X.
GradedMap coinvariant_map(const Split& sx, const Split& sy, const GradedMap& f);

struct TensorOverH {
  GradedSpace object;  // N⊗ₕM
  GradedMap lambda;    // N⊗M → N⊗ₕM
  Split coinv;
};
/// n is a right module action N⊗H → N.
TensorOverH tensor_over_h(const HopfStructure& h, const GradedMap& n_action, const HopfModule& m);
/// Coequalizing and epimorphic.
Report check_tensor_over_h(const HopfStructure& h, const GradedMap& n_action, const HopfModule& m, const TensorOverH& t);
/// For f coequalizing μ_r⊗id and id⊗μ_l, the unique g with g∘λ = f.
std::optional<GradedMap> factor_through_lambda(const HopfStructure& h, const GradedMap& n_action, const HopfModule& m,
                                               const TensorOverH& t, const GradedMap& f);

struct CotensorOverH {
  GradedSpace object;  // P⊗ₕM
  GradedMap rho;       // P⊗ₕM → P⊗M
  Split coinv;
};
/// p is a right coaction P → P⊗H.
CotensorOverH cotensor_over_h(const HopfStructure& h, const GradedMap& p_coaction, const HopfModule& m);
Report check_cotensor_over_h(const HopfStructure& h, const GradedMap& p_coaction, const HopfModule& m,
                             const CotensorOverH& c);
/// For g equalizing ν_r⊗id and id⊗ν_l, the unique k with ρ∘k = g.
std::optional<GradedMap> factor_through_rho(const HopfStructure& h, const GradedMap& p_coaction, const HopfModule& m,
                                            const CotensorOverH& c, const GradedMap& g);

/// (μ_r^N⊗μ_l^M)∘(id⊗Ψ_{H,H}⊗id)∘(ν_r^N⊗ν_l^M), which must equal ρ∘λ.
GradedMap phi_composite(const HopfStructure& h, const GradedMap& n_action, const GradedMap& n_coaction,
                        const HopfModule& m);
Report check_phi(const HopfStructure& h, const GradedMap& n_action, const GradedMap& n_coaction, const HopfModule& m);

/// X⊗ₕY with the structure induced by X.
HopfModule hopfmod_tensor(const HopfStructure& h, const HopfModule& x, const HopfModule& y);
/// f⊗_H g = f⊗ₕ(g).
GradedMap hopfmod_tensor(const HopfStructure& h, const GradedMap& f, const HopfModule& y, const HopfModule& y2,
                         const GradedMap& g);
/// X⊗ₕY → Y⊗ₕX, or its inverse Y⊗ₕX → X⊗ₕY.
GradedMap hopfmod_braiding(const HopfStructure& h, const HopfModule& x, const HopfModule& y, bool inverse = false);

/// Two-sided inverse, module and comodule morphism, both hexagons on (x, y, z).
Report check_hopfmod_braiding(const HopfStructure& h, const HopfModule& x, const HopfModule& y, const HopfModule& z);
/// Naturality in both arguments along Hopf module maps f: X → X', g: Y → Y'.
Report check_hopfmod_naturality(const HopfStructure& h, const HopfModule& x, const HopfModule& x2, const GradedMap& f,
                                const HopfModule& y, const HopfModule& y2, const GradedMap& g);

/// The Structure Theorem on a sample of Hopf modules and of plain spaces.
Report verify_structure_theorem(const HopfStructure& h, const std::vector<HopfModule>& modules,
                                const std::vector<GradedSpace>& spaces);

/// Built-in sample: sample_spaces(h, 3) gives one space per dimension
/// 0..max (all degrees zero when the group is trivial, spread otherwise).
std::vector<GradedSpace> sample_spaces(const HopfStructure& h, std::size_t max_dim);

// ---- two-fold Hopf modules ------------------------------------------------

/// X⊗Y for X two-fold and Y a right module: left structure from X,
/// diagonal right action.
TwofoldHopfModule twofold_tensor(const HopfStructure& h, const TwofoldHopfModule& x, const GradedMap& y_action);

struct TwofoldResult {
  Report report;
  Split coinv;
  GradedMap coinv_action;  // ₕX⊗H → ₕX
};
TwofoldResult twofold_ops(const HopfStructure& h, const TwofoldHopfModule& x);

}  // namespace braidhopf

#endif  // BRAIDHOPF_HOPF_MODULES_HPP
