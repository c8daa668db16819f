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

#ifndef BRAIDHOPF_PROJECTIONS_HPP
#define BRAIDHOPF_PROJECTIONS_HPP

#include <optional>
#include <vector>

#include "braidhopf/hopf_bimodules.hpp"

namespace braidhopf {

// ---- relative antipodes ---------------------------------------------------

/// M_X∘(S⊗id⊗S)∘N_X with M_X = μ_l(id⊗μ_r) and N_X = (id⊗ν_r)ν_l.
GradedMap relative_antipode(const HopfStructure& h, const HopfBimodule& x);
/// M_X∘(S⁻¹⊗Ψ⁻¹_{X,H})∘(Ψ⁻¹_{H,H}⊗id)∘(S⁻¹⊗Ψ⁻¹_{H,X})∘N_X; throws
/// Error(precondition) if S is not invertible.
GradedMap relative_antipode_inverse(const HopfStructure& h, const HopfBimodule& x);

/// Right coinvariants X_H, the splitting of Π_X = μ_r(id⊗S)ν_r, as a left
/// crossed module: μ_l restricted, coaction from the left coadjoint one.
struct RightCoinvariants {
  Split split;
  CrossedModule left;
};
RightCoinvariants right_coinvariants(const HopfStructure& h, const HopfBimodule& x);

/// Polarized anti-(co)multiplicativity, the Π interchange identities, the
/// side-converted (co)module morphisms ₓS and S_X, the inverse formula, and
/// the braided identity relating S_{X⊗_H Y/H} to S_{X/H}⊗S_{Y/H} together
/// with its dual.
Report check_relative_antipode_identities(const HopfStructure& h, const HopfBimodule& x, const HopfBimodule& y);

// ---- bialgebra projections -------------------------------------------------

/// A bialgebra (possibly Hopf) in the crossed modules over h: `alg` holds
/// the constants on module.carrier, in h's context; its coalgebra is
/// multiplicative with respect to the crossed braiding.
struct CrossedBialgebra {
  HopfStructure h;
  CrossedModule module;
  HopfStructure alg;
};
/// Crossed module, algebra and coalgebra maps as crossed module maps, and
/// the bialgebra axioms with Ψᴰ_{X,X}.
Report check_crossed_bialgebra(const CrossedBialgebra& x);

struct BialgebraProjection {
  HopfStructure h;
  HopfStructure b;
  GradedMap inj;   // H → B
  GradedMap proj;  // B → H
};
/// inj and proj bialgebra maps, proj∘inj = id_H.
Report check_projection(const BialgebraProjection& p);
/// f: B → D with f∘inj_B = inj_D, proj_D∘f = proj_B, f a bialgebra map.
Report check_projection_morphism(const BialgebraProjection& p, const BialgebraProjection& q, const GradedMap& f);

/// μ_l = m(inj⊗id), μ_r = m(id⊗inj), ν_l = (proj⊗id)Δ, ν_r = (id⊗proj)Δ.
/// Throws Error(precondition) with the failing checks if p is not a projection.
HopfBimodule projection_to_hbm(const BialgebraProjection& p);

/// A bialgebra in Hopf bimodules, tensor ⊗_H.
struct HbmBialgebra {
  HopfStructure h;
  HopfBimodule under;
  GradedMap m;      // B⊗ₕB → B
  GradedMap eta;    // H → B
  GradedMap delta;  // B → B⊗ₕB
  GradedMap eps;    // B → H
  std::optional<GradedMap> s;
};
/// All structure maps Hopf bimodule maps, (co)associativity and (co)unit
/// laws over ⊗_H, multiplicativity through the Hopf bimodule braiding, the
/// antipode when present, and the auxiliary identity on Δ_B∘ᵦi.
Report check_hbm_bialgebra(const HbmBialgebra& b);
/// f ∘ m = m' ∘ (f ⊗_H f), etc.
Report check_hbm_bialgebra_morphism(const HbmBialgebra& a, const HbmBialgebra& b, const GradedMap& f);

/// m̲ = m_B(id⊗i), Δ̲ = (id⊗p)Δ_B, η̲ = inj, ε̲ = proj, S̲ = M_B(id⊗S_B⊗id)N_B.
HbmBialgebra project_F(const BialgebraProjection& p);
/// m_B = m̲∘λ, η_B = η̲∘η_H, Δ_B = ρ∘Δ̲, ε_B = ε_H∘ε̲, S_B = S̲∘S_{B/H}.
/// The report asserts S̲∘S_{B/H} = S_{B/H}∘S̲ and that the result is a projection.
struct Recovered {
  BialgebraProjection projection;
  Report report;
};
Recovered recover_G(const HbmBialgebra& b);

/// G∘F and F∘G are the identity on structure constants, and both are the
/// identity on the morphisms supplied (pairs of sample indices with a map).
struct ProjectionMorphism {
  std::size_t from, to;
  GradedMap f;
};
Report verify_projection_theorem(const std::vector<BialgebraProjection>& samples,
                                 const std::vector<ProjectionMorphism>& morphisms = {});

// ---- smash (co)products and bosonization ----------------------------------

/// m_A∘(μ⊗μ)∘(diagonal) = μ∘(m_A⊗id) and μ∘(η_A⊗id) = η_A∘ε.
Report check_module_algebra(const HopfStructure& h, const HopfStructure& a, const GradedMap& mu_r);
/// The dual conditions for a comodule coalgebra.
Report check_comodule_coalgebra(const HopfStructure& h, const HopfStructure& c, const GradedMap& nu_r);

struct SmashProduct {
  HopfStructure alg;  // algebra level, carrier H⊗A
  GradedMap i;        // A → H⊗A
  GradedMap j;        // H → H⊗A
};
/// (h⊗a)(g⊗b) = h·g₁ ⊗ (a◁g₂)·b. Throws Error(precondition) unless a is a
/// module algebra.
SmashProduct smash_product(const HopfStructure& h, const HopfStructure& a, const GradedMap& mu_r);
/// Δ(h⊗c) = h₁ ⊗ c₁₍₀₎ ⊗ h₂c₁₍₁₎ ⊗ c₂, coalgebra level.
struct SmashCoproduct {
  HopfStructure coalg;
  GradedMap k;  // H⊗C → H, id⊗ε_C
  GradedMap l;  // H⊗C → C, ε_H⊗id
};
SmashCoproduct smash_coproduct(const HopfStructure& h, const HopfStructure& c, const GradedMap& nu_r);
/// i, j algebra maps, i a module algebra map into the adjoint action
/// through j, and g⋊f = m_U(g⊗f) restricts to f and g for the given data.
Report check_smash_universal(const HopfStructure& h, const HopfStructure& a, const GradedMap& mu_r,
                             const SmashProduct& s, const HopfStructure& u, const GradedMap& g, const GradedMap& f);

struct Bosonization {
  HopfStructure hopf;  // H×X on H⊗X
  BialgebraProjection projection;
};
/// H×X from smash product and coproduct. The antipode, when H and X both
/// have one, is found by exact solve and left empty otherwise.
Bosonization bosonize(const CrossedBialgebra& x);
/// Bialgebra axioms on H×X; if they hold, the relations on ε_X, η_X and the
/// projection (H, H×X, id⊗η_X, id⊗ε_X).
Report check_admissible(const CrossedBialgebra& x);

/// ₕF(B): the crossed module bialgebra carried by the coinvariants of a projection.
CrossedBialgebra coinvariant_bialgebra(const BialgebraProjection& p);
/// For each sample: admissible, ₕF(H×X) = X verbatim, H×ₕF(H×X) = H×X and
/// the factorization of projection morphisms through id⊗f.
Report verify_bosonization(const std::vector<CrossedBialgebra>& samples);

}  // namespace braidhopf

#endif  // BRAIDHOPF_PROJECTIONS_HPP
