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

#ifndef BRAIDHOPF_STRUCTURE_HPP
#define BRAIDHOPF_STRUCTURE_HPP

#include <memory>
#include <optional>
#include <string>

#include "braidhopf/graded.hpp"
#include "braidhopf/report.hpp"

namespace braidhopf {

using ContextPtr = std::shared_ptr<const BraidedContext>;

enum class Level { algebra, coalgebra, bialgebra, hopf };
const char* to_string(Level l);
bool has_algebra(Level l);
bool has_coalgebra(Level l);

/// (B, m, η, Δ, ε, S) in a braided context. Maps not required by the
/// level may be absent.
struct HopfStructure {
  std::string name;
  ContextPtr ctx;
  GradedSpace carrier;
  Level level = Level::hopf;
  std::optional<GradedMap> m, eta, delta, eps, s;

  const GradedMap& mul() const;
  const GradedMap& unit() const;
  const GradedMap& comul() const;
  const GradedMap& counit() const;
  const GradedMap& antipode() const;
  GradedSpace one() const { return GradedSpace::unit(carrier.ambient()); }
  GradedMap id() const { return GradedMap::identity(carrier); }
  GradedMap psi_hh() const { return ctx->psi(carrier, carrier); }
};

/// Throws Error(shape) unless every present map has the right type.
void check_shapes(const HopfStructure& h);

/// The axioms of the declared level, each a separate entry.
Report check_structure(const HopfStructure& h);
/// Same, with the braiding on B⊗B supplied (e.g. a Yetter–Drinfeld one).
Report check_structure(const HopfStructure& h, const GradedMap& psi_hh);

/// S∘m = m∘Ψ∘(S⊗S) and Δ∘S = (S⊗S)∘Ψ∘Δ.
Report check_antipode_laws(const HopfStructure& h);
Report check_antipode_laws(const HopfStructure& h, const GradedMap& psi_hh);

/// Convolution inverse of the identity, by exact linear solve.
std::optional<GradedMap> solve_antipode(const HopfStructure& b);
std::optional<GradedMap> antipode_inverse(const HopfStructure& h);

/// Algebra by the braided product rule, coalgebra dually; Hopf when both
/// factors are and the product has an antipode.
HopfStructure tensor_product_structure(const HopfStructure& u, const HopfStructure& v);

struct Opposites {
  HopfStructure op;   // (m∘Ψ⁻¹, Δ, S⁻¹)
  HopfStructure cop;  // (m, Ψ⁻¹∘Δ, S⁻¹)
  ContextPtr mirror;
};
Opposites mirror_opposites(const HopfStructure& h);

// ---- modules ------------------------------------------------------------

/// An object together with whichever of the four one-sided (co)actions it
/// carries. Hopf modules, crossed modules and Hopf bimodules are all
/// records of this kind; validators decide which fields must be present.
struct StructuredObject {
  std::string name;
  GradedSpace carrier;
  std::optional<GradedMap> mu_l, mu_r, nu_l, nu_r;

  const GradedMap& left_action() const;
  const GradedMap& right_action() const;
  const GradedMap& left_coaction() const;
  const GradedMap& right_coaction() const;
  GradedMap id() const { return GradedMap::identity(carrier); }
};

using HopfModule = StructuredObject;
using TwofoldHopfModule = StructuredObject;
using CrossedModule = StructuredObject;
using HopfBimodule = StructuredObject;

Report check_left_module(const HopfStructure& h, const GradedMap& mu);
Report check_right_module(const HopfStructure& h, const GradedMap& mu);
Report check_left_comodule(const HopfStructure& h, const GradedMap& nu);
Report check_right_comodule(const HopfStructure& h, const GradedMap& nu);
Report check_bimodule(const HopfStructure& h, const GradedMap& mu_l, const GradedMap& mu_r);
Report check_bicomodule(const HopfStructure& h, const GradedMap& nu_l, const GradedMap& nu_r);

/// H with m on both sides and Δ on both sides.
StructuredObject regular(const HopfStructure& h);
/// The unit object with actions by ε and coactions by η.
StructuredObject trivial_object(const HopfStructure& h);

// Diagonal structures on U⊗V.
GradedMap diagonal_right_action(const HopfStructure& h, const GradedMap& mu_u, const GradedMap& mu_v);
GradedMap diagonal_left_action(const HopfStructure& h, const GradedMap& mu_u, const GradedMap& mu_v);
GradedMap diagonal_right_coaction(const HopfStructure& h, const GradedMap& nu_u, const GradedMap& nu_v);
GradedMap diagonal_left_coaction(const HopfStructure& h, const GradedMap& nu_u, const GradedMap& nu_v);

/// S(h₁)·x·h₂ for a bimodule; x is given by its two actions.
GradedMap adjoint_right(const HopfStructure& h, const GradedMap& mu_l, const GradedMap& mu_r);
/// h₁·x·S(h₂).
GradedMap adjoint_left(const HopfStructure& h, const GradedMap& mu_l, const GradedMap& mu_r);
/// x₀ ⊗ S(x₋₁)x₁, the coaction dual to adjoint_right.
GradedMap coadjoint_right(const HopfStructure& h, const GradedMap& nu_l, const GradedMap& nu_r);
/// x₋₁S(x₁) ⊗ x₀.
GradedMap coadjoint_left(const HopfStructure& h, const GradedMap& nu_l, const GradedMap& nu_r);

/// f∘m_H = m_A∘(f⊗f) and f∘η_H = η_A.
Report check_algebra_morphism(const HopfStructure& from, const HopfStructure& to, const GradedMap& f);
Report check_coalgebra_morphism(const HopfStructure& from, const HopfStructure& to, const GradedMap& f);

struct Pullback {
  StructuredObject bimodule;  // carrier A, μ_l = m_A(f⊗id), μ_r = m_A(id⊗f)
  GradedMap ad_f;             // right adjoint action of H on A through f
};
/// Throws Error(precondition) with the residual if f is not an algebra map.
Pullback pullback_bimodule(const HopfStructure& a, const HopfStructure& h, const GradedMap& f);

}  // namespace braidhopf

#endif  // BRAIDHOPF_STRUCTURE_HPP
