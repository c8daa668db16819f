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

#ifndef BRAIDHOPF_HOPF_BIMODULES_HPP
#define BRAIDHOPF_HOPF_BIMODULES_HPP

#include <vector>

#include "braidhopf/crossed_modules.hpp"
#include "braidhopf/hopf_modules.hpp"

namespace braidhopf {

/// Sub-reports left_module, right_module (with the bimodule law),
/// left_comodule, right_comodule (with the bicomodule law) and the four
/// compatibilities ll, lr, rl, rr.
Report check_hopf_bimodule(const HopfStructure& h, const HopfBimodule& x);
/// Left and right module and comodule morphism.
Report check_hbm_morphism(const HopfStructure& h, const HopfBimodule& x, const HopfBimodule& y, const GradedMap& f);

/// X⊗Y with the left structure of X and diagonal right structure.
HopfBimodule hbm_tensor_with_yd(const HopfStructure& h, const HopfBimodule& x, const CrossedModule& y);
/// H⋉Y.
HopfBimodule cross_product(const HopfStructure& h, const CrossedModule& y);

struct AdjointVariants {
  CrossedModule x_ad;    // (X, ad◁, ν_r)
  CrossedModule x_coad;  // (X, μ_r, coad)
  Report report;
};
AdjointVariants adjoint_variants(const HopfStructure& h, const HopfBimodule& x);

struct CoinvariantCrossed {
  CrossedModule y;  // on ₕX
  Split coinv;
  Report report;    // crossed check on y, and p: X^ad → ₕX, i: ₕX → X_ad morphisms
};
CoinvariantCrossed to_crossed_module(const HopfStructure& h, const HopfBimodule& x);

/// X⊗ₕY with the right structure diagonal in X and the crossed module ₕY.
HopfBimodule hbm_tensor_over_h(const HopfStructure& h, const HopfBimodule& x, const HopfBimodule& y);
/// (μ_l^Y ⊗ ₓp∘μ_r^X)(id⊗Ψ_{X,Y}⊗id)(ν_l^X ⊗ ν_r^Y∘ᵧi): X⊗ₕY → Y⊗ₕX,
/// or its inverse (needs an invertible antipode).
GradedMap hbm_braiding(const HopfStructure& h, const HopfBimodule& x, const HopfBimodule& y, bool inverse = false);
/// The same braiding assembled from Ψᴰ on coinvariants, transported along
/// the natural isomorphisms ξ, ₓμ and ₓν.
GradedMap hbm_braiding_via_yd(const HopfStructure& h, const HopfBimodule& x, const HopfBimodule& y);
/// Bimodule morphism, invertibility, both hexagons, unit laws and the
/// comparison with hbm_braiding_via_yd.
Report check_hbm_braiding(const HopfStructure& h, const HopfBimodule& x, const HopfBimodule& y, const HopfBimodule& z);

/// ₕ(H⋉Y) = Y, H⋉ₕX ≅ X through ₓμ and ₓν, ξ a bimodule isomorphism, and
/// the braidings matched under the equivalence.
Report verify_equivalence(const HopfStructure& h, const std::vector<HopfBimodule>& bimodules,
                          const std::vector<CrossedModule>& crossed);

struct Schauenburg {
  GradedMap psi_prime;  // X⊗Y → Y⊗X
  Report report;
};
/// (μ_l^Y⊗μ_r^X)(id⊗Ψ_{X,Y}(ₓΠ⊗Π_Y)⊗id)(ν_l^X⊗ν_r^Y), and its factorization
/// λ_{Y,X}∘Ψ′ = ᴴΨ∘λ_{X,Y} over the epimorphism λ.
Schauenburg schauenburg_braiding(const HopfStructure& h, const HopfBimodule& x, const HopfBimodule& y);

/// Right-sided idempotent μ_r(id⊗S)ν_r.
GradedMap right_pi(const HopfStructure& h, const HopfBimodule& x);

}  // namespace braidhopf

#endif  // BRAIDHOPF_HOPF_BIMODULES_HPP
