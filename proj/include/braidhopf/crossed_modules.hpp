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

#ifndef BRAIDHOPF_CROSSED_MODULES_HPP
#define BRAIDHOPF_CROSSED_MODULES_HPP

#include <string>

#include "braidhopf/structure.hpp"

namespace braidhopf {

/// Right module, right comodule, and the braided right-right Yetter-Drinfeld
/// condition
///   (id⊗m)(Ψ_{H,X}⊗id)(id⊗ν_r)(id⊗μ_r)(Ψ_{X,H}⊗id)(id⊗Δ)
///     = (μ_r⊗m)(id⊗Ψ_{H,H}⊗id)(ν_r⊗Δ).
Report check_crossed_module(const HopfStructure& h, const CrossedModule& x);
/// The left-left counterpart, for side_convert outputs.
Report check_left_crossed_module(const HopfStructure& h, const CrossedModule& x);
/// Right module and right comodule morphism.
Report check_crossed_morphism(const HopfStructure& h, const CrossedModule& x, const CrossedModule& y,
                              const GradedMap& f);

/// (id_Y⊗μ_r^X)(Ψ_{X,Y}⊗id)(id_X⊗ν_r^Y): X⊗Y → Y⊗X, or its inverse
/// Y⊗X → X⊗Y built from S⁻¹ and inverse braidings. The inverse needs an
/// invertible antipode and throws Error(precondition) otherwise.
GradedMap yd_braiding(const HopfStructure& h, const CrossedModule& x, const CrossedModule& y, bool inverse = false);

/// X⊗Y with diagonal right action and coaction.
CrossedModule yd_tensor(const HopfStructure& h, const CrossedModule& x, const CrossedModule& y);
/// (1, ε, η).
CrossedModule unit_crossed_module(const HopfStructure& h);

struct AdjointCrossed {
  CrossedModule ad;    // (H, ad◁, Δ)
  CrossedModule coad;  // (H, m, coad)
};
AdjointCrossed adjoint_crossed_module(const HopfStructure& h);

/// "X^S", "^SX" turn a right crossed module into a left one; "Y_S", "_SY"
/// turn a left one into a right one.
CrossedModule side_convert(const HopfStructure& h, const CrossedModule& x, const std::string& variant);
/// Both conversion round trips X^S → (X^S)_S and ^SX → _S(^SX), checked to be the identity.
Report check_side_conversions(const HopfStructure& h, const CrossedModule& x);

/// Inverse on both sides (when S is invertible), unit law and both hexagons on (x, y, z).
Report check_yd_braiding(const HopfStructure& h, const CrossedModule& x, const CrossedModule& y,
                         const CrossedModule& z);
/// Naturality along crossed module maps f: X → X', g: Y → Y'.
Report check_yd_naturality(const HopfStructure& h, const CrossedModule& x, const CrossedModule& x2, const GradedMap& f,
                           const CrossedModule& y, const CrossedModule& y2, const GradedMap& g);
/// (Ψ⊗id)(id⊗Ψ)(Ψ⊗id) = (id⊗Ψ)(Ψ⊗id)(id⊗Ψ) for Ψ = Ψᴰ_{X,X}.
Report check_yang_baxter(const HopfStructure& h, const CrossedModule& x);

}  // namespace braidhopf

#endif  // BRAIDHOPF_CROSSED_MODULES_HPP
