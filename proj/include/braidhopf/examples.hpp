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

#ifndef BRAIDHOPF_EXAMPLES_HPP
#define BRAIDHOPF_EXAMPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidhopf/structure.hpp"

namespace braidhopf {

/// Group algebra k[G] in plain (trivially graded, symmetric) vector spaces.
HopfStructure group_algebra(const Field& k, const Group& g);
/// Functions on G with the dual structure.
HopfStructure dual_group_algebra(const Field& k, const Group& g);
/// Sweedler's four-dimensional algebra over Q: basis 1, g, x, gx with
/// g² = 1, x² = 0, xg = -gx, Δx = x⊗1 + g⊗x.
HopfStructure sweedler();

/// k[x]/(xⁿ) with deg x = 1 in Z/n-graded F_p, χ(1,1) = q of order n.
struct BraidedLine {
  Scalar q;
  HopfStructure line;   // in the q-braided context
  HopfStructure group;  // k[Z/n] over F_p, plain vector spaces
  /// The same carrier and constants regarded in plain vector spaces, with
  /// x^j◁g^a = q^{ja} x^j and x^k ↦ x^k⊗g^k; its crossed braiding
  /// reproduces the q-braiding.
  HopfStructure plain;
  CrossedModule crossed;
};
/// Throws Error(precondition) when F_p has no element of order n. A given
/// q replaces the constants only (the braiding keeps the canonical one).
BraidedLine braided_line(std::uint32_t n, std::uint64_t p, std::optional<Scalar> q = std::nullopt);
/// The braided line of the mirror braiding χ̄(a,b) = χ(b,a)⁻¹: constants
/// with q⁻¹, consistent with its own context.
BraidedLine mirror_braided_line(std::uint32_t n, std::uint64_t p);

/// Copy of `base` with entry (row, col) of the named map ("m", "eta",
/// "delta", "eps", "S") shifted by delta.
HopfStructure perturb(const HopfStructure& base, const std::string& which, std::size_t row, std::size_t col,
                      const Scalar& delta);

/// Named examples, e.g. "sweedler", "group_algebra(2)", "group_algebra(2,3;7)"
/// (field after a semicolon, rationals otherwise), "dual_group_algebra(3)",
/// "braided_line(3,7)", "mirror_braided_line(3,7)", "taft(3,7)".
struct Example {
  std::string name;
  HopfStructure hopf;
  std::optional<BraidedLine> line;
};
Example build_example(const std::string& spec);
std::vector<std::string> example_names();

}  // namespace braidhopf

#endif  // BRAIDHOPF_EXAMPLES_HPP
