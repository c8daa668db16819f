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

// Textual morphism terms.
//
//   term    := tensor ('o' tensor)*          composition, outermost first
//   tensor  := primary ('x' primary)*
//   primary := '(' term ')' | NAME | 'id' '(' obj ')'
//            | 'braid' '(' obj ',' obj ')' | 'braid_inv' '(' obj ',' obj ')'
//   obj     := oatom ('x' oatom)*
//   oatom   := NAME | '1' | '(' obj ')'
//
// NAME is a dotted identifier. 'o' and 'x' are reserved. Both products are
// flattened, so the AST has no nested compose-in-compose or
// tensor-in-tensor nodes.

#ifndef BRAIDHOPF_DSL_HPP
#define BRAIDHOPF_DSL_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "braidhopf/report.hpp"
#include "braidhopf/structure.hpp"

namespace braidhopf {

/// Flattened tensor product of named objects; empty is the unit.
struct ObjExpr {
  std::vector<std::string> factors;
  friend bool operator==(const ObjExpr&, const ObjExpr&) = default;
};

struct MorTerm {
  enum class Kind { name, id, braid, braid_inv, compose, tensor };
  Kind kind = Kind::name;
  std::string name;
  std::vector<ObjExpr> objects;   // id: one, braid: two
  std::vector<MorTerm> children;  // compose and tensor
  std::size_t line = 0, col = 0;  // source position, ignored by ==

  static MorTerm generator(std::string name);
  static MorTerm identity(ObjExpr x);
  static MorTerm braid(ObjExpr x, ObjExpr y, bool inverse = false);
  static MorTerm compose(std::vector<MorTerm> parts);
  static MorTerm tensor(std::vector<MorTerm> parts);

  friend bool operator==(const MorTerm& a, const MorTerm& b);
};

/// Throws Error(parse) with "line L, column C" in the message.
MorTerm parse_term(std::string_view src);
ObjExpr parse_object(std::string_view src);
std::string print(const MorTerm& t);
std::string print(const ObjExpr& x);

/// Named objects and maps in one braided context. A name resolves exactly
/// or, failing that, as the unique entry ending in ".name".
class Environment {
 public:
  explicit Environment(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  void add_object(const std::string& name, const GradedSpace& x);
  void add_map(const std::string& name, const GradedMap& f);
  /// Object `ns` plus ns.m, ns.eta, ns.delta, ns.eps, ns.S where present.
  void bind_structure(const std::string& ns, const HopfStructure& h);
  /// Object `ns` plus ns.act_l/mu_l, ns.act_r/mu_r, ns.coact_l/nu_l,
  /// ns.coact_r/nu_r where present.
  void bind_object(const std::string& ns, const StructuredObject& x);

  const GradedSpace& object(const std::string& name) const;
  const GradedMap& map(const std::string& name) const;
  const std::map<std::string, GradedSpace>& objects() const { return objects_; }
  const std::map<std::string, GradedMap>& maps() const { return maps_; }

 private:
  ContextPtr ctx_;
  std::map<std::string, GradedSpace> objects_;
  std::map<std::string, GradedMap> maps_;
};

GradedSpace evaluate(const ObjExpr& x, const Environment& env);
/// Composition across spaces with equal degrees but different labels is
/// allowed; a degree mismatch throws Error(composition) naming the subterm.
GradedMap evaluate(const MorTerm& t, const Environment& env);

/// One check named `name`: pass iff both sides evaluate to the same matrix
/// between spaces of equal degrees. Evaluation errors become an error entry.
Report assert_equal(const std::string& name, const MorTerm& lhs, const MorTerm& rhs, const Environment& env);
Report assert_equal(const std::string& name, std::string_view lhs, std::string_view rhs, const Environment& env);

}  // namespace braidhopf

#endif  // BRAIDHOPF_DSL_HPP
