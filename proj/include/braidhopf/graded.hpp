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

#ifndef BRAIDHOPF_GRADED_HPP
#define BRAIDHOPF_GRADED_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidhopf/matrix.hpp"
#include "braidhopf/scalar.hpp"

namespace braidhopf {

/// Element of Z/n1 x ... x Z/nr, stored as a mixed-radix code (first
/// coordinate least significant).
struct Degree {
  std::uint32_t code = 0;
  friend bool operator==(Degree, Degree) = default;
  friend auto operator<=>(Degree, Degree) = default;
};

class Group {
 public:
  Group() : Group(std::vector<std::uint32_t>{}) {}
  explicit Group(std::vector<std::uint32_t> signature);

  const std::vector<std::uint32_t>& signature() const noexcept { return sig_; }
  std::size_t rank() const noexcept { return sig_.size(); }
  std::uint32_t order() const noexcept { return order_; }

  Degree zero() const noexcept { return {}; }
  Degree add(Degree a, Degree b) const { return {add_[a.code * order_ + b.code]}; }
  Degree neg(Degree a) const;
  Degree from_coords(const std::vector<std::int64_t>& c) const;
  std::vector<std::uint32_t> coords(Degree d) const;
  std::string describe(Degree d) const;

  friend bool operator==(const Group& a, const Group& b) { return a.sig_ == b.sig_; }

 private:
  std::vector<std::uint32_t> sig_;
  std::uint32_t order_ = 1;
  std::vector<std::uint32_t> add_;
};

struct Ambient {
  Field field;
  Group group;
  friend bool operator==(const Ambient& a, const Ambient& b) { return a.field == b.field && a.group == b.group; }
};

using AmbientPtr = std::shared_ptr<const Ambient>;
AmbientPtr make_ambient(Field field, Group group);

struct BasisElement {
  std::string label;
  Degree degree;
};

/// Finite-dimensional graded space. A one-dimensional space whose single
/// vector is labelled "1" in degree zero is the tensor unit, so X⊗1 and
/// 1⊗X are X itself.
class GradedSpace {
 public:
  GradedSpace() = default;
  GradedSpace(AmbientPtr ambient, std::vector<BasisElement> basis, std::string name = {});

  static GradedSpace unit(AmbientPtr ambient);
  static GradedSpace zero(AmbientPtr ambient);

  const AmbientPtr& ambient() const { return d_->ambient; }
  const Field& field() const { return d_->ambient->field; }
  const Group& group() const { return d_->ambient->group; }
  std::size_t dim() const { return d_->basis.size(); }
  const BasisElement& operator[](std::size_t i) const { return d_->basis[i]; }
  const std::vector<BasisElement>& basis() const { return d_->basis; }
  Degree degree(std::size_t i) const { return d_->basis[i].degree; }
  const std::string& label(std::size_t i) const { return d_->basis[i].label; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool is_unit() const;
  const std::string& name() const { return d_->name; }
  GradedSpace renamed(std::string name) const;
  std::string describe() const;

  /// Labels, degrees and ambient; the display name is ignored.
  friend bool operator==(const GradedSpace& a, const GradedSpace& b);

 private:
  struct Data {
    AmbientPtr ambient;
    std::vector<BasisElement> basis;
    std::string name;
  };
  std::shared_ptr<const Data> d_;
};

GradedSpace tensor(const GradedSpace& x, const GradedSpace& y);
template <class... Rest>
GradedSpace tensor(const GradedSpace& x, const GradedSpace& y, const Rest&... rest) {
  return tensor(tensor(x, y), rest...);
}

/// Degree-preserving linear map; the matrix is cod.dim() x dom.dim().
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(GradedSpace dom, GradedSpace cod, Matrix m, std::string name = {});

  static GradedMap identity(const GradedSpace& x);
  static GradedMap zero(const GradedSpace& dom, const GradedSpace& cod);

  const GradedSpace& dom() const { return d_->dom; }
  const GradedSpace& cod() const { return d_->cod; }
  const Matrix& matrix() const { return d_->m; }
  const std::string& name() const { return d_->name; }
  const Field& field() const { return d_->dom.field(); }
  Scalar at(std::size_t r, std::size_t c) const { return d_->m.at(r, c); }
  GradedMap renamed(std::string name) const;
  std::string describe() const;

  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator-(const GradedMap& o) const;
  GradedMap scaled(const Scalar& s) const;

  /// Same matrix over spaces with the same degree sequence; labels ignored.
  bool same_constants(const GradedMap& o) const;
  /// Reinterpret the matrix between other spaces with equal degrees.
  GradedMap retyped(const GradedSpace& dom, const GradedSpace& cod) const;

  friend bool operator==(const GradedMap& a, const GradedMap& b);

 private:
  struct Data {
    GradedSpace dom;
    GradedSpace cod;
    Matrix m;
    std::string name;
  };
  std::shared_ptr<const Data> d_;
};

/// g∘f.
GradedMap compose(const GradedMap& g, const GradedMap& f);
template <class... Rest>
GradedMap compose(const GradedMap& g, const GradedMap& f, const Rest&... rest) {
  return compose(g, compose(f, rest...));
}

GradedMap tensor(const GradedMap& f, const GradedMap& g);
template <class... Rest>
GradedMap tensor(const GradedMap& f, const GradedMap& g, const Rest&... rest) {
  return tensor(tensor(f, g), rest...);
}

inline GradedMap id(const GradedSpace& x) { return GradedMap::identity(x); }

/// Field, group and bicharacter; supplies the braiding.
class BraidedContext {
 public:
  /// chi[i][j] = χ(e_i, e_j) on generators; checked for well-definedness.
  BraidedContext(AmbientPtr ambient, std::vector<std::vector<Scalar>> chi);
  static BraidedContext symmetric(AmbientPtr ambient);

  const AmbientPtr& ambient() const { return ambient_; }
  const Field& field() const { return ambient_->field; }
  const Group& group() const { return ambient_->group; }
  const std::vector<std::vector<Scalar>>& generators() const { return gen_; }

  const Scalar& chi(Degree a, Degree b) const { return chi_[a.code * group().order() + b.code]; }
  const Scalar& chi_inv(Degree a, Degree b) const { return chi_inv_[a.code * group().order() + b.code]; }
  bool is_symmetric() const;

  /// Ψ_{X,Y}: X⊗Y → Y⊗X, or with inverse set Ψ⁻¹_{X,Y}: Y⊗X → X⊗Y.
  GradedMap braiding(const GradedSpace& x, const GradedSpace& y, bool inverse = false) const;
  GradedMap psi(const GradedSpace& x, const GradedSpace& y) const { return braiding(x, y, false); }
  GradedMap psi_inv(const GradedSpace& x, const GradedSpace& y) const { return braiding(x, y, true); }

  /// χ̄(a,b) = χ(b,a)⁻¹, so that the mirror Ψ_{X,Y} is Ψ⁻¹_{Y,X} here.
  BraidedContext mirror() const;

  friend bool operator==(const BraidedContext& a, const BraidedContext& b);

 private:
  AmbientPtr ambient_;
  std::vector<std::vector<Scalar>> gen_;
  std::vector<Scalar> chi_;
  std::vector<Scalar> chi_inv_;
};

struct Split {
  GradedSpace object;
  GradedMap i;  // object → X
  GradedMap p;  // X → object
};

/// Canonical splitting of an idempotent: per degree block, the image basis
/// is given by the pivot columns of the reduced row echelon form.
Split split_idempotent(const GradedMap& e, const std::string& name = {});

std::size_t rank(const GradedMap& f);
bool is_epi(const GradedMap& f);
bool is_mono(const GradedMap& f);

/// Canonical solution x of a∘x = b (rows past the pivots set to zero), if
/// one exists.
std::optional<GradedMap> solve_right(const GradedMap& a, const GradedMap& b);
/// x with x∘a = b, if one exists.
std::optional<GradedMap> solve_left(const GradedMap& a, const GradedMap& b);
std::optional<GradedMap> inverse(const GradedMap& f);

/// Identity matrix between two spaces with the same degree sequence.
GradedMap canonical_iso(const GradedSpace& from, const GradedSpace& to);
/// g∘f, bridging f.cod() and g.dom() by canonical_iso when they differ
/// only in labels (ₕ(H⊗ₕY) against ₕY, for instance).
GradedMap compose_relabel(const GradedMap& g, const GradedMap& f);

}  // namespace braidhopf

#endif  // BRAIDHOPF_GRADED_HPP
