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

#include "braidhopf/graded.hpp"

#include <algorithm>
#include <unordered_set>

namespace braidhopf {

// ---- Group ---------------------------------------------------------------

Group::Group(std::vector<std::uint32_t> signature) : sig_(std::move(signature)) {
  std::uint64_t order = 1;
  for (std::uint32_t n : sig_) {
    if (n == 0) throw Error(ErrorKind::precondition, "group signature entries must be positive");
    order *= n;
    if (order > 4096) throw Error(ErrorKind::precondition, "grading group too large (order > 4096)");
  }
  order_ = static_cast<std::uint32_t>(order);
  add_.resize(static_cast<std::size_t>(order_) * order_);
  for (std::uint32_t a = 0; a < order_; ++a) {
    auto ca = coords({a});
    for (std::uint32_t b = 0; b < order_; ++b) {
      auto cb = coords({b});
      std::vector<std::int64_t> s(ca.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = ca[i] + cb[i];
      add_[a * order_ + b] = from_coords(s).code;
    }
  }
}

Degree Group::neg(Degree a) const {
  auto c = coords(a);
  std::vector<std::int64_t> s(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) s[i] = -static_cast<std::int64_t>(c[i]);
  return from_coords(s);
}

Degree Group::from_coords(const std::vector<std::int64_t>& c) const {
  if (c.size() != sig_.size()) {
    throw Error(ErrorKind::shape, "degree has " + std::to_string(c.size()) + " coordinates, group rank is " +
                                      std::to_string(sig_.size()));
  }
  std::uint32_t code = 0, radix = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t n = sig_[i];
    std::int64_t r = ((c[i] % n) + n) % n;
    code += static_cast<std::uint32_t>(r) * radix;
    radix *= sig_[i];
  }
  return {code};
}

std::vector<std::uint32_t> Group::coords(Degree d) const {
  std::vector<std::uint32_t> c(sig_.size());
  std::uint32_t v = d.code;
  for (std::size_t i = 0; i < sig_.size(); ++i) {
    c[i] = v % sig_[i];
    v /= sig_[i];
  }
  return c;
}

std::string Group::describe(Degree d) const {
  auto c = coords(d);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

AmbientPtr make_ambient(Field field, Group group) {
  return std::make_shared<const Ambient>(Ambient{field, std::move(group)});
}

// ---- GradedSpace ---------------------------------------------------------

GradedSpace::GradedSpace(AmbientPtr ambient, std::vector<BasisElement> basis, std::string name) {
  if (!ambient) throw Error(ErrorKind::precondition, "graded space without ambient");
  std::unordered_set<std::string> seen;
  for (const auto& b : basis) {
    if (b.degree.code >= ambient->group.order()) throw Error(ErrorKind::degree, "basis degree out of range");
    if (!seen.insert(b.label).second) {
      throw Error(ErrorKind::precondition, "duplicate basis label '" + b.label + "'" +
                                               (name.empty() ? "" : " in space " + name));
    }
  }
  d_ = std::make_shared<const Data>(Data{std::move(ambient), std::move(basis), std::move(name)});
}

GradedSpace GradedSpace::unit(AmbientPtr ambient) {
  return GradedSpace(std::move(ambient), {{"1", Degree{}}}, "1");
}

GradedSpace GradedSpace::zero(AmbientPtr ambient) { return GradedSpace(std::move(ambient), {}, "0"); }

std::optional<std::size_t> GradedSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (d_->basis[i].label == label) return i;
  }
  return std::nullopt;
}

bool GradedSpace::is_unit() const {
  return d_ && d_->basis.size() == 1 && d_->basis[0].degree == Degree{} && d_->basis[0].label == "1";
}

GradedSpace GradedSpace::renamed(std::string name) const {
  GradedSpace s;
  s.d_ = std::make_shared<const Data>(Data{d_->ambient, d_->basis, std::move(name)});
  return s;
}

std::string GradedSpace::describe() const {
  if (!d_) return "<null space>";
  if (!d_->name.empty()) return d_->name + "[" + std::to_string(dim()) + "]";
  return "<space dim " + std::to_string(dim()) + ">";
}

bool operator==(const GradedSpace& a, const GradedSpace& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  if (!(*a.d_->ambient == *b.d_->ambient) || a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.d_->basis[i].degree != b.d_->basis[i].degree || a.d_->basis[i].label != b.d_->basis[i].label) return false;
  }
  return true;
}

GradedSpace tensor(const GradedSpace& x, const GradedSpace& y) {
  if (!(*x.ambient() == *y.ambient())) throw Error(ErrorKind::field, "tensor product across ambients");
  if (y.is_unit()) return x;
  if (x.is_unit()) return y;
  std::vector<BasisElement> basis;
  basis.reserve(x.dim() * y.dim());
  const Group& g = x.group();
  for (const auto& a : x.basis()) {
    for (const auto& b : y.basis()) basis.push_back({a.label + "*" + b.label, g.add(a.degree, b.degree)});
  }
  std::string name;
  if (!x.name().empty() && !y.name().empty()) name = x.name() + "⊗" + y.name();
  return GradedSpace(x.ambient(), std::move(basis), std::move(name));
}

// ---- GradedMap -----------------------------------------------------------

namespace {

std::string short_name(const GradedMap& f) { return f.name().empty() ? std::string("<map>") : f.name(); }

std::string join_name(const std::string& a, const char* op, const std::string& b) {
  if (a.empty() || b.empty()) return {};
  std::string s = a + op + b;
  if (s.size() > 160) return {};
  return s;
}

}  // namespace

GradedMap::GradedMap(GradedSpace dom, GradedSpace cod, Matrix m, std::string name) {
  if (!(*dom.ambient() == *cod.ambient())) throw Error(ErrorKind::field, "map between different ambients");
  if (!(m.field() == dom.field())) throw Error(ErrorKind::field, "matrix field differs from space field");
  if (m.rows() != cod.dim() || m.cols() != dom.dim()) {
    throw Error(ErrorKind::shape, "map " + (name.empty() ? std::string("<map>") : name) + ": matrix is " +
                                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                                      std::to_string(cod.dim()) + "x" + std::to_string(dom.dim()));
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const Entry& e : m.column(c)) {
      if (cod.degree(e.row) != dom.degree(c)) {
        throw Error(ErrorKind::degree, "map " + (name.empty() ? std::string("<map>") : name) + " sends " +
                                           dom.label(c) + " (degree " + dom.group().describe(dom.degree(c)) +
                                           ") to " + cod.label(e.row) + " (degree " +
                                           cod.group().describe(cod.degree(e.row)) + ")");
      }
    }
  }
  d_ = std::make_shared<const Data>(Data{std::move(dom), std::move(cod), std::move(m), std::move(name)});
}

GradedMap GradedMap::identity(const GradedSpace& x) {
  return GradedMap(x, x, Matrix::identity(x.field(), x.dim()), x.name().empty() ? "" : "id(" + x.name() + ")");
}

GradedMap GradedMap::zero(const GradedSpace& dom, const GradedSpace& cod) {
  return GradedMap(dom, cod, Matrix(dom.field(), cod.dim(), dom.dim()), "0");
}

GradedMap GradedMap::renamed(std::string name) const {
  GradedMap f;
  f.d_ = std::make_shared<const Data>(Data{d_->dom, d_->cod, d_->m, std::move(name)});
  return f;
}

std::string GradedMap::describe() const {
  return short_name(*this) + ": " + dom().describe() + " -> " + cod().describe();
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
  if (!(dom() == o.dom()) || !(cod() == o.cod())) throw Error(ErrorKind::shape, "sum of maps with different types");
  return GradedMap(dom(), cod(), matrix() + o.matrix());
}

GradedMap GradedMap::operator-(const GradedMap& o) const {
  if (!(dom() == o.dom()) || !(cod() == o.cod())) {
    throw Error(ErrorKind::shape, "difference of maps with different types: " + describe() + " vs " + o.describe());
  }
  return GradedMap(dom(), cod(), matrix() - o.matrix());
}

GradedMap GradedMap::scaled(const Scalar& s) const { return GradedMap(dom(), cod(), matrix().scaled(s)); }

namespace {

bool same_degrees(const GradedSpace& a, const GradedSpace& b) {
  if (!(*a.ambient() == *b.ambient()) || a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.degree(i) != b.degree(i)) return false;
  }
  return true;
}

}  // namespace

bool GradedMap::same_constants(const GradedMap& o) const {
  return same_degrees(dom(), o.dom()) && same_degrees(cod(), o.cod()) && matrix() == o.matrix();
}

GradedMap GradedMap::retyped(const GradedSpace& dom, const GradedSpace& cod) const {
  if (!same_degrees(dom, this->dom()) || !same_degrees(cod, this->cod())) {
    throw Error(ErrorKind::degree, "retyping " + describe() + " onto spaces with different degrees");
  }
  return GradedMap(dom, cod, matrix(), name());
}

bool operator==(const GradedMap& a, const GradedMap& b) {
  return a.dom() == b.dom() && a.cod() == b.cod() && a.matrix() == b.matrix();
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (!(f.cod() == g.dom())) {
    throw Error(ErrorKind::composition, "cannot compose " + g.describe() + " after " + f.describe());
  }
  return GradedMap(f.dom(), g.cod(), g.matrix() * f.matrix(), join_name(g.name(), " o ", f.name()));
}

GradedMap tensor(const GradedMap& f, const GradedMap& g) {
  return GradedMap(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()), Matrix::kron(f.matrix(), g.matrix()),
                   join_name(f.name(), " x ", g.name()));
}

// ---- BraidedContext ------------------------------------------------------

BraidedContext::BraidedContext(AmbientPtr ambient, std::vector<std::vector<Scalar>> chi)
    : ambient_(std::move(ambient)), gen_(std::move(chi)) {
  const Group& g = group();
  const Field& k = field();
  std::size_t r = g.rank();
  if (gen_.size() != r) throw Error(ErrorKind::shape, "bicharacter table must be " + std::to_string(r) + "x" + std::to_string(r));
  for (std::size_t i = 0; i < r; ++i) {
    if (gen_[i].size() != r) throw Error(ErrorKind::shape, "bicharacter table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < r; ++j) {
      const Scalar& c = gen_[i][j];
      if (!(c.field() == k)) throw Error(ErrorKind::field, "bicharacter entry in the wrong field");
      if (c.is_zero()) throw Error(ErrorKind::precondition, "bicharacter entry chi[" + std::to_string(i) + "][" + std::to_string(j) + "] is zero");
      for (std::size_t side : {i, j}) {
        if (!c.pow(g.signature()[side]).is_one()) {
          throw Error(ErrorKind::precondition,
                      "bicharacter not well defined: chi[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                          c.to_string() + " has chi^" + std::to_string(g.signature()[side]) + " != 1");
        }
      }
    }
  }
  std::uint32_t n = g.order();
  chi_.assign(static_cast<std::size_t>(n) * n, k.one());
  chi_inv_.assign(static_cast<std::size_t>(n) * n, k.one());
  for (std::uint32_t a = 0; a < n; ++a) {
    auto ca = g.coords({a});
    for (std::uint32_t b = 0; b < n; ++b) {
      auto cb = g.coords({b});
      Scalar v = k.one();
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          std::int64_t e = static_cast<std::int64_t>(ca[i]) * cb[j];
          if (e) v *= gen_[i][j].pow(e);
        }
      }
      chi_[a * n + b] = v;
      chi_inv_[a * n + b] = v.inverse();
    }
  }
}

BraidedContext BraidedContext::symmetric(AmbientPtr ambient) {
  std::size_t r = ambient->group.rank();
  std::vector<std::vector<Scalar>> t(r, std::vector<Scalar>(r, ambient->field.one()));
  return BraidedContext(std::move(ambient), std::move(t));
}

bool BraidedContext::is_symmetric() const {
  std::uint32_t n = group().order();
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (!((chi({a}, {b}) * chi({b}, {a})).is_one())) return false;
    }
  }
  return true;
}

GradedMap BraidedContext::braiding(const GradedSpace& x, const GradedSpace& y, bool inverse) const {
  if (!(*x.ambient() == *ambient_) || !(*y.ambient() == *ambient_)) {
    throw Error(ErrorKind::field, "braiding of spaces outside the context");
  }
  GradedSpace xy = tensor(x, y), yx = tensor(y, x);
  std::size_t nx = x.dim(), ny = y.dim();
  Matrix m(field(), nx * ny, nx * ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      if (inverse) {
        m.set(i * ny + j, j * nx + i, chi_inv(x.degree(i), y.degree(j)));
      } else {
        m.set(j * nx + i, i * ny + j, chi(x.degree(i), y.degree(j)));
      }
    }
  }
  std::string name;
  if (!x.name().empty() && !y.name().empty()) name = (inverse ? "braid_inv(" : "braid(") + x.name() + "," + y.name() + ")";
  if (inverse) return GradedMap(yx, xy, std::move(m), name);
  return GradedMap(xy, yx, std::move(m), name);
}

BraidedContext BraidedContext::mirror() const {
  std::size_t r = gen_.size();
  std::vector<std::vector<Scalar>> t(r, std::vector<Scalar>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) t[i][j] = gen_[j][i].inverse();
  }
  return BraidedContext(ambient_, std::move(t));
}

bool operator==(const BraidedContext& a, const BraidedContext& b) {
  return *a.ambient_ == *b.ambient_ && a.chi_ == b.chi_;
}

// ---- splitting and solving -----------------------------------------------

namespace {

std::vector<std::vector<std::size_t>> blocks(const GradedSpace& x) {
  std::vector<std::vector<std::size_t>> b(x.group().order());
  for (std::size_t i = 0; i < x.dim(); ++i) b[x.degree(i).code].push_back(i);
  return b;
}

DenseMatrix dense_block(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                        std::size_t extra_cols = 0) {
  DenseMatrix d(m.field(), rows.size(), cols.size() + extra_cols);
  std::vector<std::int64_t> pos(m.rows(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) pos[rows[i]] = static_cast<std::int64_t>(i);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const Entry& e : m.column(cols[j])) {
      if (pos[e.row] >= 0) d(static_cast<std::size_t>(pos[e.row]), j) = e.value;
    }
  }
  return d;
}

}  // namespace

Split split_idempotent(const GradedMap& e, const std::string& name) {
  const GradedSpace& x = e.dom();
  if (!(e.cod() == x)) throw Error(ErrorKind::shape, "split_idempotent: " + e.describe() + " is not an endomorphism");
  GradedMap ee = compose(e, e);
  if (!(ee.matrix() == e.matrix())) {
    Matrix res = ee.matrix() - e.matrix();
    std::string where;
    for (std::size_t c = 0; c < res.cols() && where.empty(); ++c) {
      if (!res.column(c).empty()) {
        const Entry& en = res.column(c).front();
        where = " first residual entry (" + x.label(en.row) + ", " + x.label(c) + ") = " + en.value.to_string();
      }
    }
    throw Error(ErrorKind::precondition, "split_idempotent: " + e.describe() + " is not idempotent; e∘e - e has " +
                                             std::to_string(res.nnz()) + " nonzero entries;" + where);
  }
  auto bl = blocks(x);
  std::vector<std::size_t> pivots;  // global indices
  struct BlockResult {
    std::vector<std::size_t> piv;
    DenseMatrix r;
  };
  std::vector<std::optional<BlockResult>> results(bl.size());
  for (std::size_t d = 0; d < bl.size(); ++d) {
    if (bl[d].empty()) continue;
    DenseMatrix m = dense_block(e.matrix(), bl[d], bl[d]);
    auto piv = rref(m);
    for (std::size_t k = 0; k < piv.size(); ++k) pivots.push_back(bl[d][piv[k]]);
    results[d] = BlockResult{std::move(piv), std::move(m)};
  }
  std::sort(pivots.begin(), pivots.end());
  std::vector<BasisElement> basis;
  basis.reserve(pivots.size());
  for (std::size_t g : pivots) basis.push_back(x[g]);
  GradedSpace obj(x.ambient(), std::move(basis), name);
  std::vector<std::size_t> where(x.dim(), 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) where[pivots[k]] = k;

  Matrix im(x.field(), x.dim(), pivots.size());
  Matrix pm(x.field(), pivots.size(), x.dim());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (const Entry& en : e.matrix().column(pivots[k])) im.set(en.row, k, en.value);
  }
  for (std::size_t d = 0; d < bl.size(); ++d) {
    if (!results[d]) continue;
    const auto& br = *results[d];
    for (std::size_t k = 0; k < br.piv.size(); ++k) {
      std::size_t row = where[bl[d][br.piv[k]]];
      for (std::size_t c = 0; c < bl[d].size(); ++c) {
        if (!br.r(k, c).is_zero()) pm.set(row, bl[d][c], br.r(k, c));
      }
    }
  }
  Split s{obj, GradedMap(obj, x, std::move(im), name.empty() ? "" : "i_" + name),
          GradedMap(x, obj, std::move(pm), name.empty() ? "" : "p_" + name)};
  if (!(compose(s.i, s.p).matrix() == e.matrix()) || !(compose(s.p, s.i).matrix() == Matrix::identity(x.field(), obj.dim()))) {
    throw Error(ErrorKind::consistency, "split_idempotent: splitting legs failed their roundtrip");
  }
  return s;
}

std::size_t rank(const GradedMap& f) {
  auto bd = blocks(f.dom()), bc = blocks(f.cod());
  std::size_t r = 0;
  for (std::size_t d = 0; d < bd.size(); ++d) {
    if (bd[d].empty() || bc[d].empty()) continue;
    DenseMatrix m = dense_block(f.matrix(), bc[d], bd[d]);
    r += rref(m).size();
  }
  return r;
}

bool is_epi(const GradedMap& f) { return rank(f) == f.cod().dim(); }
bool is_mono(const GradedMap& f) { return rank(f) == f.dom().dim(); }

namespace {

// Solve A X = B blockwise, with A: U→W, B: V→W (matrices W×U, W×V);
// returns the U×V matrix or nullopt.
std::optional<Matrix> solve_blocks(const Matrix& a, const Matrix& b, const GradedSpace& u, const GradedSpace& v,
                                   const GradedSpace& w) {
  auto bu = blocks(u), bv = blocks(v), bw = blocks(w);
  Matrix x(a.field(), u.dim(), v.dim());
  for (std::size_t d = 0; d < bw.size(); ++d) {
    if (bv[d].empty()) continue;
    DenseMatrix aug = dense_block(a, bw[d], bu[d], bv[d].size());
    DenseMatrix bd = dense_block(b, bw[d], bv[d]);
    for (std::size_t r = 0; r < bw[d].size(); ++r) {
      for (std::size_t c = 0; c < bv[d].size(); ++c) aug(r, bu[d].size() + c) = bd(r, c);
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() >= bu[d].size()) return std::nullopt;
    for (std::size_t k = 0; k < piv.size(); ++k) {
      for (std::size_t c = 0; c < bv[d].size(); ++c) {
        const Scalar& s = aug(k, bu[d].size() + c);
        if (!s.is_zero()) x.set(bu[d][piv[k]], bv[d][c], s);
      }
    }
  }
  return x;
}

}  // namespace

std::optional<GradedMap> solve_right(const GradedMap& a, const GradedMap& b) {
  if (!(a.cod() == b.cod())) throw Error(ErrorKind::shape, "solve_right: codomains differ");
  auto x = solve_blocks(a.matrix(), b.matrix(), a.dom(), b.dom(), a.cod());
  if (!x) return std::nullopt;
  GradedMap r(b.dom(), a.dom(), std::move(*x));
  if (!(compose(a, r) == b)) return std::nullopt;
  return r;
}

std::optional<GradedMap> solve_left(const GradedMap& a, const GradedMap& b) {
  if (!(a.dom() == b.dom())) throw Error(ErrorKind::shape, "solve_left: domains differ");
  auto xt = solve_blocks(a.matrix().transpose(), b.matrix().transpose(), a.cod(), b.cod(), a.dom());
  if (!xt) return std::nullopt;
  GradedMap r(a.cod(), b.cod(), xt->transpose());
  if (!(compose(r, a) == b)) return std::nullopt;
  return r;
}

std::optional<GradedMap> inverse(const GradedMap& f) {
  if (f.dom().dim() != f.cod().dim()) return std::nullopt;
  auto r = solve_right(f, GradedMap::identity(f.cod()));
  if (!r) return std::nullopt;
  if (!(compose(*r, f) == GradedMap::identity(f.dom()))) return std::nullopt;
  return r->renamed(f.name().empty() ? "" : f.name() + "^-1");
}

GradedMap canonical_iso(const GradedSpace& from, const GradedSpace& to) {
  if (!same_degrees(from, to)) {
    throw Error(ErrorKind::degree, "canonical_iso: " + from.describe() + " and " + to.describe() + " differ in degrees");
  }
  return GradedMap(from, to, Matrix::identity(from.field(), from.dim()));
}

GradedMap compose_relabel(const GradedMap& g, const GradedMap& f) {
  if (f.cod() == g.dom() || !same_degrees(f.cod(), g.dom())) return compose(g, f);
  return compose(g, canonical_iso(f.cod(), g.dom()), f);
}

}  // namespace braidhopf
