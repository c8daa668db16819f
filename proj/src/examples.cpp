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

#include "braidhopf/examples.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "braidhopf/projections.hpp"

namespace braidhopf {

namespace {

AmbientPtr plain_ambient(const Field& k) { return make_ambient(k, Group{}); }

std::string element_label(const Group& g, Degree d, const std::string& gen) {
  if (d == g.zero()) return "1";
  auto c = g.coords(d);
  if (c.size() == 1) return c[0] == 1 ? gen : gen + "^" + std::to_string(c[0]);
  std::string s = gen + "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

GradedSpace group_basis(const AmbientPtr& amb, const Group& g, const std::string& gen, const std::string& name) {
  std::vector<BasisElement> b;
  for (std::uint32_t a = 0; a < g.order(); ++a) b.push_back({element_label(g, {a}, gen), Degree{}});
  return GradedSpace(amb, std::move(b), name);
}

HopfStructure skeleton(std::string name, const AmbientPtr& amb, GradedSpace carrier) {
  HopfStructure h;
  h.name = std::move(name);
  h.ctx = std::make_shared<const BraidedContext>(BraidedContext::symmetric(amb));
  h.carrier = std::move(carrier);
  h.level = Level::hopf;
  return h;
}

}  // namespace

HopfStructure group_algebra(const Field& k, const Group& g) {
  auto amb = plain_ambient(k);
  std::string name = "k[G]";
  HopfStructure h = skeleton(name, amb, group_basis(amb, g, "g", name));
  std::size_t n = g.order();
  GradedSpace one = h.one(), hh = tensor(h.carrier, h.carrier);
  Matrix m(k, n, n * n), d(k, n * n, n), eta(k, n, 1), eps(k, 1, n), s(k, n, n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) m.set(g.add({a}, {b}).code, a * n + b, k.one());
    d.set(a * n + a, a, k.one());
    eps.set(0, a, k.one());
    s.set(g.neg({a}).code, a, k.one());
  }
  eta.set(0, 0, k.one());
  h.m = GradedMap(hh, h.carrier, m, name + ".m");
  h.eta = GradedMap(one, h.carrier, eta, name + ".eta");
  h.delta = GradedMap(h.carrier, hh, d, name + ".delta");
  h.eps = GradedMap(h.carrier, one, eps, name + ".eps");
  h.s = GradedMap(h.carrier, h.carrier, s, name + ".S");
  return h;
}

HopfStructure dual_group_algebra(const Field& k, const Group& g) {
  auto amb = plain_ambient(k);
  std::string name = "k^G";
  HopfStructure h = skeleton(name, amb, group_basis(amb, g, "d", name));
  std::size_t n = g.order();
  GradedSpace one = h.one(), hh = tensor(h.carrier, h.carrier);
  Matrix m(k, n, n * n), d(k, n * n, n), eta(k, n, 1), eps(k, 1, n), s(k, n, n);
  for (std::uint32_t a = 0; a < n; ++a) {
    m.set(a, a * n + a, k.one());
    eta.set(a, 0, k.one());
    for (std::uint32_t b = 0; b < n; ++b) d.set(b * n + g.add({a}, g.neg({b})).code, a, k.one());
    s.set(g.neg({a}).code, a, k.one());
  }
  eps.set(0, 0, k.one());
  h.m = GradedMap(hh, h.carrier, m, name + ".m");
  h.eta = GradedMap(one, h.carrier, eta, name + ".eta");
  h.delta = GradedMap(h.carrier, hh, d, name + ".delta");
  h.eps = GradedMap(h.carrier, one, eps, name + ".eps");
  h.s = GradedMap(h.carrier, h.carrier, s, name + ".S");
  return h;
}

HopfStructure sweedler() {
  Field k = Field::rationals();
  auto amb = plain_ambient(k);
  std::string name = "H4";
  GradedSpace carrier(amb, {{"1", {}}, {"g", {}}, {"x", {}}, {"gx", {}}}, name);
  HopfStructure h = skeleton(name, amb, carrier);
  GradedSpace one = h.one(), hh = tensor(carrier, carrier);
  auto idx = [](int a, int b) { return static_cast<std::size_t>(a + 2 * b); };
  Matrix m(k, 4, 16), d(k, 16, 4), eta(k, 4, 1), eps(k, 1, 4), s(k, 4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int e = 0; e < 2; ++e) {
          if (b + e > 1) continue;
          Scalar sign = k.from_int((b * c) % 2 ? -1 : 1);
          m.set(idx((a + c) % 2, b + e), idx(a, b) * 4 + idx(c, e), sign);
        }
      }
      // Δ(g^a x^b) = (g^a⊗g^a)·Δ(x)^b
      if (b == 0) {
        d.set(idx(a, 0) * 4 + idx(a, 0), idx(a, 0), k.one());
      } else {
        d.set(idx(a, 1) * 4 + idx(a, 0), idx(a, 1), k.one());
        d.set(idx((a + 1) % 2, 0) * 4 + idx(a, 1), idx(a, 1), k.one());
      }
    }
    eps.set(0, idx(a, 0), k.one());
  }
  eta.set(0, 0, k.one());
  s.set(0, 0, k.one());
  s.set(1, 1, k.one());
  s.set(3, 2, k.from_int(-1));  // S(x) = -gx
  s.set(2, 3, k.one());         // S(gx) = x
  h.m = GradedMap(hh, carrier, m, name + ".m");
  h.eta = GradedMap(one, carrier, eta, name + ".eta");
  h.delta = GradedMap(carrier, hh, d, name + ".delta");
  h.eps = GradedMap(carrier, one, eps, name + ".eps");
  h.s = GradedMap(carrier, carrier, s, name + ".S");
  return h;
}

namespace {

// Constants of k[x]/(xⁿ) with the q-binomial coproduct, on a given carrier.
void fill_line(HopfStructure& h, std::uint32_t n, const Scalar& q) {
  const Field k = q.field();
  const GradedSpace& c = h.carrier;
  GradedSpace one = h.one(), cc = tensor(c, c);
  // binom[k][j] = [k choose j]_q
  std::vector<std::vector<Scalar>> binom(n, std::vector<Scalar>(n, k.zero()));
  for (std::uint32_t a = 0; a < n; ++a) {
    binom[a][0] = k.one();
    for (std::uint32_t j = 1; j <= a; ++j) binom[a][j] = binom[a - 1][j - 1] + (j < a ? q.pow(j) * binom[a - 1][j] : k.zero());
  }
  Matrix m(k, n, n * n), d(k, n * n, n), eta(k, n, 1), eps(k, 1, n), s(k, n, n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; a + b < n; ++b) m.set(a + b, a * n + b, k.one());
    for (std::uint32_t j = 0; j <= a; ++j) d.set(j * n + (a - j), a, binom[a][j]);
    Scalar sign = k.from_int(a % 2 ? -1 : 1);
    s.set(a, a, sign * q.pow(static_cast<std::int64_t>(a) * (static_cast<std::int64_t>(a) - 1) / 2));
  }
  eta.set(0, 0, k.one());
  eps.set(0, 0, k.one());
  h.m = GradedMap(cc, c, m, h.name + ".m");
  h.eta = GradedMap(one, c, eta, h.name + ".eta");
  h.delta = GradedMap(c, cc, d, h.name + ".delta");
  h.eps = GradedMap(c, one, eps, h.name + ".eps");
  h.s = GradedMap(c, c, s, h.name + ".S");
}

std::string power_label(std::uint32_t j, const std::string& x) {
  if (j == 0) return "1";
  return j == 1 ? x : x + "^" + std::to_string(j);
}

}  // namespace

BraidedLine braided_line(std::uint32_t n, std::uint64_t p, std::optional<Scalar> q_opt) {
  if (n < 2) throw Error(ErrorKind::precondition, "braided_line: n must be at least 2");
  Field k = Field::prime(p);
  if (!k.has_element_of_order(n)) {
    throw Error(ErrorKind::precondition, "braided_line: F_" + std::to_string(p) + " has no element of order " + std::to_string(n));
  }
  Scalar chi = k.smallest_element_of_order(n);
  Scalar q = q_opt ? *q_opt : chi;
  std::string name = "B" + std::to_string(n);

  auto graded_amb = make_ambient(k, Group({n}));
  std::vector<BasisElement> gb, pb;
  for (std::uint32_t j = 0; j < n; ++j) {
    gb.push_back({power_label(j, "x"), Degree{j}});
    pb.push_back({power_label(j, "x"), Degree{}});
  }
  HopfStructure line;
  line.name = name;
  // An override q only changes the constants; the braiding keeps the
  // canonical character, which is how the wrong-order negatives are made.
  line.ctx = std::make_shared<const BraidedContext>(graded_amb, std::vector<std::vector<Scalar>>{{chi}});
  line.carrier = GradedSpace(graded_amb, gb, name);
  line.level = Level::hopf;
  fill_line(line, n, q);

  HopfStructure group = group_algebra(k, Group({n}));
  group.name = "k[Z" + std::to_string(n) + "]";
  HopfStructure plain = skeleton(name, group.carrier.ambient(), GradedSpace(group.carrier.ambient(), pb, name));
  fill_line(plain, n, q);

  CrossedModule x;
  x.name = name;
  x.carrier = plain.carrier;
  GradedSpace xh = tensor(x.carrier, group.carrier);
  Matrix act(k, n, n * n), coact(k, n * n, n);
  for (std::uint32_t j = 0; j < n; ++j) {
    for (std::uint32_t a = 0; a < n; ++a) act.set(j, j * n + a, q.pow(static_cast<std::int64_t>(j) * a));
    coact.set(j * n + j, j, k.one());
  }
  x.mu_r = GradedMap(xh, x.carrier, act, name + ".act_r");
  x.nu_r = GradedMap(x.carrier, xh, coact, name + ".coact_r");
  return {q, std::move(line), std::move(group), std::move(plain), std::move(x)};
}

BraidedLine mirror_braided_line(std::uint32_t n, std::uint64_t p) {
  Scalar q = braided_line(n, p).q;
  BraidedLine bl = braided_line(n, p, q.inverse());
  // The mirror character χ̄(1,1) = q⁻¹ matches the constants.
  bl.line.ctx = std::make_shared<const BraidedContext>(bl.line.ctx->mirror());
  bl.line.name = "B" + std::to_string(n) + "bar";
  bl.plain.name = bl.crossed.name = bl.line.name;
  return bl;
}

HopfStructure perturb(const HopfStructure& base, const std::string& which, std::size_t row, std::size_t col,
                      const Scalar& delta) {
  HopfStructure h = base;
  std::optional<GradedMap>* slot = nullptr;
  if (which == "m") slot = &h.m;
  else if (which == "eta") slot = &h.eta;
  else if (which == "delta") slot = &h.delta;
  else if (which == "eps") slot = &h.eps;
  else if (which == "S") slot = &h.s;
  if (!slot || !*slot) throw Error(ErrorKind::precondition, "perturb: " + base.name + " has no map '" + which + "'");
  Matrix mm = (*slot)->matrix();
  mm.add(row, col, delta);
  *slot = GradedMap((*slot)->dom(), (*slot)->cod(), std::move(mm), (*slot)->name());
  if (!delta.is_zero()) h.name = base.name + "~" + which;
  return h;
}

namespace {

struct ParsedSpec {
  std::string head;
  std::vector<std::uint64_t> args;
  std::optional<std::uint64_t> prime;
};

ParsedSpec parse_spec(const std::string& spec) {
  ParsedSpec ps;
  std::string s;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto open = s.find('(');
  ps.head = s.substr(0, open);
  if (open == std::string::npos) return ps;
  if (s.back() != ')') throw Error(ErrorKind::parse, "example spec '" + spec + "': missing ')'");
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  auto semi = inner.find(';');
  std::string list = inner.substr(0, semi);
  auto number = [&](const std::string& t) -> std::uint64_t {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorKind::parse, "example spec '" + spec + "': '" + t + "' is not a positive integer");
    }
    return std::stoull(t);
  };
  std::stringstream ss(list);
  for (std::string t; std::getline(ss, t, ',');) ps.args.push_back(number(t));
  if (semi != std::string::npos) ps.prime = number(inner.substr(semi + 1));
  return ps;
}

}  // namespace

Example build_example(const std::string& spec) {
  ParsedSpec ps = parse_spec(spec);
  Field k = ps.prime ? Field::prime(*ps.prime) : Field::rationals();
  auto group_of = [&]() {
    std::vector<std::uint32_t> sig(ps.args.begin(), ps.args.end());
    return Group(sig);
  };
  Example ex;
  ex.name = spec;
  if (ps.head == "sweedler" && ps.args.empty()) {
    ex.hopf = sweedler();
  } else if (ps.head == "group_algebra") {
    ex.hopf = group_algebra(k, group_of());
  } else if (ps.head == "dual_group_algebra") {
    ex.hopf = dual_group_algebra(k, group_of());
  } else if (ps.head == "braided_line" && ps.args.size() == 2 && !ps.prime) {
    ex.line = braided_line(static_cast<std::uint32_t>(ps.args[0]), ps.args[1]);
    ex.hopf = ex.line->line;
  } else if (ps.head == "mirror_braided_line" && ps.args.size() == 2 && !ps.prime) {
    ex.line = mirror_braided_line(static_cast<std::uint32_t>(ps.args[0]), ps.args[1]);
    ex.hopf = ex.line->line;
  } else if (ps.head == "taft" && ps.args.size() == 2 && !ps.prime) {
    BraidedLine bl = braided_line(static_cast<std::uint32_t>(ps.args[0]), ps.args[1]);
    CrossedBialgebra cb{bl.group, bl.crossed, bl.plain};
    ex.hopf = bosonize(cb).hopf;
    ex.hopf.name = "T" + std::to_string(ps.args[0]);
    ex.line = std::move(bl);
  } else {
    throw Error(ErrorKind::load, "unknown example '" + spec + "'; known: sweedler, group_algebra(n,...[;p]), "
                                 "dual_group_algebra(n,...[;p]), braided_line(n,p), mirror_braided_line(n,p), taft(n,p)");
  }
  return ex;
}

std::vector<std::string> example_names() {
  return {"sweedler", "group_algebra(n,...[;p])", "dual_group_algebra(n,...[;p])", "braided_line(n,p)", "mirror_braided_line(n,p)",
          "taft(n,p)"};
}

}  // namespace braidhopf
