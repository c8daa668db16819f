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

// Acceptance run: one line per criterion, exit status 0 iff all pass.
// Every comparison is exact; the time limits are wall clock per criterion.
//
//   acceptance [scenario-dir]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "braidhopf/crossed_modules.hpp"
#include "braidhopf/error.hpp"
#include "braidhopf/examples.hpp"
#include "braidhopf/hopf_bimodules.hpp"
#include "braidhopf/hopf_modules.hpp"
#include "braidhopf/projections.hpp"
#include "braidhopf/scenario.hpp"
#include "braidhopf/structure.hpp"

using namespace braidhopf;
namespace fs = std::filesystem;

namespace {

fs::path g_corpus = fs::path(BRAIDHOPF_SOURCE_DIR) / "scenarios";

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Tallies reports; the first failing entry becomes the detail.
struct Tally {
  std::size_t checks = 0, failed = 0;
  std::string first;

  void add(const Report& r, const std::string& where) {
    checks += r.checks().size();
    failed += r.failures();
    if (first.empty() && !r.passed()) {
      for (const auto& c : r.checks()) {
        if (c.status != Status::pass) {
          first = where + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
          break;
        }
      }
    }
  }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      ++failed;
      if (first.empty()) first = what;
    }
  }
  Outcome outcome() const {
    Outcome o;
    o.ok = failed == 0 && checks > 0;
    o.detail = std::to_string(checks - failed) + "/" + std::to_string(checks) + " exact";
    if (!first.empty()) o.detail += "; first failure " + first;
    return o;
  }
};

std::vector<HopfStructure> module_bases() {
  return {group_algebra(Field::rationals(), Group({2})), sweedler(), braided_line(3, 7).line};
}

std::vector<HopfModule> module_samples(const HopfStructure& h) {
  std::vector<HopfModule> out{regular(h)};
  for (const auto& v : sample_spaces(h, 3)) out.push_back(smash_embed(h, v));
  return out;
}

Outcome pi_suite() {
  Tally t;
  for (const auto& h : module_bases()) {
    for (const auto& x : module_samples(h)) {
      std::string where = h.name + "/" + x.name;
      t.add(check_pi(h, x), where);
      t.add(check_coinvariant_legs(h, x, coinvariants(h, x)), where);
    }
  }
  return t.outcome();
}

Outcome structure_theorem() {
  Tally t;
  for (const auto& h : module_bases()) t.add(verify_structure_theorem(h, module_samples(h), sample_spaces(h, 3)), h.name);
  return t.outcome();
}

Outcome tensor_over() {
  Tally t;
  for (const auto& h : module_bases()) {
    std::vector<HopfBimodule> ns{regular(h), cross_product(h, adjoint_crossed_module(h).ad)};
    for (const auto& n : ns) {
      for (const auto& m : module_samples(h)) {
        std::string where = h.name + "/" + n.name + "," + m.name;
        t.add(check_tensor_over_h(h, n.right_action(), m, tensor_over_h(h, n.right_action(), m)), where);
        t.add(check_cotensor_over_h(h, n.right_coaction(), m, cotensor_over_h(h, n.right_coaction(), m)), where);
        t.add(check_phi(h, n.right_action(), n.right_coaction(), m), where);
      }
    }
  }
  return t.outcome();
}

std::vector<HopfStructure> yd_bases() { return {sweedler(), braided_line(3, 7).line}; }

Outcome yd_suite() {
  Tally t;
  for (const auto& h : yd_bases()) {
    CrossedModule ad = adjoint_crossed_module(h).ad, unit = unit_crossed_module(h);
    t.add(check_crossed_module(h, ad), h.name + "/ad");
    t.add(check_yd_braiding(h, ad, ad, unit), h.name + " (ad, ad, unit)");
    t.add(check_yd_braiding(h, unit, ad, ad), h.name + " (unit, ad, ad)");
    t.add(check_yd_naturality(h, ad, ad, ad.id(), ad, ad, ad.id()), h.name + " naturality");
    GradedMap b = yd_braiding(h, ad, ad), bi = yd_braiding(h, ad, ad, true);
    t.expect(compose(bi, b).same_constants(id(tensor(ad.carrier, ad.carrier))), h.name + " inverse_left");
    t.expect(compose(b, bi).same_constants(id(tensor(ad.carrier, ad.carrier))), h.name + " inverse_right");
    t.add(check_yang_baxter(h, ad), h.name + " Yang-Baxter");
  }
  return t.outcome();
}

Outcome equivalence() {
  Tally t;
  for (const auto& h : yd_bases()) {
    AdjointCrossed a = adjoint_crossed_module(h);
    CrossedModule unit = unit_crossed_module(h);
    std::vector<HopfBimodule> bs{regular(h), cross_product(h, a.ad), cross_product(h, a.coad)};
    t.add(verify_equivalence(h, bs, {a.ad, a.coad, unit}), h.name);
    for (const auto& x : bs) {
      for (const auto& y : bs) {
        std::string where = h.name + " (" + x.name + ", " + y.name + ")";
        t.add(schauenburg_braiding(h, x, y).report, where);
        t.expect(hbm_braiding(h, x, y).same_constants(hbm_braiding_via_yd(h, x, y)), where + " braiding via YD");
      }
    }
  }
  return t.outcome();
}

Outcome relative_antipode_suite() {
  Tally t;
  for (const auto& h : module_bases()) {
    t.expect(relative_antipode(h, regular(h)).same_constants(h.antipode()), h.name + " S_{H/H} = S");
    AdjointCrossed a = adjoint_crossed_module(h);
    std::vector<HopfBimodule> bs{regular(h), cross_product(h, a.ad), cross_product(h, a.coad)};
    for (const auto& x : bs) {
      for (const auto& y : bs) t.add(check_relative_antipode_identities(h, x, y), h.name + " (" + x.name + ", " + y.name + ")");
      GradedMap s = relative_antipode(h, x), si = relative_antipode_inverse(h, x);
      t.expect(compose(si, s).same_constants(x.id()) && compose(s, si).same_constants(x.id()),
               h.name + " inverse formula on " + x.name);
    }
  }
  return t.outcome();
}

CrossedBialgebra line_over_group(const BraidedLine& bl) { return {bl.group, bl.crossed, bl.plain}; }

Outcome projection_iso() {
  Tally t;
  HopfStructure k1 = group_algebra(Field::rationals(), Group());
  HopfStructure z2 = group_algebra(Field::rationals(), Group({2}));
  HopfStructure h4 = sweedler();
  Matrix inj(Field::rationals(), 4, 2), proj(Field::rationals(), 2, 4);
  inj.set(0, 0, Field::rationals().one());
  inj.set(1, 1, Field::rationals().one());
  proj.set(0, 0, Field::rationals().one());
  proj.set(1, 1, Field::rationals().one());
  BialgebraProjection sw{z2, h4, GradedMap(z2.carrier, h4.carrier, inj), GradedMap(h4.carrier, z2.carrier, proj)};
  BialgebraProjection taft = bosonize(line_over_group(braided_line(3, 7))).projection;
  std::vector<BialgebraProjection> ps{{k1, k1, k1.id(), k1.id()}, {z2, z2, z2.id(), z2.id()}, taft, sw};
  t.add(verify_projection_theorem(ps), "theorem");
  return t.outcome();
}

// Taft algebra on g^a x^b (index a*n+b), coded from its presentation:
// x^b g^c = q^{bc} g^c x^b, x^n = 0, Δ(g^a x^b) = Σ_k [b,k]_q g^a x^k ⊗ g^{a+k} x^{b-k}.
Scalar qbinom(const Scalar& q, std::uint32_t b, std::uint32_t k) {
  if (k == 0 || k == b) return q.field().one();
  if (k > b) return q.field().zero();
  return qbinom(q, b - 1, k - 1) + q.pow(k) * qbinom(q, b - 1, k);
}

Outcome bosonization() {
  Tally t;
  const std::uint32_t n = 3;
  BraidedLine bl = braided_line(n, 7);
  Bosonization bz = bosonize(line_over_group(bl));
  const HopfStructure& T = bz.hopf;
  const std::size_t d = n * n;
  t.expect(T.carrier.dim() == d, "dimension 9");
  t.expect(T.level == Level::hopf, "antipode found");
  t.add(check_structure(T), "axioms");

  Field k = bl.q.field();
  Matrix m(k, d, d * d), delta(k, d * d, d), eta(k, d, 1), eps(k, 1, d);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        for (std::uint32_t e = 0; b + e < n && e < n; ++e) {
          m.set(((a + c) % n) * n + b + e, (a * n + b) * d + c * n + e, bl.q.pow(static_cast<std::int64_t>(b) * c));
        }
      }
      for (std::uint32_t j = 0; j <= b; ++j) {
        delta.set((a * n + j) * d + ((a + j) % n) * n + (b - j), a * n + b, qbinom(bl.q, b, j));
      }
    }
    eps.set(0, a * n, k.one());
  }
  eta.set(0, 0, k.one());
  t.expect(T.mul().matrix() == m, "product matches the Taft presentation");
  t.expect(T.comul().matrix() == delta, "coproduct matches the Taft presentation");
  t.expect(T.unit().matrix() == eta, "unit");
  t.expect(T.counit().matrix() == eps, "counit");
  // x^n = 0 and g^n = 1, read off the oracle product by powers.
  auto power = [&](std::size_t gen, std::uint32_t p) {
    Matrix v(k, d, 1);
    v.set(0, 0, k.one());
    for (std::uint32_t i = 0; i < p; ++i) {
      Matrix w(k, d, 1);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
          if (!v.at(c, 0).is_zero()) w.set(r, 0, w.at(r, 0) + v.at(c, 0) * T.mul().matrix().at(r, c * d + gen));
        }
      }
      v = w;
    }
    return v;
  };
  Matrix one(k, d, 1);
  one.set(0, 0, k.one());
  t.expect(power(1, n) == Matrix(k, d, 1), "x^3 = 0");
  t.expect(power(n, n) == one, "g^3 = 1");
  t.add(verify_bosonization({line_over_group(bl)}), "bosonization");
  return t.outcome();
}

std::vector<fs::path> corpus_files(bool with_negatives) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(g_corpus)) {
    if (e.path().extension() == ".json") out.push_back(e.path());
  }
  if (with_negatives) {
    for (const auto& e : fs::directory_iterator(g_corpus / "negative")) {
      if (e.path().extension() == ".json") out.push_back(e.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome detection() {
  std::size_t caught = 0, total = 0;
  std::string silent;
  for (const auto& e : fs::directory_iterator(g_corpus / "negative")) {
    if (e.path().extension() != ".json") continue;
    ++total;
    if (!Scenario::load_file(e.path().string()).run().passed()) ++caught;
    else silent += " " + e.path().filename().string();
  }
  // Every admissible single-entry change of the base examples, too.
  std::size_t swept = 0, missed = 0;
  for (const auto& h : module_bases()) {
    const std::vector<std::pair<const char*, GradedMap>> roles = {
        {"m", h.mul()}, {"eta", h.unit()}, {"delta", h.comul()}, {"eps", h.counit()}, {"S", h.antipode()}};
    for (const auto& [which, f] : roles) {
      for (std::size_t r = 0; r < f.cod().dim(); ++r) {
        for (std::size_t c = 0; c < f.dom().dim(); ++c) {
          if (!(f.cod().degree(r) == f.dom().degree(c))) continue;
          ++swept;
          if (check_structure(perturb(h, which, r, c, h.carrier.field().one())).passed()) {
            ++missed;
            silent += " " + h.name + "." + which + "[" + std::to_string(r) + "," + std::to_string(c) + "]";
          }
        }
      }
    }
  }
  Outcome o;
  o.ok = total > 0 && caught == total && missed == 0;
  o.detail = std::to_string(caught) + "/" + std::to_string(total) + " negative scenarios fail, " +
             std::to_string(swept - missed) + "/" + std::to_string(swept) + " perturbations caught";
  if (!silent.empty()) o.detail += "; silent:" + silent;
  return o;
}

std::string machine_corpus(unsigned jobs) {
  std::string out;
  for (const auto& p : corpus_files(true)) {
    Scenario s = Scenario::load_file(p.string());
    out += emit_machine({s.name(), s.digest(), engine_version, s.run(std::nullopt, jobs)});
  }
  return out;
}

Outcome determinism() {
  std::string a = machine_corpus(1), b = machine_corpus(1), c = machine_corpus(4);
  Outcome o;
  o.ok = !a.empty() && a == b && a == c;
  o.detail = std::to_string(corpus_files(true).size()) + " scenarios, " + std::to_string(a.size()) + " bytes, " +
             (a == b ? "runs identical" : "runs differ") + ", " + (a == c ? "4 jobs identical" : "4 jobs differ") +
             ", digest " + std::to_string(fnv1a64(a));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_corpus = argv[1];
  const std::vector<Criterion> all = {
      {1, "Pi-suite", 1, pi_suite},
      {2, "Structure Theorem", 5, structure_theorem},
      {3, "(Co)tensor over H", 5, tensor_over},
      {4, "YD suite", 5, yd_suite},
      {5, "Equivalence", 10, equivalence},
      {6, "Relative antipode", 5, relative_antipode_suite},
      {7, "Projection isomorphism", 5, projection_iso},
      {8, "Bosonization", 5, bosonization},
      {9, "Detection power", 0, detection},
      {10, "Determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.limit == 0 || s < c.limit;
    bool ok = o.ok && in_time;
    failed += !ok;
    char timing[64];
    if (c.limit > 0) std::snprintf(timing, sizeof timing, "%.3f s (limit %g s)", s, c.limit);
    else std::snprintf(timing, sizeof timing, "%.3f s", s);
    std::printf("%s  %2d  %-24s %s  %s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, timing, o.detail.c_str(),
                in_time ? "" : "; over time limit");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
