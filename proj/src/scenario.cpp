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

#include "braidhopf/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "braidhopf/crossed_modules.hpp"
#include "braidhopf/dsl.hpp"
#include "braidhopf/error.hpp"
#include "braidhopf/examples.hpp"
#include "braidhopf/hopf_bimodules.hpp"
#include "braidhopf/hopf_modules.hpp"
#include "braidhopf/projections.hpp"
#include "json.hpp"

namespace braidhopf {

using json = nlohmann::json;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

struct PreparedCheck {
  ScenarioCheck info;
  std::function<Report()> body;
};

struct Scenario::Impl {
  std::string name;
  std::string digest;
  std::vector<ScenarioCheck> checks;
  std::vector<PreparedCheck> prepared;
};

namespace {

[[noreturn]] void fail_at(const std::string& ptr, const std::string& msg) {
  throw Error(ErrorKind::load, (ptr.empty() ? "/" : ptr) + ": " + msg);
}

// Any library error raised while building a declaration is reported at it.
template <class F>
auto at(const std::string& ptr, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::load) throw;
    fail_at(ptr, std::string(to_string(e.kind())) + " error: " + e.what());
  }
}

std::string escape_key(const std::string& k) {
  std::string s;
  for (char c : k) s += c == '~' ? "~0" : c == '/' ? "~1" : std::string(1, c);
  return s;
}

void reject_floats(const json& j, const std::string& ptr) {
  if (j.is_number_float()) fail_at(ptr, "floating-point literal; exact literals only, e.g. 3, -2 or \"1/3\"");
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) reject_floats(j[i], ptr + "/" + std::to_string(i));
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) reject_floats(v, ptr + "/" + escape_key(k));
  }
}

std::string first_failure(const Report& r) {
  for (const CheckResult& c : r.checks()) {
    if (c.status != Status::pass) return c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  }
  return {};
}

const std::set<std::string> kModuleValidators = {"hopf_module", "right_hopf_module", "twofold",      "crossed_module",
                                                 "left_crossed_module", "hopf_bimodule", "left_module", "right_module",
                                                 "left_comodule", "right_comodule"};

class Loader {
 public:
  Loader(const json& doc) : doc_(doc) {}

  void load_all(Scenario::Impl& out);

 private:
  const json& doc_;
  ContextPtr ctx_;
  std::map<std::string, GradedSpace> objects_;
  std::map<std::string, GradedMap> maps_;
  std::map<std::string, HopfStructure> structures_;
  std::map<std::string, StructuredObject> modules_;
  std::map<std::string, std::string> module_over_;
  std::map<std::string, CrossedBialgebra> bialgebras_;
  std::map<std::string, BialgebraProjection> projections_;
  std::map<std::string, Example> examples_;
  std::set<std::string> active_;

  // -- generic helpers ------------------------------------------------------

  const json& section(const char* s) const {
    static const json empty = json::object();
    auto it = doc_.find(s);
    return it == doc_.end() ? empty : *it;
  }
  bool declared(const char* s, const std::string& name) const { return section(s).contains(name); }
  static std::string ptr_of(const char* s, const std::string& name) { return std::string("/") + s + "/" + escape_key(name); }

  struct Enter {
    std::set<std::string>& set;
    std::string key;
    Enter(std::set<std::string>& s, std::string k, const std::string& ptr) : set(s), key(std::move(k)) {
      if (!set.insert(key).second) fail_at(ptr, "circular reference through '" + key + "'");
    }
    ~Enter() { set.erase(key); }
  };

  static const json& need(const json& j, const char* key, const std::string& ptr) {
    if (!j.is_object() || !j.contains(key)) fail_at(ptr, std::string("missing field '") + key + "'");
    return j.at(key);
  }
  static std::string str(const json& j, const char* key, const std::string& ptr) {
    const json& v = need(j, key, ptr);
    if (!v.is_string()) fail_at(ptr + "/" + key, "expected a string");
    return v.get<std::string>();
  }
  static std::vector<std::string> strs(const json& j, const char* key, const std::string& ptr) {
    const json& v = need(j, key, ptr);
    if (!v.is_array()) fail_at(ptr + "/" + key, "expected an array of names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) fail_at(ptr + "/" + key + "/" + std::to_string(i), "expected a string");
      out.push_back(v[i].get<std::string>());
    }
    return out;
  }
  static std::size_t count(const json& j, const char* key, const std::string& ptr, std::size_t dflt) {
    if (!j.contains(key)) return dflt;
    const json& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      fail_at(ptr + "/" + key, "expected a non-negative integer");
    return v.get<std::size_t>();
  }
  static bool candidate(const json& j, const std::string& ptr) {
    if (!j.contains("candidate")) return false;
    if (!j.at("candidate").is_boolean()) fail_at(ptr + "/candidate", "expected true or false");
    return j.at("candidate").get<bool>();
  }
  static void allow(const json& j, const std::string& ptr, std::initializer_list<const char*> keys) {
    if (!j.is_object()) fail_at(ptr, "expected an object");
    for (const auto& [k, v] : j.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
        fail_at(ptr + "/" + escape_key(k), "unknown field '" + k + "'");
    }
  }

  static Scalar scalar(const json& v, const Field& k, const std::string& ptr) {
    return at(ptr, [&] {
      if (v.is_number_integer()) return k.from_int(v.get<std::int64_t>());
      if (v.is_string()) return k.parse(v.get<std::string>());
      fail_at(ptr, "expected an exact literal (integer or string such as \"-2/3\")");
    });
  }

  // -- context, objects, maps -------------------------------------------------

  const ContextPtr& context() {
    if (ctx_) return ctx_;
    const std::string ptr = "/context";
    const json& c = section("context");
    allow(c, ptr, {"field", "group", "bicharacter"});
    Field k = Field::rationals();
    if (c.contains("field")) {
      const json& f = c.at("field");
      if (f.is_string() && f.get<std::string>() == "rational") {
      } else if (f.is_object() && f.size() == 1 && f.contains("prime") && f.at("prime").is_number_unsigned()) {
        k = at(ptr + "/field", [&] { return Field::prime(f.at("prime").get<std::uint64_t>()); });
      } else {
        fail_at(ptr + "/field", "expected \"rational\" or {\"prime\": p}");
      }
    }
    std::vector<std::uint32_t> sig;
    if (c.contains("group")) {
      const json& g = c.at("group");
      if (!g.is_array()) fail_at(ptr + "/group", "expected an array of cyclic orders");
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i].is_number_unsigned() || g[i].get<std::uint64_t>() == 0 || g[i].get<std::uint64_t>() > 1u << 16)
          fail_at(ptr + "/group/" + std::to_string(i), "expected a positive cyclic order");
        sig.push_back(g[i].get<std::uint32_t>());
      }
    }
    AmbientPtr amb = at(ptr + "/group", [&] { return make_ambient(k, Group(sig)); });
    std::vector<std::vector<Scalar>> chi(sig.size(), std::vector<Scalar>(sig.size(), k.one()));
    if (c.contains("bicharacter")) {
      const json& b = c.at("bicharacter");
      if (!b.is_array() || b.size() != sig.size())
        fail_at(ptr + "/bicharacter", "expected a " + std::to_string(sig.size()) + "x" + std::to_string(sig.size()) + " table");
      for (std::size_t i = 0; i < sig.size(); ++i) {
        std::string row = ptr + "/bicharacter/" + std::to_string(i);
        if (!b[i].is_array() || b[i].size() != sig.size()) fail_at(row, "expected " + std::to_string(sig.size()) + " entries");
        for (std::size_t j = 0; j < sig.size(); ++j) chi[i][j] = scalar(b[i][j], k, row + "/" + std::to_string(j));
      }
    }
    ctx_ = at(ptr + "/bicharacter", [&] { return std::make_shared<const BraidedContext>(amb, chi); });
    return ctx_;
  }

  GradedSpace object(const std::string& name, const std::string& where) {
    if (auto it = objects_.find(name); it != objects_.end()) return it->second;
    if (declared("objects", name)) {
      std::string ptr = ptr_of("objects", name);
      Enter e(active_, "object " + name, ptr);
      const json& j = section("objects").at(name);
      allow(j, ptr, {"basis"});
      const json& basis = need(j, "basis", ptr);
      if (!basis.is_array()) fail_at(ptr + "/basis", "expected an array of [label, degree]");
      const Group& g = context()->group();
      std::vector<BasisElement> out;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::string bp = ptr + "/basis/" + std::to_string(i);
        const json& b = basis[i];
        if (!b.is_array() || b.size() != 2 || !b[0].is_string()) fail_at(bp, "expected [label, degree]");
        std::vector<std::int64_t> coords;
        if (b[1].is_number_integer()) coords.push_back(b[1].get<std::int64_t>());
        else if (b[1].is_array()) {
          for (const json& c : b[1]) {
            if (!c.is_number_integer()) fail_at(bp + "/1", "degree coordinates must be integers");
            coords.push_back(c.get<std::int64_t>());
          }
        } else fail_at(bp + "/1", "expected a degree (integer or coordinate array)");
        if (coords.size() == 1 && coords[0] == 0 && g.rank() == 0) coords.clear();
        Degree d = at(bp + "/1", [&] { return g.from_coords(coords); });
        out.push_back({b[0].get<std::string>(), d});
      }
      GradedSpace x = at(ptr, [&] { return GradedSpace(context()->ambient(), out, name); });
      return objects_.emplace(name, x).first->second;
    }
    if (declared("structures", name)) return structure(name).carrier;
    if (declared("modules", name)) return module(name).carrier;
    fail_at(where, "unknown object '" + name + "'");
  }

  GradedSpace object_expr(const std::string& text, const std::string& where, AmbientPtr fallback = nullptr) {
    ObjExpr e = at(where, [&] { return parse_object(text); });
    if (e.factors.empty()) return GradedSpace::unit(fallback ? fallback : context()->ambient());
    GradedSpace out = object(e.factors[0], where);
    for (std::size_t i = 1; i < e.factors.size(); ++i) {
      GradedSpace f = object(e.factors[i], where);
      out = at(where, [&] { return tensor(out, f); });
    }
    return out;
  }

  GradedMap map(const std::string& name, const std::string& where) {
    if (auto it = maps_.find(name); it != maps_.end()) return it->second;
    if (declared("maps", name)) {
      std::string ptr = ptr_of("maps", name);
      Enter e(active_, "map " + name, ptr);
      const json& j = section("maps").at(name);
      allow(j, ptr, {"dom", "cod", "matrix"});
      GradedSpace dom = object_expr(str(j, "dom", ptr), ptr + "/dom");
      GradedSpace cod = object_expr(str(j, "cod", ptr), ptr + "/cod", dom.ambient());
      const json& rows = need(j, "matrix", ptr);
      if (!rows.is_array() || rows.size() != cod.dim())
        fail_at(ptr + "/matrix", "expected " + std::to_string(cod.dim()) + " rows (the codomain dimension)");
      Matrix m(dom.field(), cod.dim(), dom.dim());
      for (std::size_t r = 0; r < cod.dim(); ++r) {
        std::string rp = ptr + "/matrix/" + std::to_string(r);
        if (!rows[r].is_array() || rows[r].size() != dom.dim())
          fail_at(rp, "expected " + std::to_string(dom.dim()) + " entries (the domain dimension)");
        for (std::size_t c = 0; c < dom.dim(); ++c) {
          Scalar v = scalar(rows[r][c], dom.field(), rp + "/" + std::to_string(c));
          if (!v.is_zero()) m.set(r, c, v);
        }
      }
      GradedMap f = at(ptr + "/matrix", [&] { return GradedMap(dom, cod, std::move(m), name); });
      return maps_.emplace(name, f).first->second;
    }
    // Structure maps by qualified name, e.g. "H.m" or "X.mu_l".
    if (auto dot = name.rfind('.'); dot != std::string::npos) {
      std::string owner = name.substr(0, dot), role = name.substr(dot + 1);
      if (declared("structures", owner)) {
        const HopfStructure& h = structure(owner);
        const std::map<std::string, const std::optional<GradedMap>*> roles = {
            {"m", &h.m}, {"eta", &h.eta}, {"delta", &h.delta}, {"eps", &h.eps}, {"S", &h.s}};
        if (auto it = roles.find(role); it != roles.end() && *it->second) return **it->second;
      }
      if (declared("modules", owner)) {
        const StructuredObject& x = module(owner);
        const std::map<std::string, const std::optional<GradedMap>*> roles = {
            {"mu_l", &x.mu_l}, {"mu_r", &x.mu_r}, {"nu_l", &x.nu_l}, {"nu_r", &x.nu_r}};
        if (auto it = roles.find(role); it != roles.end() && *it->second) return **it->second;
      }
    }
    fail_at(where, "unknown map '" + name + "'");
  }

  std::optional<GradedMap> opt_map(const json& j, const char* key, const std::string& ptr) {
    if (!j.contains(key)) return std::nullopt;
    return map(str(j, key, ptr), ptr + "/" + key);
  }

  const Example& example(const std::string& spec, const std::string& where) {
    if (auto it = examples_.find(spec); it != examples_.end()) return it->second;
    Example ex = at(where, [&] { return build_example(spec); });
    return examples_.emplace(spec, std::move(ex)).first->second;
  }

  // -- structures ---------------------------------------------------------------

  const HopfStructure& structure(const std::string& name, const std::string& where = {}) {
    if (auto it = structures_.find(name); it != structures_.end()) return it->second;
    std::string ptr = ptr_of("structures", name);
    if (!declared("structures", name)) fail_at(where.empty() ? ptr : where, "unknown structure '" + name + "'");
    Enter e(active_, "structure " + name, ptr);
    const json& j = section("structures").at(name);
    HopfStructure h;
    if (j.contains("example")) {
      allow(j, ptr, {"example", "part", "candidate"});
      const Example& ex = example(str(j, "example", ptr), ptr + "/example");
      std::string part = j.contains("part") ? str(j, "part", ptr) : "hopf";
      if (part == "hopf") h = ex.hopf;
      else if (!ex.line) fail_at(ptr + "/part", "only braided_line and taft examples have part '" + part + "'");
      else if (part == "line") h = ex.line->line;
      else if (part == "group") h = ex.line->group;
      else if (part == "plain") h = ex.line->plain;
      else fail_at(ptr + "/part", "expected hopf, line, group or plain");
    } else if (j.contains("perturb")) {
      allow(j, ptr, {"perturb", "which", "row", "col", "delta", "candidate"});
      const HopfStructure& base = structure(str(j, "perturb", ptr), ptr + "/perturb");
      Scalar d = scalar(need(j, "delta", ptr), base.carrier.field(), ptr + "/delta");
      h = at(ptr, [&] {
        return perturb(base, str(j, "which", ptr), count(j, "row", ptr, 0), count(j, "col", ptr, 0), d);
      });
    } else if (j.contains("bosonization")) {
      allow(j, ptr, {"bosonization", "candidate"});
      const CrossedBialgebra& cb = bialgebra(str(j, "bosonization", ptr), ptr + "/bosonization");
      h = at(ptr, [&] { return bosonize(cb).hopf; });
    } else {
      allow(j, ptr, {"carrier", "level", "m", "eta", "delta", "eps", "S", "candidate"});
      h.ctx = context();
      h.carrier = object_expr(str(j, "carrier", ptr), ptr + "/carrier");
      std::string level = j.contains("level") ? str(j, "level", ptr) : "hopf";
      const std::map<std::string, Level> levels = {
          {"algebra", Level::algebra}, {"coalgebra", Level::coalgebra}, {"bialgebra", Level::bialgebra}, {"hopf", Level::hopf}};
      auto lv = levels.find(level);
      if (lv == levels.end()) fail_at(ptr + "/level", "expected algebra, coalgebra, bialgebra or hopf");
      h.level = lv->second;
      h.m = opt_map(j, "m", ptr);
      h.eta = opt_map(j, "eta", ptr);
      h.delta = opt_map(j, "delta", ptr);
      h.eps = opt_map(j, "eps", ptr);
      h.s = opt_map(j, "S", ptr);
      at(ptr, [&] { check_shapes(h); });
    }
    h.name = name;
    if (!candidate(j, ptr)) {
      Report r = at(ptr, [&] { return check_structure(h); });
      if (!r.passed()) fail_at(ptr, "structure '" + name + "' fails its validator: " + first_failure(r));
    }
    return structures_.emplace(name, std::move(h)).first->second;
  }

  // -- modules ---------------------------------------------------------------------

  static Report validate_module(const std::string& kind, const HopfStructure& h, const StructuredObject& x) {
    if (kind == "hopf_module") return check_hopf_module(h, x);
    if (kind == "right_hopf_module") return check_right_hopf_module(h, x.right_action(), x.right_coaction());
    if (kind == "twofold") return check_twofold(h, x);
    if (kind == "crossed_module") return check_crossed_module(h, x);
    if (kind == "left_crossed_module") return check_left_crossed_module(h, x);
    if (kind == "hopf_bimodule") return check_hopf_bimodule(h, x);
    if (kind == "left_module") return check_left_module(h, x.left_action());
    if (kind == "right_module") return check_right_module(h, x.right_action());
    if (kind == "left_comodule") return check_left_comodule(h, x.left_coaction());
    return check_right_comodule(h, x.right_coaction());
  }

  const std::string& module_over(const std::string& name) {
    module(name);
    return module_over_.at(name);
  }

  const StructuredObject& module(const std::string& name, const std::string& where = {}) {
    if (auto it = modules_.find(name); it != modules_.end()) return it->second;
    std::string ptr = ptr_of("modules", name);
    if (!declared("modules", name)) fail_at(where.empty() ? ptr : where, "unknown module '" + name + "'");
    Enter e(active_, "module " + name, ptr);
    const json& j = section("modules").at(name);
    StructuredObject x;
    std::string over;
    if (j.contains("perturb")) {
      allow(j, ptr, {"perturb", "which", "row", "col", "delta", "kind", "candidate"});
      std::string base = str(j, "perturb", ptr);
      x = module(base, ptr + "/perturb");
      over = module_over(base);
      std::string which = str(j, "which", ptr);
      std::optional<GradedMap>* slot = which == "mu_l" ? &x.mu_l : which == "mu_r" ? &x.mu_r
                                       : which == "nu_l" ? &x.nu_l : which == "nu_r" ? &x.nu_r : nullptr;
      if (!slot || !*slot) fail_at(ptr + "/which", "module '" + base + "' has no map '" + which + "'");
      Scalar d = scalar(need(j, "delta", ptr), x.carrier.field(), ptr + "/delta");
      at(ptr, [&] {
        Matrix m = (*slot)->matrix();
        m.add(count(j, "row", ptr, 0), count(j, "col", ptr, 0), d);
        *slot = GradedMap((*slot)->dom(), (*slot)->cod(), std::move(m), (*slot)->name());
      });
    } else {
      over = str(j, "over", ptr);
      const HopfStructure& h = structure(over, ptr + "/over");
      if (j.contains("derived")) {
        std::string d = str(j, "derived", ptr);
        if (d == "free") {
          allow(j, ptr, {"over", "derived", "space", "kind", "candidate"});
          GradedSpace v = object_expr(str(j, "space", ptr), ptr + "/space", h.carrier.ambient());
          x = at(ptr, [&] { return smash_embed(h, v); });
        } else if (d == "cross_product") {
          allow(j, ptr, {"over", "derived", "of", "kind", "candidate"});
          const StructuredObject& y = module(str(j, "of", ptr), ptr + "/of");
          x = at(ptr, [&] { return cross_product(h, y); });
        } else if (d == "side_convert") {
          allow(j, ptr, {"over", "derived", "of", "variant", "kind", "candidate"});
          const StructuredObject& y = module(str(j, "of", ptr), ptr + "/of");
          std::string variant = str(j, "variant", ptr);
          x = at(ptr, [&] { return side_convert(h, y, variant); });
        } else if (d == "line_crossed") {
          allow(j, ptr, {"over", "derived", "example", "kind", "candidate"});
          const Example& ex = example(str(j, "example", ptr), ptr + "/example");
          if (!ex.line) fail_at(ptr + "/example", "expected a braided_line or taft example");
          x = ex.line->crossed;
        } else {
          allow(j, ptr, {"over", "derived", "kind", "candidate"});
          x = at(ptr, [&]() -> StructuredObject {
            if (d == "regular") return regular(h);
            if (d == "trivial") return trivial_object(h);
            if (d == "adjoint") return adjoint_crossed_module(h).ad;
            if (d == "coadjoint") return adjoint_crossed_module(h).coad;
            if (d == "unit_crossed") return unit_crossed_module(h);
            fail_at(ptr + "/derived",
                    "expected regular, trivial, adjoint, coadjoint, unit_crossed, free, cross_product, side_convert or line_crossed");
          });
        }
      } else {
        allow(j, ptr, {"over", "carrier", "mu_l", "mu_r", "nu_l", "nu_r", "kind", "candidate"});
        x.carrier = object_expr(str(j, "carrier", ptr), ptr + "/carrier", h.carrier.ambient());
        x.mu_l = opt_map(j, "mu_l", ptr);
        x.mu_r = opt_map(j, "mu_r", ptr);
        x.nu_l = opt_map(j, "nu_l", ptr);
        x.nu_r = opt_map(j, "nu_r", ptr);
      }
    }
    x.name = name;
    if (j.contains("kind")) {
      std::string kind = str(j, "kind", ptr);
      if (!kModuleValidators.count(kind)) fail_at(ptr + "/kind", "unknown module kind '" + kind + "'");
      if (!candidate(j, ptr)) {
        const HopfStructure& h = structure(over);
        Report r = at(ptr, [&] { return validate_module(kind, h, x); });
        if (!r.passed()) fail_at(ptr, "module '" + name + "' fails its " + kind + " validator: " + first_failure(r));
      }
    }
    module_over_[name] = over;
    return modules_.emplace(name, std::move(x)).first->second;
  }

  // -- bialgebras and projections -------------------------------------------------

  const CrossedBialgebra& bialgebra(const std::string& name, const std::string& where = {}) {
    if (auto it = bialgebras_.find(name); it != bialgebras_.end()) return it->second;
    std::string ptr = ptr_of("bialgebras", name);
    if (!declared("bialgebras", name)) fail_at(where.empty() ? ptr : where, "unknown bialgebra '" + name + "'");
    Enter e(active_, "bialgebra " + name, ptr);
    const json& j = section("bialgebras").at(name);
    CrossedBialgebra cb;
    if (j.contains("example")) {
      allow(j, ptr, {"example", "candidate"});
      const Example& ex = example(str(j, "example", ptr), ptr + "/example");
      if (!ex.line) fail_at(ptr + "/example", "expected a braided_line example");
      cb = {ex.line->group, ex.line->crossed, ex.line->plain};
    } else {
      allow(j, ptr, {"over", "module", "algebra", "candidate"});
      cb.h = structure(str(j, "over", ptr), ptr + "/over");
      cb.module = module(str(j, "module", ptr), ptr + "/module");
      cb.alg = structure(str(j, "algebra", ptr), ptr + "/algebra");
    }
    if (!candidate(j, ptr)) {
      Report r = at(ptr, [&] { return check_crossed_bialgebra(cb); });
      if (!r.passed()) fail_at(ptr, "bialgebra '" + name + "' fails its validator: " + first_failure(r));
    }
    return bialgebras_.emplace(name, std::move(cb)).first->second;
  }

  const BialgebraProjection& projection(const std::string& name, const std::string& where = {}) {
    if (auto it = projections_.find(name); it != projections_.end()) return it->second;
    std::string ptr = ptr_of("projections", name);
    if (!declared("projections", name)) fail_at(where.empty() ? ptr : where, "unknown projection '" + name + "'");
    Enter e(active_, "projection " + name, ptr);
    const json& j = section("projections").at(name);
    BialgebraProjection p;
    if (j.contains("bosonization")) {
      allow(j, ptr, {"bosonization", "candidate"});
      const CrossedBialgebra& cb = bialgebra(str(j, "bosonization", ptr), ptr + "/bosonization");
      p = at(ptr, [&] { return bosonize(cb).projection; });
    } else if (j.contains("trivial")) {
      allow(j, ptr, {"trivial", "candidate"});
      const HopfStructure& h = structure(str(j, "trivial", ptr), ptr + "/trivial");
      p = {h, h, h.id(), h.id()};
    } else {
      allow(j, ptr, {"over", "bialgebra", "inj", "proj", "candidate"});
      p.h = structure(str(j, "over", ptr), ptr + "/over");
      p.b = structure(str(j, "bialgebra", ptr), ptr + "/bialgebra");
      p.inj = map(str(j, "inj", ptr), ptr + "/inj");
      p.proj = map(str(j, "proj", ptr), ptr + "/proj");
    }
    if (!candidate(j, ptr)) {
      Report r = at(ptr, [&] { return check_projection(p); });
      if (!r.passed()) fail_at(ptr, "projection '" + name + "' fails its validator: " + first_failure(r));
    }
    return projections_.emplace(name, std::move(p)).first->second;
  }

  // -- checks ----------------------------------------------------------------------

  std::vector<StructuredObject> module_list(const json& j, const char* key, const std::string& ptr, std::size_t n = 0) {
    std::vector<std::string> names = strs(j, key, ptr);
    if (n && names.size() != n) fail_at(ptr + "/" + key, "expected exactly " + std::to_string(n) + " modules");
    if (names.empty() && n) fail_at(ptr + "/" + key, "expected at least one module");
    std::vector<StructuredObject> out;
    for (std::size_t i = 0; i < names.size(); ++i) out.push_back(module(names[i], ptr + "/" + key + "/" + std::to_string(i)));
    return out;
  }

  Environment environment(const HopfStructure& anchor, const std::string& ptr) {
    Environment env(anchor.ctx);
    const BraidedContext& c = *anchor.ctx;
    auto bindable = [&](const std::string& n) {
      return !env.objects().count(n) && !env.maps().count(n);
    };
    at(ptr, [&] {
      for (const auto& [n, h] : structures_) {
        if (*h.ctx == c && bindable(n)) env.bind_structure(n, h);
      }
      for (const auto& [n, x] : modules_) {
        if (*structures_.at(module_over_.at(n)).ctx == c && bindable(n)) env.bind_object(n, x);
      }
      for (const auto& [n, x] : objects_) {
        if (*x.ambient() == *c.ambient() && bindable(n)) env.add_object(n, x);
      }
      for (const auto& [n, f] : maps_) {
        if (*f.dom().ambient() == *c.ambient() && bindable(n)) env.add_map(n, f);
      }
    });
    return env;
  }

  PreparedCheck prepare(const json& j, const std::string& ptr);
};

PreparedCheck Loader::prepare(const json& j, const std::string& ptr) {
  PreparedCheck pc;
  pc.info.name = str(j, "name", ptr);
  pc.info.kind = str(j, "kind", ptr);
  const std::string& kind = pc.info.kind;
  auto over = [&] { return structure(str(j, "over", ptr), ptr + "/over"); };
  auto module1 = [&] { return module(str(j, "module", ptr), ptr + "/module"); };

  if (kind == "structure" || kind == "antipode") {
    allow(j, ptr, {"name", "kind", "of"});
    HopfStructure h = structure(str(j, "of", ptr), ptr + "/of");
    if (kind == "structure") pc.body = [h] { return check_structure(h); };
    else pc.body = [h] { return check_antipode_laws(h); };
  } else if (kind == "hopf_module" || kind == "right_hopf_module" || kind == "crossed_module" ||
             kind == "left_crossed_module" || kind == "hopf_bimodule" || kind == "side_conversions") {
    allow(j, ptr, {"name", "kind", "over", "module"});
    HopfStructure h = over();
    StructuredObject x = module1();
    if (kind == "side_conversions") pc.body = [h, x] { return check_side_conversions(h, x); };
    else pc.body = [h, x, kind] { return validate_module(kind, h, x); };
  } else if (kind == "twofold") {
    allow(j, ptr, {"name", "kind", "over", "module"});
    HopfStructure h = over();
    StructuredObject x = module1();
    pc.body = [h, x] {
      Report r;
      r.merge(check_twofold(h, x), "axioms");
      r.merge(twofold_ops(h, x).report, "ops");
      return r;
    };
  } else if (kind == "coinvariants") {
    allow(j, ptr, {"name", "kind", "over", "module"});
    HopfStructure h = over();
    StructuredObject x = module1();
    pc.body = [h, x] {
      Report r;
      r.merge(check_pi(h, x), "pi");
      Split s = coinvariants(h, x);
      r.merge(check_coinvariant_legs(h, x, s), "legs");
      r.merge(check_natural_isos(h, x, natural_isos(h, x)), "iso");
      return r;
    };
  } else if (kind == "structure_theorem") {
    allow(j, ptr, {"name", "kind", "over", "modules", "max_dim"});
    HopfStructure h = over();
    std::vector<StructuredObject> xs = module_list(j, "modules", ptr);
    std::size_t d = count(j, "max_dim", ptr, 3);
    pc.body = [h, xs, d] { return verify_structure_theorem(h, xs, sample_spaces(h, d)); };
  } else if (kind == "tensor_over_h") {
    allow(j, ptr, {"name", "kind", "over", "right", "left"});
    HopfStructure h = over();
    StructuredObject n = module(str(j, "right", ptr), ptr + "/right"), m = module(str(j, "left", ptr), ptr + "/left");
    pc.body = [h, n, m] {
      Report r;
      TensorOverH t = tensor_over_h(h, n.right_action(), m);
      r.merge(check_tensor_over_h(h, n.right_action(), m, t), "tensor");
      CotensorOverH c = cotensor_over_h(h, n.right_coaction(), m);
      r.merge(check_cotensor_over_h(h, n.right_coaction(), m, c), "cotensor");
      r.merge(check_phi(h, n.right_action(), n.right_coaction(), m), "phi");
      return r;
    };
  } else if (kind == "hopf_module_braiding" || kind == "yd_braiding" || kind == "hbm_braiding") {
    allow(j, ptr, {"name", "kind", "over", "modules"});
    HopfStructure h = over();
    std::vector<StructuredObject> xs = module_list(j, "modules", ptr, 3);
    if (kind == "hopf_module_braiding") pc.body = [h, xs] { return check_hopfmod_braiding(h, xs[0], xs[1], xs[2]); };
    else if (kind == "hbm_braiding") pc.body = [h, xs] { return check_hbm_braiding(h, xs[0], xs[1], xs[2]); };
    else
      pc.body = [h, xs] {
        Report r;
        r.merge(check_yd_braiding(h, xs[0], xs[1], xs[2]), "braiding");
        r.merge(check_yang_baxter(h, xs[0]), "yang_baxter");
        r.merge(check_yd_naturality(h, xs[0], xs[0], xs[0].id(), xs[1], xs[1], xs[1].id()), "naturality");
        return r;
      };
  } else if (kind == "yd_equivalence") {
    allow(j, ptr, {"name", "kind", "over", "bimodules", "crossed"});
    HopfStructure h = over();
    std::vector<StructuredObject> b = module_list(j, "bimodules", ptr), c = module_list(j, "crossed", ptr);
    pc.body = [h, b, c] { return verify_equivalence(h, b, c); };
  } else if (kind == "schauenburg" || kind == "relative_antipode") {
    allow(j, ptr, {"name", "kind", "over", "modules"});
    HopfStructure h = over();
    std::vector<StructuredObject> xs = module_list(j, "modules", ptr, 2);
    if (kind == "schauenburg") pc.body = [h, xs] { return schauenburg_braiding(h, xs[0], xs[1]).report; };
    else pc.body = [h, xs] { return check_relative_antipode_identities(h, xs[0], xs[1]); };
  } else if (kind == "projection" || kind == "hbm_bialgebra") {
    allow(j, ptr, {"name", "kind", "projection"});
    BialgebraProjection p = projection(str(j, "projection", ptr), ptr + "/projection");
    if (kind == "projection") pc.body = [p] { return check_projection(p); };
    // F only sees m on B⊗ᵦB^coH, so a source that is no bialgebra can still
    // induce a valid Hopf bimodule bialgebra; check the source as well.
    else
      pc.body = [p] {
        Report r;
        r.merge(check_structure(p.b), "source");
        r.merge(check_hbm_bialgebra(project_F(p)), "induced");
        return r;
      };
  } else if (kind == "projection_theorem") {
    allow(j, ptr, {"name", "kind", "projections"});
    std::vector<BialgebraProjection> ps;
    std::vector<std::string> names = strs(j, "projections", ptr);
    for (std::size_t i = 0; i < names.size(); ++i)
      ps.push_back(projection(names[i], ptr + "/projections/" + std::to_string(i)));
    pc.body = [ps] { return verify_projection_theorem(ps); };
  } else if (kind == "crossed_bialgebra" || kind == "admissible") {
    allow(j, ptr, {"name", "kind", "bialgebra"});
    CrossedBialgebra cb = bialgebra(str(j, "bialgebra", ptr), ptr + "/bialgebra");
    if (kind == "admissible") pc.body = [cb] { return check_admissible(cb); };
    else pc.body = [cb] { return check_crossed_bialgebra(cb); };
  } else if (kind == "bosonization") {
    allow(j, ptr, {"name", "kind", "bialgebras"});
    std::vector<CrossedBialgebra> cbs;
    std::vector<std::string> names = strs(j, "bialgebras", ptr);
    for (std::size_t i = 0; i < names.size(); ++i)
      cbs.push_back(bialgebra(names[i], ptr + "/bialgebras/" + std::to_string(i)));
    pc.body = [cbs] { return verify_bosonization(cbs); };
  } else if (kind == "equal") {
    allow(j, ptr, {"name", "kind", "context", "lhs", "rhs"});
    HopfStructure anchor = structure(str(j, "context", ptr), ptr + "/context");
    MorTerm lhs = at(ptr + "/lhs", [&] { return parse_term(str(j, "lhs", ptr)); });
    MorTerm rhs = at(ptr + "/rhs", [&] { return parse_term(str(j, "rhs", ptr)); });
    // Checks are prepared after every declaration is resolved, so the
    // environment sees all of them.
    Environment env = environment(anchor, ptr);
    pc.body = [env, lhs, rhs] { return assert_equal("holds", lhs, rhs, env); };
  } else {
    fail_at(ptr + "/kind", "unknown check kind '" + kind + "'");
  }
  return pc;
}

void Loader::load_all(Scenario::Impl& out) {
  allow(doc_, "", {"schema", "name", "description", "context", "objects", "maps", "structures", "modules", "bialgebras",
                   "projections", "checks"});
  if (!doc_.contains("schema") || doc_.at("schema") != scenario_schema)
    fail_at("/schema", std::string("expected \"") + scenario_schema + "\"");
  out.name = str(doc_, "name", "");
  for (const char* s : {"context", "objects", "maps", "structures", "modules", "bialgebras", "projections"}) {
    if (!section(s).is_object()) fail_at(std::string("/") + s, "expected an object");
  }
  context();
  for (const auto& [n, v] : section("objects").items()) object(n, ptr_of("objects", n));
  for (const auto& [n, v] : section("structures").items()) structure(n);
  for (const auto& [n, v] : section("modules").items()) module(n);
  for (const auto& [n, v] : section("maps").items()) map(n, ptr_of("maps", n));
  for (const auto& [n, v] : section("bialgebras").items()) bialgebra(n);
  for (const auto& [n, v] : section("projections").items()) projection(n);

  auto it = doc_.find("checks");
  if (it == doc_.end()) return;
  if (!it->is_array()) fail_at("/checks", "expected an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < it->size(); ++i) {
    std::string ptr = "/checks/" + std::to_string(i);
    PreparedCheck pc = prepare((*it)[i], ptr);
    const std::string& n = pc.info.name;
    bool ok = !n.empty() && std::all_of(n.begin(), n.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    });
    if (!ok) fail_at(ptr + "/name", "check names use letters, digits, '_' and '-'");
    if (!seen.insert(n).second) fail_at(ptr + "/name", "duplicate check name '" + n + "'");
    out.checks.push_back(pc.info);
    out.prepared.push_back(std::move(pc));
  }
}

}  // namespace

// ---- Scenario ------------------------------------------------------------------

Scenario Scenario::load_string(std::string_view text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Report the byte offset as line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw Error(ErrorKind::parse, origin + ": line " + std::to_string(line) + ", column " + std::to_string(col) +
                                      ": invalid JSON (" + e.what() + ")");
  }
  auto impl = std::make_shared<Impl>();
  try {
    if (!doc.is_object()) fail_at("", "a scenario is a JSON object");
    reject_floats(doc, "");
    Loader(doc).load_all(*impl);
  } catch (const Error& e) {
    throw Error(e.kind(), origin + ": " + e.what());
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(doc.dump())));
  impl->digest = std::string("fnv1a64:") + hex;
  return Scenario(std::move(impl));
}

Scenario Scenario::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::load, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_string(ss.str(), path);
}

const std::string& Scenario::name() const { return impl_->name; }
const std::string& Scenario::digest() const { return impl_->digest; }
const std::vector<ScenarioCheck>& Scenario::checks() const { return impl_->checks; }

Report Scenario::run(const std::optional<std::vector<std::string>>& selection, unsigned jobs) const {
  std::vector<const PreparedCheck*> todo;
  if (!selection) {
    for (const PreparedCheck& p : impl_->prepared) todo.push_back(&p);
  } else {
    std::set<std::string> want(selection->begin(), selection->end());
    for (const std::string& n : want) {
      auto it = std::find_if(impl_->prepared.begin(), impl_->prepared.end(),
                             [&](const PreparedCheck& p) { return p.info.name == n; });
      if (it == impl_->prepared.end()) throw Error(ErrorKind::load, "no check named '" + n + "' in " + impl_->name);
      todo.push_back(&*it);
    }
  }
  auto run_one = [](const PreparedCheck* p) {
    Report r;
    guarded(r, p->info.name, [&] { r.merge(p->body(), p->info.name); });
    if (r.size() == 0) r.pass(p->info.name, "no sub-checks");
    return r;
  };
  std::vector<Report> results(todo.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < todo.size(); ++i) results[i] = run_one(todo[i]);
  } else {
    for (std::size_t start = 0; start < todo.size(); start += jobs) {
      std::vector<std::future<Report>> fs;
      for (std::size_t i = start; i < todo.size() && i < start + jobs; ++i)
        fs.push_back(std::async(std::launch::async, run_one, todo[i]));
      for (std::size_t i = 0; i < fs.size(); ++i) results[start + i] = fs[i].get();
    }
  }
  std::vector<CheckResult> all;
  for (const Report& r : results) all.insert(all.end(), r.checks().begin(), r.checks().end());
  std::stable_sort(all.begin(), all.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  Report out;
  for (CheckResult& c : all) out.add(std::move(c));
  return out;
}

const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> kinds = {
      "admissible",      "antipode",          "bosonization",       "coinvariants",        "crossed_bialgebra",
      "crossed_module",  "equal",             "hbm_bialgebra",      "hbm_braiding",        "hopf_bimodule",
      "hopf_module",     "hopf_module_braiding", "left_crossed_module", "projection",       "projection_theorem",
      "relative_antipode", "right_hopf_module", "schauenburg",      "side_conversions",    "structure",
      "structure_theorem", "tensor_over_h",   "twofold",            "yd_braiding",         "yd_equivalence"};
  return kinds;
}

// ---- reports ---------------------------------------------------------------------

namespace {

std::string residual_text(const ResidualSummary& s) {
  return "residual " + std::to_string(s.nonzero) + " nonzero, max block entry [" + s.row_label + ", " + s.col_label +
         "] = " + s.value + " in degree " + s.degree;
}

std::size_t count_status(const Report& r, Status s) {
  return static_cast<std::size_t>(std::count_if(r.checks().begin(), r.checks().end(),
                                                [&](const CheckResult& c) { return c.status == s; }));
}

}  // namespace

std::string emit_human(const RunReport& rr) {
  std::ostringstream o;
  o << "braidhopf " << rr.engine << "  scenario " << rr.scenario << "  " << rr.digest << "\n";
  for (const CheckResult& c : rr.report.checks()) {
    o << (c.status == Status::pass ? "pass " : c.status == Status::fail ? "FAIL " : "ERROR") << "  " << c.name;
    if (c.status != Status::pass) {
      if (c.residual) o << "  " << residual_text(*c.residual);
      if (!c.detail.empty()) o << "  " << c.detail;
    }
    o << "\n";
  }
  o << count_status(rr.report, Status::pass) << "/" << rr.report.size() << " checks passed\n";
  return o.str();
}

std::string emit_machine(const RunReport& rr) {
  json checks = json::array();
  for (const CheckResult& c : rr.report.checks()) {
    json e = {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
    if (c.residual) {
      e["residual"] = {{"nonzero", c.residual->nonzero}, {"row", c.residual->row_label}, {"col", c.residual->col_label},
                       {"value", c.residual->value}, {"degree", c.residual->degree}};
    }
    checks.push_back(std::move(e));
  }
  json doc = {{"schema", report_schema},
              {"engine", rr.engine},
              {"scenario", rr.scenario},
              {"digest", rr.digest},
              {"status", rr.report.passed() ? "pass" : "fail"},
              {"summary",
               {{"checks", rr.report.size()},
                {"passed", count_status(rr.report, Status::pass)},
                {"failed", count_status(rr.report, Status::fail)},
                {"errors", count_status(rr.report, Status::error)}}},
              {"checks", std::move(checks)}};
  return doc.dump(2) + "\n";
}

RunReport parse_machine(std::string_view text) {
  RunReport rr;
  try {
    json doc = json::parse(text);
    if (doc.at("schema") != report_schema) throw Error(ErrorKind::parse, "not a braidhopf report");
    rr.engine = doc.at("engine").get<std::string>();
    rr.scenario = doc.at("scenario").get<std::string>();
    rr.digest = doc.at("digest").get<std::string>();
    for (const json& e : doc.at("checks")) {
      CheckResult c;
      c.name = e.at("name").get<std::string>();
      std::string st = e.at("status").get<std::string>();
      if (st == "pass") c.status = Status::pass;
      else if (st == "fail") c.status = Status::fail;
      else if (st == "error") c.status = Status::error;
      else throw Error(ErrorKind::parse, "unknown status '" + st + "'");
      c.detail = e.at("detail").get<std::string>();
      if (e.contains("residual")) {
        const json& r = e.at("residual");
        c.residual = ResidualSummary{r.at("nonzero").get<std::size_t>(), r.at("row").get<std::string>(),
                                     r.at("col").get<std::string>(), r.at("value").get<std::string>(),
                                     r.at("degree").get<std::string>()};
      }
      rr.report.add(std::move(c));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed report: ") + e.what());
  }
  return rr;
}

}  // namespace braidhopf
