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

#include "braidhopf/dsl.hpp"

#include <cctype>

#include "braidhopf/error.hpp"

namespace braidhopf {

// ---- AST -------------------------------------------------------------------

MorTerm MorTerm::generator(std::string name) {
  MorTerm t;
  t.kind = Kind::name;
  t.name = std::move(name);
  return t;
}

MorTerm MorTerm::identity(ObjExpr x) {
  MorTerm t;
  t.kind = Kind::id;
  t.objects = {std::move(x)};
  return t;
}

MorTerm MorTerm::braid(ObjExpr x, ObjExpr y, bool inverse) {
  MorTerm t;
  t.kind = inverse ? Kind::braid_inv : Kind::braid;
  t.objects = {std::move(x), std::move(y)};
  return t;
}

namespace {

MorTerm flattened(MorTerm::Kind kind, std::vector<MorTerm> parts) {
  if (parts.empty()) throw Error(ErrorKind::parse, "empty product in morphism term");
  if (parts.size() == 1) return std::move(parts.front());
  MorTerm t;
  t.kind = kind;
  t.line = parts.front().line;
  t.col = parts.front().col;
  for (MorTerm& p : parts) {
    if (p.kind == kind) {
      for (MorTerm& c : p.children) t.children.push_back(std::move(c));
    } else {
      t.children.push_back(std::move(p));
    }
  }
  return t;
}

}  // namespace

MorTerm MorTerm::compose(std::vector<MorTerm> parts) { return flattened(Kind::compose, std::move(parts)); }
MorTerm MorTerm::tensor(std::vector<MorTerm> parts) { return flattened(Kind::tensor, std::move(parts)); }

bool operator==(const MorTerm& a, const MorTerm& b) {
  return a.kind == b.kind && a.name == b.name && a.objects == b.objects && a.children == b.children;
}

std::string print(const ObjExpr& x) {
  if (x.factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < x.factors.size(); ++i) s += (i ? " x " : "") + x.factors[i];
  return s;
}

std::string print(const MorTerm& t) {
  using K = MorTerm::Kind;
  switch (t.kind) {
    case K::name: return t.name;
    case K::id: return "id(" + print(t.objects[0]) + ")";
    case K::braid:
    case K::braid_inv:
      return std::string(t.kind == K::braid ? "braid(" : "braid_inv(") + print(t.objects[0]) + ", " +
             print(t.objects[1]) + ")";
    case K::compose: {
      std::string s;
      for (std::size_t i = 0; i < t.children.size(); ++i) s += (i ? " o " : "") + print(t.children[i]);
      return s;
    }
    case K::tensor: {
      std::string s;
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        const MorTerm& c = t.children[i];
        std::string p = print(c);
        s += (i ? " x " : "") + (c.kind == K::compose ? "(" + p + ")" : p);
      }
      return s;
    }
  }
  return {};
}

// ---- parser ----------------------------------------------------------------

namespace {

enum class Tok { name, one, lparen, rparen, comma, o, x, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

std::string where(std::size_t line, std::size_t col) {
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto is_name = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line, col = 1, ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col, ++i;
      continue;
    }
    std::size_t start = col;
    if (c == '(' || c == ')' || c == ',') {
      out.push_back({c == '(' ? Tok::lparen : c == ')' ? Tok::rparen : Tok::comma, std::string(1, c), line, start});
      ++col, ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && is_name(src[j])) ++j;
      std::string w(src.substr(i, j - i));
      Tok k = Tok::name;
      if (w == "o") k = Tok::o;
      else if (w == "x") k = Tok::x;
      else if (w == "1") k = Tok::one;
      else if (std::isdigit(static_cast<unsigned char>(w[0])))
        throw Error(ErrorKind::parse, "unexpected number '" + w + "' at " + where(line, start));
      else if (w.back() == '.' || w.find("..") != std::string::npos)
        throw Error(ErrorKind::parse, "malformed name '" + w + "' at " + where(line, start));
      out.push_back({k, w, line, start});
      col += j - i;
      i = j;
      continue;
    }
    throw Error(ErrorKind::parse, std::string("unexpected character '") + c + "' at " + where(line, start));
  }
  out.push_back({Tok::end, "end of input", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  MorTerm whole_term() {
    MorTerm t = term();
    expect_end();
    return t;
  }
  ObjExpr whole_object() {
    ObjExpr x = object();
    expect_end();
    return x;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw Error(ErrorKind::parse, "expected " + expected + " at " + where(t.line, t.col) + ", found '" + t.text + "'");
  }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(what);
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Tok::end) fail("'o', 'x' or end of input");
  }

  MorTerm term() {
    std::vector<MorTerm> parts{tensor_term()};
    while (peek().kind == Tok::o) {
      ++pos_;
      parts.push_back(tensor_term());
    }
    return MorTerm::compose(std::move(parts));
  }

  MorTerm tensor_term() {
    std::vector<MorTerm> parts{primary()};
    while (peek().kind == Tok::x) {
      ++pos_;
      parts.push_back(primary());
    }
    return MorTerm::tensor(std::move(parts));
  }

  MorTerm primary() {
    const Token& t = peek();
    std::size_t line = t.line, col = t.col;
    MorTerm out;
    if (t.kind == Tok::lparen) {
      ++pos_;
      out = term();
      expect(Tok::rparen, "')'");
      return out;  // keeps the inner position
    }
    if (t.kind != Tok::name) fail("a morphism term");
    std::string w = next().text;
    bool call = peek().kind == Tok::lparen;
    if (call && w == "id") {
      ++pos_;
      ObjExpr x = object();
      expect(Tok::rparen, "')'");
      out = MorTerm::identity(std::move(x));
    } else if (call && (w == "braid" || w == "braid_inv")) {
      ++pos_;
      ObjExpr x = object();
      expect(Tok::comma, "','");
      ObjExpr y = object();
      expect(Tok::rparen, "')'");
      out = MorTerm::braid(std::move(x), std::move(y), w == "braid_inv");
    } else if (w == "id" || w == "braid" || w == "braid_inv") {
      fail("'(' after '" + w + "'");
    } else {
      out = MorTerm::generator(w);
    }
    out.line = line;
    out.col = col;
    return out;
  }

  ObjExpr object() {
    ObjExpr x;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::lparen) {
        ++pos_;
        ObjExpr inner = object();
        expect(Tok::rparen, "')'");
        x.factors.insert(x.factors.end(), inner.factors.begin(), inner.factors.end());
      } else if (t.kind == Tok::one) {
        ++pos_;
      } else if (t.kind == Tok::name) {
        x.factors.push_back(next().text);
      } else {
        fail("an object");
      }
      if (peek().kind != Tok::x) return x;
      ++pos_;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

MorTerm parse_term(std::string_view src) { return Parser(src).whole_term(); }
ObjExpr parse_object(std::string_view src) { return Parser(src).whole_object(); }

// ---- environment -------------------------------------------------------------

Environment::Environment(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw Error(ErrorKind::precondition, "environment needs a braided context");
}

namespace {

void check_name(const std::string& name) {
  std::vector<Token> t = lex(name);
  if (t.size() != 2 || t[0].kind != Tok::name || name == "id" || name == "braid" || name == "braid_inv")
    throw Error(ErrorKind::precondition, "'" + name + "' is not a usable name");
}

template <class T>
const T& resolve(const std::map<std::string, T>& table, const std::string& name, const char* what) {
  if (auto it = table.find(name); it != table.end()) return it->second;
  std::vector<std::pair<const std::string*, const T*>> hits;
  std::string suffix = "." + name;
  for (const auto& [k, v] : table) {
    if (k.size() > suffix.size() && k.compare(k.size() - suffix.size(), suffix.size(), suffix) == 0) hits.push_back({&k, &v});
  }
  if (hits.empty()) throw Error(ErrorKind::lookup, std::string("unknown ") + what + " '" + name + "'");
  if (hits.size() > 1) {
    std::string c;
    for (const auto& h : hits) c += (c.empty() ? "" : ", ") + *h.first;
    throw Error(ErrorKind::lookup, std::string("ambiguous ") + what + " '" + name + "': " + c);
  }
  return *hits.front().second;
}

}  // namespace

void Environment::add_object(const std::string& name, const GradedSpace& x) {
  check_name(name);
  if (!(*x.ambient() == *ctx_->ambient()))
    throw Error(ErrorKind::precondition, "object '" + name + "' lives over a different field or group");
  if (!objects_.emplace(name, x).second) throw Error(ErrorKind::precondition, "object '" + name + "' declared twice");
}

void Environment::add_map(const std::string& name, const GradedMap& f) {
  check_name(name);
  if (!(*f.dom().ambient() == *ctx_->ambient()))
    throw Error(ErrorKind::precondition, "map '" + name + "' lives over a different field or group");
  if (!maps_.emplace(name, f).second) throw Error(ErrorKind::precondition, "map '" + name + "' declared twice");
}

void Environment::bind_structure(const std::string& ns, const HopfStructure& h) {
  add_object(ns, h.carrier);
  const std::pair<const char*, const std::optional<GradedMap>*> roles[] = {
      {"m", &h.m}, {"eta", &h.eta}, {"delta", &h.delta}, {"eps", &h.eps}, {"S", &h.s}};
  for (const auto& [role, f] : roles) {
    if (*f) add_map(ns + "." + role, **f);
  }
}

void Environment::bind_object(const std::string& ns, const StructuredObject& x) {
  add_object(ns, x.carrier);
  const std::tuple<const char*, const char*, const std::optional<GradedMap>*> roles[] = {
      {"act_l", "mu_l", &x.mu_l}, {"act_r", "mu_r", &x.mu_r}, {"coact_l", "nu_l", &x.nu_l}, {"coact_r", "nu_r", &x.nu_r}};
  for (const auto& [a, b, f] : roles) {
    if (!*f) continue;
    add_map(ns + "." + a, **f);
    add_map(ns + "." + b, **f);
  }
}

const GradedSpace& Environment::object(const std::string& name) const { return resolve(objects_, name, "object"); }
const GradedMap& Environment::map(const std::string& name) const { return resolve(maps_, name, "map"); }

// ---- evaluation --------------------------------------------------------------

namespace {

bool same_degrees(const GradedSpace& a, const GradedSpace& b) {
  if (a.dim() != b.dim() || !(*a.ambient() == *b.ambient())) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.degree(i) != b.degree(i)) return false;
  }
  return true;
}

std::string show(const GradedSpace& x) {
  std::string s = x.describe() + " {";
  for (std::size_t i = 0; i < x.dim() && i < 8; ++i) s += (i ? ", " : "") + x.label(i);
  if (x.dim() > 8) s += ", ...";
  return s + "}";
}

}  // namespace

GradedSpace evaluate(const ObjExpr& x, const Environment& env) {
  GradedSpace out = GradedSpace::unit(env.context()->ambient());
  for (const std::string& f : x.factors) out = tensor(out, env.object(f));
  return out;
}

GradedMap evaluate(const MorTerm& t, const Environment& env) {
  using K = MorTerm::Kind;
  switch (t.kind) {
    case K::name: return env.map(t.name);
    case K::id: return id(evaluate(t.objects[0], env));
    case K::braid:
      return env.context()->psi(evaluate(t.objects[0], env), evaluate(t.objects[1], env));
    case K::braid_inv:
      return env.context()->psi_inv(evaluate(t.objects[0], env), evaluate(t.objects[1], env));
    case K::tensor: {
      GradedMap acc = evaluate(t.children[0], env);
      for (std::size_t i = 1; i < t.children.size(); ++i) acc = tensor(acc, evaluate(t.children[i], env));
      return acc;
    }
    case K::compose: {
      std::size_t n = t.children.size();
      GradedMap acc = evaluate(t.children[n - 1], env);
      for (std::size_t i = n - 1; i-- > 0;) {
        GradedMap g = evaluate(t.children[i], env);
        if (!same_degrees(acc.cod(), g.dom())) {
          MorTerm rest = MorTerm::compose({t.children.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.children.end()});
          throw Error(ErrorKind::composition, "type mismatch in '" + print(t) + "': '" + print(t.children[i]) +
                                                  "' expects " + show(g.dom()) + " but '" + print(rest) +
                                                  "' yields " + show(acc.cod()));
        }
        acc = compose_relabel(g, acc);
      }
      return acc;
    }
  }
  throw Error(ErrorKind::consistency, "unreachable term kind");
}

Report assert_equal(const std::string& name, const MorTerm& lhs, const MorTerm& rhs, const Environment& env) {
  Report r;
  guarded(r, name, [&] {
    GradedMap a = evaluate(lhs, env), b = evaluate(rhs, env);
    if (!same_degrees(a.dom(), b.dom()) || !same_degrees(a.cod(), b.cod())) {
      r.fail(name, "sides have different types: " + show(a.dom()) + " -> " + show(a.cod()) + " versus " +
                       show(b.dom()) + " -> " + show(b.cod()));
      return;
    }
    check_equal(r, name, a, b.retyped(a.dom(), a.cod()));
  });
  return r;
}

Report assert_equal(const std::string& name, std::string_view lhs, std::string_view rhs, const Environment& env) {
  Report r;
  guarded(r, name, [&] { r = assert_equal(name, parse_term(lhs), parse_term(rhs), env); });
  return r;
}

}  // namespace braidhopf
