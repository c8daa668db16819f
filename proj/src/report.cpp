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

#include "braidhopf/report.hpp"

#include <map>

namespace braidhopf {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "?";
}

void Report::pass(std::string name, std::string detail) { add({std::move(name), Status::pass, std::move(detail), {}}); }
void Report::fail(std::string name, std::string detail) { add({std::move(name), Status::fail, std::move(detail), {}}); }
void Report::error(std::string name, std::string detail) { add({std::move(name), Status::error, std::move(detail), {}}); }

void Report::merge(const Report& other, const std::string& prefix) {
  for (CheckResult c : other.checks_) {
    if (!prefix.empty()) c.name = prefix + "." + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.status != Status::pass;
  return n;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string Report::summary() const {
  std::string s;
  for (const auto& c : checks_) {
    s += std::string(to_string(c.status)) + "  " + c.name;
    if (!c.detail.empty()) s += "  (" + c.detail + ")";
    if (c.residual) {
      s += "  residual " + std::to_string(c.residual->nonzero) + " nonzero, at [" + c.residual->row_label + ", " +
           c.residual->col_label + "] = " + c.residual->value;
    }
    s += "\n";
  }
  return s;
}

std::optional<ResidualSummary> residual(const GradedMap& lhs, const GradedMap& rhs) {
  Matrix d = lhs.matrix() - rhs.matrix();
  if (d.is_zero()) return std::nullopt;
  const GradedSpace& dom = lhs.dom();
  const GradedSpace& cod = lhs.cod();
  std::map<std::uint32_t, std::size_t> per_block;
  for (std::size_t c = 0; c < d.cols(); ++c) per_block[dom.degree(c).code] += d.column(c).size();
  std::uint32_t best = 0;
  std::size_t best_n = 0;
  for (auto [code, n] : per_block) {
    if (n > best_n) best = code, best_n = n;
  }
  ResidualSummary s;
  s.nonzero = d.nnz();
  s.degree = dom.group().describe({best});
  for (std::size_t c = 0; c < d.cols(); ++c) {
    if (dom.degree(c).code != best || d.column(c).empty()) continue;
    const Entry& e = d.column(c).front();
    s.row_label = cod.label(e.row);
    s.col_label = dom.label(c);
    s.value = e.value.to_string();
    break;
  }
  return s;
}

CheckResult expect_equal(const std::string& name, const GradedMap& lhs, const GradedMap& rhs) {
  CheckResult r{name, Status::pass, {}, {}};
  if (!(lhs.dom() == rhs.dom()) || !(lhs.cod() == rhs.cod())) {
    r.status = Status::fail;
    r.detail = "type mismatch: " + lhs.describe() + " vs " + rhs.describe();
    return r;
  }
  r.residual = residual(lhs, rhs);
  if (r.residual) r.status = Status::fail;
  return r;
}

void check_equal(Report& r, const std::string& name, const GradedMap& lhs, const GradedMap& rhs) {
  r.add(expect_equal(name, lhs, rhs));
}

void guarded(Report& r, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    r.error(name, std::string(to_string(e.kind())) + ": " + e.what());
  }
}

}  // namespace braidhopf
