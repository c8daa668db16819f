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

#ifndef BRAIDHOPF_REPORT_HPP
#define BRAIDHOPF_REPORT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braidhopf/graded.hpp"

namespace braidhopf {

enum class Status { pass, fail, error };
const char* to_string(Status s);

/// Where two maps differ. The reported entry is the first one (column
/// major) inside the degree block carrying the most nonzero residuals.
struct ResidualSummary {
  std::size_t nonzero = 0;
  std::string row_label;
  std::string col_label;
  std::string value;  // exact literal of lhs - rhs at that entry
  std::string degree;
};

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string detail;
  std::optional<ResidualSummary> residual;
};

class Report {
 public:
  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void pass(std::string name, std::string detail = {});
  void fail(std::string name, std::string detail);
  void error(std::string name, std::string detail);
  /// Append every check of `other`, prefixing names with `prefix.`.
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t size() const { return checks_.size(); }
  std::size_t failures() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& name) const;
  /// One line per check, for diagnostics.
  std::string summary() const;

 private:
  std::vector<CheckResult> checks_;
};

std::optional<ResidualSummary> residual(const GradedMap& lhs, const GradedMap& rhs);

/// Pass iff lhs == rhs exactly (same types, same matrix).
CheckResult expect_equal(const std::string& name, const GradedMap& lhs, const GradedMap& rhs);
void check_equal(Report& r, const std::string& name, const GradedMap& lhs, const GradedMap& rhs);

/// Runs `body`; an Error escaping it becomes a single error entry.
void guarded(Report& r, const std::string& name, const std::function<void()>& body);

}  // namespace braidhopf

#endif  // BRAIDHOPF_REPORT_HPP
