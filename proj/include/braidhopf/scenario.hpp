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

// Scenario files: a JSON document declaring a context, objects, maps,
// structures and the checks to run on them. Format documented in
// docs/scenario-format.md; reports in docs/report-format.md.

#ifndef BRAIDHOPF_SCENARIO_HPP
#define BRAIDHOPF_SCENARIO_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidhopf/report.hpp"

namespace braidhopf {

inline constexpr const char* engine_version = "1.0.0";
inline constexpr const char* scenario_schema = "braidhopf-scenario/1";
inline constexpr const char* report_schema = "braidhopf-report/1";

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);

struct ScenarioCheck {
  std::string name;
  std::string kind;
};

/// A loaded and fully validated scenario. Every reference is resolved, every
/// declaration not marked "candidate" has passed its validator and every
/// check has its arguments bound. Immutable afterwards.
class Scenario {
 public:
  /// Errors carry ErrorKind::load (or parse) and a location: a JSON pointer
  /// for semantic problems, line and column for syntax.
  static Scenario load_file(const std::string& path);
  static Scenario load_string(std::string_view text, const std::string& origin = "<string>");

  const std::string& name() const;
  /// "fnv1a64:" and 16 hex digits over the canonical JSON text.
  const std::string& digest() const;
  const std::vector<ScenarioCheck>& checks() const;

  /// Runs the selected checks (all when nullopt). Results are prefixed by
  /// the check name and sorted. Unknown names throw Error(load).
  Report run(const std::optional<std::vector<std::string>>& selection = std::nullopt, unsigned jobs = 1) const;

  struct Impl;

 private:
  explicit Scenario(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Every check kind the runner understands.
const std::vector<std::string>& check_kinds();

struct RunReport {
  std::string scenario;
  std::string digest;
  std::string engine = engine_version;
  Report report;
};

/// One line per check and a final "P/N checks passed".
std::string emit_human(const RunReport& r);
/// Sorted-key JSON, byte-stable for a given scenario and engine version.
std::string emit_machine(const RunReport& r);
/// Inverse of emit_machine; throws Error(parse).
RunReport parse_machine(std::string_view text);

}  // namespace braidhopf

#endif  // BRAIDHOPF_SCENARIO_HPP
