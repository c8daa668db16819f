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

// Command-line front end. Talks to the engine only through the C API.
//
//   braidhopf run <scenario> [--check NAME]... [--format human|machine]
//                            [--list-checks] [--jobs N] [--timing]
//   braidhopf normalize <term>
//
// Exit status: 0 all checks pass, 1 a check failed, 2 load or usage error.

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidhopf/braidhopf.h"

namespace {

constexpr int kPass = 0, kFail = 1, kLoad = 2;

struct ScenarioDel {
  void operator()(bh_scenario* s) const { bh_scenario_free(s); }
};
struct ReportDel {
  void operator()(bh_report* r) const { bh_report_free(r); }
};

int report_error(bh_status s) {
  std::fprintf(stderr, "braidhopf: %s error: %s\n", bh_status_name(s), bh_last_error());
  return kLoad;
}

int run(const std::string& path, const std::vector<std::string>& checks, bool select, const std::string& format,
        bool list, unsigned jobs, bool timing) {
  bh_scenario* raw = nullptr;
  if (bh_status s = bh_scenario_load_file(path.c_str(), &raw); s != BH_OK) return report_error(s);
  std::unique_ptr<bh_scenario, ScenarioDel> sc(raw);

  if (list) {
    for (size_t i = 0; i < bh_scenario_check_count(sc.get()); ++i)
      std::printf("%s\t%s\n", bh_scenario_check_name(sc.get(), i), bh_scenario_check_kind(sc.get(), i));
    return kPass;
  }

  std::vector<const char*> names;
  for (const std::string& c : checks) names.push_back(c.c_str());
  auto t0 = std::chrono::steady_clock::now();
  bh_report* rep = nullptr;
  if (bh_status s = bh_scenario_run(sc.get(), select ? names.data() : nullptr, names.size(), jobs, &rep); s != BH_OK)
    return report_error(s);
  std::unique_ptr<bh_report, ReportDel> r(rep);
  auto t1 = std::chrono::steady_clock::now();

  char* text = nullptr;
  bh_format f = format == "machine" ? BH_FORMAT_MACHINE : BH_FORMAT_HUMAN;
  if (bh_status s = bh_report_emit(r.get(), f, &text); s != BH_OK) return report_error(s);
  std::fputs(text, stdout);
  bh_string_free(text);
  // Timing stays out of the report so machine output is reproducible.
  if (timing)
    std::fprintf(stderr, "elapsed %.3f s\n", std::chrono::duration<double>(t1 - t0).count());
  return bh_report_passed(r.get()) ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for braided Hopf algebras in graded vector spaces"};
  app.set_version_flag("--version", std::string(bh_version()));
  app.require_subcommand(1);

  std::string path, format = "human", term;
  std::vector<std::string> checks;
  bool list = false, timing = false;
  unsigned jobs = 1;

  CLI::App* run_cmd = app.add_subcommand("run", "Load a scenario and run its checks");
  run_cmd->add_option("scenario", path, "Scenario file")->required();
  CLI::Option* check_opt = run_cmd->add_option("--check", checks, "Run only this check (repeatable)");
  run_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "machine"}));
  run_cmd->add_flag("--list-checks", list, "List check names and kinds, then exit");
  run_cmd->add_option("--jobs", jobs, "Checks to run concurrently")->check(CLI::Range(1u, 256u));
  run_cmd->add_flag("--timing", timing, "Print elapsed time to stderr");

  CLI::App* norm_cmd = app.add_subcommand("normalize", "Parse a morphism term and print its normal form");
  norm_cmd->add_option("term", term, "Morphism term")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kLoad;
  }

  if (*run_cmd) return run(path, checks, check_opt->count() > 0, format, list, jobs, timing);

  char* out = nullptr;
  if (bh_status s = bh_term_normalize(term.c_str(), &out); s != BH_OK) return report_error(s);
  std::puts(out);
  bh_string_free(out);
  return kPass;
}
