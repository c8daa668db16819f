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

#include "braidhopf/braidhopf.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "braidhopf/dsl.hpp"
#include "braidhopf/error.hpp"
#include "braidhopf/scenario.hpp"

struct bh_scenario {
  braidhopf::Scenario scenario;
};

struct bh_report {
  braidhopf::RunReport run;
};

namespace {

thread_local std::string last_error;

bh_status status_of(braidhopf::ErrorKind k) {
  using braidhopf::ErrorKind;
  switch (k) {
    case ErrorKind::parse: return BH_ERR_PARSE;
    case ErrorKind::load: return BH_ERR_LOAD;
    case ErrorKind::lookup: return BH_ERR_LOOKUP;
    case ErrorKind::precondition: return BH_ERR_PRECONDITION;
    case ErrorKind::consistency: return BH_ERR_INTERNAL;
    default: return BH_ERR_MATH;
  }
}

bh_status fail(bh_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs f, turning every exception into a status code.
template <class F>
bh_status guard(F&& f) {
  try {
    f();
    return BH_OK;
  } catch (const braidhopf::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BH_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* bh_version(void) { return braidhopf::engine_version; }
const char* bh_last_error(void) { return last_error.c_str(); }

const char* bh_status_name(bh_status s) {
  switch (s) {
    case BH_OK: return "ok";
    case BH_ERR_ARGUMENT: return "argument";
    case BH_ERR_PARSE: return "parse";
    case BH_ERR_LOAD: return "load";
    case BH_ERR_LOOKUP: return "lookup";
    case BH_ERR_MATH: return "math";
    case BH_ERR_PRECONDITION: return "precondition";
    case BH_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

bh_status bh_scenario_load_file(const char* path, bh_scenario** out) {
  if (!path || !out) return fail(BH_ERR_ARGUMENT, "bh_scenario_load_file: null argument");
  *out = nullptr;
  return guard([&] { *out = new bh_scenario{braidhopf::Scenario::load_file(path)}; });
}

bh_status bh_scenario_load_string(const char* text, size_t len, const char* origin, bh_scenario** out) {
  if (!text || !out) return fail(BH_ERR_ARGUMENT, "bh_scenario_load_string: null argument");
  *out = nullptr;
  return guard([&] {
    *out = new bh_scenario{braidhopf::Scenario::load_string(std::string_view(text, len), origin ? origin : "<string>")};
  });
}

void bh_scenario_free(bh_scenario* s) { delete s; }

const char* bh_scenario_name(const bh_scenario* s) { return s ? s->scenario.name().c_str() : nullptr; }
const char* bh_scenario_digest(const bh_scenario* s) { return s ? s->scenario.digest().c_str() : nullptr; }
size_t bh_scenario_check_count(const bh_scenario* s) { return s ? s->scenario.checks().size() : 0; }

const char* bh_scenario_check_name(const bh_scenario* s, size_t i) {
  if (!s || i >= s->scenario.checks().size()) return nullptr;
  return s->scenario.checks()[i].name.c_str();
}

const char* bh_scenario_check_kind(const bh_scenario* s, size_t i) {
  if (!s || i >= s->scenario.checks().size()) return nullptr;
  return s->scenario.checks()[i].kind.c_str();
}

bh_status bh_scenario_run(const bh_scenario* s, const char* const* names, size_t n, unsigned jobs, bh_report** out) {
  if (!s || !out) return fail(BH_ERR_ARGUMENT, "bh_scenario_run: null argument");
  *out = nullptr;
  std::optional<std::vector<std::string>> sel;
  if (names) {
    sel.emplace();
    for (size_t i = 0; i < n; ++i) {
      if (!names[i]) return fail(BH_ERR_ARGUMENT, "bh_scenario_run: null check name");
      sel->emplace_back(names[i]);
    }
  }
  return guard([&] {
    braidhopf::RunReport rr;
    rr.scenario = s->scenario.name();
    rr.digest = s->scenario.digest();
    rr.report = s->scenario.run(sel, jobs);
    *out = new bh_report{std::move(rr)};
  });
}

void bh_report_free(bh_report* r) { delete r; }
size_t bh_report_size(const bh_report* r) { return r ? r->run.report.size() : 0; }

size_t bh_report_passed_count(const bh_report* r) {
  if (!r) return 0;
  return r->run.report.size() - r->run.report.failures();
}

int bh_report_passed(const bh_report* r) { return r && r->run.report.passed() ? 1 : 0; }

const char* bh_report_check_name(const bh_report* r, size_t i) {
  if (!r || i >= r->run.report.size()) return nullptr;
  return r->run.report.checks()[i].name.c_str();
}

const char* bh_report_check_status(const bh_report* r, size_t i) {
  if (!r || i >= r->run.report.size()) return nullptr;
  return braidhopf::to_string(r->run.report.checks()[i].status);
}

bh_status bh_report_emit(const bh_report* r, bh_format format, char** out) {
  if (!r || !out) return fail(BH_ERR_ARGUMENT, "bh_report_emit: null argument");
  if (format != BH_FORMAT_HUMAN && format != BH_FORMAT_MACHINE) return fail(BH_ERR_ARGUMENT, "bh_report_emit: bad format");
  *out = nullptr;
  return guard([&] {
    *out = copy_out(format == BH_FORMAT_HUMAN ? braidhopf::emit_human(r->run) : braidhopf::emit_machine(r->run));
  });
}

bh_status bh_report_parse_machine(const char* text, size_t len, bh_report** out) {
  if (!text || !out) return fail(BH_ERR_ARGUMENT, "bh_report_parse_machine: null argument");
  *out = nullptr;
  return guard([&] { *out = new bh_report{braidhopf::parse_machine(std::string_view(text, len))}; });
}

void bh_string_free(char* s) { delete[] s; }

bh_status bh_term_normalize(const char* src, char** out) {
  if (!src || !out) return fail(BH_ERR_ARGUMENT, "bh_term_normalize: null argument");
  *out = nullptr;
  return guard([&] { *out = copy_out(braidhopf::print(braidhopf::parse_term(src))); });
}

}  // extern "C"
