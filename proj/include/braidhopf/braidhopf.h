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

/* C interface to the braidhopf engine: load scenario files, run their
 * checks and emit reports. All handles are opaque. Functions returning
 * bh_status leave a description of the last failure in bh_last_error(),
 * which is per thread and valid until the next failing call on it. */

#ifndef BRAIDHOPF_H
#define BRAIDHOPF_H

#include <stddef.h>

#if defined(_WIN32)
#define BH_API __declspec(dllexport)
#else
#define BH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bh_status {
  BH_OK = 0,
  BH_ERR_ARGUMENT = 1,    /* null handle or out-of-range index */
  BH_ERR_PARSE = 2,       /* malformed JSON or DSL text */
  BH_ERR_LOAD = 3,        /* scenario validation failed */
  BH_ERR_LOOKUP = 4,      /* unknown or ambiguous name */
  BH_ERR_MATH = 5,        /* shape, degree, composition or field error */
  BH_ERR_PRECONDITION = 6,
  BH_ERR_INTERNAL = 7
} bh_status;

typedef enum bh_format { BH_FORMAT_HUMAN = 0, BH_FORMAT_MACHINE = 1 } bh_format;

typedef struct bh_scenario bh_scenario;
typedef struct bh_report bh_report;

BH_API const char* bh_version(void);
BH_API const char* bh_last_error(void);
BH_API const char* bh_status_name(bh_status s);

BH_API bh_status bh_scenario_load_file(const char* path, bh_scenario** out);
BH_API bh_status bh_scenario_load_string(const char* text, size_t len, const char* origin, bh_scenario** out);
BH_API void bh_scenario_free(bh_scenario* s);
BH_API const char* bh_scenario_name(const bh_scenario* s);
BH_API const char* bh_scenario_digest(const bh_scenario* s);
BH_API size_t bh_scenario_check_count(const bh_scenario* s);
BH_API const char* bh_scenario_check_name(const bh_scenario* s, size_t i);
BH_API const char* bh_scenario_check_kind(const bh_scenario* s, size_t i);

/* names == NULL runs every check; otherwise exactly the n listed (n may be
 * zero). jobs > 1 runs independent checks concurrently. */
BH_API bh_status bh_scenario_run(const bh_scenario* s, const char* const* names, size_t n, unsigned jobs,
                                 bh_report** out);

BH_API void bh_report_free(bh_report* r);
BH_API size_t bh_report_size(const bh_report* r);
BH_API size_t bh_report_passed_count(const bh_report* r);
/* 1 if every check passed, 0 otherwise (also for a null handle). */
BH_API int bh_report_passed(const bh_report* r);
BH_API const char* bh_report_check_name(const bh_report* r, size_t i);
/* "pass", "fail" or "error"; NULL when out of range. */
BH_API const char* bh_report_check_status(const bh_report* r, size_t i);
/* *out is allocated by the library; release it with bh_string_free. */
BH_API bh_status bh_report_emit(const bh_report* r, bh_format format, char** out);
BH_API bh_status bh_report_parse_machine(const char* text, size_t len, bh_report** out);
BH_API void bh_string_free(char* s);

/* Parses a morphism term and prints it in normal form. */
BH_API bh_status bh_term_normalize(const char* src, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BRAIDHOPF_H */
