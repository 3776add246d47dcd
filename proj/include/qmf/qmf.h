/* Copyright 2026 the qmf authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libqmf: exact q-expansions of modular forms, modular
 * linear differential equations, and the rank <= 5 classification of
 * vector-valued modular form spaces.
 *
 * Conventions:
 *  - every function returns a qmf_status; QMF_OK means success;
 *  - qmf_last_error() describes the most recent failure on this thread;
 *  - rationals travel as reduced "p/q" strings (or "p" for integers);
 *  - structured results travel as JSON or plain-text documents in
 *    malloc'd strings released with qmf_string_free();
 *  - series handles are opaque, immutable, and freed with qmf_series_free().
 */

#ifndef QMF_QMF_H
#define QMF_QMF_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmf_status {
  QMF_OK = 0,
  QMF_ERR_INCOMPATIBLE_BRANCH = 1,
  QMF_ERR_NON_UNIT_LEADING_COEFFICIENT = 2,
  QMF_ERR_DIVISION_BY_ZERO_SERIES = 3,
  QMF_ERR_INSUFFICIENT_TRUNCATION = 4,
  QMF_ERR_IRRATIONAL_INDICIAL_ROOTS = 5,
  QMF_ERR_DUPLICATE_ROOTS = 6,
  QMF_ERR_RESONANT_ROOT = 7,
  QMF_ERR_NOT_AN_INDICIAL_ROOT = 8,
  QMF_ERR_CONGRUENT_ROOTS = 9,
  QMF_ERR_NOT_T_UNITARIZABLE_DATA = 10,
  QMF_ERR_DIVISIBILITY_VIOLATION = 11,
  QMF_ERR_DUPLICATE_EXPONENTS = 12,
  QMF_ERR_RANK_DEFICIENT = 13,
  QMF_ERR_NO_DELTA_DIVISIBLE_COMBINATION = 14,
  QMF_ERR_DEGENERATE_LEADING = 15,
  QMF_ERR_UNSUPPORTED_ORDER = 16,
  QMF_ERR_INVALID_ARGUMENT = 17,
  QMF_ERR_INTERNAL = 18
} qmf_status;

typedef enum qmf_format { QMF_FORMAT_JSON = 0, QMF_FORMAT_TEXT = 1 } qmf_format;

typedef struct qmf_series qmf_series; /* opaque truncated q-expansion */

/* Stable name of a status value, e.g. "CongruentRoots". */
const char* qmf_status_name(qmf_status status);

/* Message of the last failure on the calling thread ("" if none). */
const char* qmf_last_error(void);

void qmf_string_free(char* s);
void qmf_series_free(qmf_series* s);

/* --- series values ------------------------------------------------------ */

qmf_status qmf_series_from_json(const char* json, qmf_series** out);
qmf_status qmf_series_to_json(const qmf_series* s, char** out);
qmf_status qmf_series_to_text(const qmf_series* s, char** out);

qmf_status qmf_series_add(const qmf_series* x, const qmf_series* y, qmf_series** out);
qmf_status qmf_series_mul(const qmf_series* x, const qmf_series* y, qmf_series** out);
qmf_status qmf_series_pow(const qmf_series* x, const char* exponent, qmf_series** out);
qmf_status qmf_series_q_derivative(const qmf_series* x, qmf_series** out);
qmf_status qmf_series_divide(const qmf_series* x, const qmf_series* y, qmf_series** out);
qmf_status qmf_series_modular_derivative(const qmf_series* x, const char* weight, qmf_series** out);

/* --- generators ---------------------------------------------------------- */

qmf_status qmf_series_eisenstein(long k, long order, qmf_series** out);
qmf_status qmf_series_eisenstein2(long order, qmf_series** out);
qmf_status qmf_series_delta(long order, qmf_series** out);
qmf_status qmf_series_eta_power(const char* w, long order, qmf_series** out);
qmf_status qmf_series_p(long order, qmf_series** out);

long qmf_dim_mk(long k);

/* --- command documents (what the CLI prints) ----------------------------- */

qmf_status qmf_cmd_eis(long k, long order, qmf_format f, char** out);
qmf_status qmf_cmd_delta(long order, qmf_format f, char** out);
qmf_status qmf_cmd_eta(const char* power, long order, qmf_format f, char** out);
qmf_status qmf_cmd_dim(long k, qmf_format f, char** out);
qmf_status qmf_cmd_mult(const char* weight, long twist, qmf_format f, char** out);
/* roots_csv: comma-separated rationals; roots must be incongruent mod Z. */
qmf_status qmf_cmd_mlde_from_roots(const char* roots_csv, qmf_format f, char** out);
qmf_status qmf_cmd_mlde_solve(const char* roots_csv, long order, qmf_format f, char** out);
/* klass: "rho0" / "rho1" for d = 4, NULL or "" otherwise. */
qmf_status qmf_cmd_vvmf_classify(long d, const char* roots_csv, const char* m, const char* klass,
                                 qmf_format f, char** out);
qmf_status qmf_cmd_vvmf_basis(long d, const char* roots_csv, const char* m, const char* klass,
                              long order, qmf_format f, char** out);
/* vector_json: {"weight": "...", "components": [series...]} */
qmf_status qmf_cmd_vvmf_wronskian(const char* vector_json, qmf_format f, char** out);
qmf_status qmf_cmd_vvmf_hp(long d, const char* roots_csv, const char* m, const char* klass,
                           long expand_to, qmf_format f, char** out);

/* Runs acceptance checks whose id contains `only` (all if NULL or "");
 * *all_passed is set to 1 iff every executed check passed. */
qmf_status qmf_selftest(const char* only, char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* QMF_QMF_H */
