// Copyright 2026 the qmf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmf/qmf.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "qmf/io.hpp"
#include "qmf/modforms.hpp"
#include "qmf/selftest.hpp"

struct qmf_series {
  qmf::QSeries value;
};

namespace {

thread_local std::string g_last_error;

qmf_status status_of(qmf::ErrorCode code) {
  using qmf::ErrorCode;
  switch (code) {
    case ErrorCode::IncompatibleBranch: return QMF_ERR_INCOMPATIBLE_BRANCH;
    case ErrorCode::NonUnitLeadingCoefficient: return QMF_ERR_NON_UNIT_LEADING_COEFFICIENT;
    case ErrorCode::DivisionByZeroSeries: return QMF_ERR_DIVISION_BY_ZERO_SERIES;
    case ErrorCode::InsufficientTruncation: return QMF_ERR_INSUFFICIENT_TRUNCATION;
    case ErrorCode::IrrationalIndicialRoots: return QMF_ERR_IRRATIONAL_INDICIAL_ROOTS;
    case ErrorCode::DuplicateRoots: return QMF_ERR_DUPLICATE_ROOTS;
    case ErrorCode::ResonantRoot: return QMF_ERR_RESONANT_ROOT;
    case ErrorCode::NotAnIndicialRoot: return QMF_ERR_NOT_AN_INDICIAL_ROOT;
    case ErrorCode::CongruentRoots: return QMF_ERR_CONGRUENT_ROOTS;
    case ErrorCode::NotTUnitarizableData: return QMF_ERR_NOT_T_UNITARIZABLE_DATA;
    case ErrorCode::DivisibilityViolation: return QMF_ERR_DIVISIBILITY_VIOLATION;
    case ErrorCode::DuplicateExponents: return QMF_ERR_DUPLICATE_EXPONENTS;
    case ErrorCode::RankDeficient: return QMF_ERR_RANK_DEFICIENT;
    case ErrorCode::NoDeltaDivisibleCombination: return QMF_ERR_NO_DELTA_DIVISIBLE_COMBINATION;
    case ErrorCode::DegenerateLeading: return QMF_ERR_DEGENERATE_LEADING;
    case ErrorCode::UnsupportedOrder: return QMF_ERR_UNSUPPORTED_ORDER;
    case ErrorCode::InvalidArgument: return QMF_ERR_INVALID_ARGUMENT;
  }
  return QMF_ERR_INTERNAL;
}

template <typename Fn>
qmf_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return QMF_OK;
  } catch (const qmf::DomainError& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QMF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QMF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qmf_status require(const void* p, const char* what) {
  if (p) return QMF_OK;
  g_last_error = std::string("null argument: ") + what;
  return QMF_ERR_INVALID_ARGUMENT;
}

qmf::Format cxx_format(qmf_format f) {
  return f == QMF_FORMAT_TEXT ? qmf::Format::text : qmf::Format::json;
}

std::string or_empty(const char* s) { return s ? std::string(s) : std::string(); }

int checked_order(long order) {
  if (order < 0 || order > 100000) qmf::fail(qmf::ErrorCode::InvalidArgument, "order out of range");
  return static_cast<int>(order);
}

}  // namespace

extern "C" {

const char* qmf_status_name(qmf_status status) {
  switch (status) {
    case QMF_OK: return "Ok";
    case QMF_ERR_INCOMPATIBLE_BRANCH: return "IncompatibleBranch";
    case QMF_ERR_NON_UNIT_LEADING_COEFFICIENT: return "NonUnitLeadingCoefficient";
    case QMF_ERR_DIVISION_BY_ZERO_SERIES: return "DivisionByZeroSeries";
    case QMF_ERR_INSUFFICIENT_TRUNCATION: return "InsufficientTruncation";
    case QMF_ERR_IRRATIONAL_INDICIAL_ROOTS: return "IrrationalIndicialRoots";
    case QMF_ERR_DUPLICATE_ROOTS: return "DuplicateRoots";
    case QMF_ERR_RESONANT_ROOT: return "ResonantRoot";
    case QMF_ERR_NOT_AN_INDICIAL_ROOT: return "NotAnIndicialRoot";
    case QMF_ERR_CONGRUENT_ROOTS: return "CongruentRoots";
    case QMF_ERR_NOT_T_UNITARIZABLE_DATA: return "NotTUnitarizableData";
    case QMF_ERR_DIVISIBILITY_VIOLATION: return "DivisibilityViolation";
    case QMF_ERR_DUPLICATE_EXPONENTS: return "DuplicateExponents";
    case QMF_ERR_RANK_DEFICIENT: return "RankDeficient";
    case QMF_ERR_NO_DELTA_DIVISIBLE_COMBINATION: return "NoDeltaDivisibleCombination";
    case QMF_ERR_DEGENERATE_LEADING: return "DegenerateLeading";
    case QMF_ERR_UNSUPPORTED_ORDER: return "UnsupportedOrder";
    case QMF_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case QMF_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

const char* qmf_last_error(void) { return g_last_error.c_str(); }

void qmf_string_free(char* s) { std::free(s); }

void qmf_series_free(qmf_series* s) { delete s; }

qmf_status qmf_series_from_json(const char* json, qmf_series** out) {
  if (auto st = require(json, "json"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = new qmf_series{qmf::series_from_json(json)}; });
}

qmf_status qmf_series_to_json(const qmf_series* s, char** out) {
  if (auto st = require(s, "series"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = dup_string(qmf::series_to_json(s->value)); });
}

qmf_status qmf_series_to_text(const qmf_series* s, char** out) {
  if (auto st = require(s, "series"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = dup_string(qmf::series_to_text(s->value)); });
}

#define QMF_BINARY_OP(name, expr)                                              \
  qmf_status name(const qmf_series* x, const qmf_series* y, qmf_series** out) { \
    if (auto st = require(x, "x"); st != QMF_OK) return st;                     \
    if (auto st = require(y, "y"); st != QMF_OK) return st;                     \
    if (auto st = require(out, "out"); st != QMF_OK) return st;                 \
    return guarded([&] { *out = new qmf_series{expr}; });                       \
  }

QMF_BINARY_OP(qmf_series_add, qmf::add(x->value, y->value))
QMF_BINARY_OP(qmf_series_mul, qmf::mul(x->value, y->value))
QMF_BINARY_OP(qmf_series_divide, qmf::divide_exact(x->value, y->value))

#undef QMF_BINARY_OP

qmf_status qmf_series_pow(const qmf_series* x, const char* exponent, qmf_series** out) {
  if (auto st = require(x, "x"); st != QMF_OK) return st;
  if (auto st = require(exponent, "exponent"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = new qmf_series{qmf::pow_rational(x->value, qmf::parse_rational(exponent))}; });
}

qmf_status qmf_series_q_derivative(const qmf_series* x, qmf_series** out) {
  if (auto st = require(x, "x"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = new qmf_series{qmf::q_derivative(x->value)}; });
}

qmf_status qmf_series_modular_derivative(const qmf_series* x, const char* weight, qmf_series** out) {
  if (auto st = require(x, "x"); st != QMF_OK) return st;
  if (auto st = require(weight, "weight"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded(
      [&] { *out = new qmf_series{qmf::modular_derivative(x->value, qmf::parse_rational(weight))}; });
}

qmf_status qmf_series_eisenstein(long k, long order, qmf_series** out) {
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] {
    *out = new qmf_series{qmf::eisenstein(static_cast<int>(k), checked_order(order)).series};
  });
}

qmf_status qmf_series_eisenstein2(long order, qmf_series** out) {
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = new qmf_series{qmf::eisenstein2(checked_order(order))}; });
}

qmf_status qmf_series_delta(long order, qmf_series** out) {
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = new qmf_series{qmf::delta(checked_order(order)).series}; });
}

qmf_status qmf_series_eta_power(const char* w, long order, qmf_series** out) {
  if (auto st = require(w, "w"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] {
    *out = new qmf_series{qmf::eta_power(qmf::parse_rational(w), checked_order(order))};
  });
}

qmf_status qmf_series_p(long order, qmf_series** out) {
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = new qmf_series{qmf::p_series(checked_order(order))}; });
}

long qmf_dim_mk(long k) { return qmf::dim_Mk(k); }

qmf_status qmf_cmd_eis(long k, long order, qmf_format f, char** out) {
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = dup_string(qmf::cmd_eis(k, checked_order(order), cxx_format(f))); });
}

qmf_status qmf_cmd_delta(long order, qmf_format f, char** out) {
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = dup_string(qmf::cmd_delta(checked_order(order), cxx_format(f))); });
}

qmf_status qmf_cmd_eta(const char* power, long order, qmf_format f, char** out) {
  if (auto st = require(power, "power"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded(
      [&] { *out = dup_string(qmf::cmd_eta(power, checked_order(order), cxx_format(f))); });
}

qmf_status qmf_cmd_dim(long k, qmf_format f, char** out) {
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = dup_string(qmf::cmd_dim(k, cxx_format(f))); });
}

qmf_status qmf_cmd_mult(const char* weight, long twist, qmf_format f, char** out) {
  if (auto st = require(weight, "weight"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] {
    *out = dup_string(qmf::cmd_mult(weight, static_cast<int>(twist), cxx_format(f)));
  });
}

qmf_status qmf_cmd_mlde_from_roots(const char* roots_csv, qmf_format f, char** out) {
  if (auto st = require(roots_csv, "roots"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = dup_string(qmf::cmd_mlde_from_roots(roots_csv, cxx_format(f))); });
}

qmf_status qmf_cmd_mlde_solve(const char* roots_csv, long order, qmf_format f, char** out) {
  if (auto st = require(roots_csv, "roots"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] {
    *out = dup_string(qmf::cmd_mlde_solve(roots_csv, checked_order(order), cxx_format(f)));
  });
}

qmf_status qmf_cmd_vvmf_classify(long d, const char* roots_csv, const char* m, const char* klass,
                                 qmf_format f, char** out) {
  if (auto st = require(roots_csv, "roots"); st != QMF_OK) return st;
  if (auto st = require(m, "m"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] {
    *out = dup_string(
        qmf::cmd_vvmf_classify(static_cast<int>(d), roots_csv, m, or_empty(klass), cxx_format(f)));
  });
}

qmf_status qmf_cmd_vvmf_basis(long d, const char* roots_csv, const char* m, const char* klass,
                              long order, qmf_format f, char** out) {
  if (auto st = require(roots_csv, "roots"); st != QMF_OK) return st;
  if (auto st = require(m, "m"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] {
    *out = dup_string(qmf::cmd_vvmf_basis(static_cast<int>(d), roots_csv, m, or_empty(klass),
                                          checked_order(order), cxx_format(f)));
  });
}

qmf_status qmf_cmd_vvmf_wronskian(const char* vector_json, qmf_format f, char** out) {
  if (auto st = require(vector_json, "vector"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] { *out = dup_string(qmf::cmd_vvmf_wronskian(vector_json, cxx_format(f))); });
}

qmf_status qmf_cmd_vvmf_hp(long d, const char* roots_csv, const char* m, const char* klass,
                           long expand_to, qmf_format f, char** out) {
  if (auto st = require(roots_csv, "roots"); st != QMF_OK) return st;
  if (auto st = require(m, "m"); st != QMF_OK) return st;
  if (auto st = require(out, "out"); st != QMF_OK) return st;
  return guarded([&] {
    *out = dup_string(qmf::cmd_vvmf_hp(static_cast<int>(d), roots_csv, m, or_empty(klass),
                                       checked_order(expand_to), cxx_format(f)));
  });
}

qmf_status qmf_selftest(const char* only, char** report, int* all_passed) {
  if (auto st = require(report, "report"); st != QMF_OK) return st;
  if (auto st = require(all_passed, "all_passed"); st != QMF_OK) return st;
  return guarded([&] {
    auto results = qmf::run_selftest(or_empty(only));
    *report = dup_string(qmf::format_selftest_report(results));
    *all_passed = qmf::selftest_all_passed(results) ? 1 : 0;
  });
}

}  // extern "C"
