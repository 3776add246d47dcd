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

#include <doctest.h>

#include <string>

#include "qmf/io.hpp"
#include "qmf/modforms.hpp"
#include "qmf/qmf.h"

using namespace qmf;

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  qmf_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("io_capi") {
  TEST_CASE("series JSON round trip is byte-identical") {
    QSeries e4 = eisenstein(4, 6).series;
    std::string doc = series_to_json(e4);
    QSeries parsed = series_from_json(doc);
    CHECK(parsed == e4);
    CHECK(series_to_json(parsed) == doc);

    std::string zero_doc = series_to_json(QSeries::zero());
    CHECK(series_from_json(zero_doc).is_zero());
    CHECK(series_to_json(series_from_json(zero_doc)) == zero_doc);

    QSeries frac = eta_power(rational(3, 2), 4);
    std::string frac_doc = series_to_json(frac);
    CHECK(series_to_json(series_from_json(frac_doc)) == frac_doc);
  }

  TEST_CASE("series JSON validation") {
    CHECK_THROWS_WITH_AS(series_from_json("{\"leading_exponent\": \"0\"}"),
                         doctest::Contains("InvalidArgument"), DomainError);
    CHECK_THROWS_WITH_AS(
        series_from_json(
            "{\"leading_exponent\": \"0\", \"coefficients\": [\"1\"], \"order\": 3}"),
        doctest::Contains("InvalidArgument"), DomainError);
    CHECK_THROWS_WITH_AS(series_from_json("not json"), doctest::Contains("InvalidArgument"),
                         DomainError);
  }

  TEST_CASE("text rendering carries the truncation marker") {
    QSeries eta1 = eta_power(Rational(1), 2);
    CHECK(series_to_text(eta1) == "q^{1/24}·(1 - q - q^2) + O(q^{73/24})\n");
    CHECK(series_to_text(QSeries::zero()) == "0\n");
    QSeries e6 = eisenstein(6, 1).series;
    CHECK(series_to_text(e6) == "1 - 504 q + O(q^{2})\n");
  }

  TEST_CASE("vector JSON round trip") {
    ClassificationReport rep = classify(2, {rational(1, 5), rational(3, 10)}, Rational(0));
    VvmfVector f0 = construct_basis(rep, 12)[0];
    std::string doc = vector_to_json(f0, "F0");
    VvmfVector back = vector_from_json(doc);
    CHECK(back.weight == f0.weight);
    REQUIRE(back.components.size() == 2);
    CHECK(back.components[0] == f0.components[0]);
    CHECK(back.rep_exponents == f0.rep_exponents);
  }

  TEST_CASE("command documents are deterministic") {
    std::string a = cmd_vvmf_classify(2, "1/12,5/12", "0", "", Format::json);
    std::string b = cmd_vvmf_classify(2, "1/12,5/12", "0", "", Format::json);
    CHECK(a == b);
    CHECK(a.find("\"minimal_weight\": \"2\"") != std::string::npos);
    CHECK(a.find("\"hp_numerator\": [") != std::string::npos);
    CHECK(cmd_dim(12, Format::json) == "2\n");
  }

  TEST_CASE("C API series handles") {
    qmf_series* e4 = nullptr;
    REQUIRE(qmf_series_eisenstein(4, 3, &e4) == QMF_OK);
    qmf_series* e8 = nullptr;
    REQUIRE(qmf_series_eisenstein(8, 3, &e8) == QMF_OK);
    qmf_series* prod = nullptr;
    REQUIRE(qmf_series_mul(e4, e4, &prod) == QMF_OK);
    // E4^2 = E8.
    char* lhs = nullptr;
    char* rhs = nullptr;
    REQUIRE(qmf_series_to_json(prod, &lhs) == QMF_OK);
    REQUIRE(qmf_series_to_json(e8, &rhs) == QMF_OK);
    CHECK(take(lhs) == take(rhs));

    qmf_series* quot = nullptr;
    REQUIRE(qmf_series_divide(prod, e4, &quot) == QMF_OK);
    char* qj = nullptr;
    char* ej = nullptr;
    REQUIRE(qmf_series_to_json(quot, &qj) == QMF_OK);
    REQUIRE(qmf_series_to_json(e4, &ej) == QMF_OK);
    CHECK(take(qj) == take(ej));

    // Round trip through JSON.
    char* doc = nullptr;
    REQUIRE(qmf_series_to_json(e4, &doc) == QMF_OK);
    std::string doc_s = take(doc);
    qmf_series* parsed = nullptr;
    REQUIRE(qmf_series_from_json(doc_s.c_str(), &parsed) == QMF_OK);
    char* doc2 = nullptr;
    REQUIRE(qmf_series_to_json(parsed, &doc2) == QMF_OK);
    CHECK(take(doc2) == doc_s);

    qmf_series_free(parsed);
    qmf_series_free(quot);
    qmf_series_free(prod);
    qmf_series_free(e8);
    qmf_series_free(e4);
  }

  TEST_CASE("C API generators and derivative handles") {
    // D_{1/2} eta = 0 straight through the C surface.
    qmf_series* eta = nullptr;
    REQUIRE(qmf_series_eta_power("1", 20, &eta) == QMF_OK);
    qmf_series* d = nullptr;
    REQUIRE(qmf_series_modular_derivative(eta, "1/2", &d) == QMF_OK);
    char* doc = nullptr;
    REQUIRE(qmf_series_to_json(d, &doc) == QMF_OK);
    CHECK(take(doc).find("\"coefficients\": [\n    \"0\"\n  ]") != std::string::npos);
    qmf_series_free(d);

    // eta^24 equals delta; the ring route spends one window slot on the
    // q^0 cancellation, so it starts one order higher.
    qmf_series* eta24 = nullptr;
    REQUIRE(qmf_series_eta_power("24", 8, &eta24) == QMF_OK);
    qmf_series* dlt = nullptr;
    REQUIRE(qmf_series_delta(9, &dlt) == QMF_OK);
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(qmf_series_to_json(eta24, &a) == QMF_OK);
    REQUIRE(qmf_series_to_json(dlt, &b) == QMF_OK);
    CHECK(take(a) == take(b));
    qmf_series_free(dlt);
    qmf_series_free(eta24);

    // -12 P = E2.
    qmf_series* p = nullptr;
    REQUIRE(qmf_series_p(6, &p) == QMF_OK);
    qmf_series* e2 = nullptr;
    REQUIRE(qmf_series_eisenstein2(6, &e2) == QMF_OK);
    char* ptext = nullptr;
    REQUIRE(qmf_series_to_text(p, &ptext) == QMF_OK);
    CHECK(take(ptext).find("-1/12 + 2 q") != std::string::npos);
    qmf_series_free(e2);
    qmf_series_free(p);

    qmf_series* bad = nullptr;
    CHECK(qmf_series_pow(eta, "abc", &bad) == QMF_ERR_INVALID_ARGUMENT);
    qmf_series_free(eta);
  }

  TEST_CASE("C API maps domain errors to status codes") {
    qmf_series* zero = nullptr;
    REQUIRE(qmf_series_from_json(
                "{\"leading_exponent\": \"0\", \"coefficients\": [\"0\"], \"order\": 0}",
                &zero) == QMF_OK);
    qmf_series* out = nullptr;
    CHECK(qmf_series_divide(zero, zero, &out) == QMF_ERR_DIVISION_BY_ZERO_SERIES);
    CHECK(std::string(qmf_last_error()).find("zero series") != std::string::npos);
    qmf_series_free(zero);

    char* doc = nullptr;
    CHECK(qmf_cmd_mlde_from_roots("0,1", QMF_FORMAT_JSON, &doc) == QMF_ERR_CONGRUENT_ROOTS);
    CHECK(qmf_cmd_mlde_from_roots("1/2,1/2", QMF_FORMAT_JSON, &doc) == QMF_ERR_DUPLICATE_ROOTS);
    CHECK(qmf_cmd_vvmf_classify(4, "2/21,1/7,2/7,10/21", "0", nullptr, QMF_FORMAT_JSON, &doc) ==
          QMF_ERR_INVALID_ARGUMENT);
    CHECK(qmf_series_from_json(nullptr, &zero) == QMF_ERR_INVALID_ARGUMENT);
    CHECK(std::string(qmf_status_name(QMF_ERR_CONGRUENT_ROOTS)) == "CongruentRoots");
  }

  TEST_CASE("C API command documents") {
    char* doc = nullptr;
    REQUIRE(qmf_cmd_vvmf_classify(2, "1/12,5/12", "0", "", QMF_FORMAT_JSON, &doc) == QMF_OK);
    std::string s = take(doc);
    CHECK(s.find("\"minimal_weight\": \"2\"") != std::string::npos);

    REQUIRE(qmf_cmd_mlde_from_roots("1/12,5/12", QMF_FORMAT_JSON, &doc) == QMF_OK);
    s = take(doc);
    CHECK(s.find("\"weight\": \"2\"") != std::string::npos);

    CHECK(qmf_dim_mk(12) == 2);
    CHECK(qmf_dim_mk(2) == 0);
  }

  TEST_CASE("C API wronskian accepts a vector document") {
    ClassificationReport rep = classify(2, {rational(1, 5), rational(3, 10)}, Rational(0));
    VvmfVector f0 = construct_basis(rep, 14)[0];
    std::string doc = vector_to_json(f0, "F0");
    char* out = nullptr;
    REQUIRE(qmf_cmd_vvmf_wronskian(doc.c_str(), QMF_FORMAT_JSON, &out) == QMF_OK);
    std::string s = take(out);
    CHECK(s.find("\"is_pure_eta_power\": true") != std::string::npos);
    CHECK(s.find("\"lambda\": \"1/2\"") != std::string::npos);
  }

  TEST_CASE("C API selftest filter") {
    char* report = nullptr;
    int ok = 0;
    REQUIRE(qmf_selftest("validation", &report, &ok) == QMF_OK);
    std::string s = take(report);
    CHECK(ok == 1);
    CHECK(s.find("vvmf-validation-table") != std::string::npos);
    CHECK(s.find("1/1 checks passed") != std::string::npos);
  }
}
