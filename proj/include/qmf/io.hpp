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

#ifndef QMF_IO_HPP
#define QMF_IO_HPP

#include <string>

#include "qmf/qseries.hpp"
#include "qmf/vvmf.hpp"

namespace qmf {

enum class Format { json, text };

// Series schema: {"leading_exponent": "p/q", "coefficients": ["a/b", ...],
// "order": N}, rationals as reduced fraction strings. The zero series
// serializes as a single zero coefficient of order 0.
std::string series_to_json(const QSeries& s);
QSeries series_from_json(const std::string& doc);

/// "q^{p/q}·(a0 + a1 q + ...) + O(q^{lambda+N+1})"; plain "0" for zero.
std::string series_to_text(const QSeries& s);

std::string series_document(const QSeries& s, Format f);

std::string vector_to_json(const VvmfVector& v, const std::string& name);
VvmfVector vector_from_json(const std::string& doc);

// Command documents: everything the CLI prints is produced here, so the
// front end stays a pure argument parser.
std::string cmd_eis(long k, int order, Format f);
std::string cmd_delta(int order, Format f);
std::string cmd_eta(const std::string& power, int order, Format f);
std::string cmd_dim(long k, Format f);
std::string cmd_mult(const std::string& weight, int twist, Format f);
/// Rejects roots congruent mod Z: the command exists to feed the solver.
std::string cmd_mlde_from_roots(const std::string& roots_csv, Format f);
std::string cmd_mlde_solve(const std::string& roots_csv, int order, Format f);
std::string cmd_vvmf_classify(int d, const std::string& roots_csv, const std::string& m,
                              const std::string& klass, Format f);
std::string cmd_vvmf_basis(int d, const std::string& roots_csv, const std::string& m,
                           const std::string& klass, int order, Format f);
std::string cmd_vvmf_wronskian(const std::string& vector_json, Format f);
std::string cmd_vvmf_hp(int d, const std::string& roots_csv, const std::string& m,
                        const std::string& klass, int expand_to, Format f);

std::string classification_document(const ClassificationReport& r, Format f);

}  // namespace qmf

#endif
