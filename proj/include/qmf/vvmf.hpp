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

#ifndef QMF_VVMF_HPP
#define QMF_VVMF_HPP

#include <optional>
#include <string>
#include <vector>

#include "qmf/mlde.hpp"
#include "qmf/modforms.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

/// Vector-valued modular form data: d component expansions, the weight,
/// the T-eigenvalue exponents r_j of the representation (component j lives
/// on the branch r_j + m/12 + Z), and the multiplier's cusp parameter m.
struct VvmfVector {
  std::vector<QSeries> components;
  Rational weight;
  std::vector<Rational> rep_exponents;
  Rational cusp_m;
};

/// det(F, D_k F, ..., D_k^{d-1} F) by exact cofactor expansion. The result
/// is known wherever all entries are.
QSeries modular_wronskian(const std::vector<QSeries>& components, const Rational& weight);
QSeries modular_wronskian(const VvmfVector& F);

struct WronskianEtaTest {
  QSeries g;                 // W(F) / eta^{24 lambda}
  bool is_pure_eta_power;    // g constant to truncation
  Rational lambda;           // sum of component leading exponents
  Rational g_weight;         // d(k+d-1) - 12 lambda
};

/// Factors the modular Wronskian as eta^{24 lambda} g. Components must be
/// nonzero with pairwise incongruent (mod Z) leading exponents; a vanishing
/// Wronskian or leading coefficient raises DegenerateLeading.
WronskianEtaTest wronskian_eta_test(const VvmfVector& F);

struct AdmissibleSet {
  std::vector<Rational> lambdas;  // fractional representatives of r_j + m/12, aligned with r
  Rational lambda0;               // their sum
};

AdmissibleSet minimal_admissible(const std::vector<Rational>& rep_exponents, const Rational& m);

/// Checks 12r in Z, d | 12r for d <= 4, pairwise distinct exponents in
/// [0,1), and 1 <= d <= 5; throws the matching domain error otherwise.
void validate_rep(int d, const std::vector<Rational>& rep_exponents, const Rational& m);

enum class FourDimClass { rho0, rho1 };

enum class ClassCase { D1, D2, D3, D4Rho0, D4Rho1, D5N0, D5N1, D5N2, D5N3, D5N4 };

struct BasisDescriptor {
  std::string name;
  Rational weight;
};

struct ClassificationReport {
  int d = 0;
  std::vector<Rational> rep_exponents;  // sorted ascending
  Rational m;
  std::optional<FourDimClass> four_class;
  ClassCase kind = ClassCase::D1;
  std::vector<Rational> lambdas;  // minimal admissible, aligned with rep_exponents
  Rational lambda0;
  Rational minimal_weight;
  Rational mlde_weight;  // weight of the anchor MLDE (k_0 resp. k_N)
  std::optional<int> residue_N;       // d = 5 only
  std::vector<BasisDescriptor> basis_recipe;
  std::string dimension_function;
  std::vector<long> hp_numerator;     // coefficients in t, from t^0
  Rational hp_shift;                  // = minimal_weight
  bool cyclic_over_R = false;
  // Sufficient criterion for T-determinedness fails to apply: some proper
  // sub-product of the e(r_j) is a 12th root of unity. Advisory only.
  bool t_determinedness_warning = false;
};

/// Structure of H(rho, v) for T-unitarizable rho given by its T-exponents.
/// d = 4 needs the rho_0/rho_1 class flag (not derivable from T data).
ClassificationReport classify(int d, std::vector<Rational> rep_exponents, const Rational& m,
                              std::optional<FourDimClass> four_class = std::nullopt);

/// dim of the graded piece at weight minimal_weight + 2 k_offset (0 below
/// the support). Odd weights carry no forms, hence the step-2 indexing.
long graded_dimension(const ClassificationReport& report, long k_offset);

/// Explicit free-module basis, one vector per recipe entry, components
/// truncated at `order`. Verifies leading-exponent patterns, the
/// det rho bookkeeping, and rank = d.
std::vector<VvmfVector> construct_basis(const ClassificationReport& report, int order);

struct HilbertPoincare {
  Rational shift;                // minimal weight
  std::vector<long> numerator;   // in t
  std::string denominator;       // fixed: (1-t^4)(1-t^6)
  std::vector<long> expansion;   // coefficient of t^{shift+2k}, k = 0..expand_to
};

/// Descriptor plus truncated expansion of t^shift numerator /
/// ((1-t^4)(1-t^6)), expanded by polynomial division (independent of
/// graded_dimension).
HilbertPoincare hp_series(const ClassificationReport& report, int expand_to);

VvmfVector apply_D(const VvmfVector& F);
VvmfVector scale_by_form(const VvmfVector& F, const ModularForm& g);

/// Exact coefficients c with target = sum c_i span_i (verified on the full
/// known window); nullopt when target is outside the span.
std::optional<std::vector<Rational>> express_in_span(const VvmfVector& target,
                                                     const std::vector<VvmfVector>& span,
                                                     int probe_depth);

}  // namespace qmf

#endif
