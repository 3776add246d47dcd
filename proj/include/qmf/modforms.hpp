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

#ifndef QMF_MODFORMS_HPP
#define QMF_MODFORMS_HPP

#include <optional>
#include <vector>

#include "qmf/qseries.hpp"

namespace qmf {

/// Level-one modular form of integral weight: a q-expansion plus, when
/// known, its coordinates in the monomial basis {E4^a E6^b : 4a+6b = weight}.
struct ModularForm {
  int weight = 0;
  QSeries series;
  std::optional<std::vector<Rational>> basis_coords;
};

/// B_k from t/(e^t - 1); B_1 = -1/2. Memoized.
Rational bernoulli(int k);

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, even k >= 4.
ModularForm eisenstein(int k, int order);

/// Quasi-modular E_2 = 1 - 24 sum sigma_1(n) q^n, exposed as a bare series.
QSeries eisenstein2(int order);

/// Delta = (E4^3 - E6^2)/1728, weight 12, leading term q.
ModularForm delta(int order);

/// prod_{n>=1} (1 - q^n) truncated at `order`.
QSeries euler_product(int order);

/// eta^w = q^{w/24} prod (1-q^n)^w for rational w (principal expansion,
/// unimodular scalar fixed to 1).
QSeries eta_power(const Rational& w, int order);

/// P = (i/pi) eta'/eta = -2 q d/dq log(eta) = -1/12 + 2q + 6q^2 + ...,
/// computed from the eta product (E_2 = -12 P is the divisor-sum route).
QSeries p_series(int order);

/// Modular derivative D_k f = q df/dq + k P f; raises weight by 2.
QSeries modular_derivative(const QSeries& f, const Rational& k);

/// dim M_k: 0 for k < 0 or odd, else [k/12] (+1 unless k = 2 mod 12).
long dim_Mk(long k);

/// Monomials E4^a E6^b with 4a + 6b = k, lexicographic in (a, b) with a
/// descending; length equals dim_Mk(k).
std::vector<ModularForm> basis_Mk(int k, int order);

/// sum of d^k over divisors d of n.
Integer sigma(long k, long n);

/// Coordinates of f in basis_Mk(f.weight), by exact solve against the
/// monomial expansions; nullopt when f is not in the span (to truncation).
std::optional<std::vector<Rational>> coords_in_basis(const ModularForm& f);

namespace testing {
/// Fault-injection hook: poisons Bernoulli values for k >= 4 so that the
/// selftest's dual-route checks must fail. Only for tests.
void corrupt_bernoulli(bool enabled);
}  // namespace testing

}  // namespace qmf

#endif
