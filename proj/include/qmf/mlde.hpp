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

#ifndef QMF_MLDE_HPP
#define QMF_MLDE_HPP

#include <optional>
#include <vector>

#include "qmf/modforms.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

/// A linear operator written as sum_j g_j(q) * theta^(j), where
/// theta^(j) = q^j d^j/dq^j = theta (theta-1) ... (theta-j+1) and
/// theta = q d/dq. g_n = 1; the g_j are holomorphic at q = 0, so q = 0 is
/// (at worst) a regular singular point by construction.
class ThetaOperator {
public:
  explicit ThetaOperator(std::vector<QSeries> g) : g_(std::move(g)) {}

  int order() const { return static_cast<int>(g_.size()) - 1; }
  const std::vector<QSeries>& coefficients() const { return g_; }

  /// Indicial polynomial P(r) = sum_j g_j(0) r^(j), monomial coefficients
  /// ascending (degree 0..n, monic).
  std::vector<Rational> indicial_coefficients() const;

  /// P_t(s) = sum_j [q^t] g_j(q) * s(s-1)...(s-j+1); P_0 is the indicial
  /// polynomial.
  Rational recursion_polynomial(long t, const Rational& s) const;

  QSeries apply(const QSeries& f) const;

private:
  std::vector<QSeries> g_;
};

/// Coefficients f_{n,j}(q), j = 0..n-1, of
/// D_k^n = q^n d^n/dq^n + q^{n-1} f_{n,n-1} d^{n-1}/dq^{n-1} + ... + f_{n,0},
/// each truncated at `order` (f_{n,n} = 1 is implicit).
std::vector<QSeries> rewrite_Dk_power(int n, const Rational& k, int order);

/// MLDE L = D_k^n + M_4 D_k^{n-2} + ... + M_{2n}, with M_{2j} in M_{2j}.
/// Eisenstein form fixes M_{2j} = alpha_{2j} E_{2j}; the general constructor
/// accepts explicit modular forms (needed for operators produced by
/// Wronskian ratios). Order is capped at 5: M_{2j} is spanned by E_{2j}
/// only for 2j <= 10, so higher orders leave Eisenstein territory and each
/// basis construction here needs at most order 5.
class MldeOperator {
public:
  static MldeOperator from_alphas(int n, const Rational& k, std::vector<Rational> alphas);
  static MldeOperator from_forms(int n, const Rational& k, std::vector<ModularForm> forms);

  int order() const { return n_; }
  const Rational& weight() const { return k_; }
  /// alpha_4, ..., alpha_{2n}; present only for the Eisenstein form.
  const std::optional<std::vector<Rational>>& alphas() const { return alphas_; }

  ThetaOperator rewrite(int order) const;

private:
  MldeOperator(int n, Rational k) : n_(n), k_(std::move(k)) {}
  int n_;
  Rational k_;
  std::optional<std::vector<Rational>> alphas_;
  std::vector<ModularForm> forms_;  // weight 2j entry for j = 2..n
};

struct IndicialData {
  std::vector<Rational> polynomial;             // monomial coefficients, ascending
  std::optional<std::vector<Rational>> roots;   // present iff all n roots rational; sorted
};

IndicialData indicial_polynomial(const MldeOperator& op);

/// Inverse of indicial_polynomial for Eisenstein operators: the unique
/// (k, alpha_4..alpha_{2n}) whose MLDE has the given indicial roots
/// (2 <= n <= 5, pairwise distinct). The weight comes from the first power
/// sum via f_{n,n-1}(0) = n(5(n-1)-k)/12, then the alphas resolve
/// triangularly.
MldeOperator operator_from_roots(const std::vector<Rational>& roots);

/// Frobenius solution q^root (1 + sum b(j) q^j). At a resonance
/// P(root + j) = 0 the recursion continues with b(j) = 0 when the
/// accumulated right-hand side vanishes, and fails with ResonantRoot
/// otherwise.
QSeries frobenius_solve(const MldeOperator& op, const Rational& root, int order);
QSeries frobenius_solve(const ThetaOperator& th, const Rational& root, int order);

/// One normalized solution per indicial root, sorted by ascending root.
/// Requires all roots rational and pairwise incongruent mod Z.
std::vector<QSeries> solve_fundamental_system(const MldeOperator& op, int order);

/// All rational roots of a monic rational polynomial (coefficients
/// ascending, leading 1), with multiplicity, or nullopt when the
/// polynomial does not split over Q. Exact (Sturm bisection).
std::optional<std::vector<Rational>> rational_roots_of_monic(const std::vector<Rational>& poly);

}  // namespace qmf

#endif
