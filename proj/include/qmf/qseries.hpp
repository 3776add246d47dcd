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

#ifndef QMF_QSERIES_HPP
#define QMF_QSERIES_HPP

#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

/// Truncated generalized q-expansion q^lambda * (a(0) + a(1) q + ... + a(N) q^N),
/// with exact rational lambda and coefficients. Coefficients of q^{lambda+n}
/// for n > N are unknown, not zero; every binary operation propagates the
/// window of known coefficients explicitly.
///
/// Canonical form: a(0) != 0, or the distinguished zero series (lambda = 0,
/// empty coefficient list), which behaves as an exactly-known zero.
/// Values are immutable after construction.
class QSeries {
public:
  QSeries() : lead_(0) {}

  /// Canonicalizes: strips leading zero coefficients (raising the leading
  /// exponent, shrinking the window) and collapses all-zero input to the
  /// zero series.
  QSeries(Rational leading_exponent, std::vector<Rational> coefficients);

  static QSeries zero() { return QSeries(); }
  static QSeries constant(const Rational& c, int order);
  /// c * q^exponent known through exponent+order.
  static QSeries monomial(const Rational& c, const Rational& exponent, int order);

  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading_exponent() const { return lead_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Truncation order N (number of known coefficients minus one). The zero
  /// series reports a very large order: it is exactly known everywhere.
  int order() const;

  /// Largest exponent with a known coefficient, lambda + N. Must not be
  /// called on the zero series.
  Rational known_through() const;

  /// Coefficient of q^exponent. Exponents below the leading one or off the
  /// lambda + Z branch are structurally zero; asking beyond the known window
  /// raises InsufficientTruncation.
  Rational coefficient(const Rational& exponent) const;

  bool operator==(const QSeries& other) const {
    return lead_ == other.lead_ && coeffs_ == other.coeffs_;
  }

private:
  Rational lead_;
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& x, const QSeries& y);
QSeries sub(const QSeries& x, const QSeries& y);
QSeries negate(const QSeries& x);
QSeries scale(const QSeries& x, const Rational& c);
QSeries mul(const QSeries& x, const QSeries& y);

/// (q^lambda (1 + tail))^c by the generalized binomial series; requires
/// a(0) = 1 (NonUnitLeadingCoefficient otherwise).
QSeries pow_rational(const QSeries& x, const Rational& c);

/// q d/dq: coefficient of q^{lambda+n} becomes (lambda+n) a(n).
QSeries q_derivative(const QSeries& x);

/// d/dq: shifts each exponent down by one.
QSeries dq_derivative(const QSeries& x);

/// Series quotient with mul(result, y) = x on the common window.
QSeries divide_exact(const QSeries& x, const QSeries& y);

QSeries shift_exponent(const QSeries& x, const Rational& delta);

/// Drops coefficients beyond the given order (no-op if already shorter).
QSeries truncate_to(const QSeries& x, int order);

/// True when the known coefficients agree wherever both windows overlap
/// (and the branches are compatible). Used by tests to compare values of
/// different truncation depth.
bool series_agree(const QSeries& x, const QSeries& y);

/// Rank over Q of the span of vectors of series, probing the first
/// probe_depth coefficients of every component, aligned per column at the
/// minimal leading exponent. All series in one column must share a branch
/// (exponents congruent mod Z).
int rank_of_span(const std::vector<std::vector<QSeries>>& vectors, int probe_depth);

}  // namespace qmf

#endif
