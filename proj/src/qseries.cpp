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

#include "qmf/qseries.hpp"

#include <algorithm>
#include <limits>

#include "qmf/linalg.hpp"

namespace qmf {

namespace {

constexpr int kZeroOrder = std::numeric_limits<int>::max() / 2;

// Offset of `exponent` from `base` when it lies on base + Z and fits a
// long, else no value. Offsets that overflow a long are out of any
// representable window, so callers treat them like "far away".
std::optional<long> branch_offset(const Rational& exponent, const Rational& base) {
  Rational diff = exponent - base;
  diff.canonicalize();
  if (!is_integer(diff)) return std::nullopt;
  if (!mpz_fits_slong_p(diff.get_num().get_mpz_t())) return std::nullopt;
  return diff.get_num().get_si();
}

bool on_same_branch(const Rational& a, const Rational& b) {
  Rational diff = a - b;
  diff.canonicalize();
  return is_integer(diff);
}

}  // namespace

QSeries::QSeries(Rational leading_exponent, std::vector<Rational> coefficients)
    : lead_(std::move(leading_exponent)), coeffs_(std::move(coefficients)) {
  size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
  if (skip == coeffs_.size()) {
    coeffs_.clear();
    lead_ = 0;
    return;
  }
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(skip));
    lead_ += static_cast<long>(skip);
  }
  lead_.canonicalize();
}

QSeries QSeries::constant(const Rational& c, int order) {
  if (c == 0) return zero();
  std::vector<Rational> v(static_cast<size_t>(order) + 1, Rational(0));
  v[0] = c;
  return QSeries(Rational(0), std::move(v));
}

QSeries QSeries::monomial(const Rational& c, const Rational& exponent, int order) {
  if (c == 0) return zero();
  std::vector<Rational> v(static_cast<size_t>(order) + 1, Rational(0));
  v[0] = c;
  return QSeries(exponent, std::move(v));
}

int QSeries::order() const {
  if (is_zero()) return kZeroOrder;
  return static_cast<int>(coeffs_.size()) - 1;
}

Rational QSeries::known_through() const { return lead_ + order(); }

Rational QSeries::coefficient(const Rational& exponent) const {
  if (is_zero()) return Rational(0);
  if (!on_same_branch(exponent, lead_) || exponent < lead_) return Rational(0);
  auto off = branch_offset(exponent, lead_);
  if (!off || *off >= static_cast<long>(coeffs_.size()))
    fail(ErrorCode::InsufficientTruncation,
         "coefficient of q^" + to_string(exponent) + " beyond known window (order " +
             std::to_string(order()) + ")");
  return coeffs_[static_cast<size_t>(*off)];
}

QSeries add(const QSeries& x, const QSeries& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (!on_same_branch(x.leading_exponent(), y.leading_exponent()))
    fail(ErrorCode::IncompatibleBranch,
         "cannot add series with leading exponents " + to_string(x.leading_exponent()) + " and " +
             to_string(y.leading_exponent()));
  const Rational lead = std::min(x.leading_exponent(), y.leading_exponent());
  const Rational end = std::min(x.known_through(), y.known_through());
  // end - lead is bounded by the nearer operand's own window, so it fits.
  long n = branch_offset(end, lead).value();
  std::vector<Rational> v(static_cast<size_t>(n) + 1, Rational(0));
  auto accumulate = [&](const QSeries& s) {
    auto off = branch_offset(s.leading_exponent(), lead);
    if (!off || *off > n) return;  // entirely beyond the common window
    for (long i = 0; i + *off <= n && i < static_cast<long>(s.coefficients().size()); ++i)
      v[static_cast<size_t>(i + *off)] += s.coefficients()[static_cast<size_t>(i)];
  };
  accumulate(x);
  accumulate(y);
  return QSeries(lead, std::move(v));
}

QSeries negate(const QSeries& x) { return scale(x, Rational(-1)); }

QSeries sub(const QSeries& x, const QSeries& y) { return add(x, negate(y)); }

QSeries scale(const QSeries& x, const Rational& c) {
  if (c == 0 || x.is_zero()) return QSeries::zero();
  std::vector<Rational> v = x.coefficients();
  for (auto& a : v) a *= c;
  return QSeries(x.leading_exponent(), std::move(v));
}

QSeries mul(const QSeries& x, const QSeries& y) {
  if (x.is_zero() || y.is_zero()) return QSeries::zero();
  const size_t n = static_cast<size_t>(std::min(x.order(), y.order()));
  std::vector<Rational> v(n + 1, Rational(0));
  const auto& a = x.coefficients();
  const auto& b = y.coefficients();
  for (size_t i = 0; i <= n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j <= n && j < b.size(); ++j) {
      if (b[j] == 0) continue;
      v[i + j] += a[i] * b[j];
    }
  }
  return QSeries(x.leading_exponent() + y.leading_exponent(), std::move(v));
}

QSeries pow_rational(const QSeries& x, const Rational& c) {
  if (x.is_zero() || x.coefficients()[0] != 1)
    fail(ErrorCode::NonUnitLeadingCoefficient,
         "pow_rational requires constant term 1 after factoring q^lambda");
  const auto& t = x.coefficients();  // t[0] = 1, tail from index 1
  const size_t n = t.size() - 1;
  std::vector<Rational> y(n + 1, Rational(0));
  y[0] = 1;
  // (1+t)^c from (1+t) y' = c t' y:
  //   m y_m = sum_{k=1..m} (c k - (m - k)) t_k y_{m-k}
  for (size_t m = 1; m <= n; ++m) {
    Rational acc(0);
    for (size_t k = 1; k <= m; ++k) {
      if (t[k] == 0) continue;
      acc += (c * static_cast<long>(k) - Rational(static_cast<long>(m - k))) * t[k] * y[m - k];
    }
    y[m] = acc / static_cast<long>(m);
  }
  return QSeries(c * x.leading_exponent(), std::move(y));
}

QSeries q_derivative(const QSeries& x) {
  if (x.is_zero()) return x;
  std::vector<Rational> v = x.coefficients();
  for (size_t i = 0; i < v.size(); ++i) v[i] *= x.leading_exponent() + static_cast<long>(i);
  return QSeries(x.leading_exponent(), std::move(v));
}

QSeries dq_derivative(const QSeries& x) {
  return shift_exponent(q_derivative(x), Rational(-1));
}

QSeries divide_exact(const QSeries& x, const QSeries& y) {
  if (y.is_zero()) fail(ErrorCode::DivisionByZeroSeries, "division by the zero series");
  if (x.is_zero()) return x;
  const size_t n = static_cast<size_t>(std::min(x.order(), y.order()));
  const auto& a = x.coefficients();
  const auto& b = y.coefficients();
  std::vector<Rational> z(n + 1, Rational(0));
  for (size_t k = 0; k <= n; ++k) {
    Rational acc = k < a.size() ? a[k] : Rational(0);
    for (size_t i = 0; i < k; ++i) {
      if (z[i] == 0 || k - i >= b.size()) continue;
      acc -= z[i] * b[k - i];
    }
    z[k] = acc / b[0];
  }
  return QSeries(x.leading_exponent() - y.leading_exponent(), std::move(z));
}

QSeries shift_exponent(const QSeries& x, const Rational& delta) {
  if (x.is_zero()) return x;
  return QSeries(x.leading_exponent() + delta, x.coefficients());
}

QSeries truncate_to(const QSeries& x, int order) {
  if (x.is_zero() || x.order() <= order) return x;
  if (order < 0) fail(ErrorCode::InvalidArgument, "negative truncation order");
  std::vector<Rational> v(x.coefficients().begin(), x.coefficients().begin() + order + 1);
  return QSeries(x.leading_exponent(), std::move(v));
}

bool series_agree(const QSeries& x, const QSeries& y) {
  if (x.is_zero() && y.is_zero()) return true;
  // A canonical nonzero series leads with a nonzero coefficient, which the
  // zero series knows to be zero; likewise for distinct leading exponents.
  if (x.is_zero() || y.is_zero()) return false;
  if (x.leading_exponent() != y.leading_exponent()) return false;
  const Rational end = std::min(x.known_through(), y.known_through());
  long n = branch_offset(end, x.leading_exponent()).value();
  for (long i = 0; i <= n; ++i)
    if (x.coefficients()[static_cast<size_t>(i)] != y.coefficients()[static_cast<size_t>(i)])
      return false;
  return true;
}

int rank_of_span(const std::vector<std::vector<QSeries>>& vectors, int probe_depth) {
  if (vectors.empty()) return 0;
  if (probe_depth <= 0) fail(ErrorCode::InvalidArgument, "probe_depth must be positive");
  const size_t ncomp = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != ncomp) fail(ErrorCode::InvalidArgument, "vectors of unequal length");

  // Per column, one probe window per exponent branch mod Z, anchored at the
  // minimal leading exponent occurring in that branch. Series on other
  // branches contribute structural zeros.
  std::vector<std::vector<Rational>> column_bases(ncomp);
  for (const auto& v : vectors) {
    for (size_t j = 0; j < ncomp; ++j) {
      if (v[j].is_zero()) continue;
      bool placed = false;
      for (auto& base : column_bases[j]) {
        Rational diff = v[j].leading_exponent() - base;
        diff.canonicalize();
        if (is_integer(diff)) {
          base = std::min(base, v[j].leading_exponent());
          placed = true;
          break;
        }
      }
      if (!placed) column_bases[j].push_back(v[j].leading_exponent());
    }
  }
  Matrix m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<Rational> row;
    for (size_t j = 0; j < ncomp; ++j) {
      for (const auto& base : column_bases[j]) {
        for (int t = 0; t < probe_depth; ++t)
          row.push_back(v[j].coefficient(base + t));  // throws if the window is too short
      }
    }
    m.push_back(std::move(row));
  }
  return matrix_rank(std::move(m));
}

}  // namespace qmf
