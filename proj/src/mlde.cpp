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

#include "qmf/mlde.hpp"

#include <algorithm>

namespace qmf {

namespace {

// Stirling numbers of the second kind: theta^j = sum_i S2(j,i) theta^(i).
Integer stirling2(int j, int i) {
  if (i == j) return 1;
  if (i <= 0 || i > j) return 0;
  std::vector<Integer> row{Integer(1)};  // S2(0, 0)
  for (int m = 1; m <= j; ++m) {
    std::vector<Integer> next(static_cast<size_t>(m) + 1, Integer(0));
    for (int t = 1; t <= m; ++t) {
      Integer lower = (t - 1 < static_cast<int>(row.size())) ? row[static_cast<size_t>(t) - 1] : Integer(0);
      Integer same = (t < static_cast<int>(row.size())) ? row[static_cast<size_t>(t)] : Integer(0);
      next[static_cast<size_t>(t)] = lower + Integer(t) * same;
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(i)];
}

// Polynomial (ascending coefficients) of r(r-1)...(r-(j-1)).
std::vector<Rational> falling_factorial_poly(int j) {
  std::vector<Rational> p{Rational(1)};
  for (int i = 0; i < j; ++i) {
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (size_t t = 0; t < p.size(); ++t) {
      next[t + 1] += p[t];
      next[t] -= Rational(i) * p[t];
    }
    p = std::move(next);
  }
  return p;
}

Rational falling_factorial_at(const Rational& s, int j) {
  Rational v(1);
  for (int i = 0; i < j; ++i) v *= s - i;
  return v;
}

// D_k^n in the theta-monomial basis: vector a with D_k^n = sum_j a_j(q) theta^j.
// Composition step (theta + w P) o A adds theta(a_j), shifts degrees, and
// multiplies by wP.
std::vector<QSeries> theta_monomial_power(int n, const Rational& k, int order) {
  std::vector<QSeries> a{QSeries::constant(1, order)};
  const QSeries p = p_series(order);
  for (int m = 0; m < n; ++m) {
    const Rational w = k + 2 * m;
    std::vector<QSeries> next(a.size() + 1, QSeries::zero());
    const QSeries wp = scale(p, w);
    for (size_t j = 0; j < a.size(); ++j) {
      next[j + 1] = add(next[j + 1], a[j]);
      next[j] = add(next[j], add(q_derivative(a[j]), mul(wp, a[j])));
    }
    a = std::move(next);
  }
  return a;
}

// Convert theta-monomial coefficients to the falling-factorial basis.
std::vector<QSeries> to_falling_basis(const std::vector<QSeries>& a, int order) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<QSeries> g(a.size(), QSeries::zero());
  for (int i = 0; i <= n; ++i) {
    QSeries acc = QSeries::zero();
    for (int j = i; j <= n; ++j) {
      Integer s2 = stirling2(j, i);
      if (s2 == 0) continue;
      acc = add(acc, scale(a[static_cast<size_t>(j)], Rational(s2)));
    }
    g[static_cast<size_t>(i)] = truncate_to(acc, order);
  }
  return g;
}

// Constant terms f_{m,j}(0) for all m <= n at weight k; theta kills constant
// terms, so the composition closes on rationals.
std::vector<std::vector<Rational>> rewrite_constants_upto(int n, const Rational& k) {
  std::vector<std::vector<Rational>> all;  // all[m][j] = f_{m,j}(0), j = 0..m
  std::vector<Rational> a{Rational(1)};    // theta-monomial constants of D_k^m
  all.push_back(a);
  for (int m = 0; m < n; ++m) {
    const Rational w = k + 2 * m;
    std::vector<Rational> next(a.size() + 1, Rational(0));
    for (size_t j = 0; j < a.size(); ++j) {
      next[j + 1] += a[j];
      next[j] += w * Rational(-1, 12) * a[j];
    }
    a = std::move(next);
    // Stirling conversion of constants.
    std::vector<Rational> g(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = i; j < a.size(); ++j)
        g[i] += Rational(stirling2(static_cast<int>(j), static_cast<int>(i))) * a[j];
    all.push_back(g);
  }
  return all;
}

void check_operator_order(int n, int lo, int hi) {
  if (n < lo || n > hi)
    fail(ErrorCode::UnsupportedOrder,
         "operator order " + std::to_string(n) + " outside supported range [" +
             std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace

std::vector<Rational> ThetaOperator::indicial_coefficients() const {
  const int n = order();
  std::vector<Rational> p(static_cast<size_t>(n) + 1, Rational(0));
  for (int j = 0; j <= n; ++j) {
    const QSeries& gj = g_[static_cast<size_t>(j)];
    Rational c0 = gj.is_zero() ? Rational(0) : gj.coefficient(Rational(0));
    if (c0 == 0) continue;
    std::vector<Rational> fj = falling_factorial_poly(j);
    for (size_t t = 0; t < fj.size(); ++t) p[t] += c0 * fj[t];
  }
  return p;
}

Rational ThetaOperator::recursion_polynomial(long t, const Rational& s) const {
  Rational acc(0);
  for (int j = 0; j <= order(); ++j) {
    const QSeries& gj = g_[static_cast<size_t>(j)];
    if (gj.is_zero()) continue;
    if (Rational(t) > gj.known_through())
      fail(ErrorCode::InsufficientTruncation, "operator coefficients truncated too early");
    Rational c = gj.coefficient(Rational(t));
    if (c == 0) continue;
    acc += c * falling_factorial_at(s, j);
  }
  return acc;
}

QSeries ThetaOperator::apply(const QSeries& f) const {
  QSeries acc = QSeries::zero();
  QSeries h = f;  // theta^(j) f, built via theta^(j+1) = (theta - j) theta^(j)
  for (int j = 0; j <= order(); ++j) {
    if (j > 0) h = sub(q_derivative(h), scale(h, Rational(j - 1)));
    acc = add(acc, mul(g_[static_cast<size_t>(j)], h));
  }
  return acc;
}

std::vector<QSeries> rewrite_Dk_power(int n, const Rational& k, int order) {
  if (n < 1) fail(ErrorCode::UnsupportedOrder, "derivative power must be >= 1");
  std::vector<QSeries> g = to_falling_basis(theta_monomial_power(n, k, order), order);
  g.pop_back();  // drop the implicit leading 1
  return g;
}

MldeOperator MldeOperator::from_alphas(int n, const Rational& k, std::vector<Rational> alphas) {
  check_operator_order(n, 2, 5);
  if (alphas.size() != static_cast<size_t>(n) - 1)
    fail(ErrorCode::InvalidArgument,
         "expected " + std::to_string(n - 1) + " scalars alpha_4..alpha_" + std::to_string(2 * n));
  MldeOperator op(n, k);
  op.alphas_ = std::move(alphas);
  return op;
}

MldeOperator MldeOperator::from_forms(int n, const Rational& k, std::vector<ModularForm> forms) {
  check_operator_order(n, 1, 5);
  if (forms.size() != static_cast<size_t>(std::max(n - 1, 0)))
    fail(ErrorCode::InvalidArgument, "expected one coefficient form per 2j, j = 2..n");
  for (size_t i = 0; i < forms.size(); ++i) {
    const int expected = 2 * (static_cast<int>(i) + 2);
    if (forms[i].weight != expected)
      fail(ErrorCode::InvalidArgument,
           "coefficient form " + std::to_string(i) + " must have weight " + std::to_string(expected));
  }
  MldeOperator op(n, k);
  op.forms_ = std::move(forms);
  return op;
}

ThetaOperator MldeOperator::rewrite(int order) const {
  std::vector<QSeries> total = to_falling_basis(theta_monomial_power(n_, k_, order), order);
  for (int j = 2; j <= n_; ++j) {
    QSeries coeff;
    if (alphas_) {
      const Rational& alpha = (*alphas_)[static_cast<size_t>(j) - 2];
      if (alpha == 0) continue;
      coeff = scale(eisenstein(2 * j, order).series, alpha);
    } else {
      coeff = forms_[static_cast<size_t>(j) - 2].series;
      if (coeff.is_zero()) continue;
    }
    // D_k^{n-j} contribution, multiplied by the weight-2j form.
    std::vector<QSeries> part = to_falling_basis(theta_monomial_power(n_ - j, k_, order), order);
    for (size_t i = 0; i < part.size(); ++i)
      total[i] = truncate_to(add(total[i], mul(coeff, part[i])), order);
  }
  return ThetaOperator(std::move(total));
}

std::optional<std::vector<Rational>> rational_roots_of_monic(const std::vector<Rational>& poly) {
  const int n = static_cast<int>(poly.size()) - 1;
  if (n < 0 || poly.back() != 1) fail(ErrorCode::InvalidArgument, "polynomial must be monic");
  if (n == 0) return std::vector<Rational>{};
  // Clear denominators: y = L r turns P into a monic integer polynomial in y.
  Integer lead_lcm(1);
  for (const auto& c : poly) mpz_lcm(lead_lcm.get_mpz_t(), lead_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> m(static_cast<size_t>(n) + 1);
  Integer lpow(1);
  for (int i = n; i >= 0; --i) {
    Rational scaled = poly[static_cast<size_t>(i)] * Rational(lpow);
    m[static_cast<size_t>(i)] = scaled.get_num();  // denominator is 1 by construction
    lpow *= lead_lcm;
  }

  auto eval = [](const std::vector<Integer>& p, const Integer& x) {
    Integer acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
  };
  auto deflate = [](std::vector<Integer>& p, const Integer& root) {
    // Synthetic division by (y - root); remainder must be zero.
    std::vector<Integer> q(p.size() - 1);
    Integer carry = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = p[i] + carry * root;
    }
    p = std::move(q);
  };

  // Sturm chain over Q for exact real-root isolation.
  using Poly = std::vector<Rational>;
  auto degree = [](const Poly& p) { return static_cast<int>(p.size()) - 1; };
  auto poly_eval = [](const Poly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
  };
  auto poly_rem = [&](Poly a, const Poly& b) {
    while (degree(a) >= degree(b) && !(a.size() == 1 && a[0] == 0)) {
      Rational f = a.back() / b.back();
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      while (a.size() > 1 && a.back() == 0) a.pop_back();
      if (a.size() == 1 && a[0] == 0) break;
    }
    return a;
  };

  std::vector<Rational> roots;
  std::vector<Integer> current = m;
  while (current.size() > 1) {
    // Square-free part for the Sturm chain.
    Poly p(current.size());
    for (size_t i = 0; i < current.size(); ++i) p[i] = Rational(current[i]);
    Poly dp(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) dp[i - 1] = Rational(static_cast<long>(i)) * p[i];
    std::vector<Poly> chain{p, dp};
    while (degree(chain.back()) > 0) {
      Poly r = poly_rem(chain[chain.size() - 2], chain.back());
      if (r.size() == 1 && r[0] == 0) break;
      for (auto& c : r) c = -c;
      chain.push_back(std::move(r));
    }
    auto variations = [&](const Rational& x) {
      int v = 0;
      int prev = 0;
      for (const auto& q : chain) {
        Rational val = poly_eval(q, x);
        int sgn = val == 0 ? 0 : (val > 0 ? 1 : -1);
        if (sgn == 0) continue;
        if (prev != 0 && sgn != prev) ++v;
        prev = sgn;
      }
      return v;
    };

    Integer bound(1);
    for (const auto& c : current) {
      Integer a = abs(c);
      if (a > bound) bound = a;
    }
    bound += 1;

    // Bisect (lo, hi] intervals until each isolated real root sits in an
    // interval of length < 1, then try the integer candidates exactly.
    bool found = false;
    std::vector<std::pair<Rational, Rational>> stack{{Rational(-bound), Rational(bound)}};
    while (!stack.empty() && !found) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      int count = variations(lo) - variations(hi);
      if (count <= 0) continue;
      if (hi - lo < 1) {
        for (Integer cand = floor_integer(lo); cand <= floor_integer(hi) + 1; ++cand) {
          if (eval(current, cand) == 0) {
            roots.push_back(Rational(cand) / Rational(lead_lcm));
            deflate(current, cand);
            found = true;
            break;
          }
        }
        // A real root strictly inside with no integer hit: irrational.
        if (!found) return std::nullopt;
      } else {
        Rational mid = (lo + hi) / 2;
        mid.canonicalize();
        if (poly_eval(p, mid) == 0 && is_integer(mid)) {
          Integer cand = floor_integer(mid);
          if (eval(current, cand) == 0) {
            roots.push_back(Rational(cand) / Rational(lead_lcm));
            deflate(current, cand);
            found = true;
            break;
          }
        }
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
      }
    }
    if (!found) return std::nullopt;  // no real roots left but degree > 0, or all irrational
  }
  if (roots.size() != static_cast<size_t>(n)) return std::nullopt;
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  return roots;
}

IndicialData indicial_polynomial(const MldeOperator& op) {
  ThetaOperator th = op.rewrite(0);
  IndicialData data;
  data.polynomial = th.indicial_coefficients();
  data.roots = rational_roots_of_monic(data.polynomial);
  return data;
}

MldeOperator operator_from_roots(const std::vector<Rational>& roots) {
  const int n = static_cast<int>(roots.size());
  check_operator_order(n, 2, 5);
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j])
        fail(ErrorCode::DuplicateRoots, "indicial roots must be pairwise distinct");

  // prod (r - lambda_i), ascending coefficients.
  std::vector<Rational> poly{Rational(1)};
  for (const auto& root : roots) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (size_t t = 0; t < poly.size(); ++t) {
      next[t + 1] += poly[t];
      next[t] -= root * poly[t];
    }
    poly = std::move(next);
  }

  // Falling-factorial coordinates b_j: P(r) = sum_j b_j r^(j).
  std::vector<Rational> b(poly.size(), Rational(0));
  std::vector<Rational> rem = poly;
  for (int j = n; j >= 0; --j) {
    b[static_cast<size_t>(j)] = rem[static_cast<size_t>(j)];
    if (b[static_cast<size_t>(j)] == 0) continue;
    std::vector<Rational> fj = falling_factorial_poly(j);
    for (size_t t = 0; t < fj.size(); ++t) rem[t] -= b[static_cast<size_t>(j)] * fj[t];
  }

  // Weight from f_{n,n-1}(0) = n(5(n-1) - k)/12 = b_{n-1}.
  const Rational k = Rational(5 * (n - 1)) - Rational(12) * b[static_cast<size_t>(n) - 1] / n;

  const auto f0 = rewrite_constants_upto(n, k);  // f0[m][j] = f_{m,j}(0)
  std::vector<Rational> alphas(static_cast<size_t>(n) - 1, Rational(0));
  for (int j = 2; j <= n; ++j) {
    // g_{n-j}(0) = f_{n,n-j}(0) + sum_{i=2}^{j} alpha_{2i} f_{n-i,n-j}(0), E_{2i}(0) = 1.
    Rational acc = b[static_cast<size_t>(n - j)] - f0[static_cast<size_t>(n)][static_cast<size_t>(n - j)];
    for (int i = 2; i < j; ++i)
      acc -= alphas[static_cast<size_t>(i) - 2] * f0[static_cast<size_t>(n - i)][static_cast<size_t>(n - j)];
    alphas[static_cast<size_t>(j) - 2] = acc;  // f_{n-j,n-j}(0) = 1
  }
  return MldeOperator::from_alphas(n, k, std::move(alphas));
}

QSeries frobenius_solve(const ThetaOperator& th, const Rational& root, int order) {
  if (th.recursion_polynomial(0, root) != 0)
    fail(ErrorCode::NotAnIndicialRoot, to_string(root) + " is not an indicial root");
  std::vector<Rational> b(static_cast<size_t>(order) + 1, Rational(0));
  b[0] = 1;
  for (long m = 1; m <= order; ++m) {
    Rational rhs(0);
    for (long t = 1; t <= m; ++t) {
      if (b[static_cast<size_t>(m - t)] == 0) continue;
      rhs -= b[static_cast<size_t>(m - t)] * th.recursion_polynomial(t, root + (m - t));
    }
    const Rational pm = th.recursion_polynomial(0, root + m);
    if (pm == 0) {
      if (rhs != 0)
        fail(ErrorCode::ResonantRoot,
             "resonance at offset " + std::to_string(m) + " with nonvanishing right-hand side");
      b[static_cast<size_t>(m)] = 0;  // Frobenius miracle: any value works, fix 0
    } else {
      b[static_cast<size_t>(m)] = rhs / pm;
    }
  }
  return QSeries(root, std::move(b));
}

QSeries frobenius_solve(const MldeOperator& op, const Rational& root, int order) {
  return frobenius_solve(op.rewrite(order), root, order);
}

std::vector<QSeries> solve_fundamental_system(const MldeOperator& op, int order) {
  IndicialData data = indicial_polynomial(op);
  if (!data.roots)
    fail(ErrorCode::IrrationalIndicialRoots, "indicial polynomial does not split over Q");
  std::vector<Rational> roots = *data.roots;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (is_integer(roots[i] - roots[j]))
        fail(ErrorCode::CongruentRoots, "indicial roots " + to_string(roots[i]) + " and " +
                                            to_string(roots[j]) + " differ by an integer");
  ThetaOperator th = op.rewrite(order);
  std::vector<QSeries> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(frobenius_solve(th, r, order));
  std::vector<std::vector<QSeries>> as_vectors;
  for (const auto& s : out) as_vectors.push_back({s});
  const int probe = std::min(order + 1, static_cast<int>(roots.size()) + 4);
  if (rank_of_span(as_vectors, probe) != static_cast<int>(roots.size()))
    fail(ErrorCode::RankDeficient, "fundamental system has deficient rank");
  return out;
}

}  // namespace qmf
