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

#include "qmf/modforms.hpp"

#include <atomic>
#include <mutex>

#include "qmf/linalg.hpp"

namespace qmf {

namespace {

std::mutex g_cache_mutex;
std::atomic<bool> g_corrupt_bernoulli{false};

// Bernoulli numbers via series inversion: t/(e^t - 1) = 1 / sum t^k/(k+1)!.
std::vector<Rational> bernoulli_table(int upto) {
  std::vector<Rational> denom(static_cast<size_t>(upto) + 1, Rational(0));
  Rational f(1);
  for (int k = 0; k <= upto; ++k) {
    f *= (k + 1);
    denom[static_cast<size_t>(k)] = 1 / f;
  }
  QSeries gen = divide_exact(QSeries::constant(1, upto), QSeries(Rational(0), denom));
  std::vector<Rational> b(static_cast<size_t>(upto) + 1, Rational(0));
  Rational kfact(1);
  for (int k = 0; k <= upto; ++k) {
    if (k > 0) kfact *= k;
    b[static_cast<size_t>(k)] = gen.coefficient(Rational(k)) * kfact;
  }
  return b;
}

}  // namespace

namespace testing {
void corrupt_bernoulli(bool enabled) { g_corrupt_bernoulli.store(enabled); }
}  // namespace testing

Rational bernoulli(int k) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "bernoulli index must be nonnegative");
  static std::vector<Rational> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  if (static_cast<int>(cache.size()) <= k) cache = bernoulli_table(k + 8);
  Rational value = cache[static_cast<size_t>(k)];
  if (g_corrupt_bernoulli.load() && k >= 4) value += Rational(1, 7);
  return value;
}

Integer sigma(long k, long n) {
  Integer total(0);
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    total += p;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
      total += p;
    }
  }
  return total;
}

ModularForm eisenstein(int k, int order) {
  if (k < 4 || k % 2 != 0)
    fail(ErrorCode::InvalidArgument, "Eisenstein series requires even weight >= 4");
  const Rational factor = Rational(-2 * k) / bernoulli(k);
  std::vector<Rational> v(static_cast<size_t>(order) + 1, Rational(0));
  v[0] = 1;
  for (long n = 1; n <= order; ++n) v[static_cast<size_t>(n)] = factor * Rational(sigma(k - 1, n));
  ModularForm f{k, QSeries(Rational(0), std::move(v)), std::nullopt};
  if (k == 4 || k == 6 || k == 8 || k == 10) f.basis_coords = std::vector<Rational>{Rational(1)};
  return f;
}

QSeries eisenstein2(int order) {
  std::vector<Rational> v(static_cast<size_t>(order) + 1, Rational(0));
  v[0] = 1;
  for (long n = 1; n <= order; ++n) v[static_cast<size_t>(n)] = Rational(-24) * Rational(sigma(1, n));
  return QSeries(Rational(0), std::move(v));
}

ModularForm delta(int order) {
  const QSeries e4 = eisenstein(4, order).series;
  const QSeries e6 = eisenstein(6, order).series;
  QSeries d = scale(sub(mul(mul(e4, e4), e4), mul(e6, e6)), Rational(1, 1728));
  ModularForm f{12, std::move(d), std::vector<Rational>{Rational(1, 1728), Rational(-1, 1728)}};
  return f;
}

QSeries euler_product(int order) {
  // Factors with n > order cannot touch coefficients up to q^order.
  QSeries prod = QSeries::constant(1, order);
  for (int n = 1; n <= order; ++n) {
    std::vector<Rational> bin(static_cast<size_t>(order) + 1, Rational(0));
    bin[0] = 1;
    bin[static_cast<size_t>(n)] = -1;
    prod = mul(prod, QSeries(Rational(0), std::move(bin)));
  }
  return prod;
}

QSeries eta_power(const Rational& w, int order) {
  if (w == 0) return QSeries::constant(1, order);
  QSeries body = pow_rational(euler_product(order), w);
  return shift_exponent(body, w / 24);
}

QSeries p_series(int order) {
  static std::vector<std::pair<int, QSeries>> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  for (const auto& [ord, s] : cache)
    if (ord >= order) return truncate_to(s, order);
  QSeries eta = eta_power(Rational(1), order);
  QSeries p = scale(divide_exact(q_derivative(eta), eta), Rational(-2));
  cache.emplace_back(order, p);
  return p;
}

QSeries modular_derivative(const QSeries& f, const Rational& k) {
  QSeries theta = q_derivative(f);
  if (k == 0 || f.is_zero()) return theta;
  return add(theta, scale(mul(p_series(f.order()), f), k));
}

long dim_Mk(long k) {
  if (k < 0 || k % 2 != 0) return 0;
  long base = floor_div_long(k, 12);
  return k % 12 == 2 ? base : base + 1;
}

std::vector<ModularForm> basis_Mk(int k, int order) {
  std::vector<ModularForm> out;
  if (k < 0 || k % 2 != 0) return out;
  const QSeries e4 = eisenstein(4, order).series;
  const QSeries e6 = eisenstein(6, order).series;
  // 4a + 6b = k with a descending.
  for (int a = k / 4; a >= 0; --a) {
    int rem = k - 4 * a;
    if (rem % 6 != 0) continue;
    int b = rem / 6;
    QSeries m = QSeries::constant(1, order);
    for (int i = 0; i < a; ++i) m = mul(m, e4);
    for (int i = 0; i < b; ++i) m = mul(m, e6);
    ModularForm f{k, std::move(m), std::nullopt};
    auto coords = std::vector<Rational>(static_cast<size_t>(dim_Mk(k)), Rational(0));
    coords[out.size()] = 1;
    f.basis_coords = std::move(coords);
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<std::vector<Rational>> coords_in_basis(const ModularForm& f) {
  const int order = std::max(2 * static_cast<int>(dim_Mk(f.weight)) + 4, 8);
  std::vector<ModularForm> basis = basis_Mk(f.weight, order);
  if (f.series.is_zero()) return std::vector<Rational>(basis.size(), Rational(0));
  if (f.series.known_through() < order) return std::nullopt;
  std::vector<std::vector<Rational>> columns;
  std::vector<Rational> target;
  for (int n = 0; n <= order; ++n) target.push_back(f.series.coefficient(Rational(n)));
  for (const auto& b : basis) {
    std::vector<Rational> col;
    for (int n = 0; n <= order; ++n) col.push_back(b.series.coefficient(Rational(n)));
    columns.push_back(std::move(col));
  }
  return solve_exact(columns, target);
}

}  // namespace qmf
