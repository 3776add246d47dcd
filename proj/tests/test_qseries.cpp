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

#include <random>

#include "qmf/mlde.hpp"
#include "qmf/modforms.hpp"
#include "qmf/qseries.hpp"

using namespace qmf;

namespace {

QSeries make(const Rational& lead, std::vector<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QSeries(lead, std::move(v));
}

// Random series of the given order on the branch base + Z.
QSeries random_series(std::mt19937_64& rng, const Rational& base, int order) {
  std::uniform_int_distribution<long> c(-9, 9);
  std::vector<Rational> v;
  v.emplace_back(1 + (c(rng) + 9) % 9);
  for (int i = 1; i <= order; ++i) v.emplace_back(c(rng));
  std::uniform_int_distribution<long> off(0, 2);
  return QSeries(base + off(rng), std::move(v));
}

}  // namespace

TEST_SUITE("qseries") {
  TEST_CASE("canonicalization strips leading zeros and detects zero") {
    QSeries s = make(Rational(2), {0, 0, 3, 1});
    CHECK(s.leading_exponent() == 4);
    CHECK(s.order() == 1);
    QSeries z = make(rational(1, 3), {0, 0, 0});
    CHECK(z.is_zero());
    CHECK(z.leading_exponent() == 0);
  }

  TEST_CASE("add aligns exponent branches") {
    // (q^{1/2}(1+q)) + q^{3/2} = q^{1/2}(1 + 2q)
    QSeries x = make(rational(1, 2), {1, 1});
    QSeries y = make(rational(3, 2), {1});
    QSeries sum = add(x, y);
    CHECK(sum.leading_exponent() == rational(1, 2));
    CHECK(sum.coefficients() == std::vector<Rational>{Rational(1), Rational(2)});
  }

  TEST_CASE("zero is the additive identity") {
    QSeries x = make(rational(1, 7), {3, -2, 5});
    CHECK(add(x, QSeries::zero()) == x);
    CHECK(add(QSeries::zero(), x) == x);
  }

  TEST_CASE("cancellation produces the canonical zero") {
    QSeries x = make(Rational(0), {1, -1});
    QSeries y = make(Rational(0), {-1, 1});
    CHECK(add(x, y).is_zero());
  }

  TEST_CASE("add refuses incompatible branches") {
    QSeries x = make(rational(1, 2), {1});
    QSeries y = make(rational(1, 3), {1});
    CHECK_THROWS_WITH_AS(add(x, y), doctest::Contains("IncompatibleBranch"), DomainError);
  }

  TEST_CASE("mul convolves and adds exponents") {
    // (q^{1/24}(1-q))^2 = q^{1/12}(1 - 2q + q^2)
    QSeries x = make(rational(1, 24), {1, -1, 0});
    QSeries sq = mul(x, x);
    CHECK(sq.leading_exponent() == rational(1, 12));
    CHECK(sq.coefficients() == std::vector<Rational>{Rational(1), Rational(-2), Rational(1)});
  }

  TEST_CASE("mul identity and truncation-min rule") {
    QSeries x = make(rational(2, 3), {4, 0, -1, 7});
    CHECK(mul(x, QSeries::constant(1, 10)) == x);
    QSeries a = eta_power(Rational(1), 3);
    QSeries b = eta_power(Rational(1), 5);
    CHECK(mul(a, b).order() == 3);
  }

  TEST_CASE("pow_rational matches the binomial theorem") {
    QSeries x = make(Rational(0), {1, -1, 0, 0, 0, 0, 0, 0});
    QSeries r = pow_rational(x, rational(1, 2));
    // C(1/2, n) (-1)^n computed directly.
    Rational binom(1);
    for (int n = 0; n <= 7; ++n) {
      if (n > 0) binom *= (rational(1, 2) - (n - 1)) / n;
      Rational expected = binom * ((n % 2 == 0) ? 1 : -1);
      CHECK(r.coefficients()[static_cast<size_t>(n)] == expected);
    }
    CHECK(series_agree(mul(r, r), x));  // square back
  }

  TEST_CASE("pow_rational identity and geometric series") {
    QSeries x = make(rational(5, 7), {1, 4, -2, 9});
    CHECK(pow_rational(x, Rational(1)) == x);
    QSeries inv = pow_rational(make(Rational(0), {1, -1, 0, 0, 0}), Rational(-1));
    CHECK(inv.coefficients() == std::vector<Rational>(5, Rational(1)));
  }

  TEST_CASE("pow_rational requires unit constant term") {
    QSeries x = make(Rational(0), {2, 1});
    CHECK_THROWS_WITH_AS(pow_rational(x, rational(1, 2)),
                         doctest::Contains("NonUnitLeadingCoefficient"), DomainError);
  }

  TEST_CASE("q_derivative") {
    QSeries mono = QSeries::monomial(Rational(1), rational(1, 12), 4);
    CHECK(q_derivative(mono) == QSeries::monomial(rational(1, 12), rational(1, 12), 4));
    CHECK(q_derivative(QSeries::constant(1, 6)).is_zero());
    QSeries p = make(Rational(1), {1, 3});  // q + 3q^2
    CHECK(q_derivative(p) == make(Rational(1), {1, 6}));
  }

  TEST_CASE("divide_exact") {
    QSeries num = make(Rational(2), {1, -1});  // q^2 - q^3
    QSeries den = make(Rational(1), {1, -1});  // q(1-q)
    CHECK(divide_exact(num, den) == make(Rational(1), {1, 0}));
    QSeries x = make(rational(3, 5), {2, 7, -1, 4});
    QSeries one = divide_exact(x, x);
    CHECK(one.leading_exponent() == 0);
    CHECK(one.coefficients()[0] == 1);
    for (size_t i = 1; i < one.coefficients().size(); ++i) CHECK(one.coefficients()[i] == 0);
    CHECK_THROWS_WITH_AS(divide_exact(x, QSeries::zero()),
                         doctest::Contains("DivisionByZeroSeries"), DomainError);
  }

  TEST_CASE("delta over eta^24 is one") {
    QSeries d = delta(20).series;
    QSeries e24 = eta_power(Rational(24), 20);
    QSeries quot = divide_exact(d, e24);
    CHECK(quot.leading_exponent() == 0);
    CHECK(quot.coefficients()[0] == 1);
    for (size_t i = 1; i < quot.coefficients().size(); ++i) CHECK(quot.coefficients()[i] == 0);
  }

  TEST_CASE("rank_of_span basics") {
    QSeries one = QSeries::constant(1, 3);
    QSeries q1 = QSeries::monomial(Rational(1), Rational(1), 3);
    CHECK(rank_of_span({{one}, {q1}}, 2) == 2);
    QSeries x = make(rational(1, 5), {1, 2, 3, 4});
    CHECK(rank_of_span({{x}, {scale(x, Rational(2))}}, 3) == 1);
  }

  TEST_CASE("rank_of_span on a fundamental system") {
    MldeOperator op = operator_from_roots({rational(1, 12), rational(5, 12)});
    std::vector<QSeries> sols = solve_fundamental_system(op, 12);
    std::vector<std::vector<QSeries>> vecs;
    for (const auto& s : sols) vecs.push_back({s});
    CHECK(rank_of_span(vecs, 10) == 2);
  }

  TEST_CASE("rank_of_span flags insufficient truncation") {
    QSeries shallow = make(Rational(0), {1, 2});
    CHECK_THROWS_WITH_AS(rank_of_span({{shallow}}, 5),
                         doctest::Contains("InsufficientTruncation"), DomainError);
  }

  TEST_CASE("ring laws hold to the common truncation") {
    std::mt19937_64 rng(1001);
    for (int trial = 0; trial < 12; ++trial) {
      Rational base = rational(trial % 5, 6);
      QSeries x = random_series(rng, base, 12);
      QSeries y = random_series(rng, base, 12);
      QSeries z = random_series(rng, base, 12);
      CHECK(series_agree(add(x, y), add(y, x)));
      CHECK(series_agree(mul(x, y), mul(y, x)));
      CHECK(series_agree(add(add(x, y), z), add(x, add(y, z))));
      CHECK(series_agree(mul(mul(x, y), z), mul(x, mul(y, z))));
      CHECK(series_agree(mul(x, add(y, z)), add(mul(x, y), mul(x, z))));
    }
  }

  TEST_CASE("pow_rational is additive in the exponent") {
    std::mt19937_64 rng(1002);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    for (int trial = 0; trial < 10; ++trial) {
      QSeries x = random_series(rng, Rational(0), 12);
      std::vector<Rational> v = x.coefficients();
      v[0] = 1;  // unit constant term
      QSeries u(x.leading_exponent(), std::move(v));
      Rational a = rational(num(rng), den(rng));
      Rational b = rational(num(rng), den(rng));
      CHECK(series_agree(pow_rational(u, a + b), mul(pow_rational(u, a), pow_rational(u, b))));
    }
  }

  TEST_CASE("divide_exact inverts mul") {
    std::mt19937_64 rng(1003);
    for (int trial = 0; trial < 10; ++trial) {
      QSeries x = random_series(rng, rational(trial, 7), 12);
      QSeries y = random_series(rng, rational(trial + 1, 5), 12);
      CHECK(series_agree(divide_exact(mul(x, y), y), x));
    }
  }

  TEST_CASE("q_derivative satisfies the Leibniz rule") {
    std::mt19937_64 rng(1004);
    for (int trial = 0; trial < 10; ++trial) {
      QSeries x = random_series(rng, rational(trial, 11), 12);
      QSeries y = random_series(rng, rational(trial, 3), 12);
      QSeries lhs = q_derivative(mul(x, y));
      QSeries rhs = add(mul(q_derivative(x), y), mul(x, q_derivative(y)));
      CHECK(series_agree(lhs, rhs));
    }
  }

  TEST_CASE("rank is monotone in probe depth and stabilizes") {
    std::mt19937_64 rng(1005);
    std::vector<std::vector<QSeries>> vecs;
    for (int i = 0; i < 4; ++i)
      vecs.push_back({random_series(rng, Rational(0), 14), random_series(rng, rational(1, 2), 14)});
    int prev = 0;
    for (int depth = 1; depth <= 10; ++depth) {
      int r = rank_of_span(vecs, depth);
      CHECK(r >= prev);
      prev = r;
    }
    CHECK(rank_of_span(vecs, 8) == rank_of_span(vecs, 10));
  }
}
