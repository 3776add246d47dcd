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
#include <set>

#include "qmf/mlde.hpp"
#include "qmf/modforms.hpp"

using namespace qmf;

namespace {

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

}  // namespace

TEST_SUITE("mlde") {
  TEST_CASE("rewrite of D_k^n") {
    // n = 1: f_{1,0} = k P, so f_{1,0}(0) = -k/12.
    auto f1 = rewrite_Dk_power(1, Rational(3), 4);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].coefficient(Rational(0)) == rational(-3, 12));
    // n = 2, k = 5: f_{2,1}(0) = 0.
    auto f2 = rewrite_Dk_power(2, Rational(5), 4);
    REQUIRE(f2.size() == 2);
    CHECK((f2[1].is_zero() || f2[1].coefficient(Rational(0)) == 0));
    // n = 3, k = 0: f_{3,2}(0) = 5/2.
    auto f3 = rewrite_Dk_power(3, Rational(0), 4);
    CHECK(f3[2].coefficient(Rational(0)) == rational(5, 2));
  }

  TEST_CASE("f_{n,n-1}(0) closed form") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    for (int n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        Rational k = rational(num(rng), den(rng));
        auto f = rewrite_Dk_power(n, k, 1);
        Rational got = f[static_cast<size_t>(n) - 1].is_zero()
                           ? Rational(0)
                           : f[static_cast<size_t>(n) - 1].coefficient(Rational(0));
        CHECK(got == Rational(n) * (Rational(5 * (n - 1)) - k) / 12);
      }
    }
  }

  TEST_CASE("rewritten coefficients are holomorphic at q = 0") {
    std::mt19937_64 rng(5151);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 8);
    for (int n = 1; n <= 5; ++n) {
      Rational k = rational(num(rng), den(rng));
      for (const auto& f : rewrite_Dk_power(n, k, 6)) {
        if (f.is_zero()) continue;
        CHECK(f.leading_exponent() >= 0);
        CHECK(is_integer(f.leading_exponent()));
      }
    }
  }

  TEST_CASE("indicial polynomial of D_0^2") {
    MldeOperator op = MldeOperator::from_alphas(2, Rational(0), {Rational(0)});
    IndicialData data = indicial_polynomial(op);
    // P(r) = r(r - 1/6): coefficients (0, -1/6, 1)
    CHECK(data.polynomial ==
          std::vector<Rational>{Rational(0), rational(-1, 6), Rational(1)});
    REQUIRE(data.roots.has_value());
    CHECK(*data.roots == std::vector<Rational>{Rational(0), rational(1, 6)});
  }

  TEST_CASE("indicial polynomial is monic with Vieta sum (k+1)/6 at order 2") {
    std::mt19937_64 rng(5152);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 6);
    for (int trial = 0; trial < 15; ++trial) {
      Rational k = rational(num(rng), den(rng));
      Rational alpha = rational(num(rng), den(rng));
      MldeOperator op = MldeOperator::from_alphas(2, k, {alpha});
      IndicialData data = indicial_polynomial(op);
      REQUIRE(data.polynomial.size() == 3);
      CHECK(data.polynomial[2] == 1);
      CHECK(-data.polynomial[1] == (k + 1) / 6);  // sum of roots
    }
  }

  TEST_CASE("complex indicial roots are reported, not invented") {
    // k = 0, alpha_4 = 1: P(r) = r^2 - r/6 + 1, negative discriminant.
    MldeOperator op = MldeOperator::from_alphas(2, Rational(0), {Rational(1)});
    IndicialData data = indicial_polynomial(op);
    CHECK(data.polynomial.size() == 3);
    CHECK_FALSE(data.roots.has_value());
    CHECK_THROWS_WITH_AS(solve_fundamental_system(op, 8),
                         doctest::Contains("IrrationalIndicialRoots"), DomainError);
  }

  TEST_CASE("rational root extraction") {
    // (r - 2)(r + 3)(r - 1/2)
    std::vector<Rational> poly{Rational(3), rational(-13, 2), rational(1, 2), Rational(1)};
    auto roots = rational_roots_of_monic(poly);
    REQUIRE(roots.has_value());
    CHECK(*roots == std::vector<Rational>{Rational(-3), rational(1, 2), Rational(2)});
    // r^2 - 2: irrational.
    CHECK_FALSE(rational_roots_of_monic({Rational(-2), Rational(0), Rational(1)}).has_value());
    // r^2 + 1: complex.
    CHECK_FALSE(rational_roots_of_monic({Rational(1), Rational(0), Rational(1)}).has_value());
    // (r - 1)^2 (r + 5): multiplicity.
    auto multi = rational_roots_of_monic({Rational(5), Rational(-9), Rational(3), Rational(1)});
    REQUIRE(multi.has_value());
    CHECK(*multi == std::vector<Rational>{Rational(-5), Rational(1), Rational(1)});
  }

  TEST_CASE("operator_from_roots round trip") {
    std::mt19937_64 rng(5153);
    std::uniform_int_distribution<long> num(-24, 24);
    std::uniform_int_distribution<long> den(1, 12);
    for (int n = 2; n <= 5; ++n) {
      for (int trial = 0; trial < 15; ++trial) {
        std::set<Rational> roots;
        while (static_cast<int>(roots.size()) < n) roots.insert(rational(num(rng), den(rng)));
        std::vector<Rational> sorted(roots.begin(), roots.end());
        MldeOperator op = operator_from_roots(sorted);
        IndicialData data = indicial_polynomial(op);
        REQUIRE(data.roots.has_value());
        CHECK(*data.roots == sorted);
        // Sum rule: sum of roots = n(k + n - 1)/12.
        Rational sum(0);
        for (const auto& r : sorted) sum += r;
        CHECK(sum == Rational(n) * (op.weight() + n - 1) / 12);
      }
    }
  }

  TEST_CASE("order-2 inverse weight formula") {
    Rational l1 = rational(3, 7), l2 = rational(9, 5);
    MldeOperator op = operator_from_roots({l1, l2});
    CHECK(op.weight() == 6 * (l1 + l2) - 1);
    MldeOperator d02 = operator_from_roots({Rational(0), rational(1, 6)});
    CHECK(d02.weight() == 0);
    CHECK((*d02.alphas())[0] == 0);
  }

  TEST_CASE("operator constructors reject bad input") {
    CHECK_THROWS_WITH_AS(operator_from_roots({Rational(1), Rational(1)}),
                         doctest::Contains("DuplicateRoots"), DomainError);
    CHECK_THROWS_WITH_AS(operator_from_roots({Rational(1)}),
                         doctest::Contains("UnsupportedOrder"), DomainError);
    std::vector<Rational> six(6);
    for (int i = 0; i < 6; ++i) six[static_cast<size_t>(i)] = rational(i, 7);
    CHECK_THROWS_WITH_AS(operator_from_roots(six), doctest::Contains("UnsupportedOrder"),
                         DomainError);
    CHECK_THROWS_WITH_AS(MldeOperator::from_alphas(2, Rational(0), {}),
                         doctest::Contains("InvalidArgument"), DomainError);
  }

  TEST_CASE("frobenius solutions") {
    MldeOperator d02 = MldeOperator::from_alphas(2, Rational(0), {Rational(0)});
    QSeries at0 = frobenius_solve(d02, Rational(0), 10);
    CHECK(at0 == QSeries::constant(1, 10));
    QSeries at16 = frobenius_solve(d02, rational(1, 6), 10);
    CHECK(at16.leading_exponent() == rational(1, 6));
    CHECK(d02.rewrite(10).apply(at16).is_zero());

    MldeOperator w2 = operator_from_roots({rational(1, 12), rational(5, 12)});
    CHECK(w2.weight() == 2);
    ThetaOperator th = w2.rewrite(22);
    for (const Rational& root : {rational(1, 12), rational(5, 12)}) {
      QSeries sol = frobenius_solve(th, root, 22);
      CHECK(th.apply(sol).is_zero());
    }

    CHECK_THROWS_WITH_AS(frobenius_solve(w2, rational(1, 3), 8),
                         doctest::Contains("NotAnIndicialRoot"), DomainError);
  }

  TEST_CASE("resonance without a miracle fails loudly") {
    MldeOperator op = operator_from_roots({Rational(0), Rational(1)});
    CHECK_THROWS_WITH_AS(frobenius_solve(op, Rational(0), 8), doctest::Contains("ResonantRoot"),
                         DomainError);
    // The larger root is solvable as usual.
    QSeries top = frobenius_solve(op, Rational(1), 8);
    CHECK(top.leading_exponent() == 1);
  }

  TEST_CASE("frobenius miracle continues with b = 0") {
    // theta^(2) - theta^(1): P(r) = r(r-2), roots {0, 2}; the resonance at
    // offset 2 has vanishing right-hand side and the solution is constant.
    ThetaOperator th(
        {QSeries::zero(), QSeries::constant(Rational(-1), 6), QSeries::constant(Rational(1), 6)});
    QSeries sol = frobenius_solve(th, Rational(0), 6);
    CHECK(sol == QSeries::constant(1, 6));
  }

  TEST_CASE("general MLDE constructor accepts explicit coefficient forms") {
    // D_k^2 + M4 with M4 = 7 E4 must match the Eisenstein form.
    Rational k = rational(5, 3);
    MldeOperator eis = MldeOperator::from_alphas(2, k, {Rational(7)});
    ModularForm m4{4, scale(eisenstein(4, 10).series, Rational(7)), std::nullopt};
    MldeOperator gen = MldeOperator::from_forms(2, k, {m4});
    IndicialData a = indicial_polynomial(eis);
    IndicialData b = indicial_polynomial(gen);
    CHECK(a.polynomial == b.polynomial);
    ModularForm wrong{6, eisenstein(6, 10).series, std::nullopt};
    CHECK_THROWS_WITH_AS(MldeOperator::from_forms(2, k, {wrong}),
                         doctest::Contains("InvalidArgument"), DomainError);
  }

  TEST_CASE("solve_fundamental_system") {
    MldeOperator op2 = operator_from_roots({rational(1, 12), rational(5, 12)});
    auto sols2 = solve_fundamental_system(op2, 14);
    CHECK(sols2.size() == 2);

    std::vector<Rational> roots5;
    for (long i = 1; i <= 5; ++i) roots5.push_back(rational(i, 7));
    MldeOperator op5 = operator_from_roots(roots5);
    auto sols5 = solve_fundamental_system(op5, 12);
    CHECK(sols5.size() == 5);
    std::vector<std::vector<QSeries>> vecs;
    for (const auto& s : sols5) vecs.push_back({s});
    CHECK(rank_of_span(vecs, 8) == 5);

    MldeOperator congruent = operator_from_roots({Rational(0), Rational(1)});
    CHECK_THROWS_WITH_AS(solve_fundamental_system(congruent, 10),
                         doctest::Contains("CongruentRoots"), DomainError);
  }

  TEST_CASE("indicial polynomial evaluates to zero on its roots") {
    MldeOperator op = operator_from_roots({rational(2, 5), rational(3, 5), rational(4, 5)});
    IndicialData data = indicial_polynomial(op);
    REQUIRE(data.roots.has_value());
    for (const auto& r : *data.roots) CHECK(poly_eval(data.polynomial, r) == 0);
  }
}
