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

#include "qmf/vvmf.hpp"

using namespace qmf;

namespace {

VvmfVector two_dim_minimal(int order) {
  // r = (1/5, 3/10), m = 0: minimal weight 2.
  ClassificationReport rep = classify(2, {rational(1, 5), rational(3, 10)}, Rational(0));
  return construct_basis(rep, order)[0];
}

}  // namespace

TEST_SUITE("vvmf") {
  TEST_CASE("modular wronskian basics") {
    QSeries f = eta_power(Rational(2), 10);
    CHECK(modular_wronskian({f}, rational(1, 2)) == f);

    QSeries x = eisenstein(4, 10).series;
    CHECK(modular_wronskian({x, scale(x, Rational(3))}, Rational(4)).is_zero());
  }

  TEST_CASE("wronskian eta factorization of the minimal d=2 vector") {
    VvmfVector f0 = two_dim_minimal(16);
    WronskianEtaTest t = wronskian_eta_test(f0);
    CHECK(t.is_pure_eta_power);
    CHECK(t.lambda == rational(1, 2));
    CHECK(t.g_weight == 0);
    CHECK(f0.weight == 12 * t.lambda / 2 + 1 - 2);
  }

  TEST_CASE("a dependent vector is rejected on the zero-Wronskian path") {
    QSeries e = eta_power(Rational(4), 12);
    VvmfVector bad{{e, scale(e, Rational(2))}, Rational(2), {}, Rational(0)};
    CHECK_THROWS_WITH_AS(wronskian_eta_test(bad), doctest::Contains("DegenerateLeading"),
                         DomainError);
  }

  TEST_CASE("minimal admissible exponents") {
    auto [l1, s1] = minimal_admissible({rational(1, 12), rational(5, 12)}, Rational(0));
    CHECK(l1 == std::vector<Rational>{rational(1, 12), rational(5, 12)});
    CHECK(s1 == rational(1, 2));
    auto [l2, s2] = minimal_admissible({rational(1, 12), rational(5, 12)}, Rational(6));
    CHECK(l2 == std::vector<Rational>{rational(7, 12), rational(11, 12)});
    CHECK(s2 == rational(3, 2));
    auto [l3, s3] = minimal_admissible({Rational(0)}, Rational(0));
    CHECK(l3 == std::vector<Rational>{Rational(0)});
    CHECK(s3 == 0);
  }

  TEST_CASE("representation validation") {
    CHECK_NOTHROW(validate_rep(2, {rational(1, 12), rational(5, 12)}, Rational(0)));
    CHECK_THROWS_WITH_AS(validate_rep(3, {Rational(0), rational(1, 3), rational(1, 2)}, Rational(0)),
                         doctest::Contains("DivisibilityViolation"), DomainError);
    CHECK_THROWS_WITH_AS(validate_rep(2, {rational(1, 5), rational(1, 5)}, Rational(0)),
                         doctest::Contains("DuplicateExponents"), DomainError);
    CHECK_THROWS_WITH_AS(validate_rep(2, {rational(1, 7), rational(2, 7)}, Rational(0)),
                         doctest::Contains("NotTUnitarizableData"), DomainError);
    CHECK_THROWS_WITH_AS(validate_rep(6, {}, Rational(0)), doctest::Contains("InvalidArgument"),
                         DomainError);
  }

  TEST_CASE("classification of the spec'd d=2 example") {
    ClassificationReport rep =
        classify(2, {rational(1, 12), rational(5, 12)}, Rational(0));
    CHECK(rep.minimal_weight == 2);
    CHECK(rep.hp_numerator == std::vector<long>{1, 0, 1});
    CHECK(rep.cyclic_over_R);
    CHECK(rep.basis_recipe.size() == 2);
    CHECK(rep.basis_recipe[1].name == "DF0");
    CHECK(rep.basis_recipe[1].weight == 4);
    // dims at k = 0..3: 1, 1, 1, 2
    CHECK(graded_dimension(rep, 0) == 1);
    CHECK(graded_dimension(rep, 1) == 1);
    CHECK(graded_dimension(rep, 2) == 1);
    CHECK(graded_dimension(rep, 3) == 2);
    CHECK(graded_dimension(rep, -1) == 0);
    // All twelve eigenvalues here are 12th roots of unity, so the sufficient
    // T-determinedness criterion does not apply (these reps are still known
    // to be T-determined).
    CHECK(rep.t_determinedness_warning);
  }

  TEST_CASE("dimension one reduces to scalar forms") {
    // rho = chi^5, m = 3: the minimal weight is the cusp parameter of v chi^5.
    ClassificationReport rep = classify(1, {rational(5, 12)}, Rational(3));
    CHECK(rep.minimal_weight == 8);
    CHECK(rep.basis_recipe.size() == 1);
    CHECK(rep.cyclic_over_R);
    CHECK(rep.hp_numerator == std::vector<long>{1});
    // Graded dimensions are dim M_{2k}; note the hole at weight minimal+2.
    CHECK(graded_dimension(rep, 0) == 1);
    CHECK(graded_dimension(rep, 1) == 0);
    CHECK(graded_dimension(rep, 6) == 2);
    HilbertPoincare hp = hp_series(rep, 12);
    for (long j = 0; j <= 12; ++j)
      CHECK(hp.expansion[static_cast<size_t>(j)] == graded_dimension(rep, j));
    // The generator is an eta power with the right leading exponent and rank 1.
    auto basis = construct_basis(rep, 12);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].components[0].leading_exponent() == rational(8, 12));
  }

  TEST_CASE("dimension four requires the class flag") {
    std::vector<Rational> r{rational(2, 21), rational(1, 7), rational(2, 7), rational(10, 21)};
    CHECK_THROWS_WITH_AS(classify(4, r, Rational(0)), doctest::Contains("InvalidArgument"),
                         DomainError);
    ClassificationReport rho1 = classify(4, r, Rational(0), FourDimClass::rho1);
    CHECK(rho1.hp_numerator == std::vector<long>{1, 0, 2, 0, 1});
    CHECK_FALSE(rho1.cyclic_over_R);
    CHECK(rho1.minimal_weight == classify(4, r, Rational(0), FourDimClass::rho0).minimal_weight + 1);
    CHECK_THROWS_WITH_AS(classify(2, {rational(1, 5), rational(3, 10)}, Rational(0),
                                  FourDimClass::rho0),
                         doctest::Contains("InvalidArgument"), DomainError);
  }

  TEST_CASE("residue classes for dimension five") {
    // lambda0 + N must make 12(lambda0 + N)/5 - 4 land in the weight class.
    ClassificationReport n4 = classify(
        5, {rational(2, 35), rational(1, 7), rational(8, 35), rational(9, 35), rational(11, 35)},
        Rational(0));
    REQUIRE(n4.residue_N.has_value());
    CHECK(*n4.residue_N == 4);
    CHECK(n4.hp_numerator == std::vector<long>{1, 0, 2, 0, 2});
    CHECK(n4.minimal_weight == n4.mlde_weight - 8);
    CHECK_FALSE(n4.cyclic_over_R);
    CHECK_FALSE(n4.t_determinedness_warning);

    ClassificationReport n2 = classify(
        5, {rational(12, 35), rational(17, 35), rational(3, 5), rational(26, 35), rational(29, 35)},
        Rational(0));
    REQUIRE(n2.residue_N.has_value());
    CHECK(*n2.residue_N == 2);
    CHECK(n2.minimal_weight == n2.mlde_weight - 4);
    // Lowest two graded pieces are one-dimensional (G and DG).
    CHECK(graded_dimension(n2, 0) == 1);
    CHECK(graded_dimension(n2, 1) == 1);
    CHECK(graded_dimension(n2, 2) == 3);
  }

  TEST_CASE("nonzero cusp parameter with one wrapped exponent reaches N = 0") {
    // lambda0 < 5 makes N = 0 unreachable with m = 0; m = 17/2 wraps exactly
    // the largest exponent and lands the residue.
    ClassificationReport rep = classify(
        5, {rational(2, 35), rational(1, 7), rational(8, 35), rational(9, 35), rational(11, 35)},
        rational(17, 2));
    REQUIRE(rep.residue_N.has_value());
    CHECK(*rep.residue_N == 0);
    CHECK(rep.minimal_weight == rational(9, 2));
    CHECK(rep.lambdas.back() == rational(19, 840));  // 11/35 + 17/24 - 1
    CHECK(rep.lambda0 == rational(85, 24));
    CHECK(rep.cyclic_over_R);
  }

  TEST_CASE("graded dimension closed forms") {
    ClassificationReport d3 =
        classify(3, {rational(1, 7), rational(2, 7), rational(4, 7)}, Rational(0));
    CHECK(graded_dimension(d3, 5) == 3);  // floor(5/2)+1
    ClassificationReport n0 = classify(
        5, {rational(2, 35), rational(1, 7), rational(8, 35), rational(9, 35), rational(11, 35)},
        rational(17, 2));
    REQUIRE(n0.residue_N.has_value());
    CHECK(*n0.residue_N == 0);
    CHECK(graded_dimension(n0, 5) == 4);  // floor(25/6), the k = 5 mod 6 branch
    CHECK(graded_dimension(n0, -3) == 0);
  }

  TEST_CASE("basis construction for d = 2") {
    ClassificationReport rep = classify(2, {rational(1, 5), rational(3, 10)}, Rational(0));
    CHECK_FALSE(rep.t_determinedness_warning);
    auto basis = construct_basis(rep, 20);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].weight == rep.minimal_weight);
    CHECK(basis[1].weight == rep.minimal_weight + 2);
    CHECK(basis[0].components[0].leading_exponent() == rational(1, 5));
    CHECK(basis[0].components[1].leading_exponent() == rational(3, 10));
    std::vector<std::vector<QSeries>> vecs;
    for (const auto& v : basis) vecs.push_back(v.components);
    CHECK(rank_of_span(vecs, 12) == 2);
  }

  TEST_CASE("basis construction for d = 4 rho1") {
    std::vector<Rational> r{rational(2, 21), rational(1, 7), rational(2, 7), rational(10, 21)};
    ClassificationReport rep = classify(4, r, Rational(0), FourDimClass::rho1);
    auto basis = construct_basis(rep, 20);
    REQUIRE(basis.size() == 4);
    // G leads exactly at the minimal admissible exponents.
    for (int j = 0; j < 4; ++j)
      CHECK(basis[0].components[static_cast<size_t>(j)].leading_exponent() ==
            rep.lambdas[static_cast<size_t>(j)]);
    // DF1 = a1 D^2 G + a2 E4 G with both scalars nonzero.
    VvmfVector df1 = apply_D(basis[2]);
    VvmfVector d2g = apply_D(basis[1]);
    VvmfVector e4g = scale_by_form(basis[0], eisenstein(4, 20));
    auto rel = express_in_span(df1, {d2g, e4g}, 10);
    REQUIRE(rel.has_value());
    CHECK((*rel)[0] != 0);
    CHECK((*rel)[1] != 0);
    // det rho bookkeeping: 12 lambda - m d integral for every basis vector.
    for (const auto& v : basis) {
      Rational lambda(0);
      for (const auto& c : v.components) lambda += c.leading_exponent();
      Rational t = 12 * lambda - rep.m * rep.d;
      t.canonicalize();
      CHECK(is_integer(t));
    }
  }

  TEST_CASE("basis construction for d = 5, N = 2, with the DF2 relation") {
    ClassificationReport rep = classify(
        5, {rational(12, 35), rational(17, 35), rational(3, 5), rational(26, 35), rational(29, 35)},
        Rational(0));
    auto basis = construct_basis(rep, 20);  // {G, DG, D^2G, D^3G, F2}
    REQUIRE(basis.size() == 5);
    CHECK(basis[0].weight == rep.minimal_weight);
    CHECK(basis[4].weight == rep.mlde_weight);
    VvmfVector df2 = apply_D(basis[4]);
    VvmfVector e4dg = scale_by_form(basis[1], eisenstein(4, 20));
    VvmfVector e6g = scale_by_form(basis[0], eisenstein(6, 20));
    auto rel = express_in_span(df2, {basis[3], e4dg, e6g}, 10);
    CHECK(rel.has_value());
  }

  TEST_CASE("d=2 example dimensions against the rank oracle") {
    ClassificationReport rep = classify(2, {rational(1, 12), rational(5, 12)}, Rational(0));
    auto basis = construct_basis(rep, 25);
    for (long k = 0; k <= 3; ++k) {
      std::vector<std::vector<QSeries>> products;
      for (size_t i = 0; i < basis.size(); ++i) {
        Rational off = rep.basis_recipe[i].weight - rep.minimal_weight;
        long e = off.get_num().get_si() / 2;
        if (k - e < 0) continue;
        for (const auto& mono : basis_Mk(static_cast<int>(2 * (k - e)), 25))
          products.push_back(scale_by_form(basis[i], mono).components);
      }
      long got = products.empty() ? 0 : rank_of_span(products, 12);
      CHECK(got == graded_dimension(rep, k));
    }
  }

  TEST_CASE("hilbert-poincare series expansion") {
    ClassificationReport d2 = classify(2, {rational(1, 12), rational(5, 12)}, Rational(0));
    HilbertPoincare hp = hp_series(d2, 8);
    CHECK(hp.shift == 2);
    CHECK(hp.numerator == std::vector<long>{1, 0, 1});
    CHECK(hp.expansion == std::vector<long>{1, 1, 1, 2, 2, 2, 3, 3, 3});
    ClassificationReport n4 = classify(
        5, {rational(2, 35), rational(1, 7), rational(8, 35), rational(9, 35), rational(11, 35)},
        Rational(0));
    HilbertPoincare hp4 = hp_series(n4, 10);
    long total = 0;
    for (long c : hp4.numerator) total += c;
    CHECK(total == 5);
    for (long j = 0; j <= 10; ++j)
      CHECK(hp4.expansion[static_cast<size_t>(j)] == graded_dimension(n4, j));
  }

  TEST_CASE("express_in_span rejects vectors outside the span") {
    VvmfVector f0 = two_dim_minimal(16);
    VvmfVector df0 = apply_D(f0);
    auto rel = express_in_span(df0, {f0}, 8);
    CHECK_FALSE(rel.has_value());
  }
}
