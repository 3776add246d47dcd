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

#include "qmf/vvmf.hpp"

#include <algorithm>

#include "qmf/linalg.hpp"

namespace qmf {

namespace {

QSeries det_recursive(const std::vector<std::vector<QSeries>>& m, std::vector<size_t> rows,
                      size_t col) {
  if (rows.size() == 1) return m[rows[0]][col];
  QSeries acc = QSeries::zero();
  for (size_t i = 0; i < rows.size(); ++i) {
    const QSeries& pivot = m[rows[i]][col];
    if (pivot.is_zero()) continue;
    std::vector<size_t> rest;
    rest.reserve(rows.size() - 1);
    for (size_t t = 0; t < rows.size(); ++t)
      if (t != i) rest.push_back(rows[t]);
    QSeries minor = det_recursive(m, std::move(rest), col + 1);
    QSeries term = mul(pivot, minor);
    acc = (i % 2 == 0) ? add(acc, term) : sub(acc, term);
  }
  return acc;
}

struct CaseData {
  // Anchor MLDE roots aligned with rep exponents, and index choices made by
  // the construction (all smallest-valid-index).
  std::vector<Rational> anchor_roots;
  Rational anchor_weight;
  int idx_i = -1;   // d4 rho1 / d5 N4
  int idx_j1 = -1;  // d5 N2/N3
  int idx_j2 = -1;
  int idx_i1 = -1;  // d5 N4
  int idx_i2 = -1;
};

int checked_index(int idx, const char* what) {
  if (idx < 0) fail(ErrorCode::RankDeficient, std::string("no valid index choice for ") + what);
  return idx;
}

long shift_steps(ClassCase kind) {
  switch (kind) {
    case ClassCase::D5N2: return 2;
    case ClassCase::D5N3: return 3;
    case ClassCase::D5N4: return 4;
    default: return 0;
  }
}

int residue_of(ClassCase kind) {
  switch (kind) {
    case ClassCase::D5N0: return 0;
    case ClassCase::D5N1: return 1;
    case ClassCase::D5N2: return 2;
    case ClassCase::D5N3: return 3;
    case ClassCase::D5N4: return 4;
    default: return -1;
  }
}

std::vector<long> numerator_from_recipe(const std::vector<BasisDescriptor>& recipe,
                                        const Rational& minimal_weight) {
  long max_off = 0;
  std::vector<long> offs;
  for (const auto& b : recipe) {
    Rational diff = b.weight - minimal_weight;
    diff.canonicalize();
    if (!is_integer(diff) || diff < 0)
      fail(ErrorCode::InvalidArgument, "basis weight off the even lattice");
    long off = diff.get_num().get_si();
    offs.push_back(off);
    max_off = std::max(max_off, off);
  }
  std::vector<long> num(static_cast<size_t>(max_off) + 1, 0);
  for (long off : offs) num[static_cast<size_t>(off)] += 1;
  return num;
}

// Choices the construction resolves deterministically (smallest valid index).
CaseData case_data(const ClassificationReport& r) {
  CaseData c;
  const auto& lam = r.lambdas;
  const int d = r.d;
  c.anchor_roots = lam;
  c.anchor_weight = r.mlde_weight;
  switch (r.kind) {
    case ClassCase::D1:
    case ClassCase::D2:
    case ClassCase::D3:
    case ClassCase::D4Rho0:
    case ClassCase::D5N0:
      break;
    case ClassCase::D4Rho1: {
      const Rational k1 = r.minimal_weight;
      for (int j = 0; j < d; ++j)
        if (lam[static_cast<size_t>(j)] != k1 / 12) {
          c.idx_i = j;
          break;
        }
      c.idx_i = checked_index(c.idx_i, "d=4 rho1");
      c.anchor_roots[static_cast<size_t>(c.idx_i)] += 1;
      c.anchor_weight = k1 + 2;
      break;
    }
    case ClassCase::D5N1: {
      c.idx_i = 0;
      c.anchor_roots[0] += 1;
      break;
    }
    case ClassCase::D5N2: {
      const Rational k2 = r.mlde_weight;
      const Rational forbidden = (k2 - 3) / 6;
      for (int a = 0; a < d && c.idx_j1 < 0; ++a)
        for (int b = a + 1; b < d; ++b)
          if (lam[static_cast<size_t>(a)] + lam[static_cast<size_t>(b)] != forbidden) {
            c.idx_j1 = a;
            c.idx_j2 = b;
            break;
          }
      c.idx_j1 = checked_index(c.idx_j1, "d=5 N=2");
      c.anchor_roots[static_cast<size_t>(c.idx_j1)] += 1;
      c.anchor_roots[static_cast<size_t>(c.idx_j2)] += 1;
      break;
    }
    case ClassCase::D5N3: {
      const Rational k3 = r.mlde_weight;
      for (int j = 0; j < d; ++j)
        if (lam[static_cast<size_t>(j)] != (k3 - 6) / 12) {
          c.idx_j1 = j;
          break;
        }
      for (int j = 0; j < d; ++j)
        if (j != c.idx_j1) {
          c.idx_j2 = j;
          break;
        }
      c.idx_j1 = checked_index(c.idx_j1, "d=5 N=3");
      for (int j = 0; j < d; ++j)
        if (j != c.idx_j1 && j != c.idx_j2) c.anchor_roots[static_cast<size_t>(j)] += 1;
      break;
    }
    case ClassCase::D5N4: {
      const Rational k4 = r.mlde_weight;
      c.idx_i = 0;
      for (int j = 0; j < d; ++j)
        if (j != c.idx_i) c.anchor_roots[static_cast<size_t>(j)] += 1;
      for (int j = 0; j < d; ++j)
        if (lam[static_cast<size_t>(j)] != (k4 - 8) / 12) {
          c.idx_i1 = j;
          break;
        }
      for (int j = 0; j < d; ++j)
        if (j != c.idx_i1 && lam[static_cast<size_t>(j)] != (k4 - 6) / 12) {
          c.idx_i2 = j;
          break;
        }
      c.idx_i1 = checked_index(c.idx_i1, "d=5 N=4 (i1)");
      c.idx_i2 = checked_index(c.idx_i2, "d=5 N=4 (i2)");
      break;
    }
  }
  return c;
}

VvmfVector make_vector(std::vector<QSeries> comps, Rational weight,
                       const ClassificationReport& r) {
  return VvmfVector{std::move(comps), std::move(weight), r.rep_exponents, r.m};
}

// Solve the anchor MLDE with the given roots; components stay aligned with
// the rep-exponent indexing (roots are incongruent mod Z, so no resonance).
VvmfVector solve_anchor(const ClassificationReport& r, const CaseData& c, int order) {
  MldeOperator op = operator_from_roots(c.anchor_roots);
  if (op.weight() != c.anchor_weight)
    fail(ErrorCode::RankDeficient, "anchor MLDE weight mismatch: got " + to_string(op.weight()) +
                                       ", expected " + to_string(c.anchor_weight));
  ThetaOperator th = op.rewrite(order);
  std::vector<QSeries> comps;
  comps.reserve(c.anchor_roots.size());
  for (const auto& root : c.anchor_roots) comps.push_back(frobenius_solve(th, root, order));
  return make_vector(std::move(comps), c.anchor_weight, r);
}

VvmfVector combination(const std::vector<VvmfVector>& span, const std::vector<Rational>& coeffs) {
  std::vector<QSeries> comps(span.front().components.size(), QSeries::zero());
  for (size_t i = 0; i < span.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (size_t j = 0; j < comps.size(); ++j)
      comps[j] = add(comps[j], scale(span[i].components[j], coeffs[i]));
  }
  VvmfVector out = span.front();
  out.components = std::move(comps);
  return out;
}

// A nonzero combination of the span whose coefficients vanish at the given
// (component, exponent) targets, divided by Delta.
VvmfVector delta_divided_kernel_vector(const std::vector<VvmfVector>& span,
                                       const std::vector<std::pair<int, Rational>>& vanish_at,
                                       int order) {
  Matrix constraints;
  for (const auto& [comp, expo] : vanish_at) {
    std::vector<Rational> row;
    row.reserve(span.size());
    for (const auto& v : span) row.push_back(v.components[static_cast<size_t>(comp)].coefficient(expo));
    constraints.push_back(std::move(row));
  }
  std::vector<Rational> c = kernel_vector(constraints, span.size());
  if (c.empty())
    fail(ErrorCode::NoDeltaDivisibleCombination,
         "no nonzero combination satisfies the vanishing constraints");
  VvmfVector combo = combination(span, c);
  const QSeries dlt = delta(order).series;
  for (auto& comp : combo.components) comp = divide_exact(comp, dlt);
  combo.weight -= 12;
  return combo;
}

void check_leading(const VvmfVector& v, const std::vector<Rational>& expected,
                   const std::string& who) {
  for (size_t j = 0; j < v.components.size(); ++j) {
    if (v.components[j].is_zero() || v.components[j].leading_exponent() != expected[j])
      fail(ErrorCode::RankDeficient,
           who + ": component " + std::to_string(j) + " does not lead at q^" +
               to_string(expected[j]));
  }
}

Rational exponent_sum(const VvmfVector& v) {
  Rational s(0);
  for (const auto& c : v.components) {
    if (c.is_zero()) fail(ErrorCode::DegenerateLeading, "zero component in exponent sum");
    s += c.leading_exponent();
  }
  return s;
}

}  // namespace

QSeries modular_wronskian(const std::vector<QSeries>& components, const Rational& weight) {
  const size_t d = components.size();
  if (d == 0) fail(ErrorCode::InvalidArgument, "empty vector");
  std::vector<std::vector<QSeries>> m(d);
  std::vector<QSeries> col = components;
  for (size_t t = 0; t < d; ++t) {
    for (size_t i = 0; i < d; ++i) m[i].push_back(col[i]);
    if (t + 1 < d) {
      const Rational w = weight + 2 * static_cast<long>(t);
      for (auto& s : col) s = modular_derivative(s, w);
    }
  }
  std::vector<size_t> rows(d);
  for (size_t i = 0; i < d; ++i) rows[i] = i;
  return det_recursive(m, std::move(rows), 0);
}

QSeries modular_wronskian(const VvmfVector& F) { return modular_wronskian(F.components, F.weight); }

WronskianEtaTest wronskian_eta_test(const VvmfVector& F) {
  const size_t d = F.components.size();
  Rational lambda(0);
  for (const auto& c : F.components) {
    if (c.is_zero())
      fail(ErrorCode::DegenerateLeading, "component with vanishing leading coefficient");
    lambda += c.leading_exponent();
  }
  QSeries w = modular_wronskian(F);
  if (w.is_zero()) fail(ErrorCode::DegenerateLeading, "modular Wronskian vanishes identically");
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j)
      if (is_integer(F.components[i].leading_exponent() - F.components[j].leading_exponent()))
        fail(ErrorCode::InvalidArgument, "component leading exponents congruent mod Z");
  QSeries g = divide_exact(w, eta_power(24 * lambda, w.order()));
  if (g.is_zero() || g.leading_exponent() != 0)
    fail(ErrorCode::DegenerateLeading, "Wronskian leading coefficient vanishes at q^lambda");
  WronskianEtaTest out;
  out.lambda = lambda;
  out.g_weight = static_cast<long>(d) * (F.weight + static_cast<long>(d) - 1) - 12 * lambda;
  out.is_pure_eta_power = std::all_of(g.coefficients().begin() + 1, g.coefficients().end(),
                                      [](const Rational& c) { return c == 0; });
  out.g = std::move(g);
  return out;
}

AdmissibleSet minimal_admissible(const std::vector<Rational>& rep_exponents, const Rational& m) {
  AdmissibleSet out;
  out.lambda0 = 0;
  for (const auto& r : rep_exponents) {
    Rational lam = fractional_part(r + m / 12);
    out.lambda0 += lam;
    out.lambdas.push_back(std::move(lam));
  }
  out.lambda0.canonicalize();
  return out;
}

void validate_rep(int d, const std::vector<Rational>& rep_exponents, const Rational& m) {
  if (d < 1 || d > 5)
    fail(ErrorCode::InvalidArgument, "dimension must be between 1 and 5");
  if (static_cast<int>(rep_exponents.size()) != d)
    fail(ErrorCode::InvalidArgument, "expected exactly d exponents");
  if (m < 0 || m >= 12) fail(ErrorCode::InvalidArgument, "cusp parameter must lie in [0, 12)");
  for (const auto& r : rep_exponents)
    if (r < 0 || r >= 1)
      fail(ErrorCode::InvalidArgument, "exponents must lie in [0, 1)");
  for (size_t i = 0; i < rep_exponents.size(); ++i)
    for (size_t j = i + 1; j < rep_exponents.size(); ++j)
      if (rep_exponents[i] == rep_exponents[j])
        fail(ErrorCode::DuplicateExponents, "T-eigenvalue exponents must be pairwise distinct");
  Rational r12(0);
  for (const auto& r : rep_exponents) r12 += 12 * r;
  r12.canonicalize();
  if (!is_integer(r12))
    fail(ErrorCode::NotTUnitarizableData, "12(r_1+...+r_d) = " + to_string(r12) + " is not an integer");
  if (d <= 4) {
    Integer n = r12.get_num();
    if (n % d != 0)
      fail(ErrorCode::DivisibilityViolation,
           std::to_string(d) + " does not divide 12r = " + to_string(n));
  }
}

ClassificationReport classify(int d, std::vector<Rational> rep_exponents, const Rational& m,
                              std::optional<FourDimClass> four_class) {
  std::sort(rep_exponents.begin(), rep_exponents.end());
  validate_rep(d, rep_exponents, m);
  if (d == 4 && !four_class)
    fail(ErrorCode::InvalidArgument, "dimension 4 needs the class flag (rho0 or rho1)");
  if (d != 4 && four_class)
    fail(ErrorCode::InvalidArgument, "class flag applies to dimension 4 only");

  ClassificationReport r;
  r.d = d;
  r.rep_exponents = rep_exponents;
  r.m = m;
  r.four_class = four_class;
  AdmissibleSet adm = minimal_admissible(rep_exponents, m);
  r.lambdas = adm.lambdas;
  r.lambda0 = adm.lambda0;

  // Sufficient T-determinedness criterion: warn when it fails to apply.
  r.t_determinedness_warning = false;
  for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
    Rational s(0);
    for (int j = 0; j < d; ++j)
      if (mask & (1u << j)) s += rep_exponents[static_cast<size_t>(j)];
    s *= 12;
    s.canonicalize();
    if (is_integer(s)) {
      r.t_determinedness_warning = true;
      break;
    }
  }

  auto recipe_powers = [&](const char* base, int count, const Rational& w0) {
    for (int j = 0; j < count; ++j) {
      std::string name = j == 0 ? std::string(base)
                                : (j == 1 ? "D" + std::string(base)
                                          : "D^" + std::to_string(j) + std::string(base));
      r.basis_recipe.push_back({name, w0 + 2 * j});
    }
  };

  switch (d) {
    case 1: {
      r.kind = ClassCase::D1;
      r.minimal_weight = 12 * r.lambdas[0];
      r.mlde_weight = r.minimal_weight;
      r.basis_recipe.push_back({"eta^{2k0}", r.minimal_weight});
      r.dimension_function = "dim M_{2k}";
      r.cyclic_over_R = true;
      break;
    }
    case 2:
    case 3: {
      r.kind = d == 2 ? ClassCase::D2 : ClassCase::D3;
      r.minimal_weight = 12 * r.lambda0 / d + 1 - d;
      r.mlde_weight = r.minimal_weight;
      recipe_powers("F0", d, r.minimal_weight);
      r.dimension_function = d == 2 ? "floor(k/3)+1" : "floor(k/2)+1";
      r.cyclic_over_R = true;
      break;
    }
    case 4: {
      const Rational k0 = 3 * r.lambda0 - 3;
      if (*four_class == FourDimClass::rho0) {
        r.kind = ClassCase::D4Rho0;
        r.minimal_weight = k0;
        r.mlde_weight = k0;
        recipe_powers("F0", 4, k0);
        r.dimension_function = "floor(2k/3)+1";
        r.cyclic_over_R = true;
      } else {
        r.kind = ClassCase::D4Rho1;
        const Rational k1 = k0 + 1;
        r.minimal_weight = k1;
        r.mlde_weight = k1 + 2;  // the anchor F1 solves an MLDE in weight k1+2
        r.basis_recipe.push_back({"G", k1});
        r.basis_recipe.push_back({"DG", k1 + 2});
        r.basis_recipe.push_back({"F1", k1 + 2});
        r.basis_recipe.push_back({"D^2G", k1 + 4});
        r.dimension_function = "floor((2k+1)/3)+1";
        r.cyclic_over_R = false;
      }
      break;
    }
    case 5: {
      // Unique N in {0..4} with 12(lambda0 + N) - 5m divisible by 5.
      Rational x = 12 * r.lambda0 - 5 * m;
      x.canonicalize();
      if (!is_integer(x))
        fail(ErrorCode::NotTUnitarizableData, "12 lambda0 - 5m must be an integer");
      long xi = x.get_num().get_si();
      int N = -1;
      for (int n = 0; n < 5; ++n)
        if (((xi + 12 * n) % 5 + 5) % 5 == 0) {
          N = n;
          break;
        }
      r.residue_N = N;
      const Rational kN = Rational(12) * (r.lambda0 + N) / 5 - 4;
      r.mlde_weight = kN;
      static const ClassCase kCases[5] = {ClassCase::D5N0, ClassCase::D5N1, ClassCase::D5N2,
                                          ClassCase::D5N3, ClassCase::D5N4};
      r.kind = kCases[N];
      const long s = shift_steps(r.kind);
      r.minimal_weight = kN - 2 * s;
      switch (N) {
        case 0:
          recipe_powers("F0", 5, kN);
          r.cyclic_over_R = true;
          break;
        case 1:
          r.basis_recipe.push_back({"F1", kN});
          r.basis_recipe.push_back({"G", kN});
          r.basis_recipe.push_back({"DF1", kN + 2});
          r.basis_recipe.push_back({"DG", kN + 2});
          r.basis_recipe.push_back({"D^2F1", kN + 4});
          r.cyclic_over_R = false;
          break;
        case 2:
          r.basis_recipe.push_back({"G", kN - 4});
          r.basis_recipe.push_back({"DG", kN - 2});
          r.basis_recipe.push_back({"D^2G", kN});
          r.basis_recipe.push_back({"D^3G", kN + 2});
          r.basis_recipe.push_back({"F2", kN});
          r.cyclic_over_R = false;
          break;
        case 3:
          r.basis_recipe.push_back({"G1", kN - 6});
          r.basis_recipe.push_back({"DG1", kN - 4});
          r.basis_recipe.push_back({"G2", kN - 4});
          r.basis_recipe.push_back({"D^2G1", kN - 2});
          r.basis_recipe.push_back({"D^3G1", kN});
          r.cyclic_over_R = false;
          break;
        case 4:
          r.basis_recipe.push_back({"G1", kN - 8});
          r.basis_recipe.push_back({"DG1", kN - 6});
          r.basis_recipe.push_back({"G2", kN - 6});
          r.basis_recipe.push_back({"DG2", kN - 4});
          r.basis_recipe.push_back({"G3", kN - 4});
          r.cyclic_over_R = false;
          break;
      }
      r.dimension_function = "floor(5(k-" + std::to_string(s) + ")/6)+" + std::to_string(N) +
                             " if k-" + std::to_string(s) + " = 5 (mod 6), else +" +
                             std::to_string(N + 1) + "; k counted from the minimal weight";
      break;
    }
  }
  r.hp_shift = r.minimal_weight;
  r.hp_numerator = numerator_from_recipe(r.basis_recipe, r.minimal_weight);
  return r;
}

long graded_dimension(const ClassificationReport& report, long k_offset) {
  if (k_offset < 0) return 0;
  switch (report.kind) {
    case ClassCase::D1: return dim_Mk(2 * k_offset);
    case ClassCase::D2: return floor_div_long(k_offset, 3) + 1;
    case ClassCase::D3: return floor_div_long(k_offset, 2) + 1;
    case ClassCase::D4Rho0: return floor_div_long(2 * k_offset, 3) + 1;
    case ClassCase::D4Rho1: return floor_div_long(2 * k_offset + 1, 3) + 1;
    default: {
      const int N = residue_of(report.kind);
      const long k = k_offset - shift_steps(report.kind);
      const long base = floor_div_long(5 * k, 6);
      const bool five_branch = ((k % 6) + 6) % 6 == 5;
      return base + N + (five_branch ? 0 : 1);
    }
  }
}

VvmfVector apply_D(const VvmfVector& F) {
  VvmfVector out = F;
  for (auto& c : out.components) c = modular_derivative(c, F.weight);
  out.weight += 2;
  return out;
}

VvmfVector scale_by_form(const VvmfVector& F, const ModularForm& g) {
  VvmfVector out = F;
  for (auto& c : out.components) c = mul(c, g.series);
  out.weight += g.weight;
  return out;
}

std::optional<std::vector<Rational>> express_in_span(const VvmfVector& target,
                                                     const std::vector<VvmfVector>& span,
                                                     int probe_depth) {
  if (span.empty()) return std::nullopt;
  const size_t ncomp = target.components.size();
  // Column bases across span and target, per branch (as in rank_of_span).
  std::vector<std::vector<Rational>> bases(ncomp);
  auto note = [&](const QSeries& s, size_t j) {
    if (s.is_zero()) return;
    for (auto& b : bases[j]) {
      Rational diff = s.leading_exponent() - b;
      diff.canonicalize();
      if (is_integer(diff)) {
        b = std::min(b, s.leading_exponent());
        return;
      }
    }
    bases[j].push_back(s.leading_exponent());
  };
  for (size_t j = 0; j < ncomp; ++j) {
    note(target.components[j], j);
    for (const auto& v : span) note(v.components[j], j);
  }
  auto flatten = [&](const VvmfVector& v) {
    std::vector<Rational> row;
    for (size_t j = 0; j < ncomp; ++j)
      for (const auto& b : bases[j])
        for (int t = 0; t < probe_depth; ++t) row.push_back(v.components[j].coefficient(b + t));
    return row;
  };
  std::vector<std::vector<Rational>> columns;
  for (const auto& v : span) columns.push_back(flatten(v));
  auto sol = solve_exact(columns, flatten(target));
  if (!sol) return std::nullopt;
  // Confirm on the full known window.
  VvmfVector combo = combination(span, *sol);
  for (size_t j = 0; j < ncomp; ++j)
    if (!sub(target.components[j], combo.components[j]).is_zero()) return std::nullopt;
  return sol;
}

std::vector<VvmfVector> construct_basis(const ClassificationReport& r, int order) {
  if (order < r.d + 4) fail(ErrorCode::InvalidArgument, "truncation order too small for d");
  const CaseData c = case_data(r);
  const auto& lam = r.lambdas;
  std::vector<VvmfVector> basis;

  auto d_powers = [&](const VvmfVector& f, int count) {
    std::vector<VvmfVector> out{f};
    for (int j = 1; j < count; ++j) out.push_back(apply_D(out.back()));
    return out;
  };
  auto e_series = [&](int k) { return eisenstein(k, order); };

  switch (r.kind) {
    case ClassCase::D1: {
      QSeries gen = eta_power(2 * r.minimal_weight, order);
      basis.push_back(make_vector({gen}, r.minimal_weight, r));
      break;
    }
    case ClassCase::D2:
    case ClassCase::D3:
    case ClassCase::D4Rho0:
    case ClassCase::D5N0: {
      basis = d_powers(solve_anchor(r, c, order), r.d);
      break;
    }
    case ClassCase::D4Rho1: {
      VvmfVector f1 = solve_anchor(r, c, order);  // weight k1 + 2
      VvmfVector df1 = apply_D(f1);
      VvmfVector d2f1 = apply_D(df1);
      VvmfVector d3f1 = apply_D(d2f1);
      std::vector<VvmfVector> span{scale_by_form(f1, e_series(10)), scale_by_form(df1, e_series(8)),
                                   scale_by_form(d2f1, e_series(6)),
                                   scale_by_form(d3f1, e_series(4))};
      std::vector<std::pair<int, Rational>> vanish;
      for (int j = 0; j < r.d; ++j)
        if (j != c.idx_i) vanish.push_back({j, lam[static_cast<size_t>(j)]});
      VvmfVector g = delta_divided_kernel_vector(span, vanish, order);
      check_leading(g, lam, "d=4 rho1 vector G");
      VvmfVector dg = apply_D(g);
      basis = {g, dg, f1, apply_D(dg)};
      // DF1 = a1 D^2 G + a2 E4 G with a1 a2 != 0.
      auto rel = express_in_span(df1, {apply_D(dg), scale_by_form(g, e_series(4))},
                                 std::min(10, order - 2));
      if (!rel || (*rel)[0] == 0 || (*rel)[1] == 0)
        fail(ErrorCode::RankDeficient, "d=4 rho1: relation DF1 = a1 D^2G + a2 E4 G failed");
      break;
    }
    case ClassCase::D5N1: {
      VvmfVector f1 = solve_anchor(r, c, order);  // weight k1
      std::vector<VvmfVector> dpow = d_powers(f1, 5);
      std::vector<VvmfVector> span{
          scale_by_form(dpow[4], e_series(4)), scale_by_form(dpow[3], e_series(6)),
          scale_by_form(dpow[2], e_series(8)), scale_by_form(dpow[1], e_series(10)),
          scale_by_form(dpow[0], e_series(12))};
      std::vector<std::pair<int, Rational>> vanish;
      for (int j = 0; j < r.d; ++j)
        if (j != c.idx_i) vanish.push_back({j, lam[static_cast<size_t>(j)]});
      VvmfVector g = delta_divided_kernel_vector(span, vanish, order);
      basis = {f1, g, dpow[1], apply_D(g), dpow[2]};
      break;
    }
    case ClassCase::D5N2: {
      VvmfVector f2 = solve_anchor(r, c, order);  // weight k2
      std::vector<VvmfVector> dpow = d_powers(f2, 5);
      std::vector<VvmfVector> span{dpow[4], scale_by_form(dpow[2], e_series(4)),
                                   scale_by_form(dpow[1], e_series(6)),
                                   scale_by_form(dpow[0], e_series(8))};
      std::vector<std::pair<int, Rational>> vanish;
      for (int j = 0; j < r.d; ++j)
        if (j != c.idx_j1 && j != c.idx_j2) vanish.push_back({j, lam[static_cast<size_t>(j)]});
      VvmfVector g = delta_divided_kernel_vector(span, vanish, order);
      check_leading(g, lam, "d=5 N=2 vector G");
      VvmfVector dg = apply_D(g);
      VvmfVector d2g = apply_D(dg);
      VvmfVector d3g = apply_D(d2g);
      basis = {g, dg, d2g, d3g, f2};
      // DF2 = a1 D^3 G + a2 E4 DG + a3 E6 G.
      auto rel = express_in_span(dpow[1],
                                 {d3g, scale_by_form(dg, e_series(4)), scale_by_form(g, e_series(6))},
                                 std::min(10, order - 2));
      if (!rel)
        fail(ErrorCode::RankDeficient, "d=5 N=2: relation DF2 = a1 D^3G + a2 E4 DG + a3 E6 G failed");
      break;
    }
    case ClassCase::D5N3: {
      VvmfVector f3 = solve_anchor(r, c, order);  // weight k3
      std::vector<VvmfVector> dpow = d_powers(f3, 5);
      std::vector<VvmfVector> spanV{dpow[3], scale_by_form(dpow[1], e_series(4)),
                                    scale_by_form(dpow[0], e_series(6))};
      const Rational& l1 = lam[static_cast<size_t>(c.idx_j1)];
      const Rational& l2 = lam[static_cast<size_t>(c.idx_j2)];
      VvmfVector g1 = delta_divided_kernel_vector(spanV, {{c.idx_j1, l1}, {c.idx_j2, l2}}, order);
      check_leading(g1, lam, "d=5 N=3 vector G1");
      std::vector<VvmfVector> spanU{dpow[4], scale_by_form(dpow[2], e_series(4)),
                                    scale_by_form(dpow[1], e_series(6)),
                                    scale_by_form(dpow[0], e_series(8))};
      VvmfVector g2 = delta_divided_kernel_vector(
          spanU, {{c.idx_j1, l1}, {c.idx_j1, l1 + 1}, {c.idx_j2, l2}}, order);
      std::vector<Rational> g2_expected = lam;
      g2_expected[static_cast<size_t>(c.idx_j1)] += 1;
      check_leading(g2, g2_expected, "d=5 N=3 vector G2");
      VvmfVector dg1 = apply_D(g1);
      VvmfVector d2g1 = apply_D(dg1);
      basis = {g1, dg1, g2, d2g1, apply_D(d2g1)};
      // DG2 = a1 D^2 G1 + a2 E4 G1 with a2 != 0.
      auto rel = express_in_span(apply_D(g2), {d2g1, scale_by_form(g1, e_series(4))},
                                 std::min(10, order - 2));
      if (!rel || (*rel)[1] == 0)
        fail(ErrorCode::RankDeficient, "d=5 N=3: relation DG2 = a1 D^2G1 + a2 E4 G1 failed");
      break;
    }
    case ClassCase::D5N4: {
      VvmfVector f4 = solve_anchor(r, c, order);  // weight k4
      std::vector<VvmfVector> dpow = d_powers(f4, 5);
      const Rational& li = lam[static_cast<size_t>(c.idx_i)];
      const Rational& li1 = lam[static_cast<size_t>(c.idx_i1)];
      const Rational& li2 = lam[static_cast<size_t>(c.idx_i2)];
      std::vector<VvmfVector> spanU{dpow[2], scale_by_form(dpow[0], e_series(4))};
      VvmfVector g1 = delta_divided_kernel_vector(spanU, {{c.idx_i, li}}, order);
      check_leading(g1, lam, "d=5 N=4 vector G1");
      std::vector<VvmfVector> spanV{dpow[3], scale_by_form(dpow[1], e_series(4)),
                                    scale_by_form(dpow[0], e_series(6))};
      VvmfVector g2 =
          delta_divided_kernel_vector(spanV, {{c.idx_i, li}, {c.idx_i1, li1 + 1}}, order);
      std::vector<Rational> g2_expected = lam;
      g2_expected[static_cast<size_t>(c.idx_i1)] += 1;
      check_leading(g2, g2_expected, "d=5 N=4 vector G2");
      std::vector<VvmfVector> spanW{dpow[4], scale_by_form(dpow[2], e_series(4)),
                                    scale_by_form(dpow[1], e_series(6)),
                                    scale_by_form(dpow[0], e_series(8))};
      VvmfVector g3 = delta_divided_kernel_vector(
          spanW, {{c.idx_i, li}, {c.idx_i1, li1 + 1}, {c.idx_i2, li2 + 1}}, order);
      std::vector<Rational> g3_expected = g2_expected;
      g3_expected[static_cast<size_t>(c.idx_i2)] += 1;
      check_leading(g3, g3_expected, "d=5 N=4 vector G3");
      basis = {g1, apply_D(g1), g2, apply_D(g2), g3};
      break;
    }
  }

  // Bookkeeping that must hold for every constructed vector.
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].weight != r.basis_recipe[i].weight)
      fail(ErrorCode::RankDeficient, "basis weight drifted from the recipe");
    Rational lambda = exponent_sum(basis[i]);
    Rational det_exp = 12 * lambda - r.m * r.d;
    det_exp.canonicalize();
    if (!is_integer(det_exp))
      fail(ErrorCode::RankDeficient, "det rho bookkeeping violated: 12 lambda - md not integral");
    // Weight bound, with equality exactly for MLDE-fundamental vectors.
    Rational bound = 12 * lambda / r.d + 1 - r.d;
    if (basis[i].weight < bound)
      fail(ErrorCode::RankDeficient, "weight below the Wronskian bound");
  }
  std::vector<std::vector<QSeries>> comps;
  for (const auto& v : basis) comps.push_back(v.components);
  const int probe = std::min(15, order);
  if (rank_of_span(comps, probe) != r.d)
    fail(ErrorCode::RankDeficient, "constructed basis has rank below d");
  return basis;
}

HilbertPoincare hp_series(const ClassificationReport& report, int expand_to) {
  if (expand_to < 0) fail(ErrorCode::InvalidArgument, "expand_to must be nonnegative");
  HilbertPoincare hp;
  hp.shift = report.hp_shift;
  hp.numerator = report.hp_numerator;
  hp.denominator = "(1-t^4)(1-t^6)";
  // In s = t^2: numerator / ((1-s^2)(1-s^3)); division gives
  // e[j] = num[j] + e[j-2] + e[j-3] - e[j-5].
  std::vector<long> num;
  for (size_t i = 0; i < hp.numerator.size(); i += 2) num.push_back(hp.numerator[i]);
  hp.expansion.assign(static_cast<size_t>(expand_to) + 1, 0);
  for (long j = 0; j <= expand_to; ++j) {
    long v = j < static_cast<long>(num.size()) ? num[static_cast<size_t>(j)] : 0;
    auto at = [&](long i) { return i >= 0 ? hp.expansion[static_cast<size_t>(i)] : 0; };
    hp.expansion[static_cast<size_t>(j)] = v + at(j - 2) + at(j - 3) - at(j - 5);
  }
  return hp;
}

}  // namespace qmf
