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

#include "qmf/io.hpp"

#include <json.hpp>

#include <sstream>

#include "qmf/mlde.hpp"
#include "qmf/modforms.hpp"
#include "qmf/multsys.hpp"

namespace qmf {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json series_json(const QSeries& s) {
  Json j;
  if (s.is_zero()) {
    j["leading_exponent"] = "0";
    j["coefficients"] = Json::array({"0"});
    j["order"] = 0;
    return j;
  }
  j["leading_exponent"] = to_string(s.leading_exponent());
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_string(c));
  j["coefficients"] = std::move(coeffs);
  j["order"] = s.order();
  return j;
}

QSeries series_from(const Json& j) {
  if (!j.is_object() || !j.contains("leading_exponent") || !j.contains("coefficients") ||
      !j.contains("order"))
    fail(ErrorCode::InvalidArgument, "series document needs leading_exponent/coefficients/order");
  Rational lead = parse_rational(j.at("leading_exponent").get<std::string>());
  const auto& arr = j.at("coefficients");
  long order = j.at("order").get<long>();
  if (!arr.is_array() || static_cast<long>(arr.size()) != order + 1)
    fail(ErrorCode::InvalidArgument, "coefficient list must hold exactly order+1 entries");
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& c : arr) coeffs.push_back(parse_rational(c.get<std::string>()));
  return QSeries(std::move(lead), std::move(coeffs));
}

std::string term_text(const Rational& c, long n, bool first) {
  std::string sign = c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  Rational a = abs(c);
  std::string mag;
  if (n == 0) {
    mag = to_string(a);
  } else {
    std::string qpow = n == 1 ? "q" : "q^" + std::to_string(n);
    mag = (a == 1) ? qpow : to_string(a) + " " + qpow;
  }
  return sign + mag;
}

Json parse_json(const std::string& doc) {
  Json j = Json::parse(doc, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::InvalidArgument, "malformed JSON document");
  return j;
}

std::optional<FourDimClass> parse_class(const std::string& klass) {
  if (klass.empty()) return std::nullopt;
  if (klass == "rho0") return FourDimClass::rho0;
  if (klass == "rho1") return FourDimClass::rho1;
  fail(ErrorCode::InvalidArgument, "class must be rho0 or rho1, got '" + klass + "'");
}

ClassificationReport classify_args(int d, const std::string& roots_csv, const std::string& m,
                                   const std::string& klass) {
  return classify(d, parse_rational_csv(roots_csv), parse_rational(m), parse_class(klass));
}

Json vector_json(const VvmfVector& v, const std::string& name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["weight"] = to_string(v.weight);
  if (!v.rep_exponents.empty()) {
    Json r = Json::array();
    for (const auto& e : v.rep_exponents) r.push_back(to_string(e));
    j["rep_exponents"] = std::move(r);
    j["cusp_parameter"] = to_string(v.cusp_m);
  }
  Json comps = Json::array();
  for (const auto& c : v.components) comps.push_back(series_json(c));
  j["components"] = std::move(comps);
  return j;
}

Json classification_json(const ClassificationReport& r) {
  Json j;
  j["dimension"] = r.d;
  Json reps = Json::array();
  for (const auto& e : r.rep_exponents) reps.push_back(to_string(e));
  j["rep_exponents"] = std::move(reps);
  j["cusp_parameter"] = to_string(r.m);
  if (r.four_class) j["class"] = *r.four_class == FourDimClass::rho0 ? "rho0" : "rho1";
  if (r.residue_N) j["residue_N"] = *r.residue_N;
  j["minimal_weight"] = to_string(r.minimal_weight);
  Json recipe = Json::array();
  for (const auto& b : r.basis_recipe)
    recipe.push_back(Json{{"name", b.name}, {"weight", to_string(b.weight)}});
  j["basis_recipe"] = std::move(recipe);
  j["dimension_function"] = r.dimension_function;
  j["hp_numerator"] = r.hp_numerator;
  j["hp_shift"] = to_string(r.hp_shift);
  j["hp_denominator"] = "(1-t^4)(1-t^6)";
  j["cyclic_over_R"] = r.cyclic_over_R;
  j["t_determinedness_warning"] = r.t_determinedness_warning;
  return j;
}

std::string classification_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "dimension:          " << r.d << "\n";
  os << "rep exponents:      ";
  for (size_t i = 0; i < r.rep_exponents.size(); ++i)
    os << (i ? ", " : "") << to_string(r.rep_exponents[i]);
  os << "\n";
  os << "cusp parameter:     " << to_string(r.m) << "\n";
  if (r.four_class)
    os << "class:              " << (*r.four_class == FourDimClass::rho0 ? "rho0" : "rho1") << "\n";
  if (r.residue_N) os << "residue N:          " << *r.residue_N << "\n";
  os << "minimal weight:     " << to_string(r.minimal_weight) << "\n";
  os << "basis:              ";
  for (size_t i = 0; i < r.basis_recipe.size(); ++i)
    os << (i ? ", " : "") << r.basis_recipe[i].name << " (wt " << to_string(r.basis_recipe[i].weight)
       << ")";
  os << "\n";
  os << "dimensions:         " << r.dimension_function << "\n";
  os << "Hilbert-Poincare:   t^{" << to_string(r.hp_shift) << "} * (";
  bool first = true;
  for (size_t i = 0; i < r.hp_numerator.size(); ++i) {
    if (r.hp_numerator[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0)
      os << r.hp_numerator[i];
    else {
      if (r.hp_numerator[i] != 1) os << r.hp_numerator[i];
      os << "t^" << i;
    }
  }
  os << ") / ((1-t^4)(1-t^6))\n";
  os << "cyclic over R:      " << (r.cyclic_over_R ? "yes" : "no") << "\n";
  if (r.t_determinedness_warning)
    os << "note: a proper sub-product of the T-eigenvalues is a 12th root of unity;\n"
          "the sufficient T-determinedness criterion does not apply (caller asserts it).\n";
  return os.str();
}

}  // namespace

std::string series_to_json(const QSeries& s) { return dump(series_json(s)); }

QSeries series_from_json(const std::string& doc) {
  try {
    return series_from(parse_json(doc));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("bad series document: ") + e.what());
  }
}

std::string series_to_text(const QSeries& s) {
  if (s.is_zero()) return "0\n";
  std::ostringstream body;
  bool first = true;
  for (size_t n = 0; n < s.coefficients().size(); ++n) {
    const Rational& c = s.coefficients()[n];
    if (c == 0) continue;
    body << term_text(c, static_cast<long>(n), first);
    first = false;
  }
  const std::string tail = " + O(q^{" + to_string(s.leading_exponent() + s.order() + 1) + "})";
  if (s.leading_exponent() == 0) return body.str() + tail + "\n";
  return "q^{" + to_string(s.leading_exponent()) + "}·(" + body.str() + ")" + tail + "\n";
}

std::string series_document(const QSeries& s, Format f) {
  return f == Format::json ? series_to_json(s) : series_to_text(s);
}

std::string vector_to_json(const VvmfVector& v, const std::string& name) {
  return dump(vector_json(v, name));
}

VvmfVector vector_from_json(const std::string& doc) {
  try {
    Json j = parse_json(doc);
    if (!j.is_object() || !j.contains("weight") || !j.contains("components"))
      fail(ErrorCode::InvalidArgument, "vector document needs weight and components");
    VvmfVector v;
    v.weight = parse_rational(j.at("weight").get<std::string>());
    for (const auto& c : j.at("components")) v.components.push_back(series_from(c));
    if (j.contains("rep_exponents"))
      for (const auto& e : j.at("rep_exponents"))
        v.rep_exponents.push_back(parse_rational(e.get<std::string>()));
    v.cusp_m = j.contains("cusp_parameter")
                   ? parse_rational(j.at("cusp_parameter").get<std::string>())
                   : Rational(0);
    return v;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("bad vector document: ") + e.what());
  }
}

std::string cmd_eis(long k, int order, Format f) {
  return series_document(eisenstein(static_cast<int>(k), order).series, f);
}

std::string cmd_delta(int order, Format f) { return series_document(delta(order).series, f); }

std::string cmd_eta(const std::string& power, int order, Format f) {
  return series_document(eta_power(parse_rational(power), order), f);
}

std::string cmd_dim(long k, Format) { return std::to_string(dim_Mk(k)) + "\n"; }

std::string cmd_mult(const std::string& weight, int twist, Format f) {
  MultiplierSystem u(parse_rational(weight), twist);
  if (f == Format::json) {
    Json j;
    j["weight"] = to_string(u.weight());
    j["twist"] = u.twist();
    j["T_exponent"] = to_string(u.t_exponent());
    j["S_exponent"] = to_string(u.s_exponent());
    j["ST_exponent_stated"] = to_string(u.st_exponent_stated());
    j["ST_exponent_proof"] = to_string(u.st_exponent_proof());
    j["cusp_parameter"] = to_string(u.cusp_parameter());
    return dump(j);
  }
  std::ostringstream os;
  os << "weight:             " << to_string(u.weight()) << "\n"
     << "twist:              " << u.twist() << "\n"
     << "v(T) exponent:      " << to_string(u.t_exponent()) << "\n"
     << "v(S) exponent:      " << to_string(u.s_exponent()) << "\n"
     << "v(ST) exponent:     " << to_string(u.st_exponent_stated()) << " (stated), "
     << to_string(u.st_exponent_proof()) << " (proof)\n"
     << "cusp parameter:     " << to_string(u.cusp_parameter()) << "\n";
  return os.str();
}

namespace {

MldeOperator operator_from_csv(const std::string& roots_csv, bool require_incongruent) {
  std::vector<Rational> roots = parse_rational_csv(roots_csv);
  if (require_incongruent) {
    for (size_t i = 0; i < roots.size(); ++i)
      for (size_t j = i + 1; j < roots.size(); ++j) {
        if (roots[i] == roots[j]) continue;  // leave equality to DuplicateRoots
        if (is_integer(roots[i] - roots[j]))
          fail(ErrorCode::CongruentRoots, "roots " + to_string(roots[i]) + " and " +
                                              to_string(roots[j]) + " differ by an integer");
      }
  }
  return operator_from_roots(roots);
}

}  // namespace

std::string cmd_mlde_from_roots(const std::string& roots_csv, Format f) {
  MldeOperator op = operator_from_csv(roots_csv, true);
  if (f == Format::json) {
    Json j;
    j["order"] = op.order();
    j["weight"] = to_string(op.weight());
    Json alphas = Json::array();
    for (const auto& a : *op.alphas()) alphas.push_back(to_string(a));
    j["alphas"] = std::move(alphas);
    return dump(j);
  }
  std::ostringstream os;
  os << "order:   " << op.order() << "\n"
     << "weight:  " << to_string(op.weight()) << "\n";
  const auto& alphas = *op.alphas();
  for (size_t i = 0; i < alphas.size(); ++i)
    os << "alpha_" << 2 * (i + 2) << ": " << to_string(alphas[i]) << "\n";
  return os.str();
}

std::string cmd_mlde_solve(const std::string& roots_csv, int order, Format f) {
  MldeOperator op = operator_from_csv(roots_csv, true);
  std::vector<QSeries> sols = solve_fundamental_system(op, order);
  if (f == Format::json) {
    Json j;
    j["order"] = op.order();
    j["weight"] = to_string(op.weight());
    Json arr = Json::array();
    for (const auto& s : sols) arr.push_back(series_json(s));
    j["solutions"] = std::move(arr);
    return dump(j);
  }
  std::ostringstream os;
  os << "weight " << to_string(op.weight()) << ", " << sols.size() << " solutions\n";
  for (const auto& s : sols) os << series_to_text(s);
  return os.str();
}

std::string classification_document(const ClassificationReport& r, Format f) {
  return f == Format::json ? dump(classification_json(r)) : classification_text(r);
}

std::string cmd_vvmf_classify(int d, const std::string& roots_csv, const std::string& m,
                              const std::string& klass, Format f) {
  return classification_document(classify_args(d, roots_csv, m, klass), f);
}

std::string cmd_vvmf_basis(int d, const std::string& roots_csv, const std::string& m,
                           const std::string& klass, int order, Format f) {
  ClassificationReport r = classify_args(d, roots_csv, m, klass);
  std::vector<VvmfVector> basis = construct_basis(r, order);
  if (f == Format::json) {
    Json j;
    j["minimal_weight"] = to_string(r.minimal_weight);
    Json arr = Json::array();
    for (size_t i = 0; i < basis.size(); ++i)
      arr.push_back(vector_json(basis[i], r.basis_recipe[i].name));
    j["vectors"] = std::move(arr);
    return dump(j);
  }
  std::ostringstream os;
  for (size_t i = 0; i < basis.size(); ++i) {
    os << r.basis_recipe[i].name << " (weight " << to_string(basis[i].weight) << "):\n";
    for (const auto& c : basis[i].components) os << "  " << series_to_text(c);
  }
  return os.str();
}

std::string cmd_vvmf_wronskian(const std::string& vector_json_doc, Format f) {
  VvmfVector v = vector_from_json(vector_json_doc);
  WronskianEtaTest t = wronskian_eta_test(v);
  if (f == Format::json) {
    Json j;
    j["lambda"] = to_string(t.lambda);
    j["is_pure_eta_power"] = t.is_pure_eta_power;
    j["g_weight"] = to_string(t.g_weight);
    j["g"] = series_json(t.g);
    return dump(j);
  }
  std::ostringstream os;
  os << "lambda:            " << to_string(t.lambda) << "\n"
     << "pure eta power:    " << (t.is_pure_eta_power ? "yes" : "no") << "\n"
     << "weight of g:       " << to_string(t.g_weight) << "\n"
     << "g = " << series_to_text(t.g);
  return os.str();
}

std::string cmd_vvmf_hp(int d, const std::string& roots_csv, const std::string& m,
                        const std::string& klass, int expand_to, Format f) {
  ClassificationReport r = classify_args(d, roots_csv, m, klass);
  HilbertPoincare hp = hp_series(r, expand_to);
  if (f == Format::json) {
    Json j;
    j["shift"] = to_string(hp.shift);
    j["numerator"] = hp.numerator;
    j["denominator"] = hp.denominator;
    j["expansion"] = hp.expansion;
    return dump(j);
  }
  std::ostringstream os;
  os << "Psi(t) = t^{" << to_string(hp.shift) << "} * numerator / ((1-t^4)(1-t^6))\n"
     << "numerator coefficients (t^0..): ";
  for (size_t i = 0; i < hp.numerator.size(); ++i) os << (i ? ", " : "") << hp.numerator[i];
  os << "\ndimensions at shift + 2k, k = 0..: ";
  for (size_t i = 0; i < hp.expansion.size(); ++i) os << (i ? ", " : "") << hp.expansion[i];
  os << "\n";
  return os.str();
}

}  // namespace qmf
