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

// Command-line front end. All computation lives behind the C API in
// libqmf; this file only parses arguments and prints documents.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qmf/qmf.h"

namespace {

struct Config {
  int order = 25;
  int probe_depth = 15;
  std::string format = "json";
};

qmf_format fmt(const Config& c) {
  return c.format == "text" ? QMF_FORMAT_TEXT : QMF_FORMAT_JSON;
}

// Prints the document on success; otherwise the error name and message on
// stderr. Domain failures exit 1.
int finish(qmf_status st, char* doc) {
  if (st != QMF_OK) {
    std::cerr << "ERROR " << qmf_status_name(st) << ": " << qmf_last_error() << "\n";
    return 1;
  }
  if (doc) {
    std::cout << doc;
    qmf_string_free(doc);
  }
  return 0;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "ERROR InvalidArgument: cannot open '" << path << "'\n";
    std::exit(1);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join_roots(const std::vector<std::string>& roots) {
  std::string csv;
  for (size_t i = 0; i < roots.size(); ++i) csv += (i ? "," : "") + roots[i];
  return csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-expansion engine for modular forms and MLDEs"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand, e.g. eis 4 --order 30

  Config cfg;
  if (const char* env = std::getenv("VVMF_DEFAULT_ORDER")) cfg.order = std::atoi(env);
  app.add_option("--order", cfg.order, "truncation order for constructed series")
      ->capture_default_str();
  app.add_option("--probe-depth", cfg.probe_depth, "coefficients probed per rank check")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  int rc = 0;

  auto* eis = app.add_subcommand("eis", "Eisenstein series E_k");
  long eis_k = 4;
  eis->add_option("k", eis_k, "even weight >= 4")->required();
  eis->callback([&] {
    char* doc = nullptr;
    qmf_status st = qmf_cmd_eis(eis_k, cfg.order, fmt(cfg), &doc);
    rc = finish(st, doc);
  });

  auto* dlt = app.add_subcommand("delta", "discriminant form");
  dlt->callback([&] {
    char* doc = nullptr;
    qmf_status st = qmf_cmd_delta(cfg.order, fmt(cfg), &doc);
    rc = finish(st, doc);
  });

  auto* eta = app.add_subcommand("eta", "rational power of the eta function");
  std::string eta_power = "1";
  eta->add_option("--power", eta_power, "exponent w of eta^w")->capture_default_str();
  eta->callback([&] {
    char* doc = nullptr;
    qmf_status st = qmf_cmd_eta(eta_power.c_str(), cfg.order, fmt(cfg), &doc);
    rc = finish(st, doc);
  });

  auto* dim = app.add_subcommand("dim", "dimension of M_k");
  long dim_k = 0;
  dim->add_option("k", dim_k, "integer weight")->required();
  dim->callback([&] {
    char* doc = nullptr;
    qmf_status st = qmf_cmd_dim(dim_k, fmt(cfg), &doc);
    rc = finish(st, doc);
  });

  auto* mult = app.add_subcommand("mult", "multiplier system data");
  std::string mult_weight = "0";
  long mult_twist = 0;
  mult->add_option("--weight", mult_weight, "weight k")->required();
  mult->add_option("--twist", mult_twist, "character twist n (chi^n)")->capture_default_str();
  mult->callback([&] {
    char* doc = nullptr;
    qmf_status st = qmf_cmd_mult(mult_weight.c_str(), mult_twist, fmt(cfg), &doc);
    rc = finish(st, doc);
  });

  auto* mlde = app.add_subcommand("mlde", "modular linear differential equations");
  mlde->require_subcommand(1);
  auto* from_roots = mlde->add_subcommand("from-roots", "Eisenstein operator from indicial roots");
  std::vector<std::string> fr_roots;
  from_roots->add_option("roots", fr_roots, "indicial roots (rationals)")->required();
  from_roots->callback([&] {
    char* doc = nullptr;
    qmf_status st = qmf_cmd_mlde_from_roots(join_roots(fr_roots).c_str(), fmt(cfg), &doc);
    rc = finish(st, doc);
  });
  auto* solve = mlde->add_subcommand("solve", "fundamental system of the operator");
  std::string solve_roots;
  solve->add_option("--roots", solve_roots, "comma-separated indicial roots")->required();
  solve->callback([&] {
    char* doc = nullptr;
    qmf_status st = qmf_cmd_mlde_solve(solve_roots.c_str(), cfg.order, fmt(cfg), &doc);
    rc = finish(st, doc);
  });

  auto* vvmf = app.add_subcommand("vvmf", "vector-valued modular forms");
  vvmf->require_subcommand(1);
  long v_d = 0;
  std::string v_r, v_m = "0", v_class;

  auto add_rep_options = [&](CLI::App* cmd) {
    cmd->add_option("-d,--dimension", v_d, "dimension (1..5)")->required();
    cmd->add_option("-r,--exponents", v_r, "T-eigenvalue exponents r_1,...,r_d")->required();
    cmd->add_option("-m,--cusp-parameter", v_m, "cusp parameter of the multiplier system")
        ->capture_default_str();
    cmd->add_option("--class", v_class, "rho0 or rho1 (dimension 4 only)");
  };

  auto* classify = vvmf->add_subcommand("classify", "module structure of H(rho, v)");
  add_rep_options(classify);
  classify->callback([&] {
    char* doc = nullptr;
    qmf_status st = qmf_cmd_vvmf_classify(v_d, v_r.c_str(), v_m.c_str(), v_class.c_str(), fmt(cfg), &doc);
    rc = finish(st, doc);
  });

  auto* basis = vvmf->add_subcommand("basis", "explicit free-module basis");
  add_rep_options(basis);
  basis->callback([&] {
    if (cfg.order < cfg.probe_depth + 5) {
      std::cerr << "usage error: --order must be at least --probe-depth + 5 for rank checks\n";
      rc = 2;
      return;
    }
    char* doc = nullptr;
    qmf_status st = qmf_cmd_vvmf_basis(v_d, v_r.c_str(), v_m.c_str(), v_class.c_str(), cfg.order, fmt(cfg), &doc);
    rc = finish(st, doc);
  });

  auto* wronsk = vvmf->add_subcommand("wronskian", "eta-power factorization of W(F)");
  std::string wr_input;
  wronsk->add_option("-i,--input", wr_input, "vector JSON file (default: stdin)");
  wronsk->callback([&] {
    std::string doc_in = read_input(wr_input);
    char* doc = nullptr;
    qmf_status st = qmf_cmd_vvmf_wronskian(doc_in.c_str(), fmt(cfg), &doc);
    rc = finish(st, doc);
  });

  auto* hp = vvmf->add_subcommand("hp", "Hilbert-Poincare series");
  long hp_expand = 30;
  add_rep_options(hp);
  hp->add_option("--expand-to", hp_expand, "graded pieces to expand")->capture_default_str();
  hp->callback([&] {
    char* doc = nullptr;
    qmf_status st = qmf_cmd_vvmf_hp(v_d, v_r.c_str(), v_m.c_str(), v_class.c_str(), hp_expand, fmt(cfg), &doc);
    rc = finish(st, doc);
  });

  auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");
  std::string st_only;
  selftest->add_option("--only", st_only, "run only checks whose id contains this substring");
  selftest->callback([&] {
    char* report = nullptr;
    int ok = 0;
    qmf_status st = qmf_selftest(st_only.empty() ? nullptr : st_only.c_str(), &report, &ok);
    if (st != QMF_OK) {
      std::cerr << "ERROR " << qmf_status_name(st) << ": " << qmf_last_error() << "\n";
      rc = 1;
      return;
    }
    std::cout << report;
    qmf_string_free(report);
    rc = ok ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return rc;
}
