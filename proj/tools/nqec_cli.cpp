// Copyright 2026 The nqec Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nqec/channels.hpp"
#include "nqec/codes.hpp"
#include "nqec/experiments.hpp"
#include "nqec/metrics.hpp"
#include "nqec/orthogonalizer.hpp"
#include "nqec/recovery.hpp"

namespace {

using json = nlohmann::json;
using namespace nqec;

constexpr int kExitOk = 0;
constexpr int kExitCertificate = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string code = "leung";
  std::string noise = "ad";
  std::string param_grid;
  std::string recovery = "syndrome_petz";
  std::string order_file;
  int cycles = 1;
  double t1_us = 155.0;
  std::string delay_grid = "0:230:10";
  double dt_us = 0.0;
  std::string out_dir = ".";
  double tol = 1e-10;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      parts.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("bad grid '" + text + "'; expected a:b:step");
    }
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3 || !(parts[2] > 0.0)) throw UsageError("bad grid '" + text + "'; expected a:b:step");
  std::vector<double> out;
  const double a = parts[0], b = parts[1], h = parts[2];
  for (int i = 0;; ++i) {
    const double x = a + i * h;
    if (x > b + 1e-9 * h) break;
    out.push_back(x);
  }
  if (out.empty()) throw UsageError("empty grid '" + text + "'");
  return out;
}

std::vector<double> noise_grid(const Options& o) {
  if (o.param_grid.empty()) return metrics::default_gamma_grid();
  return parse_grid(o.param_grid);
}

QuantumCode make_code(const Options& o, double param) {
  if (o.code == "leung") return codes::leung_code();
  if (o.code == "biconvex") return codes::biconvex_code(o.noise == "ad" ? param : 0.0);
  if (o.code == "six_qubit") return codes::six_qubit_code();
  if (o.code.rfind("file:", 0) == 0) return codes::load_code(o.code.substr(5));
  throw UsageError("unknown code '" + o.code + "'");
}

KrausChannel make_noise(const Options& o, int n, double param) {
  if (o.noise == "ad") return channels::n_fold_product(channels::amplitude_damping(param), n);
  if (o.noise == "depolarizing") return channels::depolarizing(param, n);
  throw UsageError("unknown noise '" + o.noise + "'");
}

std::vector<std::string> read_order_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open order file " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
  }
  return out;
}

OrthogonalizedNoise make_orth(const Options& o, const QuantumCode& code, const KrausChannel& noise) {
  OrthOptions opt;
  opt.cert_tol = o.tol;
  std::vector<std::string> order;
  if (!o.order_file.empty()) {
    order = orthogonalizer::complete_order(noise, read_order_file(o.order_file));
  } else if (o.noise == "ad" && code.n == 4 && o.code == "leung") {
    order = orthogonalizer::leung_order(noise);
  } else if (o.noise == "ad" && o.code == "biconvex") {
    order = orthogonalizer::biconvex_flow2_order(noise);
    opt.support_override = orthogonalizer::biconvex_flow2_override();
  } else {
    order = orthogonalizer::default_order(noise);
  }
  return orthogonalizer::orthogonalize(noise, code, order, opt);
}

RecoveryMap make_recovery(const std::string& kind, const Options& o, const QuantumCode& code,
                          const KrausChannel& noise) {
  if (kind == "petz") return recovery::petz(code, noise);
  if (kind == "syndrome_petz") return recovery::syndrome_petz(make_orth(o, code, noise));
  if (kind == "polar") return recovery::polar_recovery(make_orth(o, code, noise));
  if (kind == "leung") return recovery::leung_recovery(code, noise);
  if (kind == "lookup") {
    if (o.code != "six_qubit") throw UsageError("lookup recovery needs --code six_qubit");
    const auto group = codes::six_qubit_group();
    return recovery::stabilizer_lookup_recovery(code, group, channels::depolarizing(0.1, code.n).paulis());
  }
  throw UsageError("unknown recovery '" + kind + "'");
}

std::vector<std::string> recovery_list(const std::string& text) {
  if (text == "all") return {"leung", "petz", "polar", "syndrome_petz"};
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "petz" && item != "syndrome_petz" && item != "polar" && item != "leung" &&
        item != "lookup") {
      throw UsageError("unknown recovery '" + item + "'");
    }
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("no recovery given");
  return out;
}

void write_file(const Options& o, const std::string& name, const std::string& body) {
  std::filesystem::create_directories(o.out_dir);
  const auto path = std::filesystem::path(o.out_dir) / name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
  std::cout << "wrote " << path.string() << "\n";
}

json fit_json(const PolyFit& f) {
  return {{"coefficients", f.coefficients}, {"residual", f.residual}, {"condition", f.condition}};
}

int cmd_orthogonalize(const Options& o) {
  json runs = json::array();
  int status = kExitOk;
  for (double param : noise_grid(o)) {
    const QuantumCode code = make_code(o, param);
    const KrausChannel noise = make_noise(o, code.n, param);
    json run = {{"param", param}};
    try {
      const auto orth = make_orth(o, code, noise);
      json recs = json::array();
      for (const auto& r : orth.records) {
        recs.push_back({{"label", r.label},
                        {"support_rank", matkernel::numeric_rank(r.p_code)},
                        {"overridden", r.overridden}});
      }
      run["records"] = recs;
      run["dropped"] = orth.dropped;
      run["max_orthogonality_residual"] = orth.certificate.orthogonality;
      run["min_eig_mkk_gap"] = orth.certificate.mkk_gap;
      run["min_eig_ap_ep_blocks"] = orth.certificate.ap_ep_gap;
      run["min_eig_inv_sqrt_gap"] = orth.certificate.inv_sqrt_gap;
      run["min_eig_ap_minus_ep"] = orth.certificate.ap_ep_gap_direct;
    } catch (const ToleranceViolation& e) {
      run["error"] = e.what();
      status = kExitCertificate;
    }
    runs.push_back(run);
  }
  json doc = {{"code", o.code}, {"noise", o.noise}, {"runs", runs}};
  write_file(o, "orthogonalize_" + o.code.substr(0, o.code.find(':')) + "_" + o.noise + ".json",
             doc.dump(2) + "\n");
  return status;
}

int cmd_sweep(const Options& o) {
  const auto grid = noise_grid(o);
  const auto kinds = recovery_list(o.recovery);
  int status = kExitOk;
  for (const auto& kind : kinds) {
    FidelityReport rep;
    std::ostringstream csv;
    csv << "gamma,f_ent,f_min\n";
    try {
      for (double param : grid) {
        const QuantumCode code = make_code(o, param);
        const KrausChannel noise = make_noise(o, code.n, param);
        const RecoveryMap R = make_recovery(kind, o, code, noise);
        const Mat J = metrics::fidelity_matrix(R, noise, code);
        const double fe = metrics::entanglement_fidelity(J, code.d);
        const double fm = code.d == 2 ? metrics::worst_case_fidelity(J, code.d).value : fe;
        rep.gamma_grid.push_back(param);
        rep.f_ent.push_back(fe);
        rep.f_min.push_back(fm);
        csv << fmt(param) << ',' << fmt(fe) << ',' << fmt(fm) << '\n';
      }
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      std::cerr << kind << ": " << e.what() << "\n";
      status = kExitCertificate;
      continue;
    }
    const std::string stem = "sweep_" + o.code.substr(0, o.code.find(':')) + "_" + o.noise + "_" + kind;
    write_file(o, stem + ".csv", csv.str());
    json doc = {{"code", o.code}, {"noise", o.noise}, {"recovery", kind}};
    if (rep.gamma_grid.size() >= 6) {
      try {
        doc["fit_f_ent"] = fit_json(metrics::fidelity_poly_fit(rep.gamma_grid, rep.f_ent));
        doc["fit_f_min"] = fit_json(metrics::fidelity_poly_fit(rep.gamma_grid, rep.f_min));
      } catch (const IllConditioned& e) {
        doc["fit_error"] = e.what();
      }
    }
    write_file(o, stem + ".json", doc.dump(2) + "\n");
  }
  return status;
}

int cmd_syndrome_table(const Options& o) {
  const double param = noise_grid(o).front();
  const QuantumCode code = make_code(o, param);
  if (code.n != 4 || o.noise != "ad") throw UsageError("syndrome-table supports four-qubit codes under ad");
  const KrausChannel noise = make_noise(o, code.n, param);
  const auto orth = make_orth(o, code, noise);
  const auto table = recovery::syndrome_table(
      orth, {"D_0000", "D_1000", "D_0100", "D_0010", "D_0001"},
      {PauliString::parse("ZZII"), PauliString::parse("IIZZ")},
      {PauliString::parse("ZIII"), PauliString::parse("IIIZ")});
  write_file(o, "syndrome_table.csv", recovery::syndrome_table_csv(table));
  return kExitOk;
}

RecoveryKind recovery_kind(const std::string& s) {
  if (s == "syndrome_petz") return RecoveryKind::SyndromePetz;
  if (s == "petz") return RecoveryKind::Petz;
  if (s == "polar") return RecoveryKind::PolarRE;
  if (s == "leung") return RecoveryKind::Leung;
  if (s == "none") return RecoveryKind::Identity;
  throw UsageError("multicycle: unsupported recovery '" + s + "'");
}

int cmd_multicycle(const Options& o) {
  if (o.code != "leung") throw UsageError("multicycle runs on the leung code");
  MulticycleConfig cfg;
  cfg.T1_us = o.t1_us;
  cfg.cycles = o.cycles;
  cfg.dt_us = o.dt_us;
  cfg.delay_grid_us = parse_grid(o.delay_grid);
  cfg.recovery = recovery_kind(o.recovery);
  if (cfg.cycles < 1) throw UsageError("--cycles must be >= 1");
  if (!(cfg.T1_us > 0.0)) throw UsageError("--t1-us must be positive");
  const auto res = experiments::run_multicycle(cfg);
  std::ostringstream csv;
  csv << "t_us,fidelity\n";
  std::vector<double> ts, fs;
  for (const auto& p : res.points) {
    csv << fmt(p.t_us) << ',' << fmt(p.fidelity) << '\n';
    ts.push_back(p.t_us);
    fs.push_back(p.fidelity);
  }
  const std::string stem = "multicycle_N" + std::to_string(cfg.cycles);
  write_file(o, stem + ".csv", csv.str());
  json doc = {{"cycles", cfg.cycles}, {"t1_us", cfg.T1_us}, {"dt_us", cfg.dt_us},
              {"recovery", o.recovery}, {"skipped_t_us", res.skipped_t_us}};
  int status = kExitOk;
  try {
    const auto fit = experiments::exp_fit(ts, fs, cfg.T1_us);
    doc["fit"] = {{"a", fit.a}, {"b", fit.b}, {"T_us", fit.T}, {"residual", fit.residual}};
    std::vector<double> bare;
    for (const auto& p : experiments::bare_qubit_curve(cfg.T1_us, ts)) bare.push_back(p.fidelity);
    const auto bfit = experiments::exp_fit(ts, bare, cfg.T1_us);
    doc["bare_fit"] = {{"a", bfit.a}, {"b", bfit.b}, {"T_us", bfit.T}, {"residual", bfit.residual}};
  } catch (const Error& e) {
    doc["fit_error"] = e.what();
    status = kExitCertificate;
  }
  write_file(o, stem + ".json", doc.dump(2) + "\n");
  return status;
}

int cmd_check(const Options& o) {
  struct Case {
    std::string code, noise;
  };
  const std::vector<Case> cases{{"leung", "ad"}, {"biconvex", "ad"}, {"six_qubit", "depolarizing"}, {"six_qubit", "ad"}};
  bool all = true;
  json doc = json::array();
  auto report = [&](const std::string& name, bool ok, double value) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << " value=" << fmt(value) << "\n";
    doc.push_back({{"check", name}, {"pass", ok}, {"value", value}});
    all = all && ok;
  };
  for (const auto& c : cases) {
    for (double param : {0.01, 0.05, 0.1}) {
      Options oc = o;
      oc.code = c.code;
      oc.noise = c.noise;
      oc.order_file.clear();
      const std::string tag = c.code + "/" + c.noise + "/" + fmt(param);
      try {
        const QuantumCode code = make_code(oc, param);
        const KrausChannel noise = make_noise(oc, code.n, param);
        const auto orth = make_orth(oc, code, noise);
        report("orthogonality " + tag, orth.certificate.orthogonality < 1e-10, orth.certificate.orthogonality);
        report("mkk_gap " + tag, orth.certificate.mkk_gap >= -1e-10, orth.certificate.mkk_gap);
        report("ap_ep_gap " + tag, orth.certificate.ap_ep_gap >= -1e-10, orth.certificate.ap_ep_gap);
        const auto t2 = metrics::petz_dominance_certificate(code, noise, orth);
        report("petz_dominance " + tag, t2.holds, t2.f_petz - t2.f_syndrome * t2.f_syndrome);
      } catch (const Error& e) {
        report(std::string("build ") + tag + " (" + e.what() + ")", false, 0.0);
      }
    }
  }
  write_file(o, "check.json", doc.dump(2) + "\n");
  return all ? kExitOk : kExitCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noise-adapted quantum error correction toolkit"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--code", o.code, "leung | biconvex | six_qubit | file:<path>");
    sub->add_option("--noise", o.noise, "ad | depolarizing");
    sub->add_option("--param-grid", o.param_grid, "noise parameter grid a:b:step");
    sub->add_option("--recovery", o.recovery, "petz | syndrome_petz | polar | leung | lookup");
    sub->add_option("--order-file", o.order_file, "Kraus label order, one per line");
    sub->add_option("--out-dir", o.out_dir, "output directory");
    sub->add_option("--tol", o.tol, "certificate tolerance");
  };
  auto* orth = app.add_subcommand("orthogonalize", "orthogonalize the noise Kraus set");
  auto* sweep = app.add_subcommand("sweep", "fidelity sweep over the noise grid");
  auto* table = app.add_subcommand("syndrome-table", "syndrome table for a four-qubit code");
  auto* multi = app.add_subcommand("multicycle", "multicycle logical T1 experiment");
  auto* check = app.add_subcommand("check", "run the certificate suite");
  for (auto* s : {orth, sweep, table, multi, check}) add_common(s);
  multi->add_option("--cycles", o.cycles, "recovery cycles N");
  multi->add_option("--t1-us", o.t1_us, "physical T1 in microseconds");
  multi->add_option("--delay-grid", o.delay_grid, "delay grid a:b:step in microseconds");
  multi->add_option("--dt-us", o.dt_us, "recovery duration in microseconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (*orth) return cmd_orthogonalize(o);
    if (*sweep) return cmd_sweep(o);
    if (*table) return cmd_syndrome_table(o);
    if (*multi) return cmd_multicycle(o);
    if (*check) return cmd_check(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertificate;
  }
  return kExitUsage;
}
