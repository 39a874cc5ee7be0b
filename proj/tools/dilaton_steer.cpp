// Copyright 2026 The dilaton-steering Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dilaton-steer: sweeps and consistency checks for fermionic steering, Bell
// signal and concurrence in a dilaton black hole.
//
//   dilaton-steer sweep|verify|critical|monogamy|classify
//       [--mass F] [--omega F,F,...] [--d-min F] [--d-max F] [--points N]
//       [--pairs ab,abbar,bbbar] [--format csv|json] [--out PATH]
//
// Exit codes: 0 success, 1 verification failure, 2 bad arguments,
// 3 output not writable.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "dilaton/errors.hpp"
#include "dilaton/sweep.hpp"

namespace {

using namespace dilaton;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
  double mass = 1.0;
  std::vector<double> omegas{0.5, 1.0, 1.5, 2.0};
  double d_min = 0.0;
  std::optional<double> d_max;
  int points = 2001;
  std::vector<std::string> pairs{"ab", "abbar", "bbbar"};
  std::string format = "csv";
  std::string out;
  double perturb = 0.0;
};

SweepConfig to_config(const Options& o) {
  static const std::map<std::string, Pair> kPairs{
      {"ab", Pair::AB}, {"abbar", Pair::ABbar}, {"bbbar", Pair::BBbar}};
  SweepConfig cfg;
  cfg.mass = o.mass;
  cfg.omegas = o.omegas;
  cfg.d_min = o.d_min;
  cfg.d_max = o.d_max;
  cfg.points = o.points;
  cfg.pairs.clear();
  for (const std::string& name : o.pairs) {
    const Pair pair = kPairs.at(name);
    if (std::find(cfg.pairs.begin(), cfg.pairs.end(), pair) == cfg.pairs.end()) {
      cfg.pairs.push_back(pair);
    }
  }
  cfg.validate();
  return cfg;
}

int cmd_sweep(const SweepConfig& cfg, const Options& o, std::ostream& os) {
  const auto records = run_sweep(cfg);
  if (o.format == "json") {
    write_json(os, records, cfg.pairs);
  } else {
    write_csv(os, records, cfg.pairs);
  }
  return kExitOk;
}

int cmd_verify(const SweepConfig& cfg, const Options& o, std::ostream& os) {
  const VerifyReport report = verify_sweep(cfg, o.perturb);
  fmt::print(os, "verify: {} grid points, gate {:.0e}\n", report.grid_points, kVerifyGate);
  fmt::print(os, "{:<6} {:<13} {:>24} {:>10} {:>20}\n", "pair", "measure", "max_abs_dev",
             "omega", "dilaton");
  const Deviation* worst = nullptr;
  for (const Deviation& d : report.deviations) {
    fmt::print(os, "{:<6} {:<13} {:>24.17g} {:>10.6g} {:>20.17g}\n", pair_name(d.pair),
               d.measure, d.max_abs, d.omega, d.dilaton);
    if (d.max_abs > kVerifyGate && (!worst || d.max_abs > worst->max_abs)) worst = &d;
  }
  if (!worst) {
    fmt::print(os, "PASS\n");
    return kExitOk;
  }
  const std::string msg = fmt::format(
      "FAIL: omega={:.17g} dilaton={:.17g} pair={} measure={} deviation={:.6e}", worst->omega,
      worst->dilaton, pair_name(worst->pair), worst->measure, worst->max_abs);
  fmt::print(os, "{}\n", msg);
  if (&os != &std::cout) std::cerr << msg << '\n';
  return kExitFailed;
}

int cmd_critical(const SweepConfig& cfg, std::ostream& os) {
  bool ok = true;
  for (const double w : cfg.omegas) {
    const CriticalReport report = critical_report(cfg.mass, w);
    fmt::print(os, "critical dilatons (mass = {:g}, omega = {:g})\n", cfg.mass, w);
    fmt::print(os, "{:<5} {:>14} {:>14} {:>12}  {}\n", "point", "closed_form", "numeric",
               "abs_delta", "status");
    for (const CriticalRow& row : report.rows) {
      const std::string closed = fmt::format("{:.8f}", row.closed_form.value);
      if (!row.closed_form.in_range) {
        fmt::print(os, "{:<5} {:>14} {:>14} {:>12}  out_of_range\n", critical_name(row.which),
                   closed, "-", "-");
      } else if (!row.numeric) {
        fmt::print(os, "{:<5} {:>14} {:>14} {:>12}  not_found\n", critical_name(row.which),
                   closed, "-", "-");
      } else {
        const double delta = std::abs(*row.numeric - row.closed_form.value);
        fmt::print(os, "{:<5} {:>14} {:>14.8f} {:>12.3e}  {}\n", critical_name(row.which),
                   closed, *row.numeric, delta, delta <= kCriticalGate ? "ok" : "mismatch");
      }
    }
    ok = ok && report.passed();
  }
  fmt::print(os, "{}\n", ok ? "PASS" : "FAIL");
  return ok ? kExitOk : kExitFailed;
}

int cmd_monogamy(const SweepConfig& cfg, std::ostream& os) {
  const MonogamyReport report = monogamy_check(cfg);
  fmt::print(os, "monogamy residuals, gate {:.0e} (r3, r4 checked only where D > D0)\n",
             kVerifyGate);
  fmt::print(os, "{:<4} {:>24} {:>10} {:>20} {:>8}\n", "res", "max_abs", "omega", "dilaton",
             "points");
  for (size_t i = 0; i < report.residuals.size(); ++i) {
    const ResidualMax& r = report.residuals[i];
    if (r.applicable == 0) {
      fmt::print(os, "r{:<3} {:>24} {:>10} {:>20} {:>8}\n", i + 1, "not_applicable", "-", "-",
                 0);
    } else {
      fmt::print(os, "r{:<3} {:>24.17g} {:>10.6g} {:>20.17g} {:>8}\n", i + 1, r.max_abs,
                 r.omega, r.dilaton, r.applicable);
    }
  }
  if (report.passed()) {
    fmt::print(os, "PASS\n");
    return kExitOk;
  }
  for (size_t i = 0; i < report.residuals.size(); ++i) {
    const ResidualMax& r = report.residuals[i];
    if (r.max_abs > kVerifyGate) {
      fmt::print(os, "FAIL: r{} = {:.6e} at omega={:.17g} dilaton={:.17g}\n", i + 1, r.max_abs,
                 r.omega, r.dilaton);
    }
  }
  return kExitFailed;
}

int cmd_classify(const SweepConfig& cfg, std::ostream& os) {
  for (const double w : cfg.omegas) {
    fmt::print(os, "steering regimes (mass = {:g}, omega = {:g})\n", cfg.mass, w);
    for (const Pair pair : cfg.pairs) {
      for (const RegimeInterval& iv : regime_intervals(cfg.mass, w, pair)) {
        fmt::print(os, "{:<6} {:<12} {}\n", pair_name(pair), regime_name(iv.regime),
                   format_interval(iv));
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermionic steering, Bell signal and concurrence in a dilaton black hole"};
  app.require_subcommand(1, 1);

  Options o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--mass", o.mass, "Black hole mass M")->capture_default_str();
    sub->add_option("--omega", o.omegas, "Mode frequencies, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--d-min", o.d_min, "Smallest dilaton on the grid")->capture_default_str();
    sub->add_option("--d-max", o.d_max, "Largest dilaton on the grid [default: M(1-1e-6)]");
    sub->add_option("--points", o.points, "Grid points per omega")->capture_default_str();
    sub->add_option("--pairs", o.pairs, "Bipartitions: ab,abbar,bbbar")
        ->delimiter(',')
        ->check(CLI::IsMember({"ab", "abbar", "bbbar"}))
        ->capture_default_str();
    sub->add_option("--format", o.format, "Sweep output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", o.out, "Output path [default: stdout]");
  };

  auto* sweep = app.add_subcommand("sweep", "Tabulate every measure over a dilaton grid");
  auto* verify = app.add_subcommand("verify", "Compare closed forms with the density-matrix route");
  auto* critical = app.add_subcommand("critical", "Closed-form and numerical critical dilatons");
  auto* monogamy = app.add_subcommand("monogamy", "Check the steering/entanglement identities");
  auto* classify = app.add_subcommand("classify", "Steering regime intervals per bipartition");
  for (auto* sub : {sweep, verify, critical, monogamy, classify}) add_common(sub);
  verify->add_option("--perturb", o.perturb, "Offset added to closed-form S forward")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  SweepConfig cfg;
  try {
    cfg = to_config(o);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << o.out << " for writing\n";
      return kExitIo;
    }
  }
  std::ostream& os = o.out.empty() ? std::cout : file;

  int status = kExitOk;
  try {
    if (*sweep) status = cmd_sweep(cfg, o, os);
    if (*verify) status = cmd_verify(cfg, o, os);
    if (*critical) status = cmd_critical(cfg, os);
    if (*monogamy) status = cmd_monogamy(cfg, os);
    if (*classify) status = cmd_classify(cfg, os);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  os.flush();
  if (!os) {
    std::cerr << "error: write failed\n";
    return kExitIo;
  }
  return status;
}
