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

#include "dilaton/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "dilaton/errors.hpp"

namespace dilaton {

namespace {

constexpr std::array<const char*, 7> kMeasureColumns{
    "s_forward", "s_backward", "bell_max", "bell_branch2", "concurrence", "asymmetry", "regime"};

std::string number(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

double SweepConfig::resolved_d_max() const { return d_max.value_or(mass * (1.0 - 1e-6)); }

void SweepConfig::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw ArgumentError(fmt::format("--mass must be positive, got {}", mass));
  }
  if (omegas.empty()) throw ArgumentError("at least one omega is required");
  for (const double w : omegas) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw ArgumentError(fmt::format("omega must be positive, got {}", w));
    }
  }
  if (pairs.empty()) throw ArgumentError("at least one pair is required");
  if (points < 1) throw ArgumentError(fmt::format("--points must be >= 1, got {}", points));
  if (!(d_min >= 0.0) || !(d_min < mass)) {
    throw ArgumentError(fmt::format("--d-min must lie in [0, mass), got {}", d_min));
  }
  if (points == 1) return;
  const double hi = resolved_d_max();
  if (!(d_min < hi) || !(hi < mass)) {
    throw ArgumentError(
        fmt::format("need d_min < d_max < mass, got {} < {} < {}", d_min, hi, mass));
  }
}

std::vector<double> SweepConfig::dilaton_grid() const {
  if (points == 1) return {d_min};
  const double hi = resolved_d_max();
  std::vector<double> grid(static_cast<size_t>(points));
  const double step = (hi - d_min) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = d_min + step * i;
  grid.back() = hi;
  return grid;
}

SweepRecord evaluate_point(double mass, double dilaton, double omega) {
  const DilatonParams p(mass, dilaton, omega);
  SweepRecord rec;
  rec.omega = omega;
  rec.dilaton = dilaton;
  rec.x = p.thermal_argument();
  for (const Pair pair : kAllPairs) {
    rec.measures[static_cast<int>(pair)] = closed_form_measures(p, pair);
  }
  rec.monogamy = monogamy_residuals(p, Route::ClosedForm);
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<double> omegas = cfg.omegas;
  std::sort(omegas.begin(), omegas.end());
  const std::vector<double> grid = cfg.dilaton_grid();
  std::vector<SweepRecord> out;
  out.reserve(omegas.size() * grid.size());
  for (const double w : omegas) {
    for (const double d : grid) out.push_back(evaluate_point(cfg.mass, d, w));
  }
  return out;
}

std::vector<std::string> sweep_columns(const std::vector<Pair>& pairs) {
  std::vector<std::string> cols{"omega", "dilaton", "x"};
  for (const Pair pair : pairs) {
    for (const char* m : kMeasureColumns) cols.push_back(fmt::format("{}_{}", pair_name(pair), m));
  }
  for (const char* c : {"r1", "r2", "r3", "r4", "r3_valid", "r4_valid"}) cols.emplace_back(c);
  return cols;
}

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records,
               const std::vector<Pair>& pairs) {
  const std::vector<std::string> cols = sweep_columns(pairs);
  os << fmt::format("{}\n", fmt::join(cols, ","));
  std::vector<std::string> row;
  for (const SweepRecord& rec : records) {
    row.clear();
    row.push_back(number(rec.omega));
    row.push_back(number(rec.dilaton));
    row.push_back(number(rec.x));
    for (const Pair pair : pairs) {
      const MeasureSet& m = rec.at(pair);
      row.push_back(number(m.s_forward));
      row.push_back(number(m.s_backward));
      row.push_back(number(m.bell));
      row.push_back(number(m.bell_branch2));
      row.push_back(number(m.concurrence));
      row.push_back(number(m.asymmetry));
      row.emplace_back(regime_name(m.regime));
    }
    const MonogamyResiduals& r = rec.monogamy;
    for (const double v : {r.r1, r.r2, r.r3, r.r4}) row.push_back(number(v));
    row.emplace_back(r.r3_valid ? "true" : "false");
    row.emplace_back(r.r4_valid ? "true" : "false");
    os << fmt::format("{}\n", fmt::join(row, ","));
  }
}

void write_json(std::ostream& os, const std::vector<SweepRecord>& records,
                const std::vector<Pair>& pairs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const SweepRecord& rec : records) {
    nlohmann::ordered_json obj;
    obj["omega"] = rec.omega;
    obj["dilaton"] = rec.dilaton;
    obj["x"] = rec.x;
    for (const Pair pair : pairs) {
      const MeasureSet& m = rec.at(pair);
      const std::string prefix = std::string(pair_name(pair)) + "_";
      obj[prefix + "s_forward"] = m.s_forward;
      obj[prefix + "s_backward"] = m.s_backward;
      obj[prefix + "bell_max"] = m.bell;
      obj[prefix + "bell_branch2"] = m.bell_branch2;
      obj[prefix + "concurrence"] = m.concurrence;
      obj[prefix + "asymmetry"] = m.asymmetry;
      obj[prefix + "regime"] = regime_name(m.regime);
    }
    obj["r1"] = rec.monogamy.r1;
    obj["r2"] = rec.monogamy.r2;
    obj["r3"] = rec.monogamy.r3;
    obj["r4"] = rec.monogamy.r4;
    obj["r3_valid"] = rec.monogamy.r3_valid;
    obj["r4_valid"] = rec.monogamy.r4_valid;
    out.push_back(std::move(obj));
  }
  os << out.dump(2) << '\n';
}

bool VerifyReport::passed() const {
  return std::all_of(deviations.begin(), deviations.end(),
                     [](const Deviation& d) { return d.max_abs <= kVerifyGate; });
}

VerifyReport verify_sweep(const SweepConfig& cfg, double perturbation) {
  cfg.validate();
  struct Probe {
    const char* name;
    double MeasureSet::*field;
  };
  // bell_max is the branch maximum on the closed-form side and the
  // correlation-matrix eigenvalue route on the pipeline side.
  static constexpr std::array<Probe, 6> kProbes{{
      {"s_forward", &MeasureSet::s_forward},
      {"s_backward", &MeasureSet::s_backward},
      {"concurrence", &MeasureSet::concurrence},
      {"bell_branch1", &MeasureSet::bell_branch1},
      {"bell_branch2", &MeasureSet::bell_branch2},
      {"bell_max", &MeasureSet::bell},
  }};

  VerifyReport report;
  for (const Pair pair : cfg.pairs) {
    for (const Probe& probe : kProbes) report.deviations.push_back({pair, probe.name});
  }
  std::vector<double> omegas = cfg.omegas;
  std::sort(omegas.begin(), omegas.end());
  const std::vector<double> grid = cfg.dilaton_grid();
  for (const double w : omegas) {
    for (const double d : grid) {
      const DilatonParams p(cfg.mass, d, w);
      ++report.grid_points;
      for (size_t k = 0; k < cfg.pairs.size(); ++k) {
        MeasureSet closed = closed_form_measures(p, cfg.pairs[k]);
        closed.s_forward += perturbation;
        const MeasureSet pipeline = pipeline_measures(p, cfg.pairs[k]);
        for (size_t j = 0; j < kProbes.size(); ++j) {
          Deviation& dev = report.deviations[k * kProbes.size() + j];
          const double delta = std::abs(closed.*kProbes[j].field - pipeline.*kProbes[j].field);
          if (!(delta <= dev.max_abs)) {
            dev.max_abs = delta;
            dev.omega = w;
            dev.dilaton = d;
          }
        }
      }
    }
  }
  return report;
}

bool MonogamyReport::passed() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const ResidualMax& r) { return r.max_abs <= kVerifyGate; });
}

MonogamyReport monogamy_check(const SweepConfig& cfg) {
  cfg.validate();
  MonogamyReport report;
  auto track = [](ResidualMax& slot, double value, double w, double d) {
    ++slot.applicable;
    if (!(std::abs(value) <= slot.max_abs)) {
      slot.max_abs = std::abs(value);
      slot.omega = w;
      slot.dilaton = d;
    }
  };
  std::vector<double> omegas = cfg.omegas;
  std::sort(omegas.begin(), omegas.end());
  const std::vector<double> grid = cfg.dilaton_grid();
  for (const double w : omegas) {
    for (const double d : grid) {
      const MonogamyResiduals r = monogamy_residuals(DilatonParams(cfg.mass, d, w));
      track(report.residuals[0], r.r1, w, d);
      track(report.residuals[1], r.r2, w, d);
      if (r.r3_valid) track(report.residuals[2], r.r3, w, d);
      if (r.r4_valid) track(report.residuals[3], r.r4, w, d);
    }
  }
  return report;
}

bool CriticalReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CriticalRow& row) {
    if (!row.closed_form.in_range) return true;
    return row.numeric && std::abs(*row.numeric - row.closed_form.value) <= kCriticalGate;
  });
}

CriticalReport critical_report(double mass, double omega) {
  const CriticalPoints cp = critical_dilatons(mass, omega);
  CriticalReport report;
  report.mass = mass;
  report.omega = omega;
  report.rows = {CriticalRow{Critical::SuddenBirth, cp.d0, std::nullopt},
                 CriticalRow{Critical::MaxSteering, cp.d1, std::nullopt},
                 CriticalRow{Critical::SuddenDeath, cp.d2, std::nullopt}};
  for (CriticalRow& row : report.rows) {
    if (!row.closed_form.in_range) continue;
    try {
      row.numeric = find_critical_numeric(mass, omega, row.which);
    } catch (const RootNotFound&) {
      row.numeric.reset();
    }
  }
  return report;
}

std::vector<RegimeInterval> regime_intervals(double mass, double omega, Pair pair) {
  const CriticalPoints cp = critical_dilatons(mass, omega);
  auto split = [mass](const CriticalValue& at, Regime below, Regime above,
                      bool boundary_belongs_below) -> std::vector<RegimeInterval> {
    if (!at.in_range || at.value <= 0.0) return {{above, 0.0, mass, false, false}};
    return {{below, 0.0, at.value, false, boundary_belongs_below},
            {above, at.value, mass, !boundary_belongs_below, false}};
  };
  switch (pair) {
    case Pair::AB: return {{Regime::TwoWay, 0.0, mass, false, false}};
    case Pair::ABbar: return split(cp.d0, Regime::OneWayForward, Regime::TwoWay, true);
    case Pair::BBbar: return split(cp.d2, Regime::OneWayForward, Regime::NoWay, false);
  }
  return {};
}

std::string format_interval(const RegimeInterval& interval) {
  return fmt::format("{}{:.8f}, {:.8f}{}", interval.lo_closed ? '[' : '(', interval.lo,
                     interval.hi, interval.hi_closed ? ']' : ')');
}

}  // namespace dilaton
