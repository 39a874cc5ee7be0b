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

// Dilaton sweeps and the reports built on them: tabular CSV/JSON output,
// closed-form vs. density-matrix verification, monogamy checks, critical
// points and steering-regime intervals.

#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dilaton/dilaton.hpp"

namespace dilaton {

/// Agreement gate for dual-route verification and the monogamy identities.
inline constexpr double kVerifyGate = 1e-10;
/// Agreement gate between closed-form and numerically located critical points.
inline constexpr double kCriticalGate = 1e-6;

enum class OutputFormat { Csv, Json };

struct SweepConfig {
  double mass = 1.0;
  std::vector<double> omegas{0.5, 1.0, 1.5, 2.0};
  double d_min = 0.0;
  std::optional<double> d_max;  // mass * (1 - 1e-6) when unset
  int points = 2001;
  std::vector<Pair> pairs{Pair::AB, Pair::ABbar, Pair::BBbar};

  double resolved_d_max() const;

  /// Throws ArgumentError. A single point is allowed and means the grid {d_min}.
  void validate() const;

  /// points values from d_min to d_max inclusive.
  std::vector<double> dilaton_grid() const;
};

struct SweepRecord {
  double omega = 0.0;
  double dilaton = 0.0;
  double x = 0.0;
  std::array<MeasureSet, 3> measures;  // indexed by Pair
  MonogamyResiduals monogamy;

  const MeasureSet& at(Pair pair) const { return measures[static_cast<int>(pair)]; }
};

SweepRecord evaluate_point(double mass, double dilaton, double omega);

/// Records in ascending (omega, dilaton) order; omegas are sorted first.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

std::vector<std::string> sweep_columns(const std::vector<Pair>& pairs);
void write_csv(std::ostream& os, const std::vector<SweepRecord>& records,
               const std::vector<Pair>& pairs);
void write_json(std::ostream& os, const std::vector<SweepRecord>& records,
                const std::vector<Pair>& pairs);

/// Largest |closed form - pipeline| for one (pair, measure) over the grid.
struct Deviation {
  Pair pair = Pair::AB;
  std::string measure;
  double max_abs = 0.0;
  double omega = 0.0;
  double dilaton = 0.0;
};

struct VerifyReport {
  std::vector<Deviation> deviations;
  int grid_points = 0;

  bool passed() const;
};

/// Compares closed forms to the density-matrix route at every grid point.
/// `perturbation` is added to the closed-form forward steerability; it
/// exists to check that the gate trips.
VerifyReport verify_sweep(const SweepConfig& cfg, double perturbation = 0.0);

struct ResidualMax {
  double max_abs = 0.0;
  double omega = 0.0;
  double dilaton = 0.0;
  int applicable = 0;  // grid points on which the identity was checked
};

struct MonogamyReport {
  std::array<ResidualMax, 4> residuals;  // r1..r4

  bool passed() const;
};

MonogamyReport monogamy_check(const SweepConfig& cfg);

struct CriticalRow {
  Critical which = Critical::SuddenBirth;
  CriticalValue closed_form;
  std::optional<double> numeric;  // only for in-range points
};

struct CriticalReport {
  double mass = 0.0;
  double omega = 0.0;
  std::array<CriticalRow, 3> rows;

  bool passed() const;
};

CriticalReport critical_report(double mass, double omega);

struct RegimeInterval {
  Regime regime = Regime::NoWay;
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;
};

/// Steering regimes of `pair` along 0 < D < M, split at the critical points.
std::vector<RegimeInterval> regime_intervals(double mass, double omega, Pair pair);

/// "(0.00000000, 0.97814380]".
std::string format_interval(const RegimeInterval& interval);

}  // namespace dilaton
