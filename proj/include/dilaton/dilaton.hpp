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

// Fermionic mode family of a Garfinkle-Horowitz-Strominger dilaton black hole.
//
// Alice (A) stays in the asymptotically flat region, Bob (B) hovers near the
// horizon and Anti-Bob (Bbar) is the mode inside it. Starting from the Bell
// state (|00> + |11>)/sqrt2 of A and B, the Kruskal-to-dilaton Bogoliubov
// transformation gives the pure three-mode state
//
//   (c |000> + s |011> + |110>) / sqrt2       (order A, B, Bbar)
//
// with c^2 = 1/(e^{-x}+1), s^2 = 1/(e^{x}+1) and x = 8 pi (M - D) omega.
// Units: hbar = G = c = k_B = 1.

#pragma once

#include <array>
#include <string_view>

#include "dilaton/density.hpp"
#include "dilaton/measures.hpp"

namespace dilaton {

class DilatonParams {
 public:
  /// Throws ValidationError unless mass > 0, 0 <= dilaton < mass, omega > 0.
  DilatonParams(double mass, double dilaton, double omega);

  double mass() const { return mass_; }
  double dilaton() const { return dilaton_; }
  double omega() const { return omega_; }

  /// x = 8 pi (M - D) omega.
  double thermal_argument() const;

 private:
  double mass_;
  double dilaton_;
  double omega_;
};

struct BogoliubovAmplitudes {
  double x = 0.0;
  double c = 0.0;
  double s = 0.0;
  double c2 = 0.0;  // 1/(e^{-x}+1)
  double s2 = 0.0;  // 1/(e^{x}+1)
  double cs = 0.0;  // c*s = 1/(2 cosh(x/2))
  double temperature = 0.0;
};

BogoliubovAmplitudes bogoliubov(const DilatonParams& p);

/// D = M (1 - 1e-12), the stand-in for the extreme black hole D -> M.
double extreme_dilaton(double mass);

PureState tripartite_pure_state(const DilatonParams& p);
DensityMatrix tripartite_state(const DilatonParams& p);

enum class Pair { AB, ABbar, BBbar };

inline constexpr std::array<Pair, 3> kAllPairs{Pair::AB, Pair::ABbar, Pair::BBbar};

/// "ab", "abbar", "bbbar".
std::string_view pair_name(Pair pair);

/// Partial trace of the three-mode state onto `pair`, first-listed mode first.
DensityMatrix reduced_density(const DilatonParams& p, Pair pair);
XState reduced(const DilatonParams& p, Pair pair);

/// Measures from the printed closed forms. bell_branch2 is the printed Bell
/// expression; bell is the larger of the two CHSH branches.
MeasureSet closed_form_measures(const DilatonParams& p, Pair pair);

/// Measures from the reduced density matrix through the general routines:
/// concurrence_general, chsh_max_general and the X-state witness.
MeasureSet pipeline_measures(const DilatonParams& p, Pair pair);

struct CriticalValue {
  double value = 0.0;
  bool in_range = false;  // value in [0, M)
};

struct CriticalPoints {
  CriticalValue d0;  // sudden birth of Bbar -> A steering
  CriticalValue d1;  // maximum of B -> Bbar steering
  CriticalValue d2;  // sudden death of B -> Bbar steering
};

enum class Critical { SuddenBirth, MaxSteering, SuddenDeath };

std::string_view critical_name(Critical which);

/// Throws ValidationError unless mass > 0 and omega > 0.
CriticalPoints critical_dilatons(double mass, double omega);

/// Locates a critical dilaton on the density-matrix route: bisection on the
/// witness margin for D0 and D2, golden-section search for D1. Throws
/// RootNotFound when [0, M) holds no sign change, or no interior maximum.
double find_critical_numeric(double mass, double omega, Critical which);

/// Left side minus right side of the four steering/entanglement monogamy
/// identities. r3 and r4 only hold for D > D0; the flags say whether that
/// condition is met.
struct MonogamyResiduals {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  double r4 = 0.0;
  bool r3_valid = false;
  bool r4_valid = false;
};

enum class Route { ClosedForm, Pipeline };

MonogamyResiduals monogamy_residuals(const DilatonParams& p, Route route = Route::ClosedForm);

}  // namespace dilaton
