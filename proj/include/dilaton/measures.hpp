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

// Two-qubit correlation measures: concurrence, witness-based EPR
// steerability, maximal CHSH signal and steering asymmetry.
//
// Every measure exists in a closed form over XState and, where one exists, a
// general form over DensityMatrix that serves as an independent check.
//
// Steering direction: AtoB means Alice (qubit 0) steers Bob (qubit 1). It is
// witnessed by entanglement of tau_BA = rho/sqrt3 + (3-sqrt3)/3 (I/2 (x) rho_B);
// BtoA is witnessed by tau_AB = rho/sqrt3 + (3-sqrt3)/3 (rho_A (x) I/2).
//
// A steerability of zero means the witness did not fire. It is not a proof
// that the state is unsteerable, and Regime::NoWay carries the same meaning.

#pragma once

#include <string_view>

#include "dilaton/density.hpp"

namespace dilaton {

enum class Direction { AtoB, BtoA };

enum class Regime { TwoWay, OneWayForward, OneWayBackward, NoWay };

/// Steering counts as present when the steerability exceeds this.
inline constexpr double kSteeringThreshold = 1e-12;

/// "two_way", "one_way_fwd", "one_way_bwd", "no_way".
std::string_view regime_name(Regime r);

/// Thresholds of the steering witness inequalities.
struct LTriple {
  double la = 0.0;
  double lb = 0.0;
  double lc = 0.0;
};

LTriple witness_thresholds(const XState& s);

struct ChshSignal {
  double bell = 0.0;     // max(branch1, branch2)
  double branch1 = 0.0;  // 2 sqrt(K1 + K2)
  double branch2 = 0.0;  // 2 sqrt(K1 + K3)
};

/// Per-bipartition bundle of measures. "forward" is the direction from the
/// first-listed party to the second.
struct MeasureSet {
  double s_forward = 0.0;
  double s_backward = 0.0;
  double bell = 0.0;
  double bell_branch1 = 0.0;
  double bell_branch2 = 0.0;
  double concurrence = 0.0;
  double asymmetry = 0.0;
  Regime regime = Regime::NoWay;
};

double concurrence_x(const XState& s);

/// Wootters concurrence of an arbitrary two-qubit state.
double concurrence_general(const DensityMatrix& m);

/// tau_BA for AtoB, tau_AB for BtoA.
DensityMatrix steering_witness_matrix(const DensityMatrix& m, Direction dir);

/// (8/sqrt3) * max of the two witness margins, without the clamp at zero.
/// Positive exactly when one of the witness inequalities holds strictly.
double witness_margin(const XState& s, Direction dir);

/// True when |c14|^2 > La -/+ Lb or |c23|^2 > Lc -/+ Lb (minus for AtoB).
bool witness_fires(const XState& s, Direction dir);

double steerability(const XState& s, Direction dir);

/// 2 sqrt(sum of the two largest eigenvalues of T^T T), T the Pauli
/// correlation matrix.
double chsh_max_general(const DensityMatrix& m);

ChshSignal chsh_max_x(const XState& s);

double steering_asymmetry(const XState& s);

Regime classify_regime(double s_forward, double s_backward);
Regime classify_steering(const XState& s);

/// All measures of an X state from the closed forms; bell is the X-state
/// branch maximum.
MeasureSet measure_x(const XState& s);

}  // namespace dilaton
