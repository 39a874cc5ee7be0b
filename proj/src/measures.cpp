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

#include "dilaton/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "dilaton/errors.hpp"

namespace dilaton {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kWitnessScale = 8.0 / kSqrt3;

Eigen::Matrix2cd pauli(int i) {
  Eigen::Matrix2cd p;
  switch (i) {
    case 0: p << 0, 1, 1, 0; break;
    case 1: p << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: p << 1, 0, 0, -1; break;
  }
  return p;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  }
  return out;
}

void require_two_qubits(const DensityMatrix& m) {
  if (m.dim() != 4) throw ArgumentError("two-qubit measure applied to a non 4x4 state");
}

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::TwoWay: return "two_way";
    case Regime::OneWayForward: return "one_way_fwd";
    case Regime::OneWayBackward: return "one_way_bwd";
    case Regime::NoWay: return "no_way";
  }
  return "no_way";
}

LTriple witness_thresholds(const XState& s) {
  const double cross = 0.25 * (s.d11 + s.d44) * (s.d22 + s.d33);
  const double outer = s.d11 * s.d44;
  const double inner = s.d22 * s.d33;
  LTriple l;
  l.la = 0.5 * (2.0 - kSqrt3) * outer + 0.5 * (2.0 + kSqrt3) * inner + cross;
  l.lb = 0.25 * (s.d11 - s.d44) * (s.d22 - s.d33);
  l.lc = 0.5 * (2.0 + kSqrt3) * outer + 0.5 * (2.0 - kSqrt3) * inner + cross;
  return l;
}

double concurrence_x(const XState& s) {
  const double a = std::abs(s.c14) - std::sqrt(s.d22 * s.d33);
  const double b = std::abs(s.c23) - std::sqrt(s.d11 * s.d44);
  return 2.0 * std::max({0.0, a, b});
}

double concurrence_general(const DensityMatrix& m) {
  require_two_qubits(m);
  // With rho = W W^dagger, the Wootters lambdas are the singular values of
  // W^T (sy (x) sy) W. Small eigenvalues of rho enter W under a square root,
  // but only at second order in the singular values.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m.matrix());
  const Eigen::Vector4d weights = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4cd w = solver.eigenvectors() * weights.asDiagonal();
  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const Eigen::Matrix4cd tau = w.transpose() * flip * w;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(tau);
  const Eigen::Vector4d sv = svd.singularValues();  // descending
  return std::max(0.0, sv(0) - sv(1) - sv(2) - sv(3));
}

DensityMatrix steering_witness_matrix(const DensityMatrix& m, Direction dir) {
  require_two_qubits(m);
  const DensityMatrix half_identity = DensityMatrix::maximally_mixed(1);
  const DensityMatrix noise = dir == Direction::BtoA
                                  ? tensor(partial_trace(m, {0}), half_identity)
                                  : tensor(half_identity, partial_trace(m, {1}));
  return DensityMatrix(m.matrix() / kSqrt3 + (3.0 - kSqrt3) / 3.0 * noise.matrix());
}

double witness_margin(const XState& s, Direction dir) {
  const LTriple l = witness_thresholds(s);
  const double lb = dir == Direction::AtoB ? -l.lb : l.lb;
  const double first = std::norm(s.c14) - l.la + lb;
  const double second = std::norm(s.c23) - l.lc + lb;
  return kWitnessScale * std::max(first, second);
}

bool witness_fires(const XState& s, Direction dir) {
  const LTriple l = witness_thresholds(s);
  const double lb = dir == Direction::AtoB ? -l.lb : l.lb;
  return std::norm(s.c14) > l.la - lb || std::norm(s.c23) > l.lc - lb;
}

double steerability(const XState& s, Direction dir) {
  return std::max(0.0, witness_margin(s, dir));
}

double chsh_max_general(const DensityMatrix& m) {
  require_two_qubits(m);
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t(i, j) = (m.matrix() * kron(pauli(i), pauli(j))).trace().real();
    }
  }
  const Eigen::Matrix3d k = t.transpose() * t;
  const std::vector<double> ev = hermitian_eigenvalues(Eigen::Matrix3d(0.5 * (k + k.transpose())));
  return 2.0 * std::sqrt(std::max(0.0, ev[0] + ev[1]));
}

ChshSignal chsh_max_x(const XState& s) {
  const double a = std::abs(s.c14);
  const double b = std::abs(s.c23);
  const double k1 = 4.0 * (a + b) * (a + b);
  const double k2 = 4.0 * (a - b) * (a - b);
  const double z = s.d11 - s.d22 - s.d33 + s.d44;
  const double k3 = z * z;
  ChshSignal out;
  out.branch1 = 2.0 * std::sqrt(k1 + k2);
  out.branch2 = 2.0 * std::sqrt(k1 + k3);
  out.bell = std::max(out.branch1, out.branch2);
  return out;
}

double steering_asymmetry(const XState& s) {
  return std::abs(steerability(s, Direction::AtoB) - steerability(s, Direction::BtoA));
}

Regime classify_regime(double s_forward, double s_backward) {
  const bool fwd = s_forward > kSteeringThreshold;
  const bool bwd = s_backward > kSteeringThreshold;
  if (fwd && bwd) return Regime::TwoWay;
  if (fwd) return Regime::OneWayForward;
  if (bwd) return Regime::OneWayBackward;
  return Regime::NoWay;
}

Regime classify_steering(const XState& s) {
  return classify_regime(steerability(s, Direction::AtoB), steerability(s, Direction::BtoA));
}

MeasureSet measure_x(const XState& s) {
  MeasureSet out;
  out.s_forward = steerability(s, Direction::AtoB);
  out.s_backward = steerability(s, Direction::BtoA);
  const ChshSignal chsh = chsh_max_x(s);
  out.bell = chsh.bell;
  out.bell_branch1 = chsh.branch1;
  out.bell_branch2 = chsh.branch2;
  out.concurrence = concurrence_x(s);
  out.asymmetry = std::abs(out.s_forward - out.s_backward);
  out.regime = classify_regime(out.s_forward, out.s_backward);
  return out;
}

}  // namespace dilaton
