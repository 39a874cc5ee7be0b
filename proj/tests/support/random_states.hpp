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

// Test-only generators for random states.

#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "dilaton/density.hpp"

namespace dilaton::testing {

/// Populations from the flat simplex, coherence moduli uniform inside the
/// positivity bound, uniform phases.
inline XState random_xstate(std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  double e[4];
  double total = 0.0;
  for (double& v : e) total += (v = expo(rng));
  XState s;
  s.d11 = e[0] / total;
  s.d22 = e[1] / total;
  s.d33 = e[2] / total;
  s.d44 = e[3] / total;
  s.c14 = std::polar(unit(rng) * std::sqrt(s.d11 * s.d44), phase(rng));
  s.c23 = std::polar(unit(rng) * std::sqrt(s.d22 * s.d33), phase(rng));
  return s;
}

inline ComplexVector random_unit_vector(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

inline DensityMatrix random_pure_density(std::mt19937_64& rng, int num_qubits) {
  return from_pure(PureState(random_unit_vector(rng, 1 << num_qubits)));
}

/// Convex mixture of `terms` random product states, projected onto the X
/// pattern by the local twirl rho -> (rho + (Z(x)Z) rho (Z(x)Z)) / 2. The
/// result is separable by construction.
inline XState random_separable_xstate(std::mt19937_64& rng, int terms = 4) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) total += (w = expo(rng));
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < terms; ++k) {
    const DensityMatrix a = random_pure_density(rng, 1);
    const DensityMatrix b = random_pure_density(rng, 1);
    rho += (weights[k] / total) * tensor(a, b).matrix();
  }
  const Eigen::Vector4cd zz(1.0, -1.0, -1.0, 1.0);
  const Eigen::Matrix4cd twirled =
      0.5 * (rho + zz.asDiagonal() * rho * zz.asDiagonal().toDenseMatrix());
  return as_xstate(DensityMatrix(twirled));
}

inline DensityMatrix bell_state() {
  const double h = 1.0 / std::numbers::sqrt2;
  return from_pure(PureState{h, 0.0, 0.0, h});
}

}  // namespace dilaton::testing
