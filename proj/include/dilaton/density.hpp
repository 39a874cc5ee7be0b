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

// Small-dimension density matrices (one to three qubits).
//
// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of the
// basis index: for three qubits A, B, Bbar the basis is |A B Bbar> and index
// 6 is |110>.

#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dilaton {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kNorm = 1e-12;
inline constexpr double kPsdFloor = -1e-10;
inline constexpr double kXStructure = 1e-10;
}  // namespace tol

/// Normalized state vector on 1..3 qubits.
class PureState {
 public:
  /// Throws ValidationError if the dimension is not 2, 4 or 8 or the vector
  /// is not unit norm.
  explicit PureState(ComplexVector amplitudes);
  PureState(std::initializer_list<Complex> amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  int num_qubits() const;
  const ComplexVector& amplitudes() const { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity; throws ValidationError.
  explicit DensityMatrix(ComplexMatrix elements);

  static DensityMatrix maximally_mixed(int num_qubits);

  int dim() const { return static_cast<int>(elements_.rows()); }
  int num_qubits() const;
  const ComplexMatrix& matrix() const { return elements_; }
  Complex operator()(int row, int col) const { return elements_(row, col); }

  double trace() const { return elements_.trace().real(); }
  double purity() const;

 private:
  ComplexMatrix elements_;
};

/// Two-qubit state whose only nonzero entries sit on the diagonal and the
/// anti-diagonal. Coherences may be complex; every measure uses only their
/// moduli.
struct XState {
  double d11 = 0.0;
  double d22 = 0.0;
  double d33 = 0.0;
  double d44 = 0.0;
  Complex c14{0.0, 0.0};
  Complex c23{0.0, 0.0};

  /// Throws ValidationError unless the populations form a distribution and
  /// both coherences respect the positivity bound.
  void validate() const;

  Eigen::Matrix4cd matrix() const;
  DensityMatrix density() const;
};

/// |v><v|.
DensityMatrix from_pure(const PureState& v);

/// Reduced state on the qubits in `keep`, in the order listed there.
/// Throws ArgumentError if `keep` is empty, covers every qubit, repeats an
/// index or names a qubit that does not exist.
DensityMatrix partial_trace(const DensityMatrix& m, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& m, std::initializer_list<int> keep);

/// Kronecker product a (x) b; result must still fit in three qubits.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Eigenvalues sorted descending. Throws ArgumentError if `m` is not square
/// or not Hermitian within tol::kHermitian.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const DensityMatrix& m);
std::vector<double> hermitian_eigenvalues(const Eigen::Matrix3d& symmetric);

/// Reads the six X parameters out of a 4x4 matrix. Throws StructureError
/// naming the first off-X entry (0-based) whose modulus reaches
/// tol::kXStructure, and ArgumentError for non-two-qubit input.
XState as_xstate(const DensityMatrix& m);

}  // namespace dilaton
