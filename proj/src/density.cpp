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

#include "dilaton/density.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "dilaton/errors.hpp"

namespace dilaton {

StructureError::StructureError(int row, int col, double modulus)
    : std::domain_error(fmt::format(
          "not an X state: entry ({}, {}) has modulus {:.3e}", row, col, modulus)),
      row_(row),
      col_(col),
      modulus_(modulus) {}

RootNotFound::RootNotFound(double lo, double hi, double f_lo, double f_hi)
    : std::runtime_error(fmt::format(
          "no sign change in bracket [{:.17g}, {:.17g}] (f = {:.6e}, {:.6e})", lo, hi,
          f_lo, f_hi)),
      lo_(lo),
      hi_(hi) {}

namespace {

int qubits_for_dim(long dim) {
  switch (dim) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: return -1;
  }
}

double hermitian_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> sorted_descending(const Eigen::VectorXd& values) {
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (qubits_for_dim(amplitudes_.size()) < 0) {
    throw ValidationError(
        fmt::format("pure state dimension {} is not 2, 4 or 8", amplitudes_.size()));
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol::kNorm) {
    throw ValidationError(fmt::format("pure state has squared norm {:.17g}", norm2));
  }
}

PureState::PureState(std::initializer_list<Complex> amplitudes)
    : PureState(ComplexVector::Map(amplitudes.begin(),
                                   static_cast<Eigen::Index>(amplitudes.size()))) {}

int PureState::num_qubits() const { return qubits_for_dim(amplitudes_.size()); }

DensityMatrix::DensityMatrix(ComplexMatrix elements) : elements_(std::move(elements)) {
  if (elements_.rows() != elements_.cols() || qubits_for_dim(elements_.rows()) < 0) {
    throw ValidationError(fmt::format("density matrix shape {}x{} is not 2, 4 or 8 square",
                                      elements_.rows(), elements_.cols()));
  }
  if (const double defect = hermitian_defect(elements_); defect > tol::kHermitian) {
    throw ValidationError(fmt::format("density matrix not Hermitian (defect {:.3e})", defect));
  }
  const Complex tr = elements_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::kTrace) {
    throw ValidationError(fmt::format("density matrix trace {:.17g} != 1", tr.real()));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(elements_, Eigen::EigenvaluesOnly);
  if (const double lowest = solver.eigenvalues().minCoeff(); lowest < tol::kPsdFloor) {
    throw ValidationError(
        fmt::format("density matrix not positive semidefinite (eigenvalue {:.3e})", lowest));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 3) {
    throw ArgumentError(fmt::format("unsupported qubit count {}", num_qubits));
  }
  const int dim = 1 << num_qubits;
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

int DensityMatrix::num_qubits() const { return qubits_for_dim(elements_.rows()); }

double DensityMatrix::purity() const { return elements_.cwiseAbs2().sum(); }

void XState::validate() const {
  for (const double d : {d11, d22, d33, d44}) {
    if (!(d >= 0.0)) throw ValidationError(fmt::format("X state population {} < 0", d));
  }
  if (const double sum = d11 + d22 + d33 + d44; std::abs(sum - 1.0) > tol::kTrace) {
    throw ValidationError(fmt::format("X state populations sum to {:.17g}", sum));
  }
  if (std::norm(c14) > d11 * d44 + tol::kTrace) {
    throw ValidationError("X state coherence |c14|^2 exceeds d11*d44");
  }
  if (std::norm(c23) > d22 * d33 + tol::kTrace) {
    throw ValidationError("X state coherence |c23|^2 exceeds d22*d33");
  }
}

Eigen::Matrix4cd XState::matrix() const {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = d11;
  m(1, 1) = d22;
  m(2, 2) = d33;
  m(3, 3) = d44;
  m(0, 3) = c14;
  m(3, 0) = std::conj(c14);
  m(1, 2) = c23;
  m(2, 1) = std::conj(c23);
  return m;
}

DensityMatrix XState::density() const {
  validate();
  return DensityMatrix(matrix());
}

DensityMatrix from_pure(const PureState& v) {
  const ComplexVector& a = v.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& m, std::span<const int> keep) {
  const int n = m.num_qubits();
  const int kept = static_cast<int>(keep.size());
  if (kept == 0 || kept >= n) {
    throw ArgumentError(
        fmt::format("keep must be a nonempty strict subset of {} qubits", n));
  }
  std::vector<bool> is_kept(n, false);
  for (const int q : keep) {
    if (q < 0 || q >= n || is_kept[q]) {
      throw ArgumentError(fmt::format("invalid or repeated qubit index {}", q));
    }
    is_kept[q] = true;
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!is_kept[q]) traced.push_back(q);
  }

  // Scatter the bits of a kept-subsystem index and a traced-subsystem index
  // into a full basis index; qubit q lives at bit position n-1-q.
  auto full_index = [&](int kept_index, int traced_index) {
    int index = 0;
    for (int j = 0; j < kept; ++j) {
      const int bit = (kept_index >> (kept - 1 - j)) & 1;
      index |= bit << (n - 1 - keep[j]);
    }
    const int t = static_cast<int>(traced.size());
    for (int j = 0; j < t; ++j) {
      const int bit = (traced_index >> (t - 1 - j)) & 1;
      index |= bit << (n - 1 - traced[j]);
    }
    return index;
  };

  const int out_dim = 1 << kept;
  const int env_dim = 1 << (n - kept);
  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  for (int r = 0; r < out_dim; ++r) {
    for (int c = 0; c < out_dim; ++c) {
      Complex sum{0.0, 0.0};
      for (int e = 0; e < env_dim; ++e) sum += m(full_index(r, e), full_index(c, e));
      out(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& m, std::initializer_list<int> keep) {
  return partial_trace(m, std::span<const int>(keep.begin(), keep.size()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.num_qubits() + b.num_qubits() > 3) {
    throw ArgumentError("tensor product exceeds three qubits");
  }
  const int da = a.dim();
  const int db = b.dim();
  ComplexMatrix out(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
    }
  }
  return DensityMatrix(std::move(out));
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ArgumentError("eigenvalues requested for a non-square matrix");
  }
  if (const double defect = hermitian_defect(m); defect > tol::kHermitian) {
    throw ArgumentError(fmt::format("matrix not Hermitian (defect {:.3e})", defect));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return sorted_descending(solver.eigenvalues());
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& m) {
  return hermitian_eigenvalues(m.matrix());
}

std::vector<double> hermitian_eigenvalues(const Eigen::Matrix3d& symmetric) {
  if (const double defect = (symmetric - symmetric.transpose()).cwiseAbs().maxCoeff();
      defect > tol::kHermitian) {
    throw ArgumentError(fmt::format("matrix not symmetric (defect {:.3e})", defect));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(symmetric, Eigen::EigenvaluesOnly);
  return sorted_descending(solver.eigenvalues());
}

XState as_xstate(const DensityMatrix& m) {
  if (m.dim() != 4) {
    throw ArgumentError(fmt::format("X state needs a 4x4 matrix, got {}x{}", m.dim(), m.dim()));
  }
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == c || r + c == 3) continue;
      if (const double mod = std::abs(m(r, c)); mod >= tol::kXStructure) {
        throw StructureError(r, c, mod);
      }
    }
  }
  XState s;
  s.d11 = m(0, 0).real();
  s.d22 = m(1, 1).real();
  s.d33 = m(2, 2).real();
  s.d44 = m(3, 3).real();
  s.c14 = m(0, 3);
  s.c23 = m(1, 2);
  return s;
}

}  // namespace dilaton
