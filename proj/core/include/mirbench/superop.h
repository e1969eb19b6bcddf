// Copyright 2026 The mirbench Authors
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

#ifndef MIRBENCH_SUPEROP_H
#define MIRBENCH_SUPEROP_H

#include <cstddef>

#include <Eigen/Dense>

#include "mirbench/pauli.h"

namespace mirbench {

/// Largest register for which dense Pauli transfer matrices are built (d^2 = 256).
inline constexpr std::size_t kMaxSuperOpQubits = 4;

/// Pauli transfer matrix of a linear map on n-qubit operators:
///   M_ij = (1/d) Tr(P_i M(P_j)),
/// with P_0 = I and Paulis enumerated by PauliOperator::index(). Composition is
/// the matrix product and the dual (adjoint w.r.t. Hilbert-Schmidt) is the
/// transpose.
class SuperOp {
 public:
  SuperOp(std::size_t n_qubits, Eigen::MatrixXd matrix);

  static SuperOp identity(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  /// Hilbert-space dimension d = 2^n.
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  /// Number of Pauli basis elements d^2.
  std::size_t size() const { return std::size_t{1} << (2 * n_qubits_); }

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  double operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  bool is_trace_preserving(double tol = 1e-12) const;
  bool is_unital(double tol = 1e-12) const;

  /// Largest absolute entry of the difference.
  double max_abs_diff(const SuperOp& other) const;

 private:
  std::size_t n_qubits_;
  Eigen::MatrixXd matrix_;
};

/// Composition: (a * b) applies b first, then a.
SuperOp operator*(const SuperOp& a, const SuperOp& b);
SuperOp operator+(const SuperOp& a, const SuperOp& b);
SuperOp operator-(const SuperOp& a, const SuperOp& b);
SuperOp operator*(double s, const SuperOp& a);

/// Projector onto span{I}.
SuperOp projector_identity(std::size_t n_qubits);
/// Projector onto the traceless operators.
SuperOp projector_traceless(std::size_t n_qubits);

/// Channel on (low qubits, high qubits): `low` acts on qubits [0, n_low).
SuperOp tensor(const SuperOp& low, const SuperOp& high);

/// Dense Pauli matrix; basis index bit q is qubit q.
Eigen::MatrixXcd dense_pauli(const PauliOperator& p);

/// PTM of rho -> U rho U^dagger.
SuperOp superop_of_unitary(const Eigen::MatrixXcd& unitary);

}  // namespace mirbench

#endif  // MIRBENCH_SUPEROP_H
