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

#include "mirbench/superop.h"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

namespace mirbench {

namespace {

void require_same_shape(const SuperOp& a, const SuperOp& b, const char* what) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace

SuperOp::SuperOp(std::size_t n_qubits, Eigen::MatrixXd matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  if (n_qubits == 0 || n_qubits > kMaxSuperOpQubits) {
    throw std::invalid_argument("SuperOp: qubit count must be in [1, 4], got " +
                                std::to_string(n_qubits));
  }
  const auto s = static_cast<Eigen::Index>(size());
  if (matrix_.rows() != s || matrix_.cols() != s) {
    throw std::invalid_argument("SuperOp: matrix must be d^2 x d^2");
  }
}

SuperOp SuperOp::identity(std::size_t n_qubits) {
  const auto s = Eigen::Index{1} << (2 * n_qubits);
  return SuperOp(n_qubits, Eigen::MatrixXd::Identity(s, s));
}

bool SuperOp::is_trace_preserving(double tol) const {
  for (Eigen::Index j = 0; j < matrix_.cols(); ++j) {
    const double expected = j == 0 ? 1.0 : 0.0;
    if (std::abs(matrix_(0, j) - expected) > tol) return false;
  }
  return true;
}

bool SuperOp::is_unital(double tol) const {
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    const double expected = i == 0 ? 1.0 : 0.0;
    if (std::abs(matrix_(i, 0) - expected) > tol) return false;
  }
  return true;
}

double SuperOp::max_abs_diff(const SuperOp& other) const {
  require_same_shape(*this, other, "max_abs_diff");
  return (matrix_ - other.matrix_).cwiseAbs().maxCoeff();
}

SuperOp operator*(const SuperOp& a, const SuperOp& b) {
  require_same_shape(a, b, "compose");
  return SuperOp(a.n_qubits(), a.matrix() * b.matrix());
}

SuperOp operator+(const SuperOp& a, const SuperOp& b) {
  require_same_shape(a, b, "add");
  return SuperOp(a.n_qubits(), a.matrix() + b.matrix());
}

SuperOp operator-(const SuperOp& a, const SuperOp& b) {
  require_same_shape(a, b, "subtract");
  return SuperOp(a.n_qubits(), a.matrix() - b.matrix());
}

SuperOp operator*(double s, const SuperOp& a) { return SuperOp(a.n_qubits(), s * a.matrix()); }

SuperOp projector_identity(std::size_t n_qubits) {
  const auto s = Eigen::Index{1} << (2 * n_qubits);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(s, s);
  m(0, 0) = 1.0;
  return SuperOp(n_qubits, std::move(m));
}

SuperOp projector_traceless(std::size_t n_qubits) {
  const auto s = Eigen::Index{1} << (2 * n_qubits);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(s, s);
  m(0, 0) = 0.0;
  return SuperOp(n_qubits, std::move(m));
}

SuperOp tensor(const SuperOp& low, const SuperOp& high) {
  return SuperOp(low.n_qubits() + high.n_qubits(),
                 Eigen::kroneckerProduct(high.matrix(), low.matrix()).eval());
}

Eigen::MatrixXcd dense_pauli(const PauliOperator& p) {
  const std::size_t n = p.n_qubits();
  if (n > 12) throw std::invalid_argument("dense_pauli: register too large");
  const auto d = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  static constexpr std::complex<double> kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::uint64_t x = p.x_bits();
  const std::uint64_t z = p.z_bits();
  const std::uint64_t y = x & z;
  for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(d); ++col) {
    // Y|b> = i(-1)^b |b^1>, Z|b> = (-1)^b |b>.
    const int z_sign = std::popcount(col & z) & 1;
    const int k = static_cast<int>(p.phase()) + std::popcount(y) + 2 * z_sign;
    m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) = kIPow[k % 4];
  }
  return m;
}

SuperOp superop_of_unitary(const Eigen::MatrixXcd& unitary) {
  const Eigen::Index d = unitary.rows();
  if (unitary.cols() != d || d < 2 || (d & (d - 1)) != 0) {
    throw std::invalid_argument("superop_of_unitary: expected a square 2^n matrix");
  }
  std::size_t n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  if (n > kMaxSuperOpQubits) throw std::invalid_argument("superop_of_unitary: register too large");

  const std::uint64_t s = std::uint64_t{1} << (2 * n);
  std::vector<Eigen::MatrixXcd> paulis;
  paulis.reserve(s);
  for (std::uint64_t i = 0; i < s; ++i) paulis.push_back(dense_pauli(PauliOperator::from_index(n, i)));

  Eigen::MatrixXd m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s));
  for (std::uint64_t j = 0; j < s; ++j) {
    const Eigen::MatrixXcd image = unitary * paulis[j] * unitary.adjoint();
    for (std::uint64_t i = 0; i < s; ++i) {
      // Tr(P_i A) = sum_rc (P_i)_rc A_cr.
      const std::complex<double> tr = paulis[i].cwiseProduct(image.transpose()).sum();
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = tr.real() / static_cast<double>(d);
    }
  }
  return SuperOp(n, std::move(m));
}

}  // namespace mirbench
