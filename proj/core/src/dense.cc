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

#include "mirbench/dense.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace mirbench {

namespace {

using cd = std::complex<double>;

void check_dense_width(std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxDenseQubits) {
    throw std::invalid_argument("dense unitary: qubit count must be in [1, 8], got " +
                                std::to_string(n_qubits));
  }
}

}  // namespace

void apply_gate(Eigen::MatrixXcd& m, const Gate& gate) {
  const Eigen::Index d = m.rows();
  if (const auto* c = std::get_if<CliffordGate>(&gate)) {
    const Matrix2c& u = c->clifford.matrix();
    const Eigen::Index bit = Eigen::Index{1} << c->qubit;
    if (bit >= d) throw std::out_of_range("apply_gate: qubit out of range");
    for (Eigen::Index r0 = 0; r0 < d; ++r0) {
      if (r0 & bit) continue;
      const Eigen::Index r1 = r0 | bit;
      for (Eigen::Index col = 0; col < m.cols(); ++col) {
        const cd a = m(r0, col);
        const cd b = m(r1, col);
        m(r0, col) = u[0] * a + u[1] * b;
        m(r1, col) = u[2] * a + u[3] * b;
      }
    }
    return;
  }
  const UzzGate& g = std::get<UzzGate>(gate);
  if ((Eigen::Index{1} << g.a) >= d || (Eigen::Index{1} << g.b) >= d || g.a == g.b) {
    throw std::invalid_argument("apply_gate: invalid UZZ pair");
  }
  // exp(-i pi/4 ZZ) is diagonal: e^{-i pi/4} on even parity, e^{+i pi/4} on odd.
  const cd even = std::polar(1.0, -M_PI / 4);
  const cd odd = std::polar(1.0, M_PI / 4);
  for (Eigen::Index r = 0; r < d; ++r) {
    const bool parity = (((r >> g.a) ^ (r >> g.b)) & 1) != 0;
    m.row(r) *= parity ? odd : even;
  }
}

Eigen::MatrixXcd unitary_of_gates(std::span<const Gate> gates, std::size_t n_qubits) {
  check_dense_width(n_qubits);
  const auto d = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  for (const Gate& g : gates) apply_gate(m, g);
  return m;
}

Eigen::MatrixXcd unitary_of(std::span<const LayerSpec> layers, std::size_t n_qubits) {
  check_dense_width(n_qubits);
  const auto d = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  for (const LayerSpec& layer : layers) {
    for (const Gate& g : layer_gates(layer)) apply_gate(m, g);
  }
  return m;
}

bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < tol) return false;
  const cd phase = a(r, c) / b(r, c);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace mirbench
