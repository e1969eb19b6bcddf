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

#ifndef MIRBENCH_DENSE_H
#define MIRBENCH_DENSE_H

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "mirbench/circuit.h"
#include "mirbench/native_gate.h"

namespace mirbench {

/// Largest register for dense unitaries (d = 256).
inline constexpr std::size_t kMaxDenseQubits = 8;

/// Left-multiplies `m` (d x d or d x k) by the gate acting on an n-qubit register.
void apply_gate(Eigen::MatrixXcd& m, const Gate& gate);

/// Product of gates in circuit order (first gate rightmost).
Eigen::MatrixXcd unitary_of_gates(std::span<const Gate> gates, std::size_t n_qubits);

/// U^(L) = g_L ... g_2 g_1 for the given layers, with no mirroring and no Pauli
/// randomization. L = 0 gives the identity. Throws for n > 8.
Eigen::MatrixXcd unitary_of(std::span<const LayerSpec> layers, std::size_t n_qubits);

/// Equality up to a global phase, max-entry tolerance.
bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol = 1e-10);

}  // namespace mirbench

#endif  // MIRBENCH_DENSE_H
