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

#ifndef MIRBENCH_NATIVE_GATE_H
#define MIRBENCH_NATIVE_GATE_H

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "mirbench/clifford.h"
#include "mirbench/pauli.h"

namespace mirbench {

/// Single-qubit Clifford applied to one qubit.
struct CliffordGate {
  SingleQubitClifford clifford;
  std::uint32_t qubit = 0;

  friend bool operator==(const CliffordGate&, const CliffordGate&) = default;
};

/// The native entangler exp(-i Z(x)Z pi/4) on qubits (a, b), a != b.
struct UzzGate {
  std::uint32_t a = 0;
  std::uint32_t b = 1;

  friend bool operator==(const UzzGate&, const UzzGate&) = default;
};

using Gate = std::variant<CliffordGate, UzzGate>;

/// U p U^dagger for U = UZZ on `gate.a, gate.b`. Paulis that anticommute with
/// Z_a Z_b map to i * p * Z_a Z_b; the rest are fixed.
/// Throws std::invalid_argument for a == b or an index outside the register.
PauliOperator conjugate_by_uzz(const PauliOperator& p, UzzGate gate);

/// g p g^dagger for any native gate.
PauliOperator conjugate_by_gate(const PauliOperator& p, const Gate& gate);

/// Compiles UZZ^dagger as X_a * UZZ * X_a (circuit order X_a, UZZ, X_a). The
/// anticommuting Pauli is always X on the first qubit of the pair.
std::vector<Gate> invert_layer_native(UzzGate gate);

/// Exact inverse of a gate list, in circuit order, using only native gates.
std::vector<Gate> inverse_gates(std::span<const Gate> gates);

}  // namespace mirbench

#endif  // MIRBENCH_NATIVE_GATE_H
