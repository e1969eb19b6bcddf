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

#include "mirbench/native_gate.h"

#include <stdexcept>
#include <string>

namespace mirbench {

PauliOperator conjugate_by_uzz(const PauliOperator& p, UzzGate gate) {
  if (gate.a == gate.b || gate.a >= p.n_qubits() || gate.b >= p.n_qubits()) {
    throw std::invalid_argument("conjugate_by_uzz: invalid pair (" + std::to_string(gate.a) + ", " +
                                std::to_string(gate.b) + ") for " + std::to_string(p.n_qubits()) +
                                " qubits");
  }
  const bool xa = (p.x_bits() >> gate.a) & 1u;
  const bool xb = (p.x_bits() >> gate.b) & 1u;
  if (xa == xb) return p;
  const std::uint64_t zz = (std::uint64_t{1} << gate.a) | (std::uint64_t{1} << gate.b);
  PauliOperator out = pauli_multiply(p, PauliOperator(p.n_qubits(), 0, zz));
  out.add_phase(1);
  return out;
}

PauliOperator conjugate_by_gate(const PauliOperator& p, const Gate& gate) {
  if (const auto* c = std::get_if<CliffordGate>(&gate)) {
    return conjugate_by_clifford(p, c->clifford, c->qubit);
  }
  return conjugate_by_uzz(p, std::get<UzzGate>(gate));
}

std::vector<Gate> invert_layer_native(UzzGate gate) {
  const CliffordGate x{SingleQubitClifford::from_pauli(PauliLetter::X), gate.a};
  return {x, gate, x};
}

std::vector<Gate> inverse_gates(std::span<const Gate> gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    if (const auto* c = std::get_if<CliffordGate>(&*it)) {
      out.push_back(CliffordGate{c->clifford.inverse(), c->qubit});
    } else {
      for (const Gate& g : invert_layer_native(std::get<UzzGate>(*it))) out.push_back(g);
    }
  }
  return out;
}

}  // namespace mirbench
