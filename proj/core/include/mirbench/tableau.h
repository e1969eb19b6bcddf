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

#ifndef MIRBENCH_TABLEAU_H
#define MIRBENCH_TABLEAU_H

#include <cstddef>
#include <span>
#include <vector>

#include "mirbench/native_gate.h"
#include "mirbench/pauli.h"
#include "mirbench/random.h"

namespace mirbench {

struct MeasurementResult {
  bool outcome = false;
  bool deterministic = true;
};

/// Stabilizer tableau with destabilizer rows (Aaronson-Gottesman layout).
///
/// Rows 0..n-1 are destabilizers and rows n..2n-1 stabilizers. Started from
/// identity() the rows are C X_j C^dagger and C Z_j C^dagger, so the same object
/// represents either the Clifford unitary C or the state C|0...0>.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(std::size_t n_qubits);

  static StabilizerTableau identity(std::size_t n_qubits) { return StabilizerTableau(n_qubits); }

  std::size_t n_qubits() const { return n_qubits_; }

  const PauliOperator& destabilizer(std::size_t j) const { return rows_.at(j); }
  const PauliOperator& stabilizer(std::size_t j) const { return rows_.at(n_qubits_ + j); }

  void apply(const Gate& gate);
  void apply(std::span<const Gate> gates);
  /// Left-multiplies by a Pauli gate (flips row signs that anticommute).
  void apply_pauli(const PauliOperator& p);

  /// Computational-basis measurement of one qubit, collapsing the state.
  MeasurementResult measure_z(std::size_t qubit, Rng& rng);

  /// True if the tableau is that of the Pauli unitary `p` (up to global phase).
  bool is_pauli(const PauliOperator& p) const;

  /// Checks the symplectic commutation relations between all rows.
  bool is_valid() const;

  friend bool operator==(const StabilizerTableau&, const StabilizerTableau&) = default;

 private:
  std::size_t n_qubits_;
  std::vector<PauliOperator> rows_;
};

}  // namespace mirbench

#endif  // MIRBENCH_TABLEAU_H
