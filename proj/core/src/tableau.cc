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

#include "mirbench/tableau.h"

#include <stdexcept>

namespace mirbench {

StabilizerTableau::StabilizerTableau(std::size_t n_qubits) : n_qubits_(n_qubits) {
  rows_.reserve(2 * n_qubits);
  for (std::size_t j = 0; j < n_qubits; ++j) {
    rows_.emplace_back(n_qubits, std::uint64_t{1} << j, 0);
  }
  for (std::size_t j = 0; j < n_qubits; ++j) {
    rows_.emplace_back(n_qubits, 0, std::uint64_t{1} << j);
  }
}

void StabilizerTableau::apply(const Gate& gate) {
  for (PauliOperator& row : rows_) row = conjugate_by_gate(row, gate);
}

void StabilizerTableau::apply(std::span<const Gate> gates) {
  for (const Gate& g : gates) apply(g);
}

void StabilizerTableau::apply_pauli(const PauliOperator& p) {
  if (p.n_qubits() != n_qubits_) throw std::invalid_argument("apply_pauli: width mismatch");
  for (PauliOperator& row : rows_) {
    if (!row.commutes_with(p)) row.add_phase(2);
  }
}

MeasurementResult StabilizerTableau::measure_z(std::size_t qubit, Rng& rng) {
  if (qubit >= n_qubits_) throw std::out_of_range("measure_z: qubit out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const std::size_t n = n_qubits_;

  std::size_t pivot = 2 * n;
  for (std::size_t i = n; i < 2 * n; ++i) {
    if (rows_[i].x_bits() & bit) {
      pivot = i;
      break;
    }
  }

  if (pivot < 2 * n) {
    for (std::size_t i = 0; i < 2 * n; ++i) {
      if (i != pivot && (rows_[i].x_bits() & bit)) rows_[i] = pauli_multiply(rows_[i], rows_[pivot]);
    }
    rows_[pivot - n] = rows_[pivot];
    const bool outcome = uniform_index(rng, 2) == 1;
    rows_[pivot] = PauliOperator(n, 0, bit, outcome ? Phase::kMinusOne : Phase::kPlusOne);
    return {outcome, false};
  }

  // Z_q is in the stabilizer group; its sign is the product of the
  // stabilizers whose paired destabilizer anticommutes with Z_q.
  PauliOperator acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_[i].x_bits() & bit) acc = pauli_multiply(acc, rows_[n + i]);
  }
  return {acc.phase() == Phase::kMinusOne, true};
}

bool StabilizerTableau::is_pauli(const PauliOperator& p) const {
  StabilizerTableau expected(n_qubits_);
  expected.apply_pauli(p);
  return *this == expected;
}

bool StabilizerTableau::is_valid() const {
  const std::size_t n = n_qubits_;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (!rows_[i].is_hermitian()) return false;
    for (std::size_t j = i + 1; j < 2 * n; ++j) {
      // Only destabilizer j and stabilizer j anticommute.
      const bool should_anticommute = j == i + n && i < n;
      if (rows_[i].commutes_with(rows_[j]) == should_anticommute) return false;
    }
  }
  return true;
}

}  // namespace mirbench
