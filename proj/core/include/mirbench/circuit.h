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

#ifndef MIRBENCH_CIRCUIT_H
#define MIRBENCH_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mirbench/clifford.h"
#include "mirbench/native_gate.h"
#include "mirbench/pauli.h"
#include "mirbench/random.h"

namespace mirbench {

using QubitPair = std::pair<std::uint32_t, std::uint32_t>;
using Matching = std::vector<QubitPair>;

/// One random layer: a Clifford on every qubit, then UZZ on every matched pair.
struct LayerSpec {
  std::vector<SingleQubitClifford> cliffords;
  Matching matching;

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

/// Declarative description of one mirror circuit.
///
/// randomizing_paulis is either empty (no Pauli randomization) or holds 2L
/// Paulis, one in front of each two-qubit layer: entries [0, L) for the forward
/// layers g_1..g_L and [L, 2L) for the inverse layers g_L^-1..g_1^-1.
struct MirrorCircuitSpec {
  std::size_t n_qubits = 2;
  std::size_t length = 0;
  std::vector<LayerSpec> layers;
  std::vector<PauliOperator> randomizing_paulis;
  PauliOperator final_pauli{2};
  std::uint64_t seed = 0;

  friend bool operator==(const MirrorCircuitSpec&, const MirrorCircuitSpec&) = default;
};

enum class CircuitHalf : std::uint8_t { kForward = 0, kInverse = 1 };

struct CompiledGate {
  Gate gate;
  CircuitHalf half = CircuitHalf::kForward;

  friend bool operator==(const CompiledGate&, const CompiledGate&) = default;
};

/// Executable gate list (single-qubit Cliffords and UZZ only) plus the ideal
/// measurement outcome (bit q = qubit q).
struct CompiledCircuit {
  std::size_t n_qubits = 2;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  std::vector<CompiledGate> gates;
  std::uint64_t expected_outcome = 0;

  std::vector<Gate> gate_list() const;
  std::size_t two_qubit_gate_count() const;
  /// Number of two-qubit layers (every layer is fully parallel, so this is the
  /// two-qubit depth).
  std::size_t two_qubit_depth() const;

  friend bool operator==(const CompiledCircuit&, const CompiledCircuit&) = default;
};

/// Validates n even and >= 2. Throws std::invalid_argument otherwise.
void check_even_qubits(std::size_t n_qubits);

/// Uniform perfect matching: the lowest unpaired qubit is paired with a
/// uniformly random unpaired partner.
Matching sample_matching(Rng& rng, std::size_t n_qubits);

LayerSpec sample_layer(Rng& rng, std::size_t n_qubits);

struct SpecOptions {
  bool randomize_paulis = true;
  bool random_final_pauli = true;
};

/// Spec drawn entirely from `seed`; identical arguments give identical specs.
MirrorCircuitSpec sample_mirror_spec(std::size_t n_qubits, std::size_t length, std::uint64_t seed,
                                     const SpecOptions& options = {});

/// circuits_per_length independent specs for every length, grouped by length
/// in the order given. Each spec's seed is drawn from `rng`.
std::vector<MirrorCircuitSpec> sample_experiment(Rng& rng, std::size_t n_qubits,
                                                 std::span<const std::size_t> lengths,
                                                 std::size_t circuits_per_length,
                                                 const SpecOptions& options = {});

/// Throws std::invalid_argument describing the first violated spec invariant.
void validate(const MirrorCircuitSpec& spec);

/// Compiles g_1..g_L, g_L^-1..g_1^-1 with randomizing Paulis pushed through the
/// UZZ layers and merged, together with the final Pauli, into the neighbouring
/// single-qubit Clifford layers. The expected outcome comes from tableau
/// propagation of |0..0>.
CompiledCircuit build_mirror_circuit(const MirrorCircuitSpec& spec);

/// Layer gates in circuit order (Cliffords, then UZZ gates).
std::vector<Gate> layer_gates(const LayerSpec& layer);

std::string outcome_string(std::uint64_t outcome, std::size_t n_qubits);
std::uint64_t parse_outcome(const std::string& text);

}  // namespace mirbench

#endif  // MIRBENCH_CIRCUIT_H
