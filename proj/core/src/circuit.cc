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

#include "mirbench/circuit.h"

#include <algorithm>
#include <stdexcept>

#include "mirbench/tableau.h"

namespace mirbench {

namespace {

// Accumulates single-qubit gates between two-qubit layers so each run of
// Cliffords and Paulis is emitted as one Clifford per qubit.
class Compiler {
 public:
  explicit Compiler(std::size_t n) : n_(n), pending_(n, SingleQubitClifford::identity()) {}

  void push_clifford(std::size_t q, SingleQubitClifford c) { pending_[q] = pending_[q].then(c); }

  void push_pauli(const PauliOperator& p) {
    for (std::size_t q = 0; q < n_; ++q) {
      push_clifford(q, SingleQubitClifford::from_pauli(p.letter(q)));
    }
  }

  // `randomizer` R goes in front of the UZZ layer and U R U^dagger after it, so
  // the layer unitary is unchanged up to a global sign.
  void two_qubit_layer(const Matching& matching, const PauliOperator* randomizer, CircuitHalf half) {
    if (randomizer != nullptr) push_pauli(*randomizer);
    flush(half);
    PauliOperator pushed = randomizer != nullptr ? *randomizer : PauliOperator(n_);
    for (const auto& [a, b] : matching) {
      const UzzGate g{a, b};
      gates_.push_back({g, half});
      pushed = conjugate_by_uzz(pushed, g);
    }
    if (randomizer != nullptr) push_pauli(pushed);
  }

  void flush(CircuitHalf half) {
    for (std::size_t q = 0; q < n_; ++q) {
      gates_.push_back({CliffordGate{pending_[q], static_cast<std::uint32_t>(q)}, half});
      pending_[q] = SingleQubitClifford::identity();
    }
  }

  std::vector<CompiledGate> take() { return std::move(gates_); }

 private:
  std::size_t n_;
  std::vector<SingleQubitClifford> pending_;
  std::vector<CompiledGate> gates_;
};

}  // namespace

std::vector<Gate> CompiledCircuit::gate_list() const {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (const CompiledGate& g : gates) out.push_back(g.gate);
  return out;
}

std::size_t CompiledCircuit::two_qubit_gate_count() const {
  return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [](const CompiledGate& g) {
    return std::holds_alternative<UzzGate>(g.gate);
  }));
}

std::size_t CompiledCircuit::two_qubit_depth() const {
  std::size_t depth = 0;
  bool in_layer = false;
  for (const CompiledGate& g : gates) {
    const bool is_uzz = std::holds_alternative<UzzGate>(g.gate);
    if (is_uzz && !in_layer) ++depth;
    in_layer = is_uzz;
  }
  return depth;
}

void check_even_qubits(std::size_t n_qubits) {
  if (n_qubits < 2 || n_qubits % 2 != 0) {
    throw std::invalid_argument("qubit count must be even and >= 2, got " + std::to_string(n_qubits));
  }
  if (n_qubits > kMaxQubits) throw std::invalid_argument("qubit count above 64");
}

Matching sample_matching(Rng& rng, std::size_t n_qubits) {
  check_even_qubits(n_qubits);
  std::vector<std::uint32_t> unpaired(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) unpaired[q] = static_cast<std::uint32_t>(q);
  Matching matching;
  matching.reserve(n_qubits / 2);
  while (!unpaired.empty()) {
    const std::uint32_t first = unpaired.front();
    unpaired.erase(unpaired.begin());
    const auto k = static_cast<std::ptrdiff_t>(uniform_index(rng, unpaired.size()));
    matching.emplace_back(first, unpaired[static_cast<std::size_t>(k)]);
    unpaired.erase(unpaired.begin() + k);
  }
  return matching;
}

LayerSpec sample_layer(Rng& rng, std::size_t n_qubits) {
  LayerSpec layer;
  layer.cliffords.reserve(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) layer.cliffords.push_back(sample_clifford(rng));
  layer.matching = sample_matching(rng, n_qubits);
  return layer;
}

MirrorCircuitSpec sample_mirror_spec(std::size_t n_qubits, std::size_t length, std::uint64_t seed,
                                     const SpecOptions& options) {
  check_even_qubits(n_qubits);
  Rng rng(seed);
  MirrorCircuitSpec spec;
  spec.n_qubits = n_qubits;
  spec.length = length;
  spec.seed = seed;
  spec.layers.reserve(length);
  for (std::size_t i = 0; i < length; ++i) spec.layers.push_back(sample_layer(rng, n_qubits));
  if (options.randomize_paulis) {
    for (std::size_t i = 0; i < 2 * length; ++i) spec.randomizing_paulis.push_back(sample_pauli(rng, n_qubits));
  }
  spec.final_pauli = options.random_final_pauli ? sample_pauli(rng, n_qubits) : PauliOperator(n_qubits);
  return spec;
}

std::vector<MirrorCircuitSpec> sample_experiment(Rng& rng, std::size_t n_qubits,
                                                 std::span<const std::size_t> lengths,
                                                 std::size_t circuits_per_length,
                                                 const SpecOptions& options) {
  if (circuits_per_length == 0) throw std::invalid_argument("sample_experiment: circuits_per_length must be >= 1");
  std::vector<MirrorCircuitSpec> specs;
  specs.reserve(lengths.size() * circuits_per_length);
  for (std::size_t length : lengths) {
    for (std::size_t c = 0; c < circuits_per_length; ++c) {
      specs.push_back(sample_mirror_spec(n_qubits, length, rng(), options));
    }
  }
  return specs;
}

void validate(const MirrorCircuitSpec& spec) {
  check_even_qubits(spec.n_qubits);
  const std::size_t n = spec.n_qubits;
  if (spec.layers.size() != spec.length) throw std::invalid_argument("spec: expected L layers");
  for (const LayerSpec& layer : spec.layers) {
    if (layer.cliffords.size() != n) throw std::invalid_argument("spec: layer needs one Clifford per qubit");
    if (layer.matching.size() != n / 2) throw std::invalid_argument("spec: matching must have n/2 pairs");
    std::vector<bool> covered(n, false);
    for (const auto& [a, b] : layer.matching) {
      if (a >= n || b >= n || a == b || covered[a] || covered[b]) {
        throw std::invalid_argument("spec: matching must cover every qubit exactly once");
      }
      covered[a] = covered[b] = true;
    }
  }
  if (!spec.randomizing_paulis.empty() && spec.randomizing_paulis.size() != 2 * spec.length) {
    throw std::invalid_argument("spec: randomizing_paulis must be empty or have 2L entries");
  }
  for (const PauliOperator& p : spec.randomizing_paulis) {
    if (p.n_qubits() != n) throw std::invalid_argument("spec: randomizing Pauli width mismatch");
  }
  if (spec.final_pauli.n_qubits() != n) throw std::invalid_argument("spec: final Pauli width mismatch");
}

CompiledCircuit build_mirror_circuit(const MirrorCircuitSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n_qubits;
  const std::size_t length = spec.length;
  const bool randomized = !spec.randomizing_paulis.empty();
  Compiler compiler(n);

  for (std::size_t i = 0; i < length; ++i) {
    const LayerSpec& layer = spec.layers[i];
    for (std::size_t q = 0; q < n; ++q) compiler.push_clifford(q, layer.cliffords[q]);
    compiler.two_qubit_layer(layer.matching, randomized ? &spec.randomizing_paulis[i] : nullptr,
                             CircuitHalf::kForward);
  }
  const SingleQubitClifford x = SingleQubitClifford::from_pauli(PauliLetter::X);
  for (std::size_t k = 0; k < length; ++k) {
    const LayerSpec& layer = spec.layers[length - 1 - k];
    // UZZ^-1 = X_a UZZ X_a on every pair; both X layers merge into neighbours.
    for (const auto& [a, b] : layer.matching) compiler.push_clifford(a, x);
    compiler.two_qubit_layer(layer.matching, randomized ? &spec.randomizing_paulis[length + k] : nullptr,
                             CircuitHalf::kInverse);
    for (const auto& [a, b] : layer.matching) compiler.push_clifford(a, x);
    for (std::size_t q = 0; q < n; ++q) compiler.push_clifford(q, layer.cliffords[q].inverse());
  }
  compiler.push_pauli(spec.final_pauli);
  compiler.flush(length > 0 ? CircuitHalf::kInverse : CircuitHalf::kForward);

  CompiledCircuit circuit;
  circuit.n_qubits = n;
  circuit.length = length;
  circuit.seed = spec.seed;
  circuit.gates = compiler.take();

  StabilizerTableau state(n);
  for (const CompiledGate& g : circuit.gates) state.apply(g.gate);
  Rng unused(0);
  for (std::size_t q = 0; q < n; ++q) {
    const MeasurementResult m = state.measure_z(q, unused);
    if (!m.deterministic) throw std::logic_error("build_mirror_circuit: output is not a basis state");
    if (m.outcome) circuit.expected_outcome |= std::uint64_t{1} << q;
  }
  return circuit;
}

std::vector<Gate> layer_gates(const LayerSpec& layer) {
  std::vector<Gate> gates;
  for (std::size_t q = 0; q < layer.cliffords.size(); ++q) {
    gates.push_back(CliffordGate{layer.cliffords[q], static_cast<std::uint32_t>(q)});
  }
  for (const auto& [a, b] : layer.matching) gates.push_back(UzzGate{a, b});
  return gates;
}

std::string outcome_string(std::uint64_t outcome, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if ((outcome >> q) & 1u) s[q] = '1';
  }
  return s;
}

std::uint64_t parse_outcome(const std::string& text) {
  if (text.size() > kMaxQubits) throw std::invalid_argument("outcome string too long");
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < text.size(); ++q) {
    if (text[q] == '1') {
      out |= std::uint64_t{1} << q;
    } else if (text[q] != '0') {
      throw std::invalid_argument("outcome string must contain only 0/1");
    }
  }
  return out;
}

}  // namespace mirbench
