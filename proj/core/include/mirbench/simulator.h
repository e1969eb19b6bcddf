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

#ifndef MIRBENCH_SIMULATOR_H
#define MIRBENCH_SIMULATOR_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mirbench/channels.h"
#include "mirbench/circuit.h"
#include "mirbench/dataset.h"
#include "mirbench/random.h"

namespace mirbench {

/// Uniform noise: the same channel after every gate of a kind.
struct NoiseModel {
  /// Applied after every UZZ gate.
  std::optional<ChannelParams> two_qubit;
  /// Applied after every single-qubit gate.
  std::optional<ChannelParams> single_qubit;
  /// Replaces `two_qubit` on UZZ gates of the inverse (mirrored) half.
  std::optional<ChannelParams> inverse_half_override;

  const std::optional<ChannelParams>& two_qubit_for(CircuitHalf half) const;
  bool is_pauli() const;
  void validate() const;
};

/// Draws the Pauli fault that a Pauli channel inserts after a gate on
/// `gate_arity` qubits. Local index digits (base 4) follow the gate's qubit
/// order; 0 means no fault. A depolarizing p picks one of the 4^k local Paulis
/// (identity included) with probability p; a single-qubit channel on a wider
/// gate acts independently on each qubit.
class FaultSampler {
 public:
  FaultSampler() = default;
  /// Throws std::invalid_argument for non-Pauli channels or arity mismatch.
  FaultSampler(const ChannelParams& params, std::size_t gate_arity);

  bool active() const { return kind_ != Kind::kNone; }
  std::uint64_t sample(Rng& rng) const;

 private:
  enum class Kind { kNone, kDepolarizing, kJoint, kPerQubit };

  std::uint64_t draw(Rng& rng) const;

  Kind kind_ = Kind::kNone;
  std::size_t arity_ = 1;
  double p_ = 0.0;
  std::vector<double> cumulative_;
};

enum class StabilizerMethod {
  /// Tracks the Pauli frame relative to the noiseless reference output.
  kFrame,
  /// Propagates the full stabilizer tableau every shot.
  kTableau,
};

/// Monte-Carlo shots of a compiled circuit under Pauli noise. A fault is drawn
/// after every noisy gate; a depolarizing channel with parameter p picks one of
/// the 4^k Paulis on the gate's k qubits (identity included) with probability
/// p. Throws std::invalid_argument for non-Pauli channels.
ShotRecord run_stabilizer(const CompiledCircuit& circuit, const NoiseModel& noise, std::uint64_t shots,
                          Rng& rng, StabilizerMethod method = StabilizerMethod::kFrame);

/// Exact probability of measuring the expected outcome, by evolving the
/// Pauli-basis vector of |0..0><0..0| through gate and channel PTMs.
/// Throws std::invalid_argument for more than 4 qubits.
double run_dense(const CompiledCircuit& circuit, const NoiseModel& noise);

enum class Backend { kStabilizer, kDense };

struct SimulationOptions {
  Backend backend = Backend::kStabilizer;
  /// Worker threads; results do not depend on this.
  std::size_t jobs = 1;
};

/// Simulates every spec (compiled on the fly). Circuit k uses child seeds
/// derived from (master_seed, k, shot block). circuit_id is the index in
/// `specs`. The dense backend samples successes binomially from the exact
/// probability. Throws std::invalid_argument for an empty spec list.
DecayDataset simulate_survival(std::span<const MirrorCircuitSpec> specs, const NoiseModel& noise,
                               std::uint64_t shots, std::uint64_t master_seed,
                               const SimulationOptions& options = {});

/// Same as above for pre-compiled circuits.
DecayDataset simulate_compiled(std::span<const CompiledCircuit> circuits, const NoiseModel& noise,
                               std::uint64_t shots, std::uint64_t master_seed,
                               const SimulationOptions& options = {});

}  // namespace mirbench

#endif  // MIRBENCH_SIMULATOR_H
