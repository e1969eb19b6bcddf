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

#include "mirbench/simulator.h"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <stdexcept>

#include "mirbench/tableau.h"
#include "parallel.h"

namespace mirbench {

namespace {

constexpr std::uint64_t kShotBlock = 1 << 14;

struct Samplers {
  FaultSampler single;
  FaultSampler two_forward;
  FaultSampler two_inverse;

  explicit Samplers(const NoiseModel& noise) {
    if (noise.single_qubit) single = FaultSampler(*noise.single_qubit, 1);
    if (const auto& c = noise.two_qubit_for(CircuitHalf::kForward)) two_forward = FaultSampler(*c, 2);
    if (const auto& c = noise.two_qubit_for(CircuitHalf::kInverse)) two_inverse = FaultSampler(*c, 2);
  }

  const FaultSampler& for_gate(const CompiledGate& g) const {
    if (std::holds_alternative<CliffordGate>(g.gate)) return single;
    return g.half == CircuitHalf::kForward ? two_forward : two_inverse;
  }
};

// Frame letter images (x | z << 1) under each single-qubit Clifford, signs dropped.
const std::array<std::array<std::uint8_t, 4>, kNumSingleQubitCliffords>& frame_table() {
  static const auto kTable = [] {
    std::array<std::array<std::uint8_t, 4>, kNumSingleQubitCliffords> t{};
    for (int c = 0; c < kNumSingleQubitCliffords; ++c) {
      for (std::uint8_t xz = 0; xz < 4; ++xz) {
        const PauliOperator p(1, xz & 1u, (xz >> 1) & 1u);
        const PauliOperator img = SingleQubitClifford(c).conjugate_letter(p.letter(0));
        t[c][xz] = static_cast<std::uint8_t>(img.x_bits() | (img.z_bits() << 1));
      }
    }
    return t;
  }();
  return kTable;
}

std::vector<std::uint32_t> gate_qubits(const Gate& g) {
  if (const auto* c = std::get_if<CliffordGate>(&g)) return {c->qubit};
  const UzzGate& u = std::get<UzzGate>(g);
  return {u.a, u.b};
}

PauliOperator local_to_global(std::uint64_t local, const std::vector<std::uint32_t>& qubits, std::size_t n) {
  PauliOperator p(n);
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    p.set_letter(qubits[j], static_cast<PauliLetter>((local >> (2 * j)) & 3u));
  }
  return p;
}

std::uint64_t run_frame_shots(const CompiledCircuit& circuit, const Samplers& samplers, std::uint64_t shots,
                              Rng& rng) {
  const auto& table = frame_table();
  std::uint64_t successes = 0;
  for (std::uint64_t s = 0; s < shots; ++s) {
    std::uint64_t x = 0, z = 0;
    for (const CompiledGate& g : circuit.gates) {
      if (const auto* c = std::get_if<CliffordGate>(&g.gate)) {
        const std::uint32_t q = c->qubit;
        const auto xz = static_cast<std::uint8_t>(((x >> q) & 1u) | (((z >> q) & 1u) << 1));
        const std::uint8_t img = table[c->clifford.index()][xz];
        x = (x & ~(std::uint64_t{1} << q)) | (std::uint64_t{img & 1u} << q);
        z = (z & ~(std::uint64_t{1} << q)) | (std::uint64_t{(img >> 1) & 1u} << q);
        const FaultSampler& f = samplers.single;
        if (f.active()) {
          const std::uint64_t local = f.sample(rng);
          const std::uint64_t letter_x = (local == 1 || local == 2) ? 1 : 0;
          const std::uint64_t letter_z = (local == 2 || local == 3) ? 1 : 0;
          x ^= letter_x << q;
          z ^= letter_z << q;
        }
      } else {
        const UzzGate& u = std::get<UzzGate>(g.gate);
        if (((x >> u.a) ^ (x >> u.b)) & 1u) z ^= (std::uint64_t{1} << u.a) | (std::uint64_t{1} << u.b);
        const FaultSampler& f = samplers.for_gate(g);
        if (f.active()) {
          const std::uint64_t local = f.sample(rng);
          for (std::size_t j = 0; j < 2; ++j) {
            const std::uint64_t digit = (local >> (2 * j)) & 3u;
            const std::uint32_t q = j == 0 ? u.a : u.b;
            x ^= std::uint64_t{digit == 1 || digit == 2} << q;
            z ^= std::uint64_t{digit == 2 || digit == 3} << q;
          }
        }
      }
    }
    if (x == 0) ++successes;
  }
  return successes;
}

std::uint64_t run_tableau_shots(const CompiledCircuit& circuit, const Samplers& samplers, std::uint64_t shots,
                                Rng& rng) {
  const std::size_t n = circuit.n_qubits;
  std::uint64_t successes = 0;
  for (std::uint64_t s = 0; s < shots; ++s) {
    StabilizerTableau state(n);
    for (const CompiledGate& g : circuit.gates) {
      state.apply(g.gate);
      const FaultSampler& f = samplers.for_gate(g);
      if (!f.active()) continue;
      const std::uint64_t local = f.sample(rng);
      if (local != 0) state.apply_pauli(local_to_global(local, gate_qubits(g.gate), n));
    }
    std::uint64_t measured = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (state.measure_z(q, rng).outcome) measured |= std::uint64_t{1} << q;
    }
    if (measured == circuit.expected_outcome) ++successes;
  }
  return successes;
}

// Applies a local PTM on `qubits` to a Pauli-basis vector over n qubits.
void apply_local_superop(std::vector<double>& v, const SuperOp& local, const std::vector<std::uint32_t>& qubits,
                         std::size_t n) {
  const std::size_t k = qubits.size();
  const std::uint64_t local_size = std::uint64_t{1} << (2 * k);
  std::uint64_t mask = 0;
  for (std::uint32_t q : qubits) mask |= std::uint64_t{3} << (2 * q);
  std::vector<std::uint64_t> offsets(local_size);
  for (std::uint64_t l = 0; l < local_size; ++l) {
    std::uint64_t off = 0;
    for (std::size_t j = 0; j < k; ++j) off |= ((l >> (2 * j)) & 3u) << (2 * qubits[j]);
    offsets[l] = off;
  }
  std::vector<double> in(local_size), out(local_size);
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t base = 0; base < total; ++base) {
    if (base & mask) continue;
    for (std::uint64_t l = 0; l < local_size; ++l) in[l] = v[base | offsets[l]];
    for (std::uint64_t r = 0; r < local_size; ++r) {
      double acc = 0.0;
      for (std::uint64_t c = 0; c < local_size; ++c) {
        acc += local(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) * in[c];
      }
      out[r] = acc;
    }
    for (std::uint64_t l = 0; l < local_size; ++l) v[base | offsets[l]] = out[l];
  }
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

ShotRecord simulate_one(const CompiledCircuit& circuit, const NoiseModel& noise, std::uint64_t shots,
                        std::uint64_t master_seed, std::size_t circuit_id, Backend backend) {
  ShotRecord rec{circuit_id, shots, 0};
  if (backend == Backend::kDense) {
    const double p = std::clamp(run_dense(circuit, noise), 0.0, 1.0);
    Rng rng(derive_seed(master_seed, {circuit_id, 0}));
    std::binomial_distribution<std::uint64_t> binom(shots, p);
    rec.successes = binom(rng);
    return rec;
  }
  const std::uint64_t blocks = ceil_div(shots, kShotBlock);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    Rng rng(derive_seed(master_seed, {circuit_id, b}));
    const std::uint64_t count = std::min(kShotBlock, shots - b * kShotBlock);
    rec.successes += run_stabilizer(circuit, noise, count, rng).successes;
  }
  return rec;
}

}  // namespace

FaultSampler::FaultSampler(const ChannelParams& params, std::size_t gate_arity) : arity_(gate_arity) {
  validate(params);
  if (const auto* d = std::get_if<Depolarizing>(&params)) {
    kind_ = Kind::kDepolarizing;
    p_ = d->p;
    return;
  }
  const auto* sp = std::get_if<StochasticPauli>(&params);
  if (sp == nullptr) {
    throw std::invalid_argument("stabilizer backend supports only Pauli channels, got " + describe(params));
  }
  if (sp->n_qubits == gate_arity) {
    kind_ = Kind::kJoint;
  } else if (sp->n_qubits == 1) {
    kind_ = Kind::kPerQubit;
  } else {
    throw std::invalid_argument("stochastic Pauli channel arity does not match gate");
  }
  double acc = 0.0;
  for (double p : sp->probabilities) {
    acc += p;
    cumulative_.push_back(acc);
  }
}

std::uint64_t FaultSampler::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::kNone:
      return 0;
    case Kind::kDepolarizing:
      if (uniform_unit(rng) < p_) return uniform_index(rng, std::uint64_t{1} << (2 * arity_));
      return 0;
    case Kind::kJoint:
      return draw(rng);
    case Kind::kPerQubit: {
      std::uint64_t idx = 0;
      for (std::size_t j = 0; j < arity_; ++j) idx |= draw(rng) << (2 * j);
      return idx;
    }
  }
  return 0;
}

std::uint64_t FaultSampler::draw(Rng& rng) const {
  const double u = uniform_unit(rng);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) return 0;
  return static_cast<std::uint64_t>(it - cumulative_.begin()) + 1;
}

const std::optional<ChannelParams>& NoiseModel::two_qubit_for(CircuitHalf half) const {
  if (half == CircuitHalf::kInverse && inverse_half_override) return inverse_half_override;
  return two_qubit;
}

bool NoiseModel::is_pauli() const {
  for (const auto* c : {&two_qubit, &single_qubit, &inverse_half_override}) {
    if (*c && !is_pauli_channel(**c)) return false;
  }
  return true;
}

void NoiseModel::validate() const {
  for (const auto* c : {&two_qubit, &single_qubit, &inverse_half_override}) {
    if (*c) mirbench::validate(**c);
  }
  if (single_qubit) {
    const std::size_t arity = channel_arity(*single_qubit);
    if (arity > 1) throw std::invalid_argument("single-qubit noise must act on one qubit");
  }
  for (const auto* c : {&two_qubit, &inverse_half_override}) {
    if (*c && channel_arity(**c) > 2) throw std::invalid_argument("two-qubit noise must act on at most two qubits");
  }
}

ShotRecord run_stabilizer(const CompiledCircuit& circuit, const NoiseModel& noise, std::uint64_t shots, Rng& rng,
                          StabilizerMethod method) {
  noise.validate();
  if (!noise.is_pauli()) throw std::invalid_argument("run_stabilizer: noise model must be Pauli-stochastic");
  const Samplers samplers(noise);
  ShotRecord rec{0, shots, 0};
  rec.successes = method == StabilizerMethod::kFrame ? run_frame_shots(circuit, samplers, shots, rng)
                                                     : run_tableau_shots(circuit, samplers, shots, rng);
  return rec;
}

double run_dense(const CompiledCircuit& circuit, const NoiseModel& noise) {
  const std::size_t n = circuit.n_qubits;
  if (n > kMaxSuperOpQubits) {
    throw std::invalid_argument("run_dense: at most 4 qubits, got " + std::to_string(n));
  }
  noise.validate();
  const std::uint64_t size = std::uint64_t{1} << (2 * n);

  std::optional<SuperOp> single;
  if (noise.single_qubit) single = superop_of(*noise.single_qubit, 1);
  std::optional<SuperOp> two_forward, two_inverse;
  if (const auto& c = noise.two_qubit_for(CircuitHalf::kForward)) two_forward = superop_of(*c, 2);
  if (const auto& c = noise.two_qubit_for(CircuitHalf::kInverse)) two_inverse = superop_of(*c, 2);

  // v_j = Tr(P_j rho) for rho = |0..0><0..0|.
  std::vector<double> v(size, 0.0);
  std::vector<PauliOperator> basis;
  basis.reserve(size);
  for (std::uint64_t j = 0; j < size; ++j) {
    basis.push_back(PauliOperator::from_index(n, j));
    if (basis.back().x_bits() == 0) v[j] = 1.0;
  }

  std::vector<double> next(size);
  for (const CompiledGate& g : circuit.gates) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::uint64_t j = 0; j < size; ++j) {
      if (v[j] == 0.0) continue;
      const PauliOperator img = conjugate_by_gate(basis[j], g.gate);
      next[img.index()] += img.phase() == Phase::kMinusOne ? -v[j] : v[j];
    }
    v.swap(next);
    const std::vector<std::uint32_t> qubits = gate_qubits(g.gate);
    const std::optional<SuperOp>* channel = nullptr;
    if (std::holds_alternative<CliffordGate>(g.gate)) {
      channel = &single;
    } else {
      channel = g.half == CircuitHalf::kForward ? &two_forward : &two_inverse;
    }
    if (*channel) apply_local_superop(v, **channel, qubits, n);
  }

  // Tr(E rho) with E = |o><o|: Tr(P_i E) = (-1)^{|o & z_i|} for Z-type P_i.
  double acc = 0.0;
  for (std::uint64_t i = 0; i < size; ++i) {
    if (basis[i].x_bits() != 0) continue;
    const int sign = std::popcount(basis[i].z_bits() & circuit.expected_outcome) & 1;
    acc += sign ? -v[i] : v[i];
  }
  return acc / static_cast<double>(std::uint64_t{1} << n);
}

DecayDataset simulate_compiled(std::span<const CompiledCircuit> circuits, const NoiseModel& noise,
                               std::uint64_t shots, std::uint64_t master_seed, const SimulationOptions& options) {
  if (circuits.empty()) throw std::invalid_argument("simulate_survival: empty circuit list");
  if (shots == 0) throw std::invalid_argument("simulate_survival: shots must be >= 1");
  noise.validate();
  if (options.backend == Backend::kStabilizer && !noise.is_pauli()) {
    throw std::invalid_argument("stabilizer backend requires Pauli-stochastic noise; use the dense backend");
  }
  DecayDataset data;
  data.n_qubits = circuits.front().n_qubits;
  std::vector<ShotRecord> records(circuits.size());
  detail::parallel_for(circuits.size(), options.jobs, [&](std::size_t i) {
    records[i] = simulate_one(circuits[i], noise, shots, master_seed, i, options.backend);
  });
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (circuits[i].n_qubits != data.n_qubits) throw std::invalid_argument("simulate_survival: mixed qubit counts");
    data.entries.push_back({circuits[i].length, i, records[i].shots, records[i].successes, circuits[i].seed});
  }
  return data;
}

DecayDataset simulate_survival(std::span<const MirrorCircuitSpec> specs, const NoiseModel& noise,
                               std::uint64_t shots, std::uint64_t master_seed, const SimulationOptions& options) {
  if (specs.empty()) throw std::invalid_argument("simulate_survival: empty spec list");
  std::vector<CompiledCircuit> circuits(specs.size());
  detail::parallel_for(specs.size(), options.jobs, [&](std::size_t i) { circuits[i] = build_mirror_circuit(specs[i]); });
  return simulate_compiled(circuits, noise, shots, master_seed, options);
}

}  // namespace mirbench
