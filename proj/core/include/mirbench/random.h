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

#ifndef MIRBENCH_RANDOM_H
#define MIRBENCH_RANDOM_H

#include <cstdint>
#include <initializer_list>
#include <random>

#include "mirbench/clifford.h"
#include "mirbench/pauli.h"

namespace mirbench {

using Rng = std::mt19937_64;

/// Deterministic seed for a child stream, e.g. derive_seed(master, {circuit_id, block}).
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

/// Uniform integer in [0, n).
std::uint64_t uniform_index(Rng& rng, std::uint64_t n);

/// Uniform double in [0, 1).
double uniform_unit(Rng& rng);

SingleQubitClifford sample_clifford(Rng& rng);

/// Uniform over the 4^n phase-free Paulis.
PauliOperator sample_pauli(Rng& rng, std::size_t n_qubits);

}  // namespace mirbench

#endif  // MIRBENCH_RANDOM_H
