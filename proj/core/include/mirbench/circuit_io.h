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

#ifndef MIRBENCH_CIRCUIT_IO_H
#define MIRBENCH_CIRCUIT_IO_H

#include <filesystem>
#include <string>

#include "mirbench/circuit.h"

namespace mirbench {

inline constexpr int kCircuitFormatVersion = 1;

struct CircuitFile {
  MirrorCircuitSpec spec;
  CompiledCircuit compiled;
};

/// Circuit JSON (see docs/circuit_format.md). Output is deterministic.
std::string circuit_to_json(const MirrorCircuitSpec& spec, const CompiledCircuit& compiled);

/// Parses circuit JSON, recompiles the spec and checks that the stored gate
/// list and expected outcome agree with it. Throws std::invalid_argument on
/// malformed or inconsistent input.
CircuitFile circuit_from_json(const std::string& text);

void write_circuit_file(const std::filesystem::path& path, const MirrorCircuitSpec& spec,
                        const CompiledCircuit& compiled);
CircuitFile read_circuit_file(const std::filesystem::path& path);

/// OpenQASM 2.0 text. Every compiled gate becomes exactly one instruction:
/// `c1_<k> q[j];` for Clifford k (defined by its H/S word) and `uzz q[a],q[b];`
/// with uzz defined as cx; rz(pi/2); cx. Export only.
std::string to_qasm(const CompiledCircuit& circuit);

}  // namespace mirbench

#endif  // MIRBENCH_CIRCUIT_IO_H
