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

#include "mirbench/circuit_io.h"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mirbench {

namespace {

using nlohmann::json;

const char* half_name(CircuitHalf h) { return h == CircuitHalf::kForward ? "forward" : "inverse"; }

CircuitHalf parse_half(const std::string& s) {
  if (s == "forward") return CircuitHalf::kForward;
  if (s == "inverse") return CircuitHalf::kInverse;
  throw std::invalid_argument("circuit JSON: unknown half '" + s + "'");
}

}  // namespace

std::string circuit_to_json(const MirrorCircuitSpec& spec, const CompiledCircuit& compiled) {
  json j;
  j["version"] = kCircuitFormatVersion;
  j["n"] = spec.n_qubits;
  j["L"] = spec.length;
  j["seed"] = spec.seed;
  json layers = json::array();
  for (const LayerSpec& layer : spec.layers) {
    json cl = json::array();
    for (SingleQubitClifford c : layer.cliffords) cl.push_back(c.index());
    json m = json::array();
    for (const auto& [a, b] : layer.matching) m.push_back({a, b});
    layers.push_back({{"cliffords", cl}, {"matching", m}});
  }
  j["layers"] = layers;
  json paulis = json::array();
  for (const PauliOperator& p : spec.randomizing_paulis) paulis.push_back(p.str());
  j["randomizing_paulis"] = paulis;
  j["final_pauli"] = spec.final_pauli.str();
  json gates = json::array();
  for (const CompiledGate& g : compiled.gates) {
    if (const auto* c = std::get_if<CliffordGate>(&g.gate)) {
      gates.push_back({{"name", "C1"},
                       {"qubits", {c->qubit}},
                       {"clifford", c->clifford.index()},
                       {"half", half_name(g.half)}});
    } else {
      const UzzGate& u = std::get<UzzGate>(g.gate);
      gates.push_back({{"name", "UZZ"}, {"qubits", {u.a, u.b}}, {"half", half_name(g.half)}});
    }
  }
  j["gates"] = gates;
  j["expected_outcome"] = outcome_string(compiled.expected_outcome, compiled.n_qubits);
  return j.dump(1);
}

CircuitFile circuit_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != kCircuitFormatVersion) {
      throw std::invalid_argument("circuit JSON: unsupported version");
    }
    CircuitFile out;
    MirrorCircuitSpec& spec = out.spec;
    spec.n_qubits = j.at("n").get<std::size_t>();
    check_even_qubits(spec.n_qubits);
    spec.length = j.at("L").get<std::size_t>();
    spec.seed = j.at("seed").get<std::uint64_t>();
    for (const json& jl : j.at("layers")) {
      LayerSpec layer;
      for (const json& c : jl.at("cliffords")) layer.cliffords.emplace_back(c.get<int>());
      for (const json& pair : jl.at("matching")) {
        layer.matching.emplace_back(pair.at(0).get<std::uint32_t>(), pair.at(1).get<std::uint32_t>());
      }
      spec.layers.push_back(std::move(layer));
    }
    for (const json& p : j.at("randomizing_paulis")) {
      spec.randomizing_paulis.push_back(PauliOperator::from_string(p.get<std::string>()));
    }
    spec.final_pauli = PauliOperator::from_string(j.at("final_pauli").get<std::string>());

    CompiledCircuit stored;
    stored.n_qubits = spec.n_qubits;
    stored.length = spec.length;
    stored.seed = spec.seed;
    for (const json& g : j.at("gates")) {
      const std::string name = g.at("name").get<std::string>();
      const CircuitHalf half = parse_half(g.at("half").get<std::string>());
      const json& qubits = g.at("qubits");
      if (name == "C1") {
        stored.gates.push_back({CliffordGate{SingleQubitClifford(g.at("clifford").get<int>()),
                                             qubits.at(0).get<std::uint32_t>()},
                                half});
      } else if (name == "UZZ") {
        stored.gates.push_back(
            {UzzGate{qubits.at(0).get<std::uint32_t>(), qubits.at(1).get<std::uint32_t>()}, half});
      } else {
        throw std::invalid_argument("circuit JSON: unknown gate '" + name + "'");
      }
    }
    stored.expected_outcome = parse_outcome(j.at("expected_outcome").get<std::string>());

    out.compiled = build_mirror_circuit(spec);
    if (!(out.compiled == stored)) {
      throw std::invalid_argument("circuit JSON: gate list or expected outcome disagrees with the spec");
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
  }
}

void write_circuit_file(const std::filesystem::path& path, const MirrorCircuitSpec& spec,
                        const CompiledCircuit& compiled) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << circuit_to_json(spec, compiled) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

CircuitFile read_circuit_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return circuit_from_json(buffer.str());
}

std::string to_qasm(const CompiledCircuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "gate uzz a,b { cx a,b; rz(pi/2) b; cx a,b; }\n";
  std::set<int> used;
  for (const CompiledGate& g : circuit.gates) {
    if (const auto* c = std::get_if<CliffordGate>(&g.gate)) used.insert(c->clifford.index());
  }
  for (int k : used) {
    out << "gate c1_" << k << " a {";
    const std::string_view word = SingleQubitClifford(k).word();
    if (word.empty()) out << " id a;";
    for (char ch : word) out << (ch == 'H' ? " h a;" : " s a;");
    out << " }\n";
  }
  out << "qreg q[" << circuit.n_qubits << "];\n";
  out << "creg c[" << circuit.n_qubits << "];\n";
  for (const CompiledGate& g : circuit.gates) {
    if (const auto* c = std::get_if<CliffordGate>(&g.gate)) {
      out << "c1_" << c->clifford.index() << " q[" << c->qubit << "];\n";
    } else {
      const UzzGate& u = std::get<UzzGate>(g.gate);
      out << "uzz q[" << u.a << "],q[" << u.b << "];\n";
    }
  }
  for (std::size_t q = 0; q < circuit.n_qubits; ++q) {
    out << "measure q[" << q << "] -> c[" << q << "];\n";
  }
  return out.str();
}

}  // namespace mirbench
