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

#include "mirbench/frame_potential.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mirbench/circuit.h"
#include "mirbench/dense.h"
#include "parallel.h"

namespace mirbench {

std::vector<FramePotentialEstimate> frame_potential_curve(std::size_t n_qubits,
                                                          std::span<const std::size_t> lengths,
                                                          std::size_t samples, Rng& rng, std::size_t jobs) {
  if (n_qubits > kMaxDenseQubits) {
    throw std::invalid_argument("frame potential: at most 8 qubits, got " + std::to_string(n_qubits));
  }
  check_even_qubits(n_qubits);
  if (samples < 2) throw std::invalid_argument("frame potential: need at least 2 samples");
  if (lengths.empty()) throw std::invalid_argument("frame potential: empty length list");
  const std::size_t max_length = *std::max_element(lengths.begin(), lengths.end());
  const auto d = Eigen::Index{1} << n_qubits;

  // values[s][L] = |Tr U^(L)|^4 for sample s.
  std::vector<std::vector<double>> values(samples, std::vector<double>(max_length + 1));
  const std::uint64_t base = rng();
  detail::parallel_for(samples, jobs, [&](std::size_t s) {
    Rng local(derive_seed(base, {s}));
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
    values[s][0] = std::pow(static_cast<double>(d), 4);
    for (std::size_t l = 1; l <= max_length; ++l) {
      for (const Gate& g : layer_gates(sample_layer(local, n_qubits))) apply_gate(u, g);
      values[s][l] = std::pow(std::norm(u.trace()), 2);
    }
  });

  std::vector<FramePotentialEstimate> out;
  for (std::size_t length : lengths) {
    double mean = 0.0;
    for (std::size_t s = 0; s < samples; ++s) mean += values[s][length];
    mean /= static_cast<double>(samples);
    double var = 0.0;
    for (std::size_t s = 0; s < samples; ++s) var += (values[s][length] - mean) * (values[s][length] - mean);
    var /= static_cast<double>(samples - 1);
    out.push_back({n_qubits, length, samples, mean, std::sqrt(var / static_cast<double>(samples))});
  }
  return out;
}

FramePotentialEstimate frame_potential(std::size_t n_qubits, std::size_t length, std::size_t samples, Rng& rng,
                                       std::size_t jobs) {
  const std::size_t lengths[] = {length};
  return frame_potential_curve(n_qubits, lengths, samples, rng, jobs).front();
}

}  // namespace mirbench
