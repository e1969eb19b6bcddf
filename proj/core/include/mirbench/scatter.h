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

#ifndef MIRBENCH_SCATTER_H
#define MIRBENCH_SCATTER_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mirbench/random.h"

namespace mirbench {

struct ScatterConfig {
  std::size_t n_qubits = 4;
  std::size_t num_experiments = 50;
  double p_max = 0.01;
  std::vector<std::size_t> lengths = {4, 8, 12, 16};
  std::size_t circuits_per_length = 10;
  std::uint64_t shots = 100;
  std::size_t jobs = 1;
};

struct ScatterRow {
  std::size_t experiment = 0;
  double p = 0.0;
  double u_true = 0.0;
  double u_est = 0.0;
};

struct ScatterSummary {
  std::size_t count = 0;
  double mean_error = 0.0;
  double std_error = 0.0;
  /// Standard error of mean_error.
  double sem = 0.0;
};

/// Per experiment: p ~ U[0, p_max], a mirror experiment with two-qubit
/// depolarizing p on the stabilizer backend, a fit, and u_true from the
/// closed form over n/2 pairs. Experiment e draws from a child seed of
/// (rng(), e), so rows do not depend on `jobs`.
std::vector<ScatterRow> scatter_experiment(const ScatterConfig& config, Rng& rng);

/// Statistics of u_est - u_true.
ScatterSummary summarize(std::span<const ScatterRow> rows);

/// CSV with header `experiment,p,u_true,u_est`.
std::string scatter_to_csv(std::span<const ScatterRow> rows);

}  // namespace mirbench

#endif  // MIRBENCH_SCATTER_H
