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

#include "mirbench/scatter.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "mirbench/channels.h"
#include "mirbench/circuit.h"
#include "mirbench/fit.h"
#include "mirbench/simulator.h"
#include "parallel.h"

namespace mirbench {

std::vector<ScatterRow> scatter_experiment(const ScatterConfig& config, Rng& rng) {
  check_even_qubits(config.n_qubits);
  if (!(config.p_max >= 0.0 && config.p_max <= 1.0)) throw std::invalid_argument("scatter: p_max must be in [0, 1]");
  if (config.lengths.size() < 2) throw std::invalid_argument("scatter: need at least two lengths");
  if (config.circuits_per_length == 0 || config.shots == 0) {
    throw std::invalid_argument("scatter: circuits and shots must be >= 1");
  }
  const int n_pairs = static_cast<int>(config.n_qubits / 2);
  std::vector<ScatterRow> rows(config.num_experiments);
  const std::uint64_t base = rng();
  detail::parallel_for(config.num_experiments, config.jobs, [&](std::size_t e) {
    Rng local(derive_seed(base, {e}));
    const double p = config.p_max * uniform_unit(local);
    const std::vector<MirrorCircuitSpec> specs =
        sample_experiment(local, config.n_qubits, config.lengths, config.circuits_per_length);
    NoiseModel noise;
    noise.two_qubit = Depolarizing{p};
    const DecayDataset data = simulate_survival(specs, noise, config.shots, local());
    rows[e] = {e, p, depolarizing_tensor_unitarity(p, n_pairs), fit_decay(data).u};
  });
  return rows;
}

ScatterSummary summarize(std::span<const ScatterRow> rows) {
  ScatterSummary s;
  s.count = rows.size();
  if (rows.empty()) return s;
  for (const ScatterRow& r : rows) s.mean_error += r.u_est - r.u_true;
  s.mean_error /= static_cast<double>(rows.size());
  if (rows.size() < 2) return s;
  double var = 0.0;
  for (const ScatterRow& r : rows) {
    const double d = r.u_est - r.u_true - s.mean_error;
    var += d * d;
  }
  var /= static_cast<double>(rows.size() - 1);
  s.std_error = std::sqrt(var);
  s.sem = s.std_error / std::sqrt(static_cast<double>(rows.size()));
  return s;
}

std::string scatter_to_csv(std::span<const ScatterRow> rows) {
  std::ostringstream out;
  out << "experiment,p,u_true,u_est\n";
  char buf[128];
  for (const ScatterRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g\n", r.experiment, r.p, r.u_true, r.u_est);
    out << buf;
  }
  return out.str();
}

}  // namespace mirbench
