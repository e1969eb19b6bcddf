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

#include "mirbench/bootstrap.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mirbench {

double percentile(std::vector<double> values, double pct) {
  if (values.empty()) throw std::invalid_argument("percentile: empty input");
  std::sort(values.begin(), values.end());
  const double pos = std::clamp(pct, 0.0, 100.0) / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

BootstrapInterval bootstrap_ci(const DecayDataset& data, std::size_t resamples, Rng& rng) {
  if (resamples < 100) throw std::invalid_argument("bootstrap: need at least 100 resamples");
  validate(data);
  std::vector<std::vector<DatasetEntry>> groups;
  for (std::size_t length : data.lengths()) groups.push_back(data.at_length(length));

  std::vector<double> us;
  us.reserve(resamples);
  DecayDataset sample;
  sample.n_qubits = data.n_qubits;
  for (std::size_t r = 0; r < resamples; ++r) {
    sample.entries.clear();
    for (const auto& group : groups) {
      for (std::size_t k = 0; k < group.size(); ++k) {
        DatasetEntry e = group[uniform_index(rng, group.size())];
        std::binomial_distribution<std::uint64_t> binom(e.shots, e.rate());
        e.successes = binom(rng);
        sample.entries.push_back(e);
      }
    }
    us.push_back(fit_decay(sample).u);
  }
  return {percentile(us, kCiLowerPercentile), percentile(us, kCiUpperPercentile), resamples};
}

FitResult fit_with_bootstrap(const DecayDataset& data, std::size_t resamples, Rng& rng) {
  FitResult fit = fit_decay(data);
  const BootstrapInterval ci = bootstrap_ci(data, resamples, rng);
  fit.ci_low = std::min(ci.u_low, fit.u);
  fit.ci_high = std::max(ci.u_high, fit.u);
  return fit;
}

}  // namespace mirbench
