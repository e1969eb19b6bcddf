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

#ifndef MIRBENCH_BOOTSTRAP_H
#define MIRBENCH_BOOTSTRAP_H

#include <cstddef>
#include <vector>

#include "mirbench/dataset.h"
#include "mirbench/fit.h"
#include "mirbench/random.h"

namespace mirbench {

inline constexpr std::size_t kDefaultResamples = 1000;
inline constexpr double kCiLowerPercentile = 16.0;
inline constexpr double kCiUpperPercentile = 84.0;

struct BootstrapInterval {
  double u_low = 0.0;
  double u_high = 0.0;
  std::size_t resamples = 0;
};

/// Linear-interpolated percentile (0..100) of unsorted values.
double percentile(std::vector<double> values, double pct);

/// Two-level bootstrap of u: circuits at each length are resampled with
/// replacement, then each chosen circuit's successes are redrawn from a
/// binomial at its observed rate, and the curve is refit. Returns the 16th and
/// 84th percentiles. Throws std::invalid_argument for resamples < 100.
BootstrapInterval bootstrap_ci(const DecayDataset& data, std::size_t resamples, Rng& rng);

/// fit_decay plus bootstrap_ci; the interval is widened to contain u.
FitResult fit_with_bootstrap(const DecayDataset& data, std::size_t resamples, Rng& rng);

}  // namespace mirbench

#endif  // MIRBENCH_BOOTSTRAP_H
