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

#ifndef MIRBENCH_FIT_H
#define MIRBENCH_FIT_H

#include <cstddef>
#include <span>
#include <vector>

#include "mirbench/dataset.h"

namespace mirbench {

/// Floor on per-length standard errors used as fit weights.
inline constexpr double kStdErrorFloor = 1e-4;

/// Mean survival at one sequence length.
struct DecayPoint {
  double length = 0.0;
  double mean = 0.0;
  double std_error = 0.0;
};

/// Fit of p(L) = A u^(L-1) + B with B = 1/2^n held fixed.
struct FitResult {
  std::size_t n_qubits = 0;
  double a = 0.0;
  double u = 0.0;
  double b = 0.0;
  /// Weighted residual norm sqrt(sum w r^2).
  double residual_norm = 0.0;
  /// All means equal: u is unidentifiable and reported as 1.
  bool degenerate = false;
  /// 68% bootstrap interval for u; equal to u until filled by bootstrap_ci.
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::vector<DecayPoint> points;

  double model(double length) const;
};

/// Per-length mean of successes/shots over circuits, with the binomial
/// standard error of the pooled rate at that length.
std::vector<DecayPoint> decay_points(const DecayDataset& data);

/// Weighted least squares over (A, u): grid search on u with A solved
/// linearly, refined by Levenberg-Marquardt, u clamped to [0, 1].
/// Throws std::invalid_argument for fewer than two distinct lengths.
FitResult fit_decay_curve(std::span<const DecayPoint> points, std::size_t n_qubits);

FitResult fit_decay(const DecayDataset& data);

}  // namespace mirbench

#endif  // MIRBENCH_FIT_H
