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

#ifndef MIRBENCH_FRAME_POTENTIAL_H
#define MIRBENCH_FRAME_POTENTIAL_H

#include <cstddef>
#include <span>
#include <vector>

#include "mirbench/random.h"

namespace mirbench {

/// Monte-Carlo estimate of the second frame potential E|Tr U|^4.
struct FramePotentialEstimate {
  std::size_t n_qubits = 0;
  std::size_t length = 0;
  std::size_t samples = 0;
  double phi2 = 0.0;
  /// Standard error of the mean.
  double std_error = 0.0;
};

/// Averages |Tr U^(L)|^4 over `samples` products of L random layers (single
/// qubit Cliffords, random matching, UZZ on every pair). Throws
/// std::invalid_argument for odd n, n > 8 or samples < 2.
FramePotentialEstimate frame_potential(std::size_t n_qubits, std::size_t length, std::size_t samples, Rng& rng,
                                       std::size_t jobs = 1);

/// One estimate per length; each sample is a single sequence whose prefixes
/// supply every length, so estimates at different L are correlated.
std::vector<FramePotentialEstimate> frame_potential_curve(std::size_t n_qubits,
                                                          std::span<const std::size_t> lengths,
                                                          std::size_t samples, Rng& rng, std::size_t jobs = 1);

}  // namespace mirbench

#endif  // MIRBENCH_FRAME_POTENTIAL_H
