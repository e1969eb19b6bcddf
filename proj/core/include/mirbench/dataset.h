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

#ifndef MIRBENCH_DATASET_H
#define MIRBENCH_DATASET_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace mirbench {

/// Shot counts for one circuit.
struct ShotRecord {
  std::size_t circuit_id = 0;
  std::uint64_t shots = 0;
  std::uint64_t successes = 0;

  double rate() const { return shots == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(shots); }
  friend bool operator==(const ShotRecord&, const ShotRecord&) = default;
};

struct DatasetEntry {
  std::size_t length = 0;
  std::size_t circuit_id = 0;
  std::uint64_t shots = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;

  double rate() const { return shots == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(shots); }
  friend bool operator==(const DatasetEntry&, const DatasetEntry&) = default;
};

/// Survival data for a mirror benchmarking experiment.
struct DecayDataset {
  std::size_t n_qubits = 0;
  std::vector<DatasetEntry> entries;

  /// Distinct sequence lengths in ascending order.
  std::vector<std::size_t> lengths() const;
  /// Entries with the given length, in stored order.
  std::vector<DatasetEntry> at_length(std::size_t length) const;
  /// Mean over circuits of successes/shots at each length (ascending L).
  std::vector<double> mean_survival() const;

  friend bool operator==(const DecayDataset&, const DecayDataset&) = default;
};

/// Throws std::invalid_argument for successes > shots or zero shots.
void validate(const DecayDataset& data);

/// CSV with header `n,L,circuit_id,shots,successes,seed`.
std::string dataset_to_csv(const DecayDataset& data);
DecayDataset dataset_from_csv(const std::string& text);

std::string dataset_to_json(const DecayDataset& data);
DecayDataset dataset_from_json(const std::string& text);

/// Reads .csv or .json by extension.
DecayDataset read_dataset(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mirbench

#endif  // MIRBENCH_DATASET_H
