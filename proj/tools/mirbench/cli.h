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

#ifndef MIRBENCH_TOOLS_CLI_H
#define MIRBENCH_TOOLS_CLI_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirbench/simulator.h"

namespace mirbench::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kManifestName = "manifest.json";
inline constexpr const char* kOutEnvVar = "MIRBENCH_OUT";

/// Invalid user input; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Noise mini-grammar, one term per string:
///   depolarizing:<p> | pauli:<pX>,<pY>,<pZ> | amp_damp:<gamma>
/// followed by an optional target suffix: none (after every UZZ), @inverse
/// (UZZ gates of the mirrored half) or @single (after single-qubit gates).
NoiseModel parse_noise(const std::vector<std::string>& terms);

/// Comma-separated non-negative integers, e.g. "4,8,12,16".
std::vector<std::size_t> parse_size_list(const std::string& text);

/// Output directory: the flag value, else $MIRBENCH_OUT, else "mirbench_out".
std::filesystem::path resolve_out_dir(const std::string& flag);

struct GenerateConfig {
  std::size_t n = 0;
  std::vector<std::size_t> lengths;
  std::size_t circuits = 10;
  std::uint64_t seed = 0;
  bool randomize = true;
  bool qasm = false;
  std::string out;
};

struct RunConfig {
  std::size_t n = 0;
  std::vector<std::size_t> lengths;
  std::size_t circuits = 10;
  std::uint64_t shots = 100;
  std::vector<std::string> noise;
  std::uint64_t seed = 0;
  std::string backend = "stabilizer";
  std::size_t jobs = 1;
  /// Directory of circuit JSON files; when set, n/lengths/circuits are unused.
  std::string circuits_dir;
  std::string out;
};

struct FitConfig {
  std::string input;
  std::size_t resamples = 1000;
  std::uint64_t seed = 0;
  std::string out;
};

struct FramePotentialConfig {
  std::vector<std::size_t> n = {4};
  std::vector<std::size_t> lengths = {2, 4, 6, 8, 10, 12, 14, 16};
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string out;
};

struct ScatterCliConfig {
  std::size_t n = 4;
  std::size_t experiments = 50;
  double pmax = 0.01;
  std::vector<std::size_t> lengths = {4, 8, 12, 16};
  std::size_t circuits = 10;
  std::uint64_t shots = 100;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string out;
};

/// Each command validates its config (ConfigError), writes its outputs and a
/// manifest into the output directory, logs a short summary to `log`, and
/// returns an exit code. Failures to write throw std::runtime_error.
int cmd_generate(const GenerateConfig& config, std::ostream& log);
int cmd_run(const RunConfig& config, std::ostream& log);
int cmd_fit(const FitConfig& config, std::ostream& log);
int cmd_frame_potential(const FramePotentialConfig& config, std::ostream& log);
int cmd_scatter(const ScatterCliConfig& config, std::ostream& log);

/// Re-runs the command recorded in `dir`/manifest.json. Outputs go to `out`
/// when non-empty, else back into `dir`.
int cmd_replay(const std::string& dir, const std::string& out, std::ostream& log);

/// Runs `fn`, mapping ConfigError and std::invalid_argument to exit code 2 and
/// other exceptions to 3, with the message on `err`.
int guarded(const std::function<int()>& fn, std::ostream& err);

}  // namespace mirbench::cli

#endif  // MIRBENCH_TOOLS_CLI_H
