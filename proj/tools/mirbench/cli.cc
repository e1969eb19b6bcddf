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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "mirbench/bootstrap.h"
#include "mirbench/channels.h"
#include "mirbench/circuit.h"
#include "mirbench/circuit_io.h"
#include "mirbench/dataset.h"
#include "mirbench/dense.h"
#include "mirbench/fit.h"
#include "mirbench/frame_potential.h"
#include "mirbench/scatter.h"
#include "mirbench/svg_plot.h"

namespace mirbench::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad number '" + text + "' in " + what);
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string brief(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

fs::path prepare_out_dir(const std::string& flag, const char* command) {
  fs::path dir = flag.empty() ? resolve_out_dir("") / command : fs::path(flag);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw std::runtime_error("cannot create output directory " + dir.string());
  return dir;
}

void write_manifest(const fs::path& dir, const char* command, const json& config) {
  json m;
  m["tool"] = "mirbench";
  m["version"] = kToolVersion;
  m["command"] = command;
  m["config"] = config;
  write_text_file(dir / kManifestName, m.dump(1) + "\n");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

void check_n(std::size_t n) {
  try {
    check_even_qubits(n);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  require(n <= kMaxQubits, "n must be at most 64");
}

std::vector<MirrorCircuitSpec> experiment_specs(std::size_t n, const std::vector<std::size_t>& lengths,
                                                std::size_t circuits, std::uint64_t seed, bool randomize) {
  check_n(n);
  require(!lengths.empty(), "need at least one sequence length");
  require(circuits >= 1, "circuits per length must be >= 1");
  Rng rng(seed);
  return sample_experiment(rng, n, lengths, circuits, SpecOptions{randomize, randomize});
}

json to_json(const GenerateConfig& c) {
  return {{"n", c.n}, {"lengths", c.lengths}, {"circuits", c.circuits},
          {"seed", c.seed}, {"randomize", c.randomize}, {"qasm", c.qasm}};
}

json to_json(const RunConfig& c) {
  return {{"n", c.n},         {"lengths", c.lengths}, {"circuits", c.circuits},
          {"shots", c.shots}, {"noise", c.noise},     {"seed", c.seed},
          {"backend", c.backend}, {"jobs", c.jobs},   {"circuits_dir", c.circuits_dir}};
}

json to_json(const FitConfig& c) {
  return {{"input", c.input}, {"resamples", c.resamples}, {"seed", c.seed}};
}

json to_json(const FramePotentialConfig& c) {
  return {{"n", c.n}, {"lengths", c.lengths}, {"samples", c.samples}, {"seed", c.seed}, {"jobs", c.jobs}};
}

json to_json(const ScatterCliConfig& c) {
  return {{"n", c.n},           {"experiments", c.experiments}, {"pmax", c.pmax},
          {"lengths", c.lengths}, {"circuits", c.circuits},     {"shots", c.shots},
          {"seed", c.seed},     {"jobs", c.jobs}};
}

std::vector<fs::path> circuit_files(const fs::path& dir) {
  require(fs::is_directory(dir), "circuit directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json" && entry.path().filename() != kManifestName) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  require(!files.empty(), "no circuit JSON files in " + dir.string());
  return files;
}

}  // namespace

NoiseModel parse_noise(const std::vector<std::string>& terms) {
  NoiseModel model;
  for (const std::string& raw : terms) {
    std::string term = raw;
    std::string target;
    if (const auto at = term.find('@'); at != std::string::npos) {
      target = term.substr(at + 1);
      term = term.substr(0, at);
    }
    const auto colon = term.find(':');
    require(colon != std::string::npos, "noise term '" + raw + "' must look like kind:params");
    const std::string kind = term.substr(0, colon);
    const std::string params = term.substr(colon + 1);
    ChannelParams channel;
    if (kind == "depolarizing") {
      channel = Depolarizing{parse_double(params, raw)};
    } else if (kind == "pauli") {
      const auto parts = split(params, ',');
      require(parts.size() == 3, "pauli noise needs pX,pY,pZ in '" + raw + "'");
      channel = StochasticPauli::single_qubit(parse_double(parts[0], raw), parse_double(parts[1], raw),
                                              parse_double(parts[2], raw));
    } else if (kind == "amp_damp") {
      channel = AmplitudeDamping{parse_double(params, raw)};
    } else {
      throw ConfigError("unknown noise kind '" + kind + "' (expected depolarizing, pauli or amp_damp)");
    }
    try {
      validate(channel);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("noise term '" + raw + "': " + e.what());
    }
    std::optional<ChannelParams>* slot = nullptr;
    if (target.empty()) {
      slot = &model.two_qubit;
    } else if (target == "inverse") {
      slot = &model.inverse_half_override;
    } else if (target == "single") {
      slot = &model.single_qubit;
    } else {
      throw ConfigError("unknown noise target '@" + target + "' (expected @inverse or @single)");
    }
    require(!slot->has_value(), "noise target given twice in '" + raw + "'");
    *slot = channel;
  }
  return model;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const std::string& part : split(text, ',')) {
    require(!part.empty() && part.find_first_not_of("0123456789") == std::string::npos,
            "bad integer list '" + text + "'");
    try {
      out.push_back(std::stoull(part));
    } catch (const std::exception&) {
      throw ConfigError("integer out of range in '" + text + "'");
    }
  }
  require(!out.empty(), "empty integer list");
  return out;
}

fs::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kOutEnvVar); env != nullptr && *env != '\0') return env;
  return "mirbench_out";
}

int cmd_generate(const GenerateConfig& config, std::ostream& log) {
  const auto specs = experiment_specs(config.n, config.lengths, config.circuits, config.seed, config.randomize);
  const fs::path dir = prepare_out_dir(config.out, "generate");
  const fs::path circuits = dir / "circuits";
  fs::create_directories(circuits);
  std::size_t k = 0;
  for (const MirrorCircuitSpec& spec : specs) {
    const CompiledCircuit compiled = build_mirror_circuit(spec);
    char name[64];
    std::snprintf(name, sizeof(name), "circuit_L%03zu_c%03zu", spec.length, k % config.circuits);
    write_circuit_file(circuits / (std::string(name) + ".json"), spec, compiled);
    if (config.qasm) write_text_file(circuits / (std::string(name) + ".qasm"), to_qasm(compiled));
    ++k;
  }
  write_manifest(dir, "generate", to_json(config));
  log << "wrote " << specs.size() << " circuits to " << circuits.string() << "\n";
  return kExitOk;
}

int cmd_run(const RunConfig& config, std::ostream& log) {
  require(config.shots >= 1, "shots must be >= 1");
  require(config.jobs >= 1, "jobs must be >= 1");
  SimulationOptions options;
  options.jobs = config.jobs;
  if (config.backend == "stabilizer") {
    options.backend = Backend::kStabilizer;
  } else if (config.backend == "dense") {
    options.backend = Backend::kDense;
  } else {
    throw ConfigError("unknown backend '" + config.backend + "' (expected stabilizer or dense)");
  }
  const NoiseModel noise = parse_noise(config.noise);

  std::vector<CompiledCircuit> circuits;
  if (!config.circuits_dir.empty()) {
    for (const fs::path& file : circuit_files(config.circuits_dir)) circuits.push_back(read_circuit_file(file).compiled);
    for (const CompiledCircuit& c : circuits) {
      require(c.n_qubits == circuits.front().n_qubits, "circuit files have mixed qubit counts");
    }
  } else {
    for (const MirrorCircuitSpec& spec :
         experiment_specs(config.n, config.lengths, config.circuits, config.seed, true)) {
      circuits.push_back(build_mirror_circuit(spec));
    }
  }
  if (options.backend == Backend::kDense) {
    require(circuits.front().n_qubits <= kMaxSuperOpQubits, "dense backend supports at most 4 qubits");
  } else {
    require(noise.is_pauli(), "stabilizer backend needs Pauli noise (depolarizing or pauli); use --backend dense");
  }

  const DecayDataset data = simulate_compiled(circuits, noise, config.shots, config.seed, options);
  const fs::path dir = prepare_out_dir(config.out, "run");
  write_text_file(dir / "dataset.csv", dataset_to_csv(data));
  write_text_file(dir / "dataset.json", dataset_to_json(data) + "\n");
  write_manifest(dir, "run", to_json(config));

  const auto lengths = data.lengths();
  const auto means = data.mean_survival();
  for (std::size_t i = 0; i < lengths.size(); ++i) log << "L=" << lengths[i] << " p=" << brief(means[i]) << "\n";
  log << "wrote " << (dir / "dataset.csv").string() << "\n";
  return kExitOk;
}

int cmd_fit(const FitConfig& config, std::ostream& log) {
  require(!config.input.empty(), "fit needs --input");
  require(config.resamples == 0 || config.resamples >= 100, "resamples must be 0 or >= 100");
  const DecayDataset data = read_dataset(config.input);
  require(data.lengths().size() >= 2, "fit needs at least two distinct sequence lengths");
  FitResult fit;
  if (config.resamples > 0) {
    Rng rng(config.seed);
    fit = fit_with_bootstrap(data, config.resamples, rng);
  } else {
    fit = fit_decay(data);
  }
  const double d = std::ldexp(1.0, static_cast<int>(data.n_qubits));
  const FidelityBounds bounds = fidelity_bounds(std::clamp(fit.u, 0.0, 1.0), d);

  json j;
  j["n"] = data.n_qubits;
  j["A"] = fit.a;
  j["u"] = fit.u;
  j["B"] = fit.b;
  j["residual_norm"] = fit.residual_norm;
  j["degenerate"] = fit.degenerate;
  j["bootstrap"] = {{"resamples", config.resamples},
                    {"ci_level", 0.68},
                    {"percentiles", {kCiLowerPercentile, kCiUpperPercentile}},
                    {"u_low", fit.ci_low},
                    {"u_high", fit.ci_high}};
  j["fidelity_bounds"] = {{"lower", bounds.lower}, {"upper", bounds.upper}};
  json points = json::array();
  for (const DecayPoint& p : fit.points) points.push_back({{"L", p.length}, {"mean", p.mean}, {"std_error", p.std_error}});
  j["points"] = points;

  const fs::path dir = prepare_out_dir(config.out, "fit");
  write_text_file(dir / "fit.json", j.dump(1) + "\n");
  write_text_file(dir / "decay.svg", decay_plot(fit).render());
  write_manifest(dir, "fit", to_json(config));

  for (const DecayPoint& p : fit.points) log << "L=" << p.length << " p=" << brief(p.mean) << "\n";
  if (fit.degenerate) {
    log << "degenerate fit: all mean survivals are equal, u is unidentifiable (reported as 1)\n";
  }
  log << "A=" << brief(fit.a) << " u=" << brief(fit.u) << " CI68=[" << brief(fit.ci_low) << ", " << brief(fit.ci_high)
      << "] B=" << brief(fit.b) << "\n";
  return kExitOk;
}

int cmd_frame_potential(const FramePotentialConfig& config, std::ostream& log) {
  require(!config.n.empty() && !config.lengths.empty(), "need qubit counts and lengths");
  require(config.samples >= 2, "samples must be >= 2");
  require(config.jobs >= 1, "jobs must be >= 1");
  for (std::size_t n : config.n) {
    check_n(n);
    require(n <= kMaxDenseQubits, "frame potential supports at most 8 qubits");
  }
  std::vector<FramePotentialEstimate> all;
  for (std::size_t n : config.n) {
    Rng rng(derive_seed(config.seed, {n}));
    for (const auto& e : frame_potential_curve(n, config.lengths, config.samples, rng, config.jobs)) all.push_back(e);
  }
  std::ostringstream csv;
  csv << "n,L,samples,phi2,std_error\n";
  for (const auto& e : all) {
    csv << e.n_qubits << ',' << e.length << ',' << e.samples << ',' << fmt(e.phi2) << ',' << fmt(e.std_error) << '\n';
    log << "n=" << e.n_qubits << " L=" << e.length << " phi2=" << brief(e.phi2) << " +- " << brief(e.std_error) << "\n";
  }
  const fs::path dir = prepare_out_dir(config.out, "frame-potential");
  write_text_file(dir / "frame_potential.csv", csv.str());
  write_text_file(dir / "frame_potential.svg", frame_potential_plot(all).render());
  write_manifest(dir, "frame-potential", to_json(config));
  return kExitOk;
}

int cmd_scatter(const ScatterCliConfig& config, std::ostream& log) {
  check_n(config.n);
  require(config.experiments >= 1, "experiments must be >= 1");
  require(config.pmax >= 0.0 && config.pmax <= 1.0, "pmax must be in [0, 1]");
  require(config.lengths.size() >= 2, "need at least two lengths");
  require(config.circuits >= 1 && config.shots >= 1 && config.jobs >= 1, "circuits, shots and jobs must be >= 1");
  ScatterConfig sc;
  sc.n_qubits = config.n;
  sc.num_experiments = config.experiments;
  sc.p_max = config.pmax;
  sc.lengths = config.lengths;
  sc.circuits_per_length = config.circuits;
  sc.shots = config.shots;
  sc.jobs = config.jobs;
  Rng rng(config.seed);
  const auto rows = scatter_experiment(sc, rng);
  const ScatterSummary s = summarize(rows);

  json summary = {{"n", config.n},
                  {"experiments", s.count},
                  {"mean_error", s.mean_error},
                  {"std_error", s.std_error},
                  {"sem", s.sem}};
  const fs::path dir = prepare_out_dir(config.out, "scatter");
  write_text_file(dir / "scatter.csv", scatter_to_csv(rows));
  write_text_file(dir / "scatter_summary.json", summary.dump(1) + "\n");
  write_text_file(dir / "scatter.svg", scatter_plot(rows, config.n).render());
  write_manifest(dir, "scatter", to_json(config));
  log << "experiments=" << s.count << " mean(u_est-u_true)=" << brief(s.mean_error) << " std=" << brief(s.std_error)
      << " sem=" << brief(s.sem) << "\n";
  return kExitOk;
}

int cmd_replay(const std::string& dir, const std::string& out, std::ostream& log) {
  const fs::path manifest = fs::path(dir) / kManifestName;
  json m;
  try {
    m = json::parse(read_text_file(manifest));
  } catch (const json::exception& e) {
    throw ConfigError("bad manifest " + manifest.string() + ": " + e.what());
  }
  const std::string target = out.empty() ? dir : out;
  try {
    const std::string command = m.at("command").get<std::string>();
    const json& c = m.at("config");
    if (command == "generate") {
      GenerateConfig g;
      g.n = c.at("n");
      g.lengths = c.at("lengths").get<std::vector<std::size_t>>();
      g.circuits = c.at("circuits");
      g.seed = c.at("seed");
      g.randomize = c.at("randomize");
      g.qasm = c.at("qasm");
      g.out = target;
      return cmd_generate(g, log);
    }
    if (command == "run") {
      RunConfig r;
      r.n = c.at("n");
      r.lengths = c.at("lengths").get<std::vector<std::size_t>>();
      r.circuits = c.at("circuits");
      r.shots = c.at("shots");
      r.noise = c.at("noise").get<std::vector<std::string>>();
      r.seed = c.at("seed");
      r.backend = c.at("backend");
      r.jobs = c.at("jobs");
      r.circuits_dir = c.at("circuits_dir");
      r.out = target;
      return cmd_run(r, log);
    }
    if (command == "fit") {
      FitConfig f;
      f.input = c.at("input");
      f.resamples = c.at("resamples");
      f.seed = c.at("seed");
      f.out = target;
      return cmd_fit(f, log);
    }
    if (command == "frame-potential") {
      FramePotentialConfig f;
      f.n = c.at("n").get<std::vector<std::size_t>>();
      f.lengths = c.at("lengths").get<std::vector<std::size_t>>();
      f.samples = c.at("samples");
      f.seed = c.at("seed");
      f.jobs = c.at("jobs");
      f.out = target;
      return cmd_frame_potential(f, log);
    }
    if (command == "scatter") {
      ScatterCliConfig s;
      s.n = c.at("n");
      s.experiments = c.at("experiments");
      s.pmax = c.at("pmax");
      s.lengths = c.at("lengths").get<std::vector<std::size_t>>();
      s.circuits = c.at("circuits");
      s.shots = c.at("shots");
      s.seed = c.at("seed");
      s.jobs = c.at("jobs");
      s.out = target;
      return cmd_scatter(s, log);
    }
    throw ConfigError("manifest names unknown command '" + command + "'");
  } catch (const json::exception& e) {
    throw ConfigError("bad manifest " + manifest.string() + ": " + e.what());
  }
}

int guarded(const std::function<int()>& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace mirbench::cli
