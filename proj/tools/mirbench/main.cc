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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.h"

namespace {

using namespace mirbench::cli;

void add_lengths(CLI::App* app, std::string* text, const char* fallback) {
  app->add_option("--lengths", *text, "Comma-separated sequence lengths")->default_val(fallback);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirror benchmarking of a random UZZ gate set"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  GenerateConfig gen;
  std::string gen_lengths;
  auto* generate = app.add_subcommand("generate", "Write mirror circuits as JSON (and optionally QASM)");
  generate->add_option("--n", gen.n, "Number of qubits (even)")->required();
  add_lengths(generate, &gen_lengths, "4,8,12,16");
  generate->add_option("--circuits", gen.circuits, "Circuits per length")->default_val(10);
  generate->add_option("--seed", gen.seed, "Master seed")->default_val(0);
  generate->add_flag("!--no-randomize", gen.randomize, "Disable Pauli randomization");
  generate->add_flag("--qasm", gen.qasm, "Also write OpenQASM 2 files");
  generate->add_option("--out", gen.out, "Output directory");

  RunConfig run;
  std::string run_lengths;
  auto* run_cmd = app.add_subcommand("run", "Simulate mirror circuits and record survival counts");
  run_cmd->add_option("--n", run.n, "Number of qubits (even)");
  add_lengths(run_cmd, &run_lengths, "4,8,12,16");
  run_cmd->add_option("--circuits", run.circuits, "Circuits per length")->default_val(10);
  run_cmd->add_option("--circuits-dir", run.circuits_dir, "Directory of circuit JSON files from generate");
  run_cmd->add_option("--shots", run.shots, "Shots per circuit")->default_val(100);
  run_cmd->add_option("--noise", run.noise, "Noise term, repeatable: depolarizing:<p>, pauli:<pX>,<pY>,<pZ>, "
                                            "amp_damp:<gamma>, optional @inverse or @single suffix");
  run_cmd->add_option("--seed", run.seed, "Master seed")->default_val(0);
  run_cmd->add_option("--backend", run.backend, "stabilizer or dense")->default_val("stabilizer");
  run_cmd->add_option("--jobs", run.jobs, "Worker threads")->default_val(1);
  run_cmd->add_option("--out", run.out, "Output directory");

  FitConfig fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit p(L) = A u^(L-1) + 1/2^n with a bootstrap interval");
  fit_cmd->add_option("--input", fit.input, "dataset.csv or dataset.json")->required();
  fit_cmd->add_option("--resamples", fit.resamples, "Bootstrap resamples (0 disables)")->default_val(1000);
  fit_cmd->add_option("--seed", fit.seed, "Bootstrap seed")->default_val(0);
  fit_cmd->add_option("--out", fit.out, "Output directory");

  FramePotentialConfig fp;
  std::string fp_n = "4";
  std::string fp_lengths;
  bool fp_long = false;
  auto* fp_cmd = app.add_subcommand("frame-potential", "Estimate the two-design frame potential versus depth");
  fp_cmd->add_option("--n", fp_n, "Comma-separated qubit counts")->default_val("4");
  add_lengths(fp_cmd, &fp_lengths, "2,4,6,8,10,12,14,16");
  fp_cmd->add_option("--samples", fp.samples, "Pairs per point")->default_val(1000);
  fp_cmd->add_option("--seed", fp.seed, "Master seed")->default_val(0);
  fp_cmd->add_option("--jobs", fp.jobs, "Worker threads")->default_val(1);
  fp_cmd->add_flag("--long", fp_long, "Use n = 4,6,8");
  fp_cmd->add_option("--out", fp.out, "Output directory");

  ScatterCliConfig sc;
  std::string sc_lengths;
  auto* sc_cmd = app.add_subcommand("scatter", "Estimated versus true unitarity under random depolarizing noise");
  sc_cmd->add_option("--n", sc.n, "Number of qubits (even)")->default_val(4);
  sc_cmd->add_option("--experiments", sc.experiments, "Number of experiments")->default_val(50);
  sc_cmd->add_option("--pmax", sc.pmax, "p drawn from U[0, pmax]")->default_val(0.01);
  add_lengths(sc_cmd, &sc_lengths, "4,8,12,16");
  sc_cmd->add_option("--circuits", sc.circuits, "Circuits per length")->default_val(10);
  sc_cmd->add_option("--shots", sc.shots, "Shots per circuit")->default_val(100);
  sc_cmd->add_option("--seed", sc.seed, "Master seed")->default_val(0);
  sc_cmd->add_option("--jobs", sc.jobs, "Worker threads")->default_val(1);
  sc_cmd->add_option("--out", sc.out, "Output directory");

  std::string replay_dir, replay_out;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in an output directory's manifest");
  replay->add_option("dir", replay_dir, "Directory holding manifest.json")->required();
  replay->add_option("--out", replay_out, "Write outputs here instead of back into dir");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  return guarded(
      [&]() -> int {
        if (generate->parsed()) {
          gen.lengths = parse_size_list(gen_lengths);
          return cmd_generate(gen, std::cout);
        }
        if (run_cmd->parsed()) {
          if (run.circuits_dir.empty()) {
            if (run.n == 0) throw ConfigError("run needs --n or --circuits-dir");
            run.lengths = parse_size_list(run_lengths);
          }
          return cmd_run(run, std::cout);
        }
        if (fit_cmd->parsed()) return cmd_fit(fit, std::cout);
        if (fp_cmd->parsed()) {
          fp.n = parse_size_list(fp_long ? std::string("4,6,8") : fp_n);
          fp.lengths = parse_size_list(fp_lengths);
          return cmd_frame_potential(fp, std::cout);
        }
        if (sc_cmd->parsed()) {
          sc.lengths = parse_size_list(sc_lengths);
          return cmd_scatter(sc, std::cout);
        }
        return cmd_replay(replay_dir, replay_out, std::cout);
      },
      std::cerr);
}
