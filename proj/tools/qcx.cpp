// Copyright 2026 The qcomplex Authors
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

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcx/cli/commands.hpp"
#include "qcx/errors.hpp"

namespace {

using namespace qcx;
using namespace qcx::cli;

constexpr int kExitError = 1;
constexpr int kExitIncomplete = 3;
constexpr int kExitHaarMismatch = 4;

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::string> out;
  bool resume = false;
  std::optional<std::string> profile;
  std::optional<std::string> model;
  std::vector<int> sizes;
  std::optional<std::string> grid;
  std::optional<std::string> window;
  std::vector<std::string> markers;
  std::optional<int> samples;
  std::optional<std::size_t> stop_after;
  bool quiet = false;
};

RunConfig assemble(const Overrides& o) {
  RunConfig run = o.config.empty() ? RunConfig{} : load_config(o.config);
  if (o.seed) run.base_seed = *o.seed;
  if (o.workers) run.workers = *o.workers;
  if (o.out) run.out = *o.out;
  run.resume = run.resume || o.resume;
  if (o.profile) run.profile = profile_from_string(*o.profile);
  if (o.model) run.model = model_from_string(*o.model);
  if (!o.sizes.empty()) run.sizes = o.sizes;
  if (o.grid) {
    double a = 0, b = 0, step = 0;
    if (std::sscanf(o.grid->c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3) {
      throw ArgumentError("--grid expects start:stop:step");
    }
    run.grid = linear_grid(a, b, step);
  }
  if (o.window) run.window = WindowSpec::parse(*o.window);
  if (!o.markers.empty()) {
    run.markers = MarkerSelection{false, false, false, false};
    for (const auto& m : o.markers) run.markers.set(marker_from_string(m), true);
  }
  if (o.samples) run.samples_all = *o.samples;
  if (run.workers < 1) throw ArgumentError("--workers must be >= 1");
  return run;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcx: complexity markers of disordered quantum Hamiltonians"};
  app.set_version_flag("--version", QCX_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", o.seed, "base seed");
  app.add_option("--workers", o.workers, "worker threads");
  app.add_option("--out", o.out, "output directory (store)");
  app.add_flag("--resume", o.resume, "continue an interrupted run in --out");
  app.add_option("--profile", o.profile, "sample-count profile: full or desk");
  app.add_option("--model", o.model, "RP, PLRBM, SYK4_ISING, GOE, GUE or GSE");
  app.add_option("--sizes", o.sizes, "qubit counts (Majorana counts for SYK4_ISING)");
  app.add_option("--grid", o.grid, "control grid start:stop:step");
  app.add_option("--window", o.window, "ground, central:<f> or lower:<k>");
  app.add_option("--markers", o.markers, "D2, I2, SVN, M2");
  app.add_option("--samples", o.samples, "realizations per (N, control) for every marker");
  app.add_option("--stop-after", o.stop_after)->group("");
  app.add_flag("--quiet", o.quiet, "no progress messages");

  auto* sweep = app.add_subcommand("sweep", "disorder-averaged marker sweep");
  auto* scaling = app.add_subcommand("scaling", "transition extraction from a store");
  std::string scaling_store;
  std::optional<std::string> scaling_marker;
  bool first_all = false, second_even = false;
  scaling->add_option("--store", scaling_store, "store directory (defaults to --out)");
  scaling->add_option("--marker", scaling_marker, "restrict to one marker");
  scaling->add_flag("--first-all-n", first_all, "use odd N for the first transition too");
  scaling->add_flag("--second-even-only", second_even, "use even N only for the second transition");
  auto* pauli = app.add_subcommand("pauli-spectrum", "averaged Pauli spectra and histograms");
  std::optional<double> reference;
  pauli->add_option("--reference", reference, "control value that fixes the ordering");
  auto* haar = app.add_subcommand("haar-check", "Haar-state markers against analytic values");
  std::vector<int> haar_sizes;
  std::vector<std::string> haar_classes;
  std::optional<int> haar_samples;
  haar->add_option("--haar-sizes", haar_sizes, "qubit counts");
  haar->add_option("--classes", haar_classes, "GOE, GUE, GSE");
  haar->add_option("--haar-samples", haar_samples, "states per (class, N)");
  auto* syk = app.add_subcommand("syk", "SYK4+Ising ground-state sweep and degeneracy report");
  auto* selfavg = app.add_subcommand("selfavg", "self-averaging exponents from a store");
  std::string selfavg_store;
  selfavg->add_option("--store", selfavg_store, "store directory (defaults to --out)");

  CLI11_PARSE(app, argc, argv);

  CommandContext ctx;
  ctx.stop_after = o.stop_after;
  if (!o.quiet) ctx.log = [](const std::string& msg) { std::cerr << "[qcx] " << msg << "\n"; };

  try {
    RunConfig run = assemble(o);
    if (*sweep) {
      const SweepRunResult r = cmd_sweep(run, ctx);
      if (!r.complete) return kExitIncomplete;
      if (ctx.log) {
        ctx.log("sweep: " + std::to_string(r.computed_tasks) + " computed, " +
                std::to_string(r.skipped_tasks) + " reused, " + std::to_string(r.total_tasks) +
                " total");
      }
    } else if (*scaling) {
      ScalingOptions opt;
      if (scaling_marker) opt.marker = marker_from_string(*scaling_marker);
      opt.transitions.first_even_only = !first_all;
      opt.transitions.second_even_only = second_even;
      const auto out = cmd_scaling(scaling_store.empty() ? run.out : std::filesystem::path(scaling_store), opt, ctx);
      std::cout << out.dump(2) << "\n";
    } else if (*pauli) {
      if (reference) run.pauli_reference = *reference;
      cmd_pauli_spectrum(run, ctx);
    } else if (*haar) {
      if (!haar_sizes.empty()) run.haar_sizes = haar_sizes;
      if (!haar_classes.empty()) {
        run.haar_classes.clear();
        for (const auto& c : haar_classes) run.haar_classes.push_back(symmetry_class_from_string(c));
      }
      if (haar_samples) run.haar_samples = *haar_samples;
      const HaarCheckReport rep = cmd_haar_check(run, ctx);
      std::cout << rep.report.dump(2) << "\n";
      if (!rep.pass) return kExitHaarMismatch;
    } else if (*syk) {
      if (!o.model && o.config.empty()) run.model = Model::SYK4_ISING;
      const auto rep = cmd_syk(run, ctx);
      if (!rep.value("complete", false)) return kExitIncomplete;
    } else if (*selfavg) {
      const auto out = cmd_selfavg(selfavg_store.empty() ? run.out : std::filesystem::path(selfavg_store), ctx);
      std::cout << out.dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "qcx: error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
