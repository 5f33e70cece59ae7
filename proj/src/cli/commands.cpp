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

#include "qcx/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "qcx/analysis/degenerate.hpp"
#include "qcx/analysis/parallel.hpp"
#include "qcx/analysis/statistics.hpp"
#include "qcx/ensembles/rng.hpp"
#include "qcx/errors.hpp"
#include "qcx/hilbert/majorana.hpp"
#include "qcx/markers/markers.hpp"

namespace qcx::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void note(const CommandContext& ctx, const std::string& msg) {
  if (ctx.log) ctx.log(msg);
}

SweepConfig resolve_logged(const RunConfig& run, const CommandContext& ctx) {
  std::vector<std::string> warnings;
  SweepConfig config = resolve_sweep(run, warnings);
  for (const auto& w : warnings) note(ctx, "warning: " + w);
  return config;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw StoreError("cannot create output directory " + dir.string() + ": " + ec.message());
  }
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json pairs_json(const std::vector<PairCrossings>& pairs) {
  json arr = json::array();
  for (const PairCrossings& p : pairs) {
    arr.push_back({{"n1", p.n1},
                   {"n2", p.n2},
                   {"crossings", p.all},
                   {"first", optional_json(p.kept.first)},
                   {"second", optional_json(p.kept.second)},
                   {"discarded", p.kept.discarded}});
  }
  return arr;
}

std::map<MarkerId, std::map<int, SweepCurve>> by_marker(const std::map<CurveKey, SweepCurve>& c) {
  std::map<MarkerId, std::map<int, SweepCurve>> out;
  for (const auto& [key, curve] : c) out[key.first][key.second] = curve;
  return out;
}

std::vector<int> half_cut(int n) {
  std::vector<int> a(static_cast<std::size_t>(n / 2));
  std::iota(a.begin(), a.end(), 0);
  return a;
}

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t n = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++n;
  }
  double mean() const { return sum / static_cast<double>(n); }
  double std_error() const {
    const double m = mean();
    const double var = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
    return std::sqrt(std::max(0.0, var) / static_cast<double>(n));
  }
};

}  // namespace

SweepRunResult cmd_sweep(const RunConfig& run, const CommandContext& ctx) {
  const SweepConfig config = resolve_logged(run, ctx);
  SweepRunOptions opt;
  opt.workers = run.workers;
  opt.resume = run.resume;
  opt.stop_after = ctx.stop_after;
  opt.log = ctx.log;
  return run_store_sweep(config, run.out, opt);
}

json scaling_to_json(const ScalingResult& r) {
  json cov = json::array();
  for (int i = 0; i < 3; ++i) {
    cov.push_back({r.covariance(i, 0), r.covariance(i, 1), r.covariance(i, 2)});
  }
  json crossings = json::array();
  for (const Crossing& c : r.crossings) {
    crossings.push_back({{"n1", c.n1}, {"n2", c.n2}, {"location", c.location}});
  }
  return {{"marker", to_string(r.marker)},
          {"branch", to_string(r.branch)},
          {"crossings", crossings},
          {"fit", {{"a", r.a}, {"b", r.b}, {"c", r.c}, {"covariance", cov}}},
          {"transition", r.transition},
          {"uncertainty", optional_json(r.uncertainty)},
          {"b_clamped", r.b_clamped},
          {"c_clamped", r.c_clamped},
          {"c_pinned", r.c_pinned},
          {"rss", r.rss}};
}

json cmd_scaling(const fs::path& store, const ScalingOptions& options, const CommandContext& ctx) {
  const StoreContents s = read_store(store);
  if (!s.manifest.value("complete", false)) {
    throw StoreError("store " + store.string() + " is incomplete; finish it with --resume");
  }
  const auto curves = by_marker(aggregate(s.config, s.rows));
  const bool ground = s.config.window.kind == WindowKind::GROUND_STATE;
  json out;
  out["model"] = to_string(s.config.model);
  out["window"] = s.config.window.tag();
  out["first_even_only"] = options.transitions.first_even_only;
  out["second_even_only"] = options.transitions.second_even_only;
  json results = json::array();
  for (const auto& [marker, per_n] : curves) {
    if (options.marker && *options.marker != marker) continue;
    if (per_n.size() < 2) {
      throw InsufficientDataError("scaling needs at least two sizes, store has " +
                                  std::to_string(per_n.size()));
    }
    json m;
    m["marker"] = to_string(marker);
    if (ground) {
      json extrema = json::array();
      for (const auto& [n, c] : per_n) {
        extrema.push_back({{"N", n}, {"location", extremum_location(derivative_curve(c))}});
      }
      m["extrema"] = extrema;
      try {
        m["transition"] = scaling_to_json(extremum_transition(per_n));
      } catch (const InsufficientDataError& e) {
        m["transition"] = nullptr;
        m["notes"] = {e.what()};
      }
    } else {
      const TransitionEstimate est = estimate_transitions(per_n, options.transitions);
      m["pairs_first"] = pairs_json(est.pairs_first);
      m["pairs_second"] = pairs_json(est.pairs_second);
      m["first"] = est.first ? scaling_to_json(*est.first) : json(nullptr);
      m["second"] = est.second ? scaling_to_json(*est.second) : json(nullptr);
      m["notes"] = est.notes;
      for (const auto& n : est.notes) note(ctx, to_string(marker) + ": " + n);
    }
    results.push_back(m);
  }
  if (options.marker && results.empty()) {
    throw ArgumentError("marker " + to_string(*options.marker) + " is not in the store");
  }
  out["results"] = results;
  write_file_atomic(store / kScalingFile, out.dump(2) + "\n");
  return out;
}

json cmd_pauli_spectrum(const RunConfig& run, const CommandContext& ctx) {
  RunConfig r = run;
  r.markers = MarkerSelection{true, false, false, false};
  r.samples_all = std::max(2, run.pauli_samples);
  const SweepConfig config = resolve_logged(r, ctx);
  ensure_dir(run.out);
  const double reference = run.pauli_reference.value_or(config.grid.front());

  std::string spectrum_csv(kPauliSpectrumHeader);
  spectrum_csv += '\n';
  std::string hist_csv(kHistogramHeader);
  hist_csv += '\n';
  json summary = json::array();
  const std::string model = to_string(config.model);

  for (int size : config.sizes) {
    const int n = config.reported_n(size);
    const auto states_at = [&](std::size_t param_index, double control) {
      std::vector<StateVector> states;
      run_ordered(
          static_cast<std::size_t>(run.pauli_samples), run.workers,
          [&](std::size_t s) {
            const std::uint64_t seed =
                realization_seed(config.base_seed, model_id(config.model), size, param_index, s);
            return select_eigenstates(build(config.ensemble(size, control, seed)).matrix,
                                      config.window)
                .states;
          },
          [&](std::size_t, std::vector<StateVector>& part) {
            for (auto& st : part) states.push_back(std::move(st));
            return true;
          });
      return states;
    };
    const auto ref_it = std::find(config.grid.begin(), config.grid.end(), reference);
    const std::size_t ref_index = static_cast<std::size_t>(ref_it - config.grid.begin());
    const auto ref_states = states_at(ref_index, reference);
    const PauliSpectrum ref = pauli_spectrum(ref_states, {}, run.histogram_bins, config.transform_cap);
    std::vector<double> ref_values(ref.ordered_indices.size());
    for (std::size_t k = 0; k < ref.ordered_indices.size(); ++k) {
      ref_values[ref.ordered_indices[k]] = ref.mean_sq_expectation[k];
    }
    for (std::size_t p = 0; p < config.grid.size(); ++p) {
      const double control = config.grid[p];
      const PauliSpectrum spec =
          p == ref_index ? ref
                         : pauli_spectrum(states_at(p, control), ref_values, run.histogram_bins,
                                          config.transform_cap);
      const std::string prefix = model + ',' + std::to_string(n) + ',' + format_double(control) + ',';
      for (std::size_t k = 0; k < spec.ordered_indices.size(); ++k) {
        const std::uint64_t idx = spec.ordered_indices[k];
        spectrum_csv += prefix + std::to_string(k) + ',' + std::to_string(idx) + ',' +
                        PauliString::from_flat_index(idx, n).label(n) + ',' +
                        format_double(spec.mean_sq_expectation[k]) + '\n';
      }
      for (std::size_t b = 0; b < spec.histogram.weights.size(); ++b) {
        hist_csv += prefix + format_double(spec.histogram.bin_center(b)) + ',' +
                    format_double(spec.histogram.weights[b]) + '\n';
      }
      const std::size_t dim = hilbert_dim(n);
      double diag = 0.0, total = 0.0;
      for (std::size_t k = 0; k < spec.ordered_indices.size(); ++k) {
        total += spec.mean_sq_expectation[k];
        if (spec.ordered_indices[k] < dim) diag += spec.mean_sq_expectation[k];
      }
      summary.push_back({{"N", n},
                         {"control", control},
                         {"diagonal_weight", diag / total},
                         {"reference", control == reference}});
      note(ctx, "pauli-spectrum: N=" + std::to_string(n) + " control=" + format_double(control) +
                    " diagonal weight " + format_double(diag / total));
    }
  }
  write_file_atomic(run.out / kPauliSpectrumFile, spectrum_csv);
  write_file_atomic(run.out / kHistogramFile, hist_csv);
  return {{"model", model}, {"reference", reference}, {"spectra", summary}};
}

HaarCheckReport cmd_haar_check(const RunConfig& run, const CommandContext& ctx) {
  if (run.haar_samples < 2) throw ArgumentError("haar-check needs at least 2 samples");
  ensure_dir(run.out);
  HaarCheckReport rep;
  json rows = json::array();
  for (SymmetryClass cls : run.haar_classes) {
    for (int n : run.haar_sizes) {
      if (n < 2) throw ArgumentError("haar-check needs N >= 2");
      struct Sample {
        double ipr, svn, pauli4;  // pauli4 = sum_P <P>^4 / 2^N
      };
      Moments ipr, svn, pauli4;
      const auto cut = half_cut(n);
      run_ordered(
          static_cast<std::size_t>(run.haar_samples), run.workers,
          [&](std::size_t s) {
            const std::uint64_t seed = realization_seed(
                run.base_seed, 1000 + static_cast<std::uint64_t>(cls), n, 0, s);
            const StateVector psi = sample_haar_state(n, cls, seed);
            return Sample{qcx::ipr(psi, 2), entanglement_entropy(psi, cut),
                          std::exp2(-stabilizer_renyi_entropy(psi, 2, run.transform_cap))};
          },
          [&](std::size_t, const Sample& v) {
            ipr.add(v.ipr);
            svn.add(v.svn);
            pauli4.add(v.pauli4);
            return true;
          });
      // D2 and M2 references are -log of averaged moments, so they are compared
      // with -log of the sample moment (delta-method error). Real (GOE) states
      // have different D2 and Page references; only M2 is compared for them.
      const bool complex_states = cls != SymmetryClass::GOE;
      const auto add = [&](MarkerId id, double value, double se, bool compare) {
        json row{{"class", to_string(cls)}, {"N", n},         {"marker", to_string(id)},
                 {"value", value},          {"std_error", se}, {"samples", run.haar_samples}};
        if (compare) {
          const double ref = haar_reference(id, n, cls);
          const double z = (value - ref) / se;
          row["reference"] = ref;
          row["z"] = z;
          row["within_4se"] = std::abs(z) <= 4.0;
          if (!(std::abs(z) <= 4.0)) rep.pass = false;
          note(ctx, "haar-check " + to_string(cls) + " N=" + std::to_string(n) + " " +
                        to_string(id) + ": " + format_double(value) + " reference " +
                        format_double(ref) + " z " + format_double(z));
        } else {
          row["reference"] = nullptr;
        }
        rows.push_back(row);
      };
      const auto neg_log = [&](const Moments& mo, double scale) {
        return std::pair{-std::log2(mo.mean()) / scale,
                         mo.std_error() / (mo.mean() * std::log(2.0) * scale)};
      };
      const auto [d2, d2_se] = neg_log(ipr, n);
      const auto [m2, m2_se] = neg_log(pauli4, 1.0);
      add(MarkerId::D2, d2, d2_se, complex_states);
      add(MarkerId::SVN, svn.mean(), svn.std_error(), complex_states);
      add(MarkerId::M2, m2, m2_se, true);
    }
  }
  rep.report = {{"entanglement", "half-cut, first floor(N/2) qubits"},
                {"moments", "D2 = -log2(<IPR>)/N, M2 = -log2(<sum_P <P>^4> / 2^N)"},
                {"rows", rows},
                {"pass", rep.pass}};
  write_file_atomic(run.out / kHaarCheckFile, rep.report.dump(2) + "\n");
  return rep;
}

json cmd_syk(const RunConfig& run, const CommandContext& ctx) {
  if (run.model != Model::SYK4_ISING) throw ArgumentError("syk needs model SYK4_ISING");
  RunConfig r = run;
  if (r.window.kind != WindowKind::GROUND_STATE) {
    note(ctx, "syk: using the ground-state window");
    r.window = WindowSpec::ground_state();
  }
  const SweepConfig config = resolve_logged(r, ctx);
  SweepRunOptions opt;
  opt.workers = run.workers;
  opt.resume = run.resume;
  opt.stop_after = ctx.stop_after;
  opt.log = ctx.log;
  opt.command = "syk";
  const SweepRunResult sweep_result = run_store_sweep(config, run.out, opt);
  if (!sweep_result.complete) return {{"complete", false}};

  const auto zero = std::find(config.grid.begin(), config.grid.end(), 0.0);
  const std::size_t p0 = static_cast<std::size_t>(zero - config.grid.begin());
  double lambda_plus = -1.0;
  for (double l : config.grid) {
    if (l > 0.0) {
      lambda_plus = l;
      break;
    }
  }

  json per_m = json::array();
  for (int m : config.sizes) {
    const int n = m / 2;
    const ComplexMatrix parity = fermion_parity(m);
    json entry{{"M", m}, {"N", n}, {"class", to_string(classify_syk_symmetry(m))}};
    json samples = json::array();
    Moments sre_min;
    for (int s = 0; s < run.degeneracy_samples; ++s) {
      const std::uint64_t seed = realization_seed(config.base_seed, model_id(config.model), m, p0,
                                                  static_cast<std::uint64_t>(s));
      const Hamiltonian h =
          build_syk_ising(m, 0.0, config.coupling_j, config.coupling_g, seed);
      const GroundManifold g = degeneracy_split(h.matrix, run.degeneracy_tolerance, &parity);
      json row{{"seed", seed}, {"multiplicity", g.multiplicity}, {"energy", g.energy}};
      if (g.multiplicity == 2 && g.parity_basis) {
        const StateVector a(n, g.parity_basis->col(0));
        const StateVector b(n, g.parity_basis->col(1));
        const DegenerateSre opt_sre = optimize_degenerate_sre(a, b, run.sre_grid, config.transform_cap);
        row["sre_min"] = opt_sre.min;
        row["sre_max"] = opt_sre.max;
        row["argmin"] = {opt_sre.theta_min, opt_sre.phi_min};
        row["argmax"] = {opt_sre.theta_max, opt_sre.phi_max};
        sre_min.add(opt_sre.min);
      } else if (g.multiplicity == 1) {
        const StateVector gs(n, g.basis.col(0));
        row["m2"] = stabilizer_renyi_entropy(gs, 2, config.transform_cap);
      }
      samples.push_back(row);
    }
    entry["lambda0"] = samples;
    if (sre_min.n > 0) entry["mean_sre_min"] = sre_min.mean();
    const auto m2_curve = sweep_result.curves.find({MarkerId::M2, n});
    if (lambda_plus > 0.0 && m2_curve != sweep_result.curves.end()) {
      const auto& c = m2_curve->second;
      const auto k = static_cast<std::size_t>(
          std::find(c.grid.begin(), c.grid.end(), lambda_plus) - c.grid.begin());
      entry["lambda_plus"] = {{"lambda", lambda_plus}, {"M2", c.mean[k]}};
    }

    const GroundManifold ising = degeneracy_split(
        build_ising_majorana(m, config.coupling_g).matrix, run.degeneracy_tolerance, &parity);
    json ising_json{{"multiplicity", ising.multiplicity}};
    if (ising.parity_basis) {
      json states = json::array();
      for (int k = 0; k < 2; ++k) {
        const StateVector st(n, ising.parity_basis->col(k));
        states.push_back({{"parity", (*ising.parity_values)[k]},
                          {"D2", fractal_dimension(st, 2)},
                          {"M2", stabilizer_renyi_entropy(st, 2, config.transform_cap)}});
      }
      ising_json["parity_states"] = states;
    }
    entry["lambda1"] = ising_json;
    note(ctx, "syk: M=" + std::to_string(m) + " class " + entry["class"].get<std::string>());
    per_m.push_back(entry);
  }
  json report{{"complete", true}, {"sizes", per_m}};
  write_file_atomic(run.out / kSykReportFile, report.dump(2) + "\n");
  return report;
}

json cmd_selfavg(const fs::path& store, const CommandContext& ctx) {
  const StoreContents s = read_store(store);
  if (!s.manifest.value("complete", false)) {
    throw StoreError("store " + store.string() + " is incomplete; finish it with --resume");
  }
  std::string csv(kSelfAvgHeader);
  csv += '\n';
  json markers = json::array();
  const std::string model = to_string(s.config.model);
  for (MarkerId id : s.config.markers.ids()) {
    std::vector<SampleGroup> groups;
    json notes = json::array();
    for (SampleGroup& g : group_rows(s.config, s.rows, id)) {
      if (std::accumulate(g.values.begin(), g.values.end(), 0.0) == 0.0) {
        notes.push_back("zero mean at control " + format_double(g.control) + ", N=" +
                        std::to_string(g.n_qubits) + "; ratio undefined");
        continue;
      }
      groups.push_back(std::move(g));
    }
    const SelfAveragingResult r = self_averaging(id, groups);
    json points = json::array();
    for (const RelativeVariance& p : r.per_point) {
      csv += model + ',' + to_string(id) + ',' + format_double(p.control) + ',' +
             std::to_string(p.n_qubits) + ',' + format_double(p.mean) + ',' +
             format_double(p.variance) + ',' + format_double(p.ratio) + ',' +
             std::to_string(p.n_samples) + '\n';
      points.push_back({{"control", p.control}, {"N", p.n_qubits}, {"ratio", p.ratio}});
    }
    json betas = json::array();
    for (const BetaFit& b : r.beta) {
      betas.push_back({{"control", b.control},
                       {"beta", optional_json(b.beta)},
                       {"std_error", optional_json(b.std_error)},
                       {"sizes", b.sizes_used}});
    }
    for (const auto& n : notes) note(ctx, to_string(id) + ": " + n.get<std::string>());
    markers.push_back({{"marker", to_string(id)}, {"points", points}, {"beta", betas},
                       {"notes", notes}});
  }
  json out{{"model", model}, {"window", s.config.window.tag()}, {"markers", markers}};
  write_file_atomic(store / kSelfAvgJsonFile, out.dump(2) + "\n");
  write_file_atomic(store / kSelfAvgCsvFile, csv);
  return out;
}

}  // namespace qcx::cli
