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

#include "qcx/analysis/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "qcx/analysis/parallel.hpp"
#include "qcx/ensembles/rng.hpp"
#include "qcx/errors.hpp"

namespace qcx {

int SampleCounts::count(MarkerId marker, int size) const {
  const auto m = table.find(marker);
  if (m == table.end()) return fallback;
  const auto c = m->second.find(size);
  return c == m->second.end() ? fallback : c->second;
}

SampleCounts SampleCounts::uniform(int count) {
  SampleCounts s;
  s.fallback = count;
  return s;
}

void SweepConfig::validate() const {
  if (sizes.empty()) throw ArgumentError("sweep needs at least one system size");
  if (grid.empty()) throw ArgumentError("sweep needs at least one control value");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw ArgumentError("control grid must be strictly ascending");
  }
  if (markers.ids().empty()) throw ArgumentError("sweep needs at least one marker");
  window.validate();
  for (int size : sizes) {
    for (MarkerId id : markers.ids()) {
      if (samples.count(id, size) < 2) {
        throw ArgumentError("sample count for " + to_string(id) + " at size " +
                            std::to_string(size) + " is below 2");
      }
    }
    for (double c : grid) ensemble(size, c, 0).validate();
  }
}

EnsembleSpec SweepConfig::ensemble(int size, double control, std::uint64_t seed) const {
  EnsembleSpec spec;
  spec.model = model;
  spec.size = size;
  spec.control = control;
  spec.bandwidth = bandwidth;
  spec.coupling_j = coupling_j;
  spec.coupling_g = coupling_g;
  spec.seed = seed;
  return spec;
}

int SweepConfig::reported_n(int size) const {
  return model == Model::SYK4_ISING ? size / 2 : size;
}

std::vector<RealizationTask> enumerate_tasks(const SweepConfig& config) {
  config.validate();
  std::vector<RealizationTask> tasks;
  const auto ids = config.markers.ids();
  for (int size : config.sizes) {
    int most = 0;
    for (MarkerId id : ids) most = std::max(most, config.samples.count(id, size));
    for (std::size_t p = 0; p < config.grid.size(); ++p) {
      for (int s = 0; s < most; ++s) {
        RealizationTask t;
        t.size = size;
        t.param_index = p;
        t.sample_index = static_cast<std::size_t>(s);
        t.seed = realization_seed(config.base_seed, model_id(config.model), size, p,
                                  t.sample_index);
        t.markers = MarkerSelection{false, false, false, false};
        for (MarkerId id : ids) t.markers.set(id, s < config.samples.count(id, size));
        tasks.push_back(t);
      }
    }
  }
  return tasks;
}

MarkerRecord compute_realization(const SweepConfig& config, const RealizationTask& task) {
  try {
    const EnsembleSpec spec =
        config.ensemble(task.size, config.grid.at(task.param_index), task.seed);
    const Hamiltonian h = build(spec);
    const SelectedStates sel = select_eigenstates(h.matrix, config.window);
    MarkerRecord avg;
    avg.n_qubits = spec.n_qubits();
    avg.window_tag = config.window.tag();
    avg.seed = task.seed;
    avg.eigen_index_range = {sel.range.first, sel.range.first + sel.range.count};
    const auto ids = task.markers.ids();
    for (MarkerId id : ids) avg.set(id, 0.0);
    for (const StateVector& state : sel.states) {
      const MarkerRecord r = evaluate_markers(state, task.markers, config.transform_cap);
      r.check_ranges();
      for (MarkerId id : ids) avg.set(id, avg.value(id) + r.value(id));
    }
    const double inv = 1.0 / static_cast<double>(sel.states.size());
    for (MarkerId id : ids) avg.set(id, avg.value(id) * inv);
    return avg;
  } catch (const std::exception& e) {
    throw RealizationError("realization failed (model " + to_string(config.model) + ", size " +
                               std::to_string(task.size) + ", control index " +
                               std::to_string(task.param_index) + ", sample " +
                               std::to_string(task.sample_index) + ", seed " +
                               std::to_string(task.seed) + "): " + e.what(),
                           task.seed);
  }
}

std::vector<MarkerRow> rows_of(const RealizationTask& task, const MarkerRecord& record) {
  std::vector<MarkerRow> rows;
  for (MarkerId id : task.markers.ids()) {
    rows.push_back({task.size, task.param_index, task.sample_index, task.seed, id, record.value(id)});
  }
  return rows;
}

void SweepCurve::validate() const {
  const std::size_t n = grid.size();
  if (mean.size() != n || std_error.size() != n || n_samples.size() != n) {
    throw DimensionError("sweep curve columns have different lengths");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(grid[i] > grid[i - 1])) throw ArgumentError("sweep curve grid is not strictly ascending");
  }
  for (double se : std_error) {
    if (se < 0.0) throw ArgumentError("negative standard error");
  }
}

std::map<CurveKey, SweepCurve> aggregate(const SweepConfig& config, std::vector<MarkerRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const MarkerRow& a, const MarkerRow& b) {
    return std::tie(a.size, a.param_index, a.sample_index, a.marker) <
           std::tie(b.size, b.param_index, b.sample_index, b.marker);
  });
  struct Acc {
    std::vector<double> values;
  };
  std::map<std::tuple<MarkerId, int, std::size_t>, Acc> groups;
  for (const MarkerRow& r : rows) {
    if (r.param_index >= config.grid.size()) throw ArgumentError("row control index out of range");
    groups[{r.marker, r.size, r.param_index}].values.push_back(r.value);
  }
  std::map<CurveKey, SweepCurve> curves;
  for (const auto& [key, acc] : groups) {
    const auto& [marker, size, p] = key;
    SweepCurve& c = curves[{marker, config.reported_n(size)}];
    if (c.grid.empty()) {
      c.model = config.model;
      c.marker = marker;
      c.n_qubits = config.reported_n(size);
    }
    const auto n = static_cast<double>(acc.values.size());
    double mean = 0.0;
    for (double v : acc.values) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : acc.values) var += (v - mean) * (v - mean);
    const double se = acc.values.size() > 1 ? std::sqrt(var / (n - 1.0) / n)
                                            : std::numeric_limits<double>::quiet_NaN();
    c.grid.push_back(config.grid[p]);
    c.mean.push_back(mean);
    c.std_error.push_back(se);
    c.n_samples.push_back(static_cast<int>(acc.values.size()));
  }
  return curves;
}

std::vector<MarkerRow> sweep_rows(const SweepConfig& config, int workers) {
  const std::vector<RealizationTask> tasks = enumerate_tasks(config);
  std::vector<MarkerRow> rows;
  run_ordered(
      tasks.size(), workers, [&](std::size_t i) { return compute_realization(config, tasks[i]); },
      [&](std::size_t i, const MarkerRecord& r) {
        const auto part = rows_of(tasks[i], r);
        rows.insert(rows.end(), part.begin(), part.end());
        return true;
      });
  return rows;
}

std::map<CurveKey, SweepCurve> sweep(const SweepConfig& config, int workers) {
  return aggregate(config, sweep_rows(config, workers));
}

}  // namespace qcx
