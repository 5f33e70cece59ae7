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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcx/analysis/window.hpp"
#include "qcx/ensembles/ensembles.hpp"
#include "qcx/markers/markers.hpp"

namespace qcx {

/// Realizations per (marker, size). Sizes missing from a marker's table fall
/// back to `fallback`.
struct SampleCounts {
  std::map<MarkerId, std::map<int, int>> table;
  int fallback = 0;

  int count(MarkerId marker, int size) const;
  void set(MarkerId marker, int size, int count) { table[marker][size] = count; }
  /// Same count for every marker and size.
  static SampleCounts uniform(int count);
};

/// Everything that determines the realizations of a sweep.
struct SweepConfig {
  Model model = Model::RP;
  /// Qubit counts, or Majorana counts for SYK4_ISING.
  std::vector<int> sizes;
  /// Control values (gamma, alpha or lambda), strictly ascending.
  std::vector<double> grid;
  WindowSpec window;
  MarkerSelection markers;
  SampleCounts samples;
  std::uint64_t base_seed = 0;
  double bandwidth = 1.0;
  double coupling_j = 1.0;
  double coupling_g = 1.0;
  int transform_cap = kDefaultTransformCap;

  void validate() const;
  EnsembleSpec ensemble(int size, double control, std::uint64_t seed) const;
  /// N reported in output files: M/2 for SYK4_ISING, the size otherwise.
  int reported_n(int size) const;
};

/// One disorder realization: a Hamiltonian, its window, and the markers whose
/// sample count exceeds sample_index.
struct RealizationTask {
  int size = 0;
  std::size_t param_index = 0;
  std::size_t sample_index = 0;
  std::uint64_t seed = 0;
  MarkerSelection markers;
};

/// Tasks in canonical (size, param_index, sample_index) order.
std::vector<RealizationTask> enumerate_tasks(const SweepConfig& config);

/// Builds, diagonalizes and evaluates one realization; markers are averaged
/// over the window. Failures are rethrown as RealizationError naming the seed.
MarkerRecord compute_realization(const SweepConfig& config, const RealizationTask& task);

/// One persisted value: the row unit of markers.csv.
struct MarkerRow {
  int size = 0;
  std::size_t param_index = 0;
  std::size_t sample_index = 0;
  std::uint64_t seed = 0;
  MarkerId marker = MarkerId::D2;
  double value = 0.0;
};

std::vector<MarkerRow> rows_of(const RealizationTask& task, const MarkerRecord& record);

struct SweepCurve {
  Model model = Model::RP;
  MarkerId marker = MarkerId::D2;
  /// Reported N (M/2 for SYK).
  int n_qubits = 0;
  std::vector<double> grid;
  std::vector<double> mean;
  std::vector<double> std_error;
  std::vector<int> n_samples;

  void validate() const;
};

using CurveKey = std::pair<MarkerId, int>;  // (marker, reported N)

/// Per grid point mean and standard error (sample sd / sqrt(n)) of the
/// realization-level values. Rows are sorted canonically first, so the result
/// does not depend on their order.
std::map<CurveKey, SweepCurve> aggregate(const SweepConfig& config, std::vector<MarkerRow> rows);

/// Runs every task on `workers` threads and aggregates.
std::map<CurveKey, SweepCurve> sweep(const SweepConfig& config, int workers = 1);

/// Raw rows of a sweep, canonical order.
std::vector<MarkerRow> sweep_rows(const SweepConfig& config, int workers = 1);

}  // namespace qcx
