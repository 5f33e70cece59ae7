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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcx/analysis/sweep.hpp"
#include "qcx/symmetry.hpp"

namespace qcx::cli {

enum class Profile { FULL, DESK };

std::string to_string(Profile profile);
Profile profile_from_string(std::string_view name);

inline constexpr int kDeskDivisor = 10;
inline constexpr int kDeskMinimumSamples = 30;
inline constexpr int kDeskMaxQubits = 10;

/// Tabulated realization count for (model, window, marker, N), or nothing for
/// combinations without a table entry ("--" cells, other models). GROUND_STATE
/// windows use the "gs" rows, every other window the "bulk" rows; I2 shares
/// the D2 table. N is the reported qubit count (M/2 for SYK).
std::optional<int> tabulated_samples(Model model, WindowKind window, MarkerId marker, int n);

/// User-facing configuration of every command. Unset optionals take the
/// model-dependent defaults documented in the README.
struct RunConfig {
  Model model = Model::RP;
  std::vector<int> sizes;
  std::vector<double> grid;
  WindowSpec window = WindowSpec::central(0.2);
  MarkerSelection markers;
  /// Explicit counts override the tables: `samples_all` for everything,
  /// `samples_marker` per marker, `samples_table` per (marker, size).
  std::optional<int> samples_all;
  std::map<MarkerId, int> samples_marker;
  std::map<MarkerId, std::map<int, int>> samples_table;
  std::uint64_t base_seed = 0;
  double bandwidth = 1.0;
  double coupling_j = 1.0;
  double coupling_g = 1.0;
  int transform_cap = kDefaultTransformCap;
  Profile profile = Profile::FULL;

  int workers = 1;
  std::filesystem::path out = "qcx_out";
  bool resume = false;

  // pauli-spectrum
  std::optional<double> pauli_reference;
  int pauli_samples = 20;
  int histogram_bins = kDefaultHistogramBins;

  // haar-check
  std::vector<int> haar_sizes{6};
  std::vector<SymmetryClass> haar_classes{SymmetryClass::GUE, SymmetryClass::GOE,
                                          SymmetryClass::GSE};
  int haar_samples = 1000;

  // syk
  int degeneracy_samples = 10;
  int sre_grid = 200;
  std::optional<double> degeneracy_tolerance;
};

/// Reads the JSON schema documented in the README; unknown keys are errors.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);

/// Default sizes and grid for `model` (sizes are Majorana counts for SYK).
std::vector<int> default_sizes(Model model);
std::vector<double> default_grid(Model model);

/// start + i * step for i = 0..round((stop - start) / step).
std::vector<double> linear_grid(double start, double stop, double step);

/// Applies defaults, the profile and the tables. Every fallback or dropped size
/// is appended to `warnings`.
SweepConfig resolve_sweep(const RunConfig& run, std::vector<std::string>& warnings);

/// Canonical JSON of a resolved sweep; inverse of sweep_from_json.
nlohmann::json sweep_to_json(const SweepConfig& config);
SweepConfig sweep_from_json(const nlohmann::json& j);

/// FNV-1a 64 of the canonical JSON, as 16 hex digits.
std::string config_hash(const SweepConfig& config);

}  // namespace qcx::cli
