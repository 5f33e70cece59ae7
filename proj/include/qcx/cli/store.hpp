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
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcx/analysis/sweep.hpp"

namespace qcx::cli {

/// Output directory cannot be used, or a resume does not match the store.
class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kMarkersHeader =
    "model,N,control,sample_index,seed,window,marker,value";
inline constexpr std::string_view kCurvesHeader =
    "model,N,marker,control,mean,std_error,n_samples";
inline constexpr const char* kMarkersFile = "markers.csv";
inline constexpr const char* kCurvesFile = "curves.csv";
inline constexpr const char* kManifestFile = "manifest.json";

/// %.17g: round-trips every double.
std::string format_double(double v);

using LogFn = std::function<void(const std::string&)>;

/// Writes `text` to `path` through a temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view text);

std::string marker_row_line(const SweepConfig& config, const MarkerRow& row);

/// Parses markers.csv content. Throws StoreError on a malformed or foreign row.
std::vector<MarkerRow> parse_marker_rows(const SweepConfig& config, std::string_view text);

std::string curves_csv(const std::map<CurveKey, SweepCurve>& curves);
/// Inverse of curves_csv.
std::map<CurveKey, SweepCurve> parse_curves_csv(std::string_view text);

struct SweepRunOptions {
  int workers = 1;
  bool resume = false;
  /// Stop after this many newly computed tasks, leaving the store resumable.
  std::optional<std::size_t> stop_after;
  std::string command = "sweep";
  LogFn log;
};

struct SweepRunResult {
  std::size_t total_tasks = 0;
  std::size_t skipped_tasks = 0;   // already in the store on resume
  std::size_t computed_tasks = 0;
  bool complete = false;
  std::map<CurveKey, SweepCurve> curves;  // empty unless complete
};

/// Runs a sweep into `dir` (markers.csv, curves.csv, manifest.json).
///
/// Rows are appended in canonical task order, so the file is a prefix of the
/// final output at every moment. With `resume`, the manifest's config hash
/// must match; complete tasks already in markers.csv are kept and a partial
/// trailing task is cut off before computing the rest. Without `resume`
/// existing outputs are replaced.
SweepRunResult run_store_sweep(const SweepConfig& config, const std::filesystem::path& dir,
                               const SweepRunOptions& options = {});

/// Writes a complete store from precomputed rows (any order); returns the curves.
std::map<CurveKey, SweepCurve> write_store(const SweepConfig& config,
                                           const std::filesystem::path& dir,
                                           std::vector<MarkerRow> rows,
                                           const std::string& command = "import");

struct StoreContents {
  SweepConfig config;
  nlohmann::json manifest;
  std::vector<MarkerRow> rows;
};

/// Loads a store written by run_store_sweep.
StoreContents read_store(const std::filesystem::path& dir);

}  // namespace qcx::cli
