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

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qcx/analysis/scaling.hpp"
#include "qcx/cli/config.hpp"
#include "qcx/cli/store.hpp"

namespace qcx::cli {

inline constexpr const char* kScalingFile = "scaling.json";
inline constexpr const char* kPauliSpectrumFile = "pauli_spectrum.csv";
inline constexpr const char* kHistogramFile = "histogram.csv";
inline constexpr const char* kHaarCheckFile = "haar_check.json";
inline constexpr const char* kSykReportFile = "syk_report.json";
inline constexpr const char* kSelfAvgJsonFile = "selfavg.json";
inline constexpr const char* kSelfAvgCsvFile = "selfavg.csv";

inline constexpr std::string_view kPauliSpectrumHeader =
    "model,N,control,rank,pauli_index,label,mean_sq_expectation";
inline constexpr std::string_view kHistogramHeader = "model,N,control,bin_center,weight";
inline constexpr std::string_view kSelfAvgHeader =
    "model,marker,control,N,mean,variance,ratio,n_samples";

struct CommandContext {
  LogFn log;
  std::optional<std::size_t> stop_after;
};

/// Resolves the config, runs the sweep into run.out and returns the result.
SweepRunResult cmd_sweep(const RunConfig& run, const CommandContext& ctx = {});

struct ScalingOptions {
  std::optional<MarkerId> marker;  // all markers of the store when unset
  TransitionOptions transitions;
};

nlohmann::json scaling_to_json(const ScalingResult& r);

/// Transition analysis of a finished store; writes scaling.json into it.
/// Bulk windows give the two-branch crossing analysis, ground-state windows
/// the derivative-extremum extrapolation.
nlohmann::json cmd_scaling(const std::filesystem::path& store, const ScalingOptions& options = {},
                           const CommandContext& ctx = {});

/// Window-averaged Pauli spectra per (N, control), ordered by the spectrum at
/// the reference control; writes pauli_spectrum.csv and histogram.csv.
nlohmann::json cmd_pauli_spectrum(const RunConfig& run, const CommandContext& ctx = {});

struct HaarCheckReport {
  nlohmann::json report;
  bool pass = true;  // every compared marker within 4 standard errors
};

/// Haar-state marker means against the analytic references; writes haar_check.json.
HaarCheckReport cmd_haar_check(const RunConfig& run, const CommandContext& ctx = {});

/// Ground-state lambda sweep plus the degeneracy report; writes syk_report.json.
nlohmann::json cmd_syk(const RunConfig& run, const CommandContext& ctx = {});

/// Relative variances and decay exponents of a finished store; writes
/// selfavg.json and selfavg.csv.
nlohmann::json cmd_selfavg(const std::filesystem::path& store, const CommandContext& ctx = {});

}  // namespace qcx::cli
