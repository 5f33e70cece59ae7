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

#include <optional>
#include <span>
#include <vector>

#include "qcx/analysis/sweep.hpp"
#include "qcx/symmetry.hpp"

namespace qcx {

/// Realization-level values of one marker at one (control, N).
struct SampleGroup {
  double control = 0.0;
  int n_qubits = 0;
  std::vector<double> values;
};

struct RelativeVariance {
  double control = 0.0;
  int n_qubits = 0;
  double mean = 0.0;
  double variance = 0.0;  // sample variance, ddof 1
  double ratio = 0.0;     // variance / mean^2
  std::size_t n_samples = 0;
};

struct BetaFit {
  double control = 0.0;
  /// -slope of log2 R against N; absent when fewer than two groups have R > 0.
  std::optional<double> beta;
  /// Standard error of the slope; needs at least three groups.
  std::optional<double> std_error;
  std::vector<int> sizes_used;
};

struct SelfAveragingResult {
  MarkerId marker = MarkerId::D2;
  std::vector<RelativeVariance> per_point;
  std::vector<BetaFit> beta;  // one per distinct control, ascending
};

/// R = Var(C) / <C>^2 per group and the decay exponent per control value.
/// Groups with R = 0 are kept in per_point but left out of the fit. Throws
/// InsufficientDataError for a group with fewer than two values and
/// UndefinedRatioError for one with zero mean.
SelfAveragingResult self_averaging(MarkerId marker, std::span<const SampleGroup> groups);

/// Groups the rows of one marker by (control, reported N).
std::vector<SampleGroup> group_rows(const SweepConfig& config, std::span<const MarkerRow> rows,
                                    MarkerId marker);

/// Haar reference of a marker on N qubits: haar_d2, the half-cut Page value,
/// or haar_m2 of `cls`. I2 has no reference and throws ArgumentError.
double haar_reference(MarkerId marker, int n_qubits, SymmetryClass cls);

/// <C_Haar>/N - <C>/N. D2 is already normalized by N and enters as is.
/// `reference_qubits` selects the Haar reference dimension when it differs
/// from N.
double haar_deviation(double marker_mean, int n_qubits, MarkerId marker, SymmetryClass cls,
                      std::optional<int> reference_qubits = std::nullopt);

}  // namespace qcx
