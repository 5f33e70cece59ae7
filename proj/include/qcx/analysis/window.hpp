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

#include <string>
#include <string_view>
#include <vector>

#include "qcx/hilbert/state.hpp"

namespace qcx {

enum class WindowKind { GROUND_STATE, CENTRAL_FRACTION, LOWER_HALF_WINDOW };

/// Which eigenstates of the ascending spectrum a realization contributes.
struct WindowSpec {
  WindowKind kind = WindowKind::CENTRAL_FRACTION;
  double fraction = 0.2;  // CENTRAL_FRACTION
  int window_index = 1;   // LOWER_HALF_WINDOW, 1..10

  static WindowSpec ground_state() { return {WindowKind::GROUND_STATE, 0.2, 1}; }
  static WindowSpec central(double fraction) { return {WindowKind::CENTRAL_FRACTION, fraction, 1}; }
  static WindowSpec lower_half(int k) { return {WindowKind::LOWER_HALF_WINDOW, 0.2, k}; }

  /// Parses "ground", "central:<f>" or "lower:<k>".
  static WindowSpec parse(std::string_view text);
  /// Inverse of parse; also the window column of markers.csv.
  std::string tag() const;
  void validate() const;
};

inline constexpr int kLowerHalfWindows = 10;

struct IndexRange {
  Eigen::Index first = 0;
  Eigen::Index count = 0;
};

/// Eigen index range of `window` in a spectrum of size `dim`.
///
/// CENTRAL_FRACTION keeps count = max(1, round(f L)) states starting at
/// floor((L - count) / 2). LOWER_HALF_WINDOW k keeps
/// [round((k-1) L / 20), round(k L / 20)), so the ten windows tile [0, L/2).
IndexRange window_range(const WindowSpec& window, Eigen::Index dim);

struct SelectedStates {
  IndexRange range;
  Eigen::VectorXd energies;
  std::vector<StateVector> states;
};

/// Diagonalizes `h` for the window's index range only.
SelectedStates select_eigenstates(const ComplexMatrix& h, const WindowSpec& window);

}  // namespace qcx
