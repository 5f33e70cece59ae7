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

#include <map>
#include <span>
#include <vector>

#include "qcx/analysis/scaling.hpp"
#include "qcx/analysis/sweep.hpp"

namespace qcx {

struct MobilityScan {
  /// Keyed by lower-half window index 1..10.
  std::map<int, std::map<CurveKey, SweepCurve>> curves;
  /// Derivative crossings of consecutive sizes per window and marker.
  std::map<int, std::map<MarkerId, std::vector<PairCrossings>>> crossings;
};

/// Derivative crossings of consecutive reported sizes for every marker in
/// `curves`. Curves with fewer than three grid points are skipped.
std::map<MarkerId, std::vector<PairCrossings>> curve_crossings(
    const std::map<CurveKey, SweepCurve>& curves);

/// One sweep of `base` per lower-half window in `windows` (all ten when
/// empty); base.window is replaced.
MobilityScan mobility_edge_scan(const SweepConfig& base, std::span<const int> windows = {},
                                int workers = 1);

}  // namespace qcx
