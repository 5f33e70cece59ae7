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

#include "qcx/analysis/mobility.hpp"

#include "qcx/errors.hpp"

namespace qcx {

std::map<MarkerId, std::vector<PairCrossings>> curve_crossings(
    const std::map<CurveKey, SweepCurve>& curves) {
  std::map<MarkerId, std::map<int, SweepCurve>> deriv;
  for (const auto& [key, curve] : curves) {
    if (curve.grid.size() < 3) continue;
    deriv[key.first].emplace(key.second, derivative_curve(curve));
  }
  std::map<MarkerId, std::vector<PairCrossings>> out;
  for (const auto& [marker, by_n] : deriv) {
    std::vector<int> sizes;
    for (const auto& [n, c] : by_n) sizes.push_back(n);
    out[marker] = consecutive_crossings(by_n, sizes);
  }
  return out;
}

MobilityScan mobility_edge_scan(const SweepConfig& base, std::span<const int> windows,
                                int workers) {
  std::vector<int> ks(windows.begin(), windows.end());
  if (ks.empty()) {
    for (int k = 1; k <= kLowerHalfWindows; ++k) ks.push_back(k);
  }
  MobilityScan scan;
  for (int k : ks) {
    if (k < 1 || k > kLowerHalfWindows) {
      throw ArgumentError("lower-half window index must be in [1, 10], got " + std::to_string(k));
    }
    SweepConfig config = base;
    config.window = WindowSpec::lower_half(k);
    auto curves = sweep(config, workers);
    scan.crossings[k] = curve_crossings(curves);
    scan.curves[k] = std::move(curves);
  }
  return scan;
}

}  // namespace qcx
