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

#include "qcx/analysis/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "qcx/errors.hpp"
#include "qcx/markers/markers.hpp"

namespace qcx {

namespace {

std::string group_name(const SampleGroup& g) {
  return "control " + std::to_string(g.control) + ", N " + std::to_string(g.n_qubits);
}

}  // namespace

SelfAveragingResult self_averaging(MarkerId marker, std::span<const SampleGroup> groups) {
  SelfAveragingResult out;
  out.marker = marker;
  for (const SampleGroup& g : groups) {
    const std::size_t n = g.values.size();
    if (n < 2) throw InsufficientDataError("self-averaging needs >= 2 samples for " + group_name(g));
    double mean = 0.0;
    for (double v : g.values) mean += v;
    mean /= static_cast<double>(n);
    if (mean == 0.0) throw UndefinedRatioError("zero mean for " + group_name(g));
    double ss = 0.0;
    for (double v : g.values) ss += (v - mean) * (v - mean);
    RelativeVariance r;
    r.control = g.control;
    r.n_qubits = g.n_qubits;
    r.mean = mean;
    r.variance = ss / static_cast<double>(n - 1);
    r.ratio = r.variance / (mean * mean);
    r.n_samples = n;
    out.per_point.push_back(r);
  }

  std::map<double, std::vector<const RelativeVariance*>> by_control;
  for (const RelativeVariance& r : out.per_point) by_control[r.control].push_back(&r);
  for (auto& [control, pts] : by_control) {
    std::sort(pts.begin(), pts.end(),
              [](const auto* a, const auto* b) { return a->n_qubits < b->n_qubits; });
    BetaFit fit;
    fit.control = control;
    std::vector<double> x, y;
    for (const RelativeVariance* p : pts) {
      if (!(p->ratio > 0.0)) continue;
      x.push_back(p->n_qubits);
      y.push_back(std::log2(p->ratio));
      fit.sizes_used.push_back(p->n_qubits);
    }
    const std::size_t k = x.size();
    if (k >= 2) {
      double mx = 0.0, my = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        mx += x[i];
        my += y[i];
      }
      mx /= static_cast<double>(k);
      my /= static_cast<double>(k);
      double sxx = 0.0, sxy = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
      }
      if (sxx > 0.0) {
        const double slope = sxy / sxx;
        fit.beta = -slope;
        if (k >= 3) {
          double rss = 0.0;
          for (std::size_t i = 0; i < k; ++i) {
            const double e = y[i] - my - slope * (x[i] - mx);
            rss += e * e;
          }
          fit.std_error = std::sqrt(rss / static_cast<double>(k - 2) / sxx);
        }
      }
    }
    out.beta.push_back(std::move(fit));
  }
  return out;
}

std::vector<SampleGroup> group_rows(const SweepConfig& config, std::span<const MarkerRow> rows,
                                    MarkerId marker) {
  std::map<std::pair<std::size_t, int>, std::vector<std::pair<std::size_t, double>>> acc;
  for (const MarkerRow& r : rows) {
    if (r.marker != marker) continue;
    acc[{r.param_index, config.reported_n(r.size)}].emplace_back(r.sample_index, r.value);
  }
  std::vector<SampleGroup> out;
  for (auto& [key, vals] : acc) {
    std::sort(vals.begin(), vals.end());
    SampleGroup g;
    g.control = config.grid.at(key.first);
    g.n_qubits = key.second;
    for (const auto& [s, v] : vals) g.values.push_back(v);
    out.push_back(std::move(g));
  }
  return out;
}

double haar_reference(MarkerId marker, int n_qubits, SymmetryClass cls) {
  switch (marker) {
    case MarkerId::D2: return haar_d2(n_qubits);
    case MarkerId::SVN: return page_value_for_qubits(n_qubits);
    case MarkerId::M2: return haar_m2(n_qubits, cls);
    case MarkerId::I2: break;
  }
  throw ArgumentError("no Haar reference for marker " + to_string(marker));
}

double haar_deviation(double marker_mean, int n_qubits, MarkerId marker, SymmetryClass cls,
                      std::optional<int> reference_qubits) {
  if (n_qubits < 1) throw ArgumentError("haar_deviation needs N >= 1");
  const int ref_n = reference_qubits.value_or(n_qubits);
  const double ref = haar_reference(marker, ref_n, cls);
  if (marker == MarkerId::D2) return ref - marker_mean;
  return ref / ref_n - marker_mean / n_qubits;
}

}  // namespace qcx
