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

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qcx/errors.hpp"
#include "qcx/markers/markers.hpp"

namespace qcx {

namespace {

constexpr double kRangeSlack = 1e-9;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_range(const char* name, double v, double lo, double hi) {
  if (std::isnan(v)) return;
  if (v < lo - kRangeSlack || v > hi + kRangeSlack) {
    throw std::logic_error(std::string(name) + " = " + std::to_string(v) + " outside [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

std::string to_string(MarkerId id) {
  switch (id) {
    case MarkerId::D2: return "D2";
    case MarkerId::I2: return "I2";
    case MarkerId::SVN: return "SVN";
    case MarkerId::M2: return "M2";
  }
  return "?";
}

MarkerId marker_from_string(std::string_view name) {
  for (MarkerId id : {MarkerId::D2, MarkerId::I2, MarkerId::SVN, MarkerId::M2}) {
    if (name == to_string(id)) return id;
  }
  throw ArgumentError("unknown marker '" + std::string(name) + "'");
}

bool MarkerSelection::contains(MarkerId id) const {
  switch (id) {
    case MarkerId::D2: return d2;
    case MarkerId::I2: return i2;
    case MarkerId::SVN: return svn;
    case MarkerId::M2: return m2;
  }
  return false;
}

void MarkerSelection::set(MarkerId id, bool on) {
  switch (id) {
    case MarkerId::D2: d2 = on; break;
    case MarkerId::I2: i2 = on; break;
    case MarkerId::SVN: svn = on; break;
    case MarkerId::M2: m2 = on; break;
  }
}

std::vector<MarkerId> MarkerSelection::ids() const {
  std::vector<MarkerId> out;
  for (MarkerId id : {MarkerId::D2, MarkerId::I2, MarkerId::SVN, MarkerId::M2}) {
    if (contains(id)) out.push_back(id);
  }
  return out;
}

MarkerSelection MarkerSelection::only(std::span<const MarkerId> ids) {
  MarkerSelection s{false, false, false, false};
  for (MarkerId id : ids) s.set(id, true);
  return s;
}

MarkerRecord::MarkerRecord() : d2(kNaN), i2(kNaN), svn_max(kNaN), m2(kNaN) {}

double MarkerRecord::value(MarkerId id) const {
  switch (id) {
    case MarkerId::D2: return d2;
    case MarkerId::I2: return i2;
    case MarkerId::SVN: return svn_max;
    case MarkerId::M2: return m2;
  }
  return kNaN;
}

void MarkerRecord::set(MarkerId id, double v) {
  switch (id) {
    case MarkerId::D2: d2 = v; break;
    case MarkerId::I2: i2 = v; break;
    case MarkerId::SVN: svn_max = v; break;
    case MarkerId::M2: m2 = v; break;
  }
}

void MarkerRecord::check_ranges() const {
  check_range("D2", d2, 0.0, 1.0);
  check_range("I2", i2, 0.0, 1.0);
  check_range("S_max", svn_max, 0.0, n_qubits / 2);
  check_range("M2", m2, 0.0, std::numeric_limits<double>::infinity());
}

MarkerRecord evaluate_markers(const StateVector& state, const MarkerSelection& selection,
                              int max_qubits) {
  MarkerRecord r;
  r.n_qubits = state.n_qubits();
  if (selection.d2 || selection.i2) {
    const double i2 = ipr(state, 2.0);
    if (selection.i2) r.i2 = i2;
    if (selection.d2) r.d2 = -std::log2(i2) / state.n_qubits();
  }
  if (selection.svn) r.svn_max = max_entanglement_entropy(state).value;
  if (selection.m2) r.m2 = stabilizer_renyi_entropy(state, 2, max_qubits);
  return r;
}

TwoBasisMarkers two_basis_superposition_markers(double theta, double phi, int n_qubits) {
  if (n_qubits < 1) throw ArgumentError("two-basis markers need N >= 1");
  const double s2 = std::sin(theta) * std::sin(theta);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double c2t = std::cos(2.0 * theta);
  const double s2t = std::sin(2.0 * theta);
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  TwoBasisMarkers m;
  m.d2 = -std::log2(s2 * s2 + c2 * c2) / n_qubits;
  const double probs[2] = {c2, s2};
  m.svn = entropy_bits(probs);
  const double c4 = c2t * c2t * c2t * c2t;
  const double s4 = s2t * s2t * s2t * s2t;
  m.m2 = -std::log2((1.0 + c4 + s4 * (cp * cp * cp * cp + sp * sp * sp * sp)) / 2.0);
  return m;
}

}  // namespace qcx
