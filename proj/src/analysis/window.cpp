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

#include "qcx/analysis/window.hpp"

#include <bit>
#include <cstdio>
#include <cmath>
#include <string>

#include "qcx/errors.hpp"
#include "qcx/hilbert/eigen.hpp"

namespace qcx {

namespace {

// round(num / den) for nonnegative integers, halves rounded up.
Eigen::Index round_ratio(Eigen::Index num, Eigen::Index den) { return (2 * num + den) / (2 * den); }

std::string format_fraction(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", f);
  return buf;
}

}  // namespace

WindowSpec WindowSpec::parse(std::string_view text) {
  if (text == "ground") return ground_state();
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string value(colon == std::string_view::npos ? "" : text.substr(colon + 1));
  WindowSpec w;
  try {
    std::size_t used = 0;
    if (head == "central" && !value.empty()) {
      w = central(std::stod(value, &used));
    } else if (head == "lower" && !value.empty()) {
      w = lower_half(std::stoi(value, &used));
    } else {
      used = std::string::npos;
    }
    if (used != value.size()) throw ArgumentError("");
  } catch (const std::exception&) {
    throw ArgumentError("bad window '" + std::string(text) +
                        "': expected ground, central:<fraction> or lower:<1..10>");
  }
  w.validate();
  return w;
}

std::string WindowSpec::tag() const {
  switch (kind) {
    case WindowKind::GROUND_STATE: return "ground";
    case WindowKind::CENTRAL_FRACTION: return "central:" + format_fraction(fraction);
    case WindowKind::LOWER_HALF_WINDOW: return "lower:" + std::to_string(window_index);
  }
  return "?";
}

void WindowSpec::validate() const {
  if (kind == WindowKind::CENTRAL_FRACTION && !(fraction > 0.0 && fraction <= 1.0)) {
    throw ArgumentError("window fraction must lie in (0, 1]");
  }
  if (kind == WindowKind::LOWER_HALF_WINDOW &&
      (window_index < 1 || window_index > kLowerHalfWindows)) {
    throw ArgumentError("lower-half window index must lie in [1, 10]");
  }
}

IndexRange window_range(const WindowSpec& window, Eigen::Index dim) {
  window.validate();
  if (dim < 1) throw ArgumentError("empty spectrum");
  switch (window.kind) {
    case WindowKind::GROUND_STATE:
      return {0, 1};
    case WindowKind::CENTRAL_FRACTION: {
      const auto count = std::max<Eigen::Index>(
          1, static_cast<Eigen::Index>(std::llround(window.fraction * static_cast<double>(dim))));
      return {(dim - count) / 2, count};
    }
    case WindowKind::LOWER_HALF_WINDOW: {
      const Eigen::Index k = window.window_index;
      const Eigen::Index lo = round_ratio((k - 1) * dim, 2 * kLowerHalfWindows);
      const Eigen::Index hi = round_ratio(k * dim, 2 * kLowerHalfWindows);
      if (hi <= lo) {
        throw ArgumentError("window " + window.tag() + " is empty for a spectrum of " +
                            std::to_string(dim) + " states");
      }
      return {lo, hi - lo};
    }
  }
  throw ArgumentError("unhandled window kind");
}

SelectedStates select_eigenstates(const ComplexMatrix& h, const WindowSpec& window) {
  const IndexRange range = window_range(window, h.rows());
  const auto dim = static_cast<std::uint64_t>(h.rows());
  if (!std::has_single_bit(dim)) throw DimensionError("Hamiltonian dimension is not 2^N");
  const int n = std::countr_zero(dim);
  EigenDecomposition eig = diagonalize(h, range.first, range.count);
  SelectedStates out;
  out.range = range;
  out.energies = std::move(eig.values);
  out.states.reserve(static_cast<std::size_t>(range.count));
  for (Eigen::Index k = 0; k < range.count; ++k) {
    out.states.push_back(StateVector::normalized(n, eig.vectors.col(k)));
  }
  return out;
}

}  // namespace qcx
