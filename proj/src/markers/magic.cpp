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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qcx/errors.hpp"
#include "qcx/markers/markers.hpp"

namespace qcx {

namespace {

double power_sum(std::span<const double> values, int q) {
  double s = 0.0;
  if (q == 2) {
    for (double v : values) {
      const double sq = v * v;
      s += sq * sq;
    }
  } else {
    for (double v : values) s += std::pow(v * v, q);
  }
  return s;
}

void check_order(int q) {
  if (q < 2) throw ArgumentError("SRE order q must be an integer > 1, got " + std::to_string(q));
}

double sre_from_sum(double sum, int n_qubits, int q) {
  return std::log2(sum / std::ldexp(1.0, n_qubits)) / (1.0 - q);
}

}  // namespace

double stabilizer_renyi_entropy(const StateVector& state, int q, int max_qubits) {
  check_order(q);
  return sre_from_sum(pauli_power_sum(state, q, max_qubits), state.n_qubits(), q);
}

double stabilizer_renyi_entropy(std::span<const double> expectations, int n_qubits, int q) {
  check_order(q);
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (expectations.size() != dim * dim) {
    throw DimensionError("expectation table length does not equal 4^N");
  }
  return sre_from_sum(power_sum(expectations, q), n_qubits, q);
}

double haar_m2(int n_qubits, SymmetryClass cls) {
  if (n_qubits < 1) throw ArgumentError("haar_m2 needs N >= 1");
  const double l = std::ldexp(1.0, n_qubits);
  if (cls == SymmetryClass::GOE) return -std::log2(7.0 / (6.0 + l));
  return -std::log2(4.0 / (3.0 + l));
}

double PauliHistogram::bin_center(std::size_t k) const {
  const double width = (hi - lo) / static_cast<double>(weights.size());
  return lo + (static_cast<double>(k) + 0.5) * width;
}

std::vector<double> squared_pauli_expectations(const StateVector& state, int max_qubits) {
  std::vector<double> v = all_pauli_expectations(state, max_qubits);
  for (double& x : v) x *= x;
  return v;
}

PauliSpectrum pauli_spectrum(std::span<const StateVector> states, std::span<const double> reference,
                             int bins, int max_qubits) {
  if (states.empty()) throw InsufficientDataError("pauli_spectrum needs at least one state");
  if (bins < 1) throw ArgumentError("histogram needs at least one bin");
  const int n = states.front().n_qubits();
  for (const auto& s : states) {
    if (s.n_qubits() != n) throw ArgumentError("pauli_spectrum states have mixed N");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::uint64_t count = dim * dim;
  if (!reference.empty() && reference.size() != count) {
    throw DimensionError("ordering reference length does not equal 4^N");
  }

  PauliSpectrum out;
  out.n_qubits = n;
  out.histogram.weights.assign(static_cast<std::size_t>(bins), 0.0);
  std::vector<double> mean_sq(count, 0.0);
  const double inv_states = 1.0 / static_cast<double>(states.size());
  const double string_weight = inv_states / static_cast<double>(count);
  const double bin_scale = bins / (out.histogram.hi - out.histogram.lo);

  for (const auto& s : states) {
    const std::vector<double> values = all_pauli_expectations(s, max_qubits);
    double purity = 0.0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const double v = values[i];
      purity += v * v;
      mean_sq[i] += v * v * inv_states;
      const auto k = static_cast<long>(std::floor((v - out.histogram.lo) * bin_scale));
      out.histogram.weights[static_cast<std::size_t>(std::clamp(k, 0L, static_cast<long>(bins) - 1))] +=
          string_weight;
    }
    if (std::abs(purity - static_cast<double>(dim)) > 1e-6 * static_cast<double>(dim)) {
      throw std::logic_error("Pauli weights of a realization sum to " + std::to_string(purity) +
                             ", not 2^N");
    }
  }

  const std::span<const double> key = reference.empty() ? std::span<const double>(mean_sq) : reference;
  out.ordered_indices.resize(count);
  std::iota(out.ordered_indices.begin(), out.ordered_indices.end(), std::uint64_t{0});
  std::stable_sort(out.ordered_indices.begin(), out.ordered_indices.end(),
                   [&](std::uint64_t a, std::uint64_t b) {
                     const bool da = a < dim;
                     const bool db = b < dim;
                     if (da != db) return da;
                     if (key[a] != key[b]) return key[a] > key[b];
                     return a < b;
                   });
  out.mean_sq_expectation.resize(count);
  for (std::uint64_t i = 0; i < count; ++i) out.mean_sq_expectation[i] = mean_sq[out.ordered_indices[i]];
  return out;
}

}  // namespace qcx
