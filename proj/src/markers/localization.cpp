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
#include <string>

#include "qcx/errors.hpp"
#include "qcx/markers/markers.hpp"

namespace qcx {

double ipr(const StateVector& state, double q) {
  if (!(q > 1.0)) throw ArgumentError("IPR order q must exceed 1, got " + std::to_string(q));
  double sum = 0.0;
  if (q == 2.0) {
    for (const complex_t& a : state.amplitudes()) {
      const double p = std::norm(a);
      sum += p * p;
    }
  } else {
    for (const complex_t& a : state.amplitudes()) sum += std::pow(std::norm(a), q);
  }
  return sum;
}

double fractal_dimension(const StateVector& state, double q) {
  return std::log2(ipr(state, q)) / (state.n_qubits() * (1.0 - q));
}

double haar_d2(int n_qubits) {
  if (n_qubits < 1) throw ArgumentError("haar_d2 needs N >= 1");
  return -std::log2(2.0 / (std::ldexp(1.0, n_qubits) + 1.0)) / n_qubits;
}

}  // namespace qcx
