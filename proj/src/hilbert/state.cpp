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

#include "qcx/hilbert/state.hpp"

#include <cmath>
#include <string>

#include "qcx/errors.hpp"

namespace qcx {

namespace {

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ArgumentError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

StateVector::StateVector(int n_qubits, ComplexVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubits(n_qubits);
  if (static_cast<std::size_t>(amplitudes_.size()) != hilbert_dim(n_qubits)) {
    throw DimensionError("state of " + std::to_string(n_qubits) + " qubits needs " +
                         std::to_string(hilbert_dim(n_qubits)) + " amplitudes, got " +
                         std::to_string(amplitudes_.size()));
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw ArgumentError("state norm^2 = " + std::to_string(norm2) + " is not 1");
  }
}

StateVector StateVector::normalized(int n_qubits, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw ArgumentError("cannot normalize a zero vector");
  amplitudes /= norm;
  return StateVector(n_qubits, std::move(amplitudes));
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  check_qubits(n_qubits);
  if (index >= hilbert_dim(n_qubits)) throw DimensionError("basis index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(hilbert_dim(n_qubits)));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(n_qubits, std::move(v));
}

StateVector tensor(const StateVector& low, const StateVector& high) {
  const int n = low.n_qubits() + high.n_qubits();
  ComplexVector v(static_cast<Eigen::Index>(hilbert_dim(n)));
  const auto dl = static_cast<Eigen::Index>(low.dim());
  for (Eigen::Index h = 0; h < static_cast<Eigen::Index>(high.dim()); ++h) {
    v.segment(h * dl, dl) = high.amplitudes()[h] * low.amplitudes();
  }
  return StateVector::normalized(n, std::move(v));
}

}  // namespace qcx
