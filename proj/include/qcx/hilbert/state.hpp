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

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

namespace qcx {

using complex_t = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kNormTolerance = 1e-10;

/// Largest qubit count any dense object in this library is built for.
inline constexpr int kMaxQubits = 30;

inline std::size_t hilbert_dim(int n_qubits) { return std::size_t{1} << n_qubits; }

/// Normalized pure state of N qubits in the computational basis.
///
/// Amplitude index bit q holds the state of qubit q, so qubit 0 is the least
/// significant bit. The constructor enforces length 2^N and unit norm.
class StateVector {
 public:
  StateVector(int n_qubits, ComplexVector amplitudes);

  /// Rescales `amplitudes` to unit norm; throws on a zero vector.
  static StateVector normalized(int n_qubits, ComplexVector amplitudes);
  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  complex_t operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

 private:
  int n_qubits_;
  ComplexVector amplitudes_;
};

/// |low> (x) |high>: `low` occupies qubits [0, n_low), `high` the qubits above.
StateVector tensor(const StateVector& low, const StateVector& high);

}  // namespace qcx
