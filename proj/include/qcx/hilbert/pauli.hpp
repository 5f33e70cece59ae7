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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcx/hilbert/state.hpp"

namespace qcx {

/// Default cap on N for the 4^N Pauli transform (4^14 doubles ~ 2 GiB).
inline constexpr int kDefaultTransformCap = 14;

/// One of the 4^N Hermitian Pauli strings, stored as bit masks.
///
/// The operator is P = i^{popcount(x & z)} X^x Z^z, which makes qubits with
/// both bits set carry Y = iXZ. Flat index layout is x_mask * 2^N + z_mask,
/// so the diagonal strings {I,Z}^N occupy flat indices [0, 2^N).
struct PauliString {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;

  /// Character q of `label` (one of IXYZ) acts on qubit q.
  static PauliString from_label(std::string_view label);
  static PauliString from_flat_index(std::uint64_t index, int n_qubits);

  std::uint64_t flat_index(int n_qubits) const;
  bool fits(int n_qubits) const;
  bool is_diagonal() const { return x_mask == 0; }
  std::string label(int n_qubits) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// i^phase X^x Z^z, closed under multiplication.
struct PhasedPauli {
  int phase = 0;  // mod 4
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;

  static PhasedPauli from_hermitian(const PauliString& p);

  /// Splits into c * P with P Hermitian; c is one of {1, i, -1, -i}.
  complex_t hermitian_coefficient() const;
  PauliString hermitian_string() const { return {x_mask, z_mask}; }
};

PhasedPauli operator*(const PhasedPauli& a, const PhasedPauli& b);

ComplexMatrix dense_matrix(const PauliString& p, int n_qubits);
ComplexMatrix dense_matrix(const PhasedPauli& p, int n_qubits);

/// Adds coeff * P to `h` in O(2^N) using the one-nonzero-per-column structure.
void add_scaled(ComplexMatrix& h, const PhasedPauli& p, complex_t coeff);

double pauli_expectation(const StateVector& state, const PauliString& p);

/// Row callback for the streaming transform: values[z] = <P(x, z)>.
using PauliRowSink = std::function<void(std::uint64_t x_mask, std::span<const double> values)>;

/// Visits every x_mask row of the expectation table in ascending order.
///
/// Each row costs one element-wise overlap psi*(i) psi(i ^ x) plus two real
/// Walsh-Hadamard transforms of half length, O(N 2^N); the whole table is
/// O(N 4^N) with O(2^N) scratch. Throws ResourceError when N exceeds `max_qubits`.
void for_each_pauli_row(const StateVector& state, const PauliRowSink& sink,
                        int max_qubits = kDefaultTransformCap);

/// sum_P <P>^{2q} over all 4^N strings without materializing the table.
double pauli_power_sum(const StateVector& state, int q, int max_qubits = kDefaultTransformCap);

/// Row callback for the transition transform: values[z] = <bra|P(x, z)|ket>.
using CrossPauliRowSink =
    std::function<void(std::uint64_t x_mask, std::span<const complex_t> values)>;

/// Same sweep as for_each_pauli_row for matrix elements between two states.
void for_each_cross_pauli_row(const StateVector& bra, const StateVector& ket,
                              const CrossPauliRowSink& sink,
                              int max_qubits = kDefaultTransformCap);

/// Full table of signed expectations indexed by PauliString::flat_index.
std::vector<double> all_pauli_expectations(const StateVector& state,
                                           int max_qubits = kDefaultTransformCap);

/// In-place unnormalized Walsh-Hadamard transform; size must be a power of two.
void walsh_hadamard(std::span<double> data);

}  // namespace qcx
