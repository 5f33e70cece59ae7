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
#include <span>
#include <vector>

#include "qcx/hilbert/state.hpp"

namespace qcx {

class DensityMatrix {
 public:
  /// Checks Hermiticity, unit trace and positivity to 1e-10.
  DensityMatrix(int n_qubits, ComplexMatrix entries);

  int n_qubits() const { return n_qubits_; }
  const ComplexMatrix& entries() const { return entries_; }

  /// Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;

 private:
  int n_qubits_;
  ComplexMatrix entries_;
};

/// Maps basis indices to (row, column) of the amplitude matrix of a bipartition.
///
/// Row bit k is qubit subset[k] (subset sorted ascending); column bits are the
/// complement qubits in ascending order.
class BipartitionIndex {
 public:
  BipartitionIndex(int n_qubits, std::span<const int> subset);

  int n_qubits() const { return n_qubits_; }
  const std::vector<int>& subset() const { return subset_; }
  std::size_t rows() const { return std::size_t{1} << subset_.size(); }
  std::size_t cols() const { return std::size_t{1} << (n_qubits_ - subset_.size()); }

  /// Psi(a, b) with rho_A = Psi Psi^dagger.
  ComplexMatrix amplitude_matrix(const StateVector& state) const;

 private:
  int n_qubits_;
  std::vector<int> subset_;
  std::vector<std::uint32_t> row_of_;
  std::vector<std::uint32_t> col_of_;
};

/// rho_A = Tr_B |psi><psi| for a nonempty proper subset A.
DensityMatrix reduced_density(const StateVector& state, std::span<const int> subset);

}  // namespace qcx
