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

#include "qcx/hilbert/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcx/errors.hpp"

namespace qcx {

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw DimensionError("density matrix shape does not match " + std::to_string(n_qubits) +
                         " qubits");
  }
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ArgumentError("density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - complex_t(1.0)) > 1e-10) {
    throw ArgumentError("density matrix trace is not 1");
  }
  if (eigenvalues().minCoeff() < -1e-10) {
    throw ArgumentError("density matrix has a negative eigenvalue");
  }
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

BipartitionIndex::BipartitionIndex(int n_qubits, std::span<const int> subset)
    : n_qubits_(n_qubits), subset_(subset.begin(), subset.end()) {
  std::sort(subset_.begin(), subset_.end());
  if (subset_.empty() || static_cast<int>(subset_.size()) >= n_qubits) {
    throw ArgumentError("bipartition subset must be nonempty and proper");
  }
  if (std::adjacent_find(subset_.begin(), subset_.end()) != subset_.end() ||
      subset_.front() < 0 || subset_.back() >= n_qubits) {
    throw ArgumentError("bipartition subset has repeated or out-of-range qubits");
  }
  std::vector<int> complement;
  for (int q = 0; q < n_qubits; ++q) {
    if (!std::binary_search(subset_.begin(), subset_.end(), q)) complement.push_back(q);
  }
  const std::size_t dim = hilbert_dim(n_qubits);
  row_of_.resize(dim);
  col_of_.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::uint32_t r = 0, c = 0;
    for (std::size_t k = 0; k < subset_.size(); ++k) r |= ((i >> subset_[k]) & 1U) << k;
    for (std::size_t k = 0; k < complement.size(); ++k) c |= ((i >> complement[k]) & 1U) << k;
    row_of_[i] = r;
    col_of_[i] = c;
  }
}

ComplexMatrix BipartitionIndex::amplitude_matrix(const StateVector& state) const {
  if (state.n_qubits() != n_qubits_) throw DimensionError("state does not match bipartition");
  ComplexMatrix m(static_cast<Eigen::Index>(rows()), static_cast<Eigen::Index>(cols()));
  const complex_t* psi = state.amplitudes().data();
  for (std::size_t i = 0; i < state.dim(); ++i) m(row_of_[i], col_of_[i]) = psi[i];
  return m;
}

DensityMatrix reduced_density(const StateVector& state, std::span<const int> subset) {
  const BipartitionIndex index(state.n_qubits(), subset);
  const ComplexMatrix psi = index.amplitude_matrix(state);
  return DensityMatrix(static_cast<int>(index.subset().size()), psi * psi.adjoint());
}

}  // namespace qcx
