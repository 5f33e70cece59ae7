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
#include <map>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "qcx/errors.hpp"
#include "qcx/hilbert/density.hpp"
#include "qcx/markers/markers.hpp"

namespace qcx {

namespace {

constexpr double kTieTolerance = 1e-10;

double rho_entropy(const BipartitionIndex& index, const StateVector& state) {
  const ComplexMatrix psi = index.amplitude_matrix(state);
  ComplexMatrix rho(psi.rows(), psi.rows());
  rho.noalias() = psi * psi.adjoint();
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return entropy_bits(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
}

// All floor(N/2)-subsets in lexicographic order; for even N only those
// containing qubit 0.
std::vector<std::vector<int>> half_subsets(int n) {
  const int k = n / 2;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (n % 2 == 1 || cur.front() == 0) out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

const std::vector<BipartitionIndex>& half_cuts(int n) {
  thread_local std::map<int, std::unique_ptr<std::vector<BipartitionIndex>>> cache;
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<BipartitionIndex>>();
    for (const auto& subset : half_subsets(n)) slot->emplace_back(n, subset);
  }
  return *slot;
}

}  // namespace

double entropy_bits(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > kEntropyCutoff) s -= p * std::log2(p);
  }
  return s;
}

double entanglement_entropy(const StateVector& state, std::span<const int> subset) {
  return rho_entropy(BipartitionIndex(state.n_qubits(), subset), state);
}

MaxEntanglement max_entanglement_entropy(const StateVector& state) {
  const int n = state.n_qubits();
  if (n < 2) throw ArgumentError("maximal bipartite entanglement needs N >= 2");
  const auto& cuts = half_cuts(n);
  std::vector<double> values(cuts.size());
  for (std::size_t c = 0; c < cuts.size(); ++c) values[c] = rho_entropy(cuts[c], state);
  const double best = *std::max_element(values.begin(), values.end());
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    if (values[c] >= best - kTieTolerance) return {values[c], cuts[c].subset()};
  }
  return {best, cuts.front().subset()};
}

double page_value(std::uint64_t dim_a, std::uint64_t dim_b) {
  if (dim_a < 1 || dim_b < 1) throw ArgumentError("page_value needs positive dimensions");
  if (dim_a > dim_b) {
    throw ArgumentError("page_value needs L_A <= L_B, got " + std::to_string(dim_a) + " > " +
                        std::to_string(dim_b));
  }
  const std::uint64_t top = dim_a * dim_b;
  double sum = 0.0;
  for (std::uint64_t k = top; k > dim_b; --k) sum += 1.0 / static_cast<double>(k);
  sum -= static_cast<double>(dim_a - 1) / (2.0 * static_cast<double>(dim_b));
  return sum / std::numbers::ln2;
}

double page_value_for_qubits(int n_qubits) {
  if (n_qubits < 2) throw ArgumentError("page_value_for_qubits needs N >= 2");
  return page_value(std::uint64_t{1} << (n_qubits / 2), std::uint64_t{1} << (n_qubits - n_qubits / 2));
}

}  // namespace qcx
