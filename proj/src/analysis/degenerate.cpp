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

#include "qcx/analysis/degenerate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qcx/errors.hpp"
#include "qcx/hilbert/eigen.hpp"
#include "qcx/markers/markers.hpp"

namespace qcx {

namespace {

void check_pair(const StateVector& gs1, const StateVector& gs2) {
  if (gs1.n_qubits() != gs2.n_qubits()) throw DimensionError("ground states differ in qubit count");
  const double overlap = std::abs(gs1.amplitudes().dot(gs2.amplitudes()));
  if (overlap > 1e-8) {
    throw ArgumentError("ground states are not orthogonal, |<gs1|gs2>| = " +
                        std::to_string(overlap));
  }
}

void check_grid(int grid_size) {
  if (grid_size < 1) throw ArgumentError("SRE grid size must be positive");
}

double grid_theta(int k, int grid_size) { return k * (std::numbers::pi / 2) / grid_size; }
double grid_phi(int l, int grid_size) { return l * (2 * std::numbers::pi) / grid_size; }

double sre_from_sum(double sum, int n_qubits) {
  return -std::log2(sum / std::ldexp(1.0, n_qubits));
}

}  // namespace

double degenerate_sre_at(const StateVector& gs1, const StateVector& gs2, double theta, double phi,
                         int max_qubits) {
  check_pair(gs1, gs2);
  const ComplexVector v =
      std::sin(theta) * gs1.amplitudes() + std::polar(std::cos(theta), phi) * gs2.amplitudes();
  return stabilizer_renyi_entropy(StateVector::normalized(gs1.n_qubits(), v), 2, max_qubits);
}

Eigen::MatrixXd degenerate_sre_grid(const StateVector& gs1, const StateVector& gs2,
                                    int grid_size, int max_qubits) {
  check_pair(gs1, gs2);
  check_grid(grid_size);
  const int n = gs1.n_qubits();
  const std::size_t dim = hilbert_dim(n);
  const std::size_t total = dim * dim;
  std::vector<double> a(total), b(total), re(total), im(total);
  for_each_pauli_row(
      gs1, [&](std::uint64_t x, std::span<const double> v) {
        std::copy(v.begin(), v.end(), a.begin() + static_cast<std::ptrdiff_t>(x * dim));
      },
      max_qubits);
  for_each_pauli_row(
      gs2, [&](std::uint64_t x, std::span<const double> v) {
        std::copy(v.begin(), v.end(), b.begin() + static_cast<std::ptrdiff_t>(x * dim));
      },
      max_qubits);
  for_each_cross_pauli_row(
      gs1, gs2,
      [&](std::uint64_t x, std::span<const complex_t> v) {
        for (std::size_t z = 0; z < dim; ++z) {
          re[x * dim + z] = v[z].real();
          im[x * dim + z] = v[z].imag();
        }
      },
      max_qubits);

  // sum_P e_P^4 is a polynomial in (s^2, c^2, 2sc cos(phi), -2sc sin(phi)) whose
  // coefficients are the 35 fourth-order moments of (a, b, re, im) over P.
  struct Term {
    int pa, pb, pr, pi;
    double weight;
    double moment = 0.0;
  };
  std::vector<Term> terms;
  constexpr std::array<double, 5> kFact{1, 1, 2, 6, 24};
  for (int pa = 0; pa <= 4; ++pa) {
    for (int pb = 0; pa + pb <= 4; ++pb) {
      for (int pr = 0; pa + pb + pr <= 4; ++pr) {
        const int pi = 4 - pa - pb - pr;
        terms.push_back({pa, pb, pr, pi, kFact[4] / (kFact[pa] * kFact[pb] * kFact[pr] * kFact[pi])});
      }
    }
  }
  for (std::size_t p = 0; p < total; ++p) {
    std::array<std::array<double, 5>, 4> pw;
    const double base[4] = {a[p], b[p], re[p], im[p]};
    for (int v = 0; v < 4; ++v) {
      pw[v][0] = 1.0;
      for (int e = 1; e <= 4; ++e) pw[v][e] = pw[v][e - 1] * base[v];
    }
    for (Term& t : terms) t.moment += pw[0][t.pa] * pw[1][t.pb] * pw[2][t.pr] * pw[3][t.pi];
  }

  Eigen::MatrixXd m2(grid_size + 1, grid_size);
  for (int k = 0; k <= grid_size; ++k) {
    const double theta = grid_theta(k, grid_size);
    const double s = std::sin(theta), c = std::cos(theta);
    for (int l = 0; l < grid_size; ++l) {
      const double phi = grid_phi(l, grid_size);
      const double x[4] = {s * s, c * c, 2 * s * c * std::cos(phi), -2 * s * c * std::sin(phi)};
      double sum = 0.0;
      for (const Term& t : terms) {
        sum += t.weight * t.moment * std::pow(x[0], t.pa) * std::pow(x[1], t.pb) *
               std::pow(x[2], t.pr) * std::pow(x[3], t.pi);
      }
      m2(k, l) = sre_from_sum(sum, n);
    }
  }
  return m2;
}

DegenerateSre optimize_degenerate_sre(const StateVector& gs1, const StateVector& gs2,
                                      int grid_size, int max_qubits) {
  const Eigen::MatrixXd m2 = degenerate_sre_grid(gs1, gs2, grid_size, max_qubits);
  DegenerateSre out;
  out.min = out.max = m2(0, 0);
  for (Eigen::Index k = 0; k < m2.rows(); ++k) {
    for (Eigen::Index l = 0; l < m2.cols(); ++l) {
      const double v = m2(k, l);
      if (v < out.min) {
        out.min = v;
        out.theta_min = grid_theta(static_cast<int>(k), grid_size);
        out.phi_min = grid_phi(static_cast<int>(l), grid_size);
      }
      if (v > out.max) {
        out.max = v;
        out.theta_max = grid_theta(static_cast<int>(k), grid_size);
        out.phi_max = grid_phi(static_cast<int>(l), grid_size);
      }
    }
  }
  return out;
}

GroundManifold degeneracy_split(const ComplexMatrix& h, std::optional<double> tolerance,
                                const ComplexMatrix* parity) {
  if (tolerance && !(*tolerance > 0.0)) throw ArgumentError("degeneracy tolerance must be > 0");
  if (h.rows() == 0) throw ArgumentError("empty Hamiltonian");
  const EigenDecomposition eig = diagonalize(h);
  const auto& e = eig.values;
  GroundManifold g;
  g.energy = e[0];
  g.tolerance = tolerance.value_or(1e-8 * (e[e.size() - 1] - e[0]));
  Eigen::Index m = 1;
  while (m < e.size() && e[m] - e[0] <= g.tolerance) ++m;
  g.multiplicity = static_cast<int>(m);
  g.basis = eig.vectors.leftCols(m);
  if (parity != nullptr && m == 2) {
    if (parity->rows() != h.rows() || parity->cols() != h.cols()) {
      throw DimensionError("parity operator does not match the Hamiltonian");
    }
    const Eigen::Matrix2cd block = g.basis.adjoint() * (*parity) * g.basis;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(block);
    g.parity_basis = g.basis * solver.eigenvectors();
    g.parity_values = solver.eigenvalues();
  }
  return g;
}

}  // namespace qcx
