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

#include <optional>

#include "qcx/hilbert/pauli.hpp"
#include "qcx/hilbert/state.hpp"

namespace qcx {

inline constexpr int kDefaultSreGrid = 200;

struct DegenerateSre {
  double min = 0.0;
  double max = 0.0;
  double theta_min = 0.0;
  double phi_min = 0.0;
  double theta_max = 0.0;
  double phi_max = 0.0;
};

/// M2 of sin(theta) gs1 + e^{i phi} cos(theta) gs2, evaluated directly.
/// The grid functions below use theta_k = k (pi/2) / grid for k = 0..grid and
/// phi_l = l 2pi / grid for l < grid.
double degenerate_sre_at(const StateVector& gs1, const StateVector& gs2, double theta, double phi,
                         int max_qubits = kDefaultTransformCap);

/// M2 over the whole grid: entry (k, l) is theta_k, phi_l.
///
/// <P> of the superposition is s^2 a_P + c^2 b_P + 2sc Re(e^{i phi} t_P) with
/// a, b the expectations in gs1, gs2 and t_P = <gs1|P|gs2>, so sum_P <P>^4 is
/// a quartic in four trigonometric monomials. Its 35 coefficients are moments
/// over the Pauli tables, after which each grid point costs O(1).
Eigen::MatrixXd degenerate_sre_grid(const StateVector& gs1, const StateVector& gs2,
                                    int grid_size = kDefaultSreGrid,
                                    int max_qubits = kDefaultTransformCap);

/// Extrema of M2 over the (theta, phi) grid. Ties keep the first point in
/// (theta, phi) order. Throws ArgumentError unless |<gs1|gs2>| <= 1e-8.
DegenerateSre optimize_degenerate_sre(const StateVector& gs1, const StateVector& gs2,
                                      int grid_size = kDefaultSreGrid,
                                      int max_qubits = kDefaultTransformCap);

struct GroundManifold {
  double energy = 0.0;
  double tolerance = 0.0;
  int multiplicity = 0;
  /// Orthonormal eigenvectors spanning the manifold, one per column.
  ComplexMatrix basis;
  /// For multiplicity 2 with a parity operator: the basis rotated to parity
  /// eigenstates, with their eigenvalues.
  std::optional<ComplexMatrix> parity_basis;
  std::optional<Eigen::Vector2d> parity_values;
};

/// Eigenvalues within `tolerance` of the minimum (default 1e-8 times the
/// spectral width).
GroundManifold degeneracy_split(const ComplexMatrix& h, std::optional<double> tolerance = {},
                                const ComplexMatrix* parity = nullptr);

}  // namespace qcx
