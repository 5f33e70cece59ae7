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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcx/hilbert/pauli.hpp"
#include "qcx/hilbert/state.hpp"
#include "qcx/symmetry.hpp"

namespace qcx {

// ---- localization ---------------------------------------------------------

/// I_q = sum_i |psi(i)|^{2q}, q > 1.
double ipr(const StateVector& state, double q);

/// D_q = log2(I_q) / (N (1 - q)).
double fractal_dimension(const StateVector& state, double q);

/// D_2 of Haar-random states: -(1/N) log2(2 / (2^N + 1)).
double haar_d2(int n_qubits);

// ---- entanglement ---------------------------------------------------------

/// Eigenvalues below this are dropped from entropy sums (0 log 0 = 0).
inline constexpr double kEntropyCutoff = 1e-12;

/// -sum p log2 p over p > kEntropyCutoff.
double entropy_bits(std::span<const double> probabilities);

/// Von Neumann entropy of rho_A in bits.
double entanglement_entropy(const StateVector& state, std::span<const int> subset);

struct MaxEntanglement {
  double value = 0.0;
  std::vector<int> subset;
};

/// Maximum over all subsets of size floor(N/2). For even N only subsets
/// containing qubit 0 are visited since a cut and its complement agree. Among
/// subsets within 1e-10 of the maximum the lexicographically smallest wins.
MaxEntanglement max_entanglement_entropy(const StateVector& state);

/// Average Haar entanglement of an L_A x L_B split, in bits:
/// (sum_{k=L_B+1}^{L_A L_B} 1/k - (L_A - 1) / (2 L_B)) / ln 2.
double page_value(std::uint64_t dim_a, std::uint64_t dim_b);

/// page_value for the floor(N/2) | ceil(N/2) split of N qubits.
double page_value_for_qubits(int n_qubits);

// ---- magic ----------------------------------------------------------------

/// M_q = log2(sum_P <P>^{2q} / 2^N) / (1 - q), streamed over Pauli rows.
double stabilizer_renyi_entropy(const StateVector& state, int q = 2,
                                int max_qubits = kDefaultTransformCap);

/// M_q from a precomputed expectation table of an N-qubit pure state.
double stabilizer_renyi_entropy(std::span<const double> expectations, int n_qubits, int q = 2);

/// Haar-average M_2: -log2(4 / (3 + 2^N)) for GUE and GSE, -log2(7 / (6 + 2^N))
/// for GOE. For GSE pass the qubit count of the complex representation.
double haar_m2(int n_qubits, SymmetryClass cls);

// ---- records --------------------------------------------------------------

enum class MarkerId { D2, I2, SVN, M2 };

std::string to_string(MarkerId id);
MarkerId marker_from_string(std::string_view name);

/// Which markers to evaluate.
struct MarkerSelection {
  bool d2 = true;
  bool i2 = false;
  bool svn = true;
  bool m2 = true;

  bool contains(MarkerId id) const;
  void set(MarkerId id, bool on);
  std::vector<MarkerId> ids() const;
  static MarkerSelection only(std::span<const MarkerId> ids);
};

/// Marker values of one realization (window-averaged) or one eigenstate.
/// Unset markers hold NaN.
struct MarkerRecord {
  double d2;
  double i2;
  double svn_max;
  double m2;
  int n_qubits = 0;
  std::string window_tag;
  std::uint64_t seed = 0;
  std::pair<std::int64_t, std::int64_t> eigen_index_range{0, 0};

  MarkerRecord();
  double value(MarkerId id) const;
  void set(MarkerId id, double v);
  /// Throws std::logic_error if a set marker leaves its range by more than 1e-9.
  void check_ranges() const;
};

/// Evaluates the selected markers on one state (q = 2 throughout).
MarkerRecord evaluate_markers(const StateVector& state, const MarkerSelection& selection,
                              int max_qubits = kDefaultTransformCap);

struct TwoBasisMarkers {
  double d2;
  double svn;
  double m2;
};

/// Closed forms for sin(theta)|0...0> + e^{i phi} cos(theta)|1...1>.
TwoBasisMarkers two_basis_superposition_markers(double theta, double phi, int n_qubits);

// ---- Pauli spectrum -------------------------------------------------------

/// Frequency distribution of signed <P> values, each string weighted 1/4^N.
struct PauliHistogram {
  double lo = -1.0;
  double hi = 1.0;
  std::vector<double> weights;

  double bin_center(std::size_t k) const;
};

struct PauliSpectrum {
  int n_qubits = 0;
  /// Permutation of [0, 4^N): diagonal strings first, each group by
  /// descending reference value, ties by flat index.
  std::vector<std::uint64_t> ordered_indices;
  /// Realization average of <P>^2, aligned with ordered_indices.
  std::vector<double> mean_sq_expectation;
  /// Realization average of the per-state histogram.
  PauliHistogram histogram;
};

inline constexpr int kDefaultHistogramBins = 201;

/// Averages <P>^2 over `states`. `reference` holds one value per flat index
/// and fixes the ordering; an empty span orders by the averaged values
/// themselves.
PauliSpectrum pauli_spectrum(std::span<const StateVector> states,
                             std::span<const double> reference,
                             int bins = kDefaultHistogramBins,
                             int max_qubits = kDefaultTransformCap);

/// Squared expectations of one state, indexed by flat index; used as an
/// ordering reference.
std::vector<double> squared_pauli_expectations(const StateVector& state,
                                               int max_qubits = kDefaultTransformCap);

}  // namespace qcx
