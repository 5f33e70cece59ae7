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
#include <string>
#include <string_view>

#include "qcx/hilbert/state.hpp"
#include "qcx/symmetry.hpp"

namespace qcx {

enum class Model { GOE, GUE, GSE, RP, PLRBM, SYK4_ISING };

std::string to_string(Model model);
Model model_from_string(std::string_view name);
/// Stable numeric id folded into realization seeds.
std::uint64_t model_id(Model model);

/// Everything needed to rebuild one disordered Hamiltonian bit for bit.
struct EnsembleSpec {
  Model model = Model::GUE;
  /// Qubit count N for GOE/GUE/GSE/RP/PLRBM, Majorana count M for SYK4_ISING.
  int size = 2;
  /// gamma (RP), alpha (PLRBM), lambda (SYK4_ISING); unused otherwise.
  double control = 0.0;
  double bandwidth = 1.0;
  double coupling_j = 1.0;
  double coupling_g = 1.0;
  std::uint64_t seed = 0;

  /// Qubits of the Hilbert space the Hamiltonian acts on.
  int n_qubits() const { return model == Model::SYK4_ISING ? size / 2 : size; }
  /// Throws ArgumentError when an invariant fails.
  void validate() const;
};

struct Hamiltonian {
  ComplexMatrix matrix;
  EnsembleSpec spec;

  Eigen::Index dim() const { return matrix.rows(); }
};

/// Normalized Gaussian vector: real entries for GOE, complex otherwise.
StateVector sample_haar_state(int n_qubits, SymmetryClass cls, std::uint64_t seed);

/// Gaussian ensemble sample of dimension `dim` (2*dim for GSE).
///
/// GOE: real symmetric, off-diagonal variance 1, diagonal variance 2.
/// GUE: off-diagonal a+ib with a, b ~ N(0, 1/2); diagonal ~ N(0, 1).
/// GSE: [[A, B], [-B*, A*]] with A a GUE block and B complex antisymmetric;
///      every eigenvalue is doubly degenerate.
Hamiltonian sample_gaussian(SymmetryClass cls, Eigen::Index dim, std::uint64_t seed);

/// H_ij = delta_ij h_i + L^{-gamma/2} V_ij (1 - delta_ij), L = 2^N.
Hamiltonian build_rp(int n_qubits, double gamma, std::uint64_t seed);

/// a(r) = 1 for r < b, (r/b)^{-alpha} otherwise.
double plrbm_profile(double r, double alpha, double bandwidth);

/// H_ij = G_ij a(|i-j|) with G drawn as a GUE sample.
Hamiltonian build_plrbm(int n_qubits, double alpha, double bandwidth, std::uint64_t seed);

/// -sum_{i<j<k<l} J_ijkl psi_i psi_j psi_k psi_l, <J^2> = 3! J^2 / M^3.
Hamiltonian build_syk4(int n_majoranas, double coupling_j, std::uint64_t seed);

/// i g sum_{i=1}^{M/2-1} psi_{2i} psi_{2i+1} = g sum_i Z_i Z_{i+1} (open chain).
Hamiltonian build_ising_majorana(int n_majoranas, double coupling_g);

/// (1 - lambda) H_SYK4 + lambda H_Ising.
Hamiltonian build_syk_ising(int n_majoranas, double lambda, double coupling_j, double coupling_g,
                            std::uint64_t seed);

/// GUE for M mod 4 = 2, GOE for M mod 8 = 0, GSE for M mod 8 = 4.
SymmetryClass classify_syk_symmetry(int n_majoranas);

/// Dispatches on spec.model after validating it.
Hamiltonian build(const EnsembleSpec& spec);

}  // namespace qcx
