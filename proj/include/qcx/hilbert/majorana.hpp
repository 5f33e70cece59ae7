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

#include "qcx/hilbert/pauli.hpp"

namespace qcx {

// Jordan-Wigner Majoranas on N = M/2 qubits. Chain site j (1-based) is the
// j-th Kronecker factor from the left, which is qubit N-j:
//   psi_{2j-1} = X_1 ... X_{j-1} Z_j
//   psi_{2j}   = X_1 ... X_{j-1} Y_j
// Each operator squares to the identity, so {psi_a, psi_b} = 2 delta_ab.

/// Hermitian Pauli string of psi_index, 1 <= index <= n_majoranas.
PauliString majorana_string(int index, int n_majoranas);

ComplexMatrix majorana_operator(int index, int n_majoranas);

/// i^{M/2} psi_1 ... psi_M, evaluated as a Pauli product. Equals X^{(x)N}.
PhasedPauli fermion_parity_string(int n_majoranas);

ComplexMatrix fermion_parity(int n_majoranas);

}  // namespace qcx
