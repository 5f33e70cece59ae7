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

#include "qcx/hilbert/majorana.hpp"

#include <string>

#include "qcx/errors.hpp"

namespace qcx {

namespace {

void check_majorana_count(int n_majoranas) {
  if (n_majoranas < 2 || n_majoranas % 2 != 0) {
    throw ArgumentError("Majorana count must be even and >= 2, got " + std::to_string(n_majoranas));
  }
  if (n_majoranas / 2 > kMaxQubits) throw ArgumentError("too many Majoranas");
}

}  // namespace

PauliString majorana_string(int index, int n_majoranas) {
  check_majorana_count(n_majoranas);
  if (index < 1 || index > n_majoranas) {
    throw ArgumentError("Majorana index " + std::to_string(index) + " outside [1, " +
                        std::to_string(n_majoranas) + "]");
  }
  // Chain site 1 is the leftmost Kronecker factor, i.e. the highest qubit.
  const int n_qubits = n_majoranas / 2;
  const int qubit = n_qubits - 1 - (index - 1) / 2;
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const std::uint64_t all = (std::uint64_t{1} << n_qubits) - 1;
  PauliString p;
  p.x_mask = all & ~((bit << 1) - 1);  // X string on the earlier sites
  p.z_mask = bit;
  if (index % 2 == 0) p.x_mask |= bit;  // Y on the site itself
  return p;
}

ComplexMatrix majorana_operator(int index, int n_majoranas) {
  return dense_matrix(majorana_string(index, n_majoranas), n_majoranas / 2);
}

PhasedPauli fermion_parity_string(int n_majoranas) {
  check_majorana_count(n_majoranas);
  PhasedPauli product;
  for (int i = 1; i <= n_majoranas; ++i) {
    product = product * PhasedPauli::from_hermitian(majorana_string(i, n_majoranas));
  }
  product.phase = (product.phase + n_majoranas / 2) & 3;
  return product;
}

ComplexMatrix fermion_parity(int n_majoranas) {
  return dense_matrix(fermion_parity_string(n_majoranas), n_majoranas / 2);
}

}  // namespace qcx
