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

#include <Eigen/Dense>

#include "qcx/hilbert/state.hpp"

namespace qcx {

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending.
///
/// `values[k]` and column k of `vectors` belong to global eigen index
/// `first_index + k`.
struct EigenDecomposition {
  Eigen::VectorXd values;
  ComplexMatrix vectors;
  Eigen::Index first_index = 0;
};

/// All eigenpairs.
EigenDecomposition diagonalize(const ComplexMatrix& h);

/// Eigenpairs with global indices [first, first + count) of the ascending
/// spectrum. Only the requested vectors are computed (LAPACK zheevr, range 'I').
EigenDecomposition diagonalize(const ComplexMatrix& h, Eigen::Index first, Eigen::Index count);

Eigen::VectorXd eigenvalues(const ComplexMatrix& h);

/// max |H - H^dagger| relative to max(1, max |H|).
double hermiticity_defect(const ComplexMatrix& h);

}  // namespace qcx
