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

#include "qcx/hilbert/eigen.hpp"

#include <algorithm>
#include <complex>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "qcx/errors.hpp"

extern "C" void openblas_set_num_threads(int num_threads);

namespace qcx {

namespace {

constexpr double kHermitianTolerance = 1e-10;

// Parallelism lives at the realization level; a threaded BLAS underneath would
// oversubscribe the workers.
void pin_blas_threads() {
  static std::once_flag flag;
  std::call_once(flag, [] { openblas_set_num_threads(1); });
}

void check_input(const ComplexMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw DimensionError("diagonalize needs a nonempty square matrix");
  }
  const double defect = hermiticity_defect(h);
  if (defect > kHermitianTolerance) {
    throw std::logic_error("diagonalize called on a non-Hermitian matrix (defect " +
                           std::to_string(defect) + ")");
  }
}

EigenDecomposition run_zheevr(const ComplexMatrix& h, char range, lapack_int il, lapack_int iu,
                              bool want_vectors) {
  pin_blas_threads();
  const auto n = static_cast<lapack_int>(h.rows());
  ComplexMatrix a = h;  // zheevr overwrites its input
  const lapack_int wanted = range == 'A' ? n : iu - il + 1;
  Eigen::VectorXd w(n);
  ComplexMatrix z;
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n));
  if (want_vectors) z.resize(n, wanted);
  lapack_int found = 0;
  const lapack_int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', range, 'L', n, a.data(), n, 0.0, 0.0, il, iu,
      0.0, &found, w.data(), want_vectors ? z.data() : nullptr,
      want_vectors ? n : 1, isuppz.data());
  if (info != 0) {
    throw std::runtime_error("zheevr failed with info = " + std::to_string(info));
  }
  EigenDecomposition out;
  out.values = w.head(found);
  if (want_vectors) out.vectors = z.leftCols(found);
  out.first_index = range == 'A' ? 0 : il - 1;
  return out;
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw DimensionError("hermiticity_defect needs a square matrix");
  if (h.size() == 0) return 0.0;
  double defect = 0.0;
  for (Eigen::Index j = 0; j < h.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      defect = std::max(defect, std::abs(h(i, j) - std::conj(h(j, i))));
    }
  }
  return defect / std::max(1.0, h.cwiseAbs().maxCoeff());
}

EigenDecomposition diagonalize(const ComplexMatrix& h) {
  check_input(h);
  return run_zheevr(h, 'A', 0, 0, true);
}

EigenDecomposition diagonalize(const ComplexMatrix& h, Eigen::Index first, Eigen::Index count) {
  check_input(h);
  if (first < 0 || count < 1 || first + count > h.rows()) {
    throw ArgumentError("eigen index range [" + std::to_string(first) + ", " +
                        std::to_string(first + count) + ") outside [0, " +
                        std::to_string(h.rows()) + ")");
  }
  if (count == h.rows()) return run_zheevr(h, 'A', 0, 0, true);
  return run_zheevr(h, 'I', static_cast<lapack_int>(first + 1),
                    static_cast<lapack_int>(first + count), true);
}

Eigen::VectorXd eigenvalues(const ComplexMatrix& h) {
  check_input(h);
  return run_zheevr(h, 'A', 0, 0, false).values;
}

}  // namespace qcx
