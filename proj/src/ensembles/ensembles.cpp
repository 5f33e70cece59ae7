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

#include "qcx/ensembles/ensembles.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qcx/ensembles/rng.hpp"
#include "qcx/errors.hpp"
#include "qcx/hilbert/majorana.hpp"

namespace qcx {

namespace {

// 2^13 complex doubles squared is 1 GiB.
constexpr int kMaxDenseQubits = 13;

const double kHalfSqrt = std::sqrt(0.5);

void check_dense_qubits(int n_qubits, int min_qubits) {
  if (n_qubits < min_qubits || n_qubits > kMaxDenseQubits) {
    throw ArgumentError("qubit count " + std::to_string(n_qubits) + " outside [" +
                        std::to_string(min_qubits) + ", " + std::to_string(kMaxDenseQubits) + "]");
  }
}

void check_syk_majoranas(int n_majoranas) {
  if (n_majoranas < 4 || n_majoranas % 2 != 0 || n_majoranas / 2 > kMaxDenseQubits) {
    throw ArgumentError("SYK needs an even Majorana count >= 4, got " +
                        std::to_string(n_majoranas));
  }
}

void check_range(const char* name, double value, double lo, double hi) {
  if (!(value >= lo && value <= hi)) {
    throw ArgumentError(std::string(name) + " = " + std::to_string(value) + " outside [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

/// Copies the upper triangle onto the lower one and drops imaginary diagonal
/// parts, so H == H^dagger holds exactly.
void mirror_upper(ComplexMatrix& h) {
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    h(i, i) = h(i, i).real();
    for (Eigen::Index j = i + 1; j < h.cols(); ++j) h(j, i) = std::conj(h(i, j));
  }
}

complex_t unit_complex_normal(CounterRng& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return {kHalfSqrt * re, kHalfSqrt * im};
}

ComplexMatrix gue_block(Eigen::Index dim, CounterRng& rng) {
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    h(i, i) = rng.normal();
    for (Eigen::Index j = i + 1; j < dim; ++j) h(i, j) = unit_complex_normal(rng);
  }
  mirror_upper(h);
  return h;
}

int qubits_of_dim(Eigen::Index dim) {
  const auto d = static_cast<std::uint64_t>(dim);
  return std::has_single_bit(d) ? std::countr_zero(d) : 0;
}

}  // namespace

std::string to_string(Model model) {
  switch (model) {
    case Model::GOE: return "GOE";
    case Model::GUE: return "GUE";
    case Model::GSE: return "GSE";
    case Model::RP: return "RP";
    case Model::PLRBM: return "PLRBM";
    case Model::SYK4_ISING: return "SYK4_ISING";
  }
  return "?";
}

Model model_from_string(std::string_view name) {
  for (Model m : {Model::GOE, Model::GUE, Model::GSE, Model::RP, Model::PLRBM, Model::SYK4_ISING}) {
    if (name == to_string(m)) return m;
  }
  throw ArgumentError("unknown model '" + std::string(name) + "'");
}

std::uint64_t model_id(Model model) { return static_cast<std::uint64_t>(model) + 1; }

void EnsembleSpec::validate() const {
  switch (model) {
    case Model::GOE:
    case Model::GUE:
    case Model::GSE:
      check_dense_qubits(size, 1);
      break;
    case Model::RP:
      check_dense_qubits(size, 2);
      check_range("gamma", control, 0.0, 10.0);
      break;
    case Model::PLRBM:
      check_dense_qubits(size, 2);
      check_range("alpha", control, 0.0, 10.0);
      if (!(bandwidth > 0.0)) throw ArgumentError("PLRBM bandwidth must be positive");
      break;
    case Model::SYK4_ISING:
      check_syk_majoranas(size);
      check_range("lambda", control, 0.0, 1.0);
      if (!(coupling_j > 0.0)) throw ArgumentError("SYK coupling J must be positive");
      break;
  }
}

StateVector sample_haar_state(int n_qubits, SymmetryClass cls, std::uint64_t seed) {
  check_dense_qubits(n_qubits, 1);
  CounterRng rng(seed);
  ComplexVector v(static_cast<Eigen::Index>(hilbert_dim(n_qubits)));
  for (auto& a : v) {
    if (cls == SymmetryClass::GOE) {
      a = rng.normal();
    } else {
      a = unit_complex_normal(rng);
    }
  }
  return StateVector::normalized(n_qubits, std::move(v));
}

Hamiltonian sample_gaussian(SymmetryClass cls, Eigen::Index dim, std::uint64_t seed) {
  if (dim < 2) throw ArgumentError("Gaussian ensemble dimension must be >= 2");
  CounterRng rng(seed);
  Hamiltonian out;
  out.spec.seed = seed;
  switch (cls) {
    case SymmetryClass::GOE: {
      out.spec.model = Model::GOE;
      ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
      const double diag_sd = std::sqrt(2.0);
      for (Eigen::Index i = 0; i < dim; ++i) {
        h(i, i) = diag_sd * rng.normal();
        for (Eigen::Index j = i + 1; j < dim; ++j) h(i, j) = rng.normal();
      }
      mirror_upper(h);
      out.matrix = std::move(h);
      break;
    }
    case SymmetryClass::GUE:
      out.spec.model = Model::GUE;
      out.matrix = gue_block(dim, rng);
      break;
    case SymmetryClass::GSE: {
      out.spec.model = Model::GSE;
      const ComplexMatrix a = gue_block(dim, rng);
      ComplexMatrix b = ComplexMatrix::Zero(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = i + 1; j < dim; ++j) {
          b(i, j) = unit_complex_normal(rng);
          b(j, i) = -b(i, j);
        }
      }
      ComplexMatrix h(2 * dim, 2 * dim);
      h.topLeftCorner(dim, dim) = a;
      h.topRightCorner(dim, dim) = b;
      h.bottomLeftCorner(dim, dim) = -b.conjugate();
      h.bottomRightCorner(dim, dim) = a.conjugate();
      mirror_upper(h);
      out.matrix = std::move(h);
      break;
    }
  }
  out.spec.size = qubits_of_dim(out.matrix.rows());
  return out;
}

Hamiltonian build_rp(int n_qubits, double gamma, std::uint64_t seed) {
  const EnsembleSpec spec{Model::RP, n_qubits, gamma, 1.0, 1.0, 1.0, seed};
  spec.validate();
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
  const double scale = std::pow(static_cast<double>(dim), -gamma / 2.0);
  CounterRng rng(seed);
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    h(i, i) = rng.normal();
    for (Eigen::Index j = i + 1; j < dim; ++j) h(i, j) = scale * unit_complex_normal(rng);
  }
  mirror_upper(h);
  return {std::move(h), spec};
}

double plrbm_profile(double r, double alpha, double bandwidth) {
  if (r < bandwidth) return 1.0;
  return std::pow(r / bandwidth, -alpha);
}

Hamiltonian build_plrbm(int n_qubits, double alpha, double bandwidth, std::uint64_t seed) {
  const EnsembleSpec spec{Model::PLRBM, n_qubits, alpha, bandwidth, 1.0, 1.0, seed};
  spec.validate();
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
  CounterRng rng(seed);
  ComplexMatrix h = gue_block(dim, rng);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      h(i, j) *= plrbm_profile(static_cast<double>(j - i), alpha, bandwidth);
    }
  }
  mirror_upper(h);
  return {std::move(h), spec};
}

Hamiltonian build_syk4(int n_majoranas, double coupling_j, std::uint64_t seed) {
  const EnsembleSpec spec{Model::SYK4_ISING, n_majoranas, 0.0, 1.0, coupling_j, 1.0, seed};
  spec.validate();
  const int m = n_majoranas;
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(m / 2));
  std::vector<PhasedPauli> psi;
  psi.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) psi.push_back(PhasedPauli::from_hermitian(majorana_string(i, m)));

  const double md = static_cast<double>(m);
  const double sigma = coupling_j * std::sqrt(6.0 / (md * md * md));
  CounterRng rng(seed);
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const PhasedPauli pij = psi[i] * psi[j];
      for (int k = j + 1; k < m; ++k) {
        const PhasedPauli pijk = pij * psi[k];
        for (int l = k + 1; l < m; ++l) {
          // (i)^{q/2} = -1 for q = 4
          add_scaled(h, pijk * psi[l], -sigma * rng.normal());
        }
      }
    }
  }
  mirror_upper(h);
  return {std::move(h), spec};
}

Hamiltonian build_ising_majorana(int n_majoranas, double coupling_g) {
  const EnsembleSpec spec{Model::SYK4_ISING, n_majoranas, 1.0, 1.0, 1.0, coupling_g, 0};
  spec.validate();
  const int m = n_majoranas;
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(m / 2));
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int i = 1; i <= m / 2 - 1; ++i) {
    const PhasedPauli term = PhasedPauli::from_hermitian(majorana_string(2 * i, m)) *
                             PhasedPauli::from_hermitian(majorana_string(2 * i + 1, m));
    add_scaled(h, term, complex_t(0.0, coupling_g));
  }
  mirror_upper(h);
  return {std::move(h), spec};
}

Hamiltonian build_syk_ising(int n_majoranas, double lambda, double coupling_j, double coupling_g,
                            std::uint64_t seed) {
  const EnsembleSpec spec{Model::SYK4_ISING, n_majoranas, lambda, 1.0, coupling_j, coupling_g, seed};
  spec.validate();
  const Hamiltonian syk = build_syk4(n_majoranas, coupling_j, seed);
  const Hamiltonian ising = build_ising_majorana(n_majoranas, coupling_g);
  return {(1.0 - lambda) * syk.matrix + lambda * ising.matrix, spec};
}

SymmetryClass classify_syk_symmetry(int n_majoranas) {
  if (n_majoranas < 2 || n_majoranas % 2 != 0) {
    throw ArgumentError("symmetry class needs an even Majorana count, got " +
                        std::to_string(n_majoranas));
  }
  if (n_majoranas % 4 == 2) return SymmetryClass::GUE;
  return n_majoranas % 8 == 0 ? SymmetryClass::GOE : SymmetryClass::GSE;
}

Hamiltonian build(const EnsembleSpec& spec) {
  spec.validate();
  switch (spec.model) {
    case Model::GOE:
    case Model::GUE: {
      const auto cls = spec.model == Model::GOE ? SymmetryClass::GOE : SymmetryClass::GUE;
      Hamiltonian h =
          sample_gaussian(cls, static_cast<Eigen::Index>(hilbert_dim(spec.size)), spec.seed);
      h.spec = spec;
      return h;
    }
    case Model::GSE: {
      // Quaternionic dimension 2^{N-1}: the complex representation acts on N qubits.
      Hamiltonian h = sample_gaussian(
          SymmetryClass::GSE, static_cast<Eigen::Index>(hilbert_dim(spec.size) / 2), spec.seed);
      h.spec = spec;
      return h;
    }
    case Model::RP:
      return build_rp(spec.size, spec.control, spec.seed);
    case Model::PLRBM:
      return build_plrbm(spec.size, spec.control, spec.bandwidth, spec.seed);
    case Model::SYK4_ISING:
      return build_syk_ising(spec.size, spec.control, spec.coupling_j, spec.coupling_g, spec.seed);
  }
  throw ArgumentError("unhandled model");
}

}  // namespace qcx
