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

#include "qcx/hilbert/pauli.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qcx/errors.hpp"

namespace qcx {

namespace {

constexpr complex_t kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

complex_t i_power(int k) { return kIPowers[((k % 4) + 4) % 4]; }

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

void require_fits(const PauliString& p, int n_qubits) {
  if (!p.fits(n_qubits)) {
    throw DimensionError("Pauli masks wider than " + std::to_string(n_qubits) + " qubits");
  }
}

void check_cap(int n_qubits, int max_qubits) {
  if (n_qubits > max_qubits) {
    throw ResourceError("all-Pauli transform for N=" + std::to_string(n_qubits) +
                        " exceeds the cap of " + std::to_string(max_qubits) + " qubits");
  }
}

}  // namespace

PauliString PauliString::from_label(std::string_view label) {
  if (label.size() > 64) throw DimensionError("Pauli label longer than 64 qubits");
  PauliString p;
  for (std::size_t q = 0; q < label.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (label[q]) {
      case 'I': case '_': break;
      case 'X': p.x_mask |= bit; break;
      case 'Z': p.z_mask |= bit; break;
      case 'Y': p.x_mask |= bit; p.z_mask |= bit; break;
      default: throw ArgumentError(std::string("bad Pauli character '") + label[q] + "'");
    }
  }
  return p;
}

PauliString PauliString::from_flat_index(std::uint64_t index, int n_qubits) {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (index >= dim * dim) throw DimensionError("flat Pauli index out of range");
  return {index >> n_qubits, index & (dim - 1)};
}

std::uint64_t PauliString::flat_index(int n_qubits) const {
  require_fits(*this, n_qubits);
  return (x_mask << n_qubits) | z_mask;
}

bool PauliString::fits(int n_qubits) const {
  if (n_qubits >= 64) return true;
  const std::uint64_t limit = std::uint64_t{1} << n_qubits;
  return x_mask < limit && z_mask < limit;
}

std::string PauliString::label(int n_qubits) const {
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) {
    const bool x = (x_mask >> q) & 1U;
    const bool z = (z_mask >> q) & 1U;
    s[static_cast<std::size_t>(q)] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return s;
}

PhasedPauli PhasedPauli::from_hermitian(const PauliString& p) {
  return {std::popcount(p.x_mask & p.z_mask) & 3, p.x_mask, p.z_mask};
}

complex_t PhasedPauli::hermitian_coefficient() const {
  return i_power(phase - std::popcount(x_mask & z_mask));
}

PhasedPauli operator*(const PhasedPauli& a, const PhasedPauli& b) {
  // Z^za X^xb = (-1)^{za.xb} X^xb Z^za
  const int phase = a.phase + b.phase + 2 * std::popcount(a.z_mask & b.x_mask);
  return {phase & 3, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask};
}

ComplexMatrix dense_matrix(const PhasedPauli& p, int n_qubits) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  add_scaled(m, p, 1.0);
  return m;
}

ComplexMatrix dense_matrix(const PauliString& p, int n_qubits) {
  require_fits(p, n_qubits);
  return dense_matrix(PhasedPauli::from_hermitian(p), n_qubits);
}

void add_scaled(ComplexMatrix& h, const PhasedPauli& p, complex_t coeff) {
  const std::uint64_t dim = static_cast<std::uint64_t>(h.rows());
  if (h.cols() != h.rows() || !std::has_single_bit(dim) || p.x_mask >= dim || p.z_mask >= dim) {
    throw DimensionError("Pauli does not fit the target matrix");
  }
  const complex_t c = coeff * i_power(p.phase);
  for (std::uint64_t j = 0; j < dim; ++j) {
    const double sign = parity(p.z_mask & j) ? -1.0 : 1.0;
    h(static_cast<Eigen::Index>(j ^ p.x_mask), static_cast<Eigen::Index>(j)) += sign * c;
  }
}

double pauli_expectation(const StateVector& state, const PauliString& p) {
  require_fits(p, state.n_qubits());
  const auto& psi = state.amplitudes();
  complex_t acc = 0.0;
  for (std::uint64_t j = 0; j < state.dim(); ++j) {
    const double sign = parity(p.z_mask & j) ? -1.0 : 1.0;
    acc += sign * std::conj(psi[static_cast<Eigen::Index>(j ^ p.x_mask)]) *
           psi[static_cast<Eigen::Index>(j)];
  }
  return (i_power(std::popcount(p.x_mask & p.z_mask)) * acc).real();
}

void walsh_hadamard(std::span<double> data) {
  const std::size_t n = data.size();
  if (!std::has_single_bit(n)) throw DimensionError("Walsh-Hadamard length must be 2^k");
  double* d = data.data();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = d[j];
        const double b = d[j + h];
        d[j] = a + b;
        d[j + h] = a - b;
      }
    }
  }
}

namespace {

// Visits every x row in compressed form. f_i = conj(psi_i) psi_{i^x} satisfies
// f_{i^x} = conj(f_i), so for x != 0 with lowest set bit b the sum over i
// folds onto the half space i_b = 0:
//   g(z) = sum_{i_b=0} (-1)^{z.i} (f_i + (-1)^{z.x} conj(f_i)).
// With u = 2 Re f and v = 2 Im f on the folded index, U = WHT(u) and V = WHT(v)
// of length 2^{N-1} give <P(x,z)> = (-1)^{floor(k/2)} (k even ? U : V)[z'],
// where k = |x & z| and z' is z with bit b removed. Row x = 0 is the plain
// transform of |psi_i|^2.
template <class RowFn>
void visit_folded_rows(const StateVector& state, RowFn&& on_row) {
  const std::size_t dim = state.dim();
  const std::size_t half = dim / 2;
  const complex_t* psi = state.amplitudes().data();
  std::vector<double> u(dim), v(half);
  for (std::size_t i = 0; i < dim; ++i) u[i] = std::norm(psi[i]);
  walsh_hadamard(u);
  on_row(std::uint64_t{0}, 0, std::span<const double>(u), std::span<const double>());
  if (dim == 1) return;
  u.resize(half);
  for (std::uint64_t x = 1; x < dim; ++x) {
    const int b = std::countr_zero(x);
    const std::uint64_t low = (std::uint64_t{1} << b) - 1;
    for (std::uint64_t c = 0; c < half; ++c) {
      const std::uint64_t i = ((c & ~low) << 1) | (c & low);
      const complex_t f = std::conj(psi[i]) * psi[i ^ x];
      u[c] = 2.0 * f.real();
      v[c] = 2.0 * f.imag();
    }
    walsh_hadamard(u);
    walsh_hadamard(v);
    on_row(x, b, std::span<const double>(u), std::span<const double>(v));
  }
}

}  // namespace

void for_each_pauli_row(const StateVector& state, const PauliRowSink& sink, int max_qubits) {
  check_cap(state.n_qubits(), max_qubits);
  const std::size_t dim = state.dim();
  std::vector<double> row(dim);
  visit_folded_rows(state, [&](std::uint64_t x, int b, std::span<const double> u,
                               std::span<const double> v) {
    if (x == 0) {
      sink(x, u);
      return;
    }
    const std::uint64_t low = (std::uint64_t{1} << b) - 1;
    for (std::uint64_t z = 0; z < dim; ++z) {
      const int k = std::popcount(x & z);
      const std::uint64_t folded = ((z >> 1) & ~low) | (z & low);
      const double value = (k & 1) ? v[folded] : u[folded];
      row[z] = (k & 2) ? -value : value;
    }
    sink(x, row);
  });
}

double pauli_power_sum(const StateVector& state, int q, int max_qubits) {
  check_cap(state.n_qubits(), max_qubits);
  if (q < 1) throw ArgumentError("Pauli power sum needs q >= 1");
  double total = 0.0;
  auto add = [&](std::span<const double> values) {
    double s = 0.0;
    if (q == 2) {
      for (double e : values) {
        const double sq = e * e;
        s += sq * sq;
      }
    } else {
      for (double e : values) s += std::pow(e * e, q);
    }
    total += s;
  };
  visit_folded_rows(state, [&](std::uint64_t, int, std::span<const double> u,
                               std::span<const double> v) {
    add(u);
    add(v);
  });
  return total;
}

void for_each_cross_pauli_row(const StateVector& bra, const StateVector& ket,
                              const CrossPauliRowSink& sink, int max_qubits) {
  const int n = ket.n_qubits();
  if (bra.n_qubits() != n) throw DimensionError("bra and ket qubit counts differ");
  check_cap(n, max_qubits);
  const std::size_t dim = ket.dim();
  const complex_t* a = bra.amplitudes().data();
  const complex_t* b = ket.amplitudes().data();
  std::vector<double> re(dim), im(dim);
  std::vector<complex_t> row(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    // <a|P|b> = i^{|x&z|} sum_j (-1)^{z.j} conj(a_{j^x}) b_j
    for (std::size_t j = 0; j < dim; ++j) {
      const complex_t f = std::conj(a[j ^ x]) * b[j];
      re[j] = f.real();
      im[j] = f.imag();
    }
    walsh_hadamard(re);
    walsh_hadamard(im);
    for (std::uint64_t z = 0; z < dim; ++z) {
      row[z] = i_power(std::popcount(x & z)) * complex_t(re[z], im[z]);
    }
    sink(x, row);
  }
}

std::vector<double> all_pauli_expectations(const StateVector& state, int max_qubits) {
  const int n = state.n_qubits();
  check_cap(n, max_qubits);
  const std::size_t dim = state.dim();
  std::vector<double> out(dim * dim);
  for_each_pauli_row(
      state,
      [&](std::uint64_t x, std::span<const double> values) {
        std::copy(values.begin(), values.end(), out.begin() + static_cast<std::ptrdiff_t>(x * dim));
      },
      max_qubits);
  return out;
}

}  // namespace qcx
