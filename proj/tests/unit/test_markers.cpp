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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qcx/ensembles/ensembles.hpp"
#include "qcx/errors.hpp"
#include "qcx/hilbert/eigen.hpp"
#include "qcx/markers/markers.hpp"

namespace qcx {
namespace {

using cd = complex_t;
constexpr double kPi = std::numbers::pi;

StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(static_cast<Eigen::Index>(hilbert_dim(n)));
  for (auto& a : v) a = cd(g(rng), g(rng));
  return StateVector::normalized(n, v);
}

StateVector uniform_state(int n) {
  return StateVector::normalized(n, ComplexVector::Ones(static_cast<Eigen::Index>(hilbert_dim(n))));
}

StateVector bell() {
  ComplexVector v = ComplexVector::Zero(4);
  v[0] = v[3] = 1.0;
  return StateVector::normalized(2, v);
}

StateVector t_state() {
  ComplexVector v(2);
  v << 1.0, std::polar(1.0, kPi / 4);
  return StateVector::normalized(1, v);
}

StateVector two_basis_state(int n, double theta, double phi) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(hilbert_dim(n)));
  v[0] = std::sin(theta);
  v[v.size() - 1] = std::polar(std::cos(theta), phi);
  return StateVector(n, v);
}

// Harmonic-number evaluation in extended precision, summed small terms first.
double page_oracle(std::uint64_t a, std::uint64_t b) {
  long double s = 0;
  for (std::uint64_t k = a * b; k > b; --k) s += 1.0L / static_cast<long double>(k);
  s -= static_cast<long double>(a - 1) / (2.0L * static_cast<long double>(b));
  return static_cast<double>(s / std::log(2.0L));
}

TEST(Ipr, Examples) {
  EXPECT_DOUBLE_EQ(ipr(StateVector::basis(3, 5), 2.0), 1.0);
  EXPECT_NEAR(ipr(uniform_state(4), 2.0), 1.0 / 16, 1e-15);
  EXPECT_NEAR(ipr(bell(), 2.0), 0.5, 1e-15);
  EXPECT_NEAR(ipr(bell(), 3.0), 0.25, 1e-15);
  EXPECT_THROW(ipr(bell(), 1.0), ArgumentError);
}

TEST(FractalDimension, Examples) {
  EXPECT_NEAR(fractal_dimension(uniform_state(5), 2.0), 1.0, 1e-12);
  EXPECT_NEAR(fractal_dimension(StateVector::basis(5, 3), 2.0), 0.0, 1e-12);
  EXPECT_NEAR(fractal_dimension(bell(), 2.0), 0.5, 1e-12);
  EXPECT_THROW(fractal_dimension(bell(), 0.5), ArgumentError);
}

TEST(HaarD2, Values) {
  EXPECT_NEAR(haar_d2(1), -std::log2(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(haar_d2(1), 0.5849625007211563, 1e-12);
  EXPECT_NEAR(haar_d2(4), std::log2(17.0 / 2.0) / 4.0, 1e-12);
  EXPECT_NEAR(haar_d2(4), 0.7718657103125849, 1e-12);
  EXPECT_GT(haar_d2(24), 0.95);
  for (int n = 1; n < 30; ++n) EXPECT_LT(haar_d2(n), haar_d2(n + 1));
}

TEST(MaxEntanglement, Examples) {
  EXPECT_NEAR(max_entanglement_entropy(StateVector::basis(4, 0b1010)).value, 0.0, 1e-12);
  EXPECT_NEAR(max_entanglement_entropy(bell()).value, 1.0, 1e-12);
  ComplexVector ghz = ComplexVector::Zero(16);
  ghz[0] = ghz[15] = std::sqrt(0.5);
  const auto r = max_entanglement_entropy(StateVector(4, ghz));
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_EQ(r.subset, (std::vector<int>{0, 1}));  // lexicographically smallest tie
  EXPECT_THROW(max_entanglement_entropy(StateVector::basis(1, 0)), ArgumentError);
}

TEST(MaxEntanglement, SubsetIsArgmaxAndTiesPickSmallest) {
  // Bell pair on qubits (1, 3) plus product elsewhere: only cuts separating
  // 1 from 3 carry entanglement; the smallest such subset is {0, 1}.
  ComplexVector v = ComplexVector::Zero(16);
  v[0] = v[(1 << 1) | (1 << 3)] = std::sqrt(0.5);
  const auto r = max_entanglement_entropy(StateVector(4, v));
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_EQ(r.subset, (std::vector<int>{0, 1}));
  // Bell pair on (0, 1): {0, 2} is the smallest cut separating them.
  ComplexVector w = ComplexVector::Zero(16);
  w[0] = w[3] = std::sqrt(0.5);
  EXPECT_EQ(max_entanglement_entropy(StateVector(4, w)).subset, (std::vector<int>{0, 2}));
}

TEST(MaxEntanglement, BruteForceOverAllSubsets) {
  std::mt19937_64 rng(4);
  for (int n : {3, 4, 5, 6}) {
    const StateVector psi = random_state(n, rng);
    double best = 0;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) != n / 2) continue;
      std::vector<int> s;
      for (int q = 0; q < n; ++q)
        if (mask >> q & 1U) s.push_back(q);
      best = std::max(best, entanglement_entropy(psi, s));
    }
    const auto r = max_entanglement_entropy(psi);
    EXPECT_NEAR(r.value, best, 1e-12);
    EXPECT_NEAR(entanglement_entropy(psi, r.subset), r.value, 1e-14);
  }
}

StateVector permute_qubits(const StateVector& s, const std::vector<int>& perm) {
  // Qubit q of the input becomes qubit perm[q] of the output.
  ComplexVector out(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::size_t j = 0;
    for (int q = 0; q < s.n_qubits(); ++q) j |= ((i >> q) & 1U) << perm[static_cast<std::size_t>(q)];
    out[static_cast<Eigen::Index>(j)] = s[i];
  }
  return StateVector(s.n_qubits(), out);
}

TEST(MaxEntanglement, RelabelingInvariance) {
  std::mt19937_64 rng(8);
  const std::vector<int> perm{3, 0, 4, 1, 2};
  for (int t = 0; t < 5; ++t) {
    const StateVector psi = random_state(5, rng);
    const auto a = max_entanglement_entropy(psi);
    const StateVector moved = permute_qubits(psi, perm);
    const auto b = max_entanglement_entropy(moved);
    EXPECT_NEAR(a.value, b.value, 1e-12);
    std::vector<int> mapped;
    for (int q : a.subset) mapped.push_back(perm[static_cast<std::size_t>(q)]);
    EXPECT_NEAR(entanglement_entropy(moved, mapped), a.value, 1e-12);
  }
}

TEST(PageValue, Values) {
  EXPECT_NEAR(page_value(2, 2), (1.0 / 3 + 1.0 / 4 - 1.0 / 4) / std::numbers::ln2, 1e-12);
  EXPECT_NEAR(page_value(2, 2), 0.4808983469629877, 1e-12);
  EXPECT_NEAR(page_value(4, 4), page_oracle(4, 4), 1e-12);
  EXPECT_NEAR(page_value(4, 4), 1.3307356442689713, 1e-12);
  EXPECT_NEAR(page_value(256, 256) / 16.0, 0.5, 0.06);
  EXPECT_NEAR(page_value(8, 16), page_oracle(8, 16), 1e-12);
  EXPECT_DOUBLE_EQ(page_value(1, 8), 0.0);
  EXPECT_THROW(page_value(4, 2), ArgumentError);
  EXPECT_NEAR(page_value_for_qubits(5), page_value(4, 8), 0.0);
}

TEST(Sre, Examples) {
  EXPECT_NEAR(stabilizer_renyi_entropy(StateVector::basis(3, 0)), 0.0, 1e-12);
  EXPECT_NEAR(stabilizer_renyi_entropy(t_state()), -std::log2(0.75), 1e-12);
  EXPECT_NEAR(stabilizer_renyi_entropy(tensor(t_state(), t_state())), 0.8300749985576876, 1e-12);
  EXPECT_NEAR(stabilizer_renyi_entropy(bell()), 0.0, 1e-12);
  EXPECT_THROW(stabilizer_renyi_entropy(bell(), 1), ArgumentError);
  EXPECT_THROW(stabilizer_renyi_entropy(StateVector::basis(5, 0), 2, 4), ResourceError);
}

TEST(Sre, TableAndStreamingAgree) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 6; ++n) {
    const StateVector psi = random_state(n, rng);
    const auto table = all_pauli_expectations(psi);
    for (int q : {2, 3}) {
      EXPECT_NEAR(stabilizer_renyi_entropy(psi, q), stabilizer_renyi_entropy(table, n, q), 1e-12);
    }
  }
}

TEST(Sre, Additivity) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const StateVector a = random_state(2, rng);
    const StateVector b = random_state(3, rng);
    EXPECT_NEAR(stabilizer_renyi_entropy(tensor(a, b)),
                stabilizer_renyi_entropy(a) + stabilizer_renyi_entropy(b), 1e-8);
  }
}

TEST(Sre, PauliUnitaryInvariance) {
  std::mt19937_64 rng(3);
  const StateVector psi = random_state(4, rng);
  const double m = stabilizer_renyi_entropy(psi);
  for (std::uint64_t idx : {1ULL, 37ULL, 200ULL, 255ULL}) {
    const ComplexMatrix p = dense_matrix(PauliString::from_flat_index(idx, 4), 4);
    EXPECT_NEAR(stabilizer_renyi_entropy(StateVector(4, p * psi.amplitudes())), m, 1e-9);
  }
}

TEST(HaarM2, Values) {
  EXPECT_NEAR(haar_m2(2, SymmetryClass::GUE), std::log2(7.0 / 4.0), 1e-12);
  EXPECT_NEAR(haar_m2(2, SymmetryClass::GOE), std::log2(10.0 / 7.0), 1e-12);
  EXPECT_NEAR(haar_m2(1, SymmetryClass::GUE), std::log2(5.0 / 4.0), 1e-12);
  for (int n = 1; n < 12; ++n) {
    EXPECT_EQ(haar_m2(n, SymmetryClass::GUE), haar_m2(n, SymmetryClass::GSE));
    EXPECT_LT(haar_m2(n, SymmetryClass::GOE), haar_m2(n, SymmetryClass::GUE));
  }
}

TEST(TwoBasis, ClosedFormExamples) {
  const auto a = two_basis_superposition_markers(kPi / 4, 0.0, 4);
  EXPECT_NEAR(a.d2, 0.25, 1e-12);
  EXPECT_NEAR(a.svn, 1.0, 1e-12);
  EXPECT_NEAR(a.m2, 0.0, 1e-12);
  const auto b = two_basis_superposition_markers(0.0, 1.3, 3);
  EXPECT_NEAR(b.d2, 0.0, 1e-12);
  EXPECT_NEAR(b.svn, 0.0, 1e-12);
  EXPECT_NEAR(b.m2, 0.0, 1e-12);
  EXPECT_NEAR(two_basis_superposition_markers(kPi / 4, kPi / 4, 2).m2, -std::log2(0.75), 1e-12);
}

TEST(TwoBasis, MatchesDirectMarkers) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> th(0.0, kPi / 2), ph(0.0, 2 * kPi);
  for (int n : {2, 3, 4}) {
    for (int t = 0; t < 30; ++t) {
      const double theta = th(rng), phi = ph(rng);
      const StateVector s = two_basis_state(n, theta, phi);
      const auto closed = two_basis_superposition_markers(theta, phi, n);
      EXPECT_NEAR(fractal_dimension(s, 2.0), closed.d2, 1e-9);
      EXPECT_NEAR(max_entanglement_entropy(s).value, closed.svn, 1e-9);
      EXPECT_NEAR(stabilizer_renyi_entropy(s), closed.m2, 1e-9);
    }
  }
}

TEST(Markers, GlobalPhaseAndHamiltonianScaleInvariance) {
  std::mt19937_64 rng(12);
  const StateVector psi = random_state(4, rng);
  const StateVector rotated(4, psi.amplitudes() * std::polar(1.0, 2.1));
  const auto a = evaluate_markers(psi, {});
  const auto b = evaluate_markers(rotated, {});
  EXPECT_DOUBLE_EQ(a.d2, b.d2);
  EXPECT_NEAR(a.svn_max, b.svn_max, 1e-13);
  EXPECT_NEAR(a.m2, b.m2, 1e-13);

  const Hamiltonian h = build_rp(5, 1.0, 3);
  const auto e1 = diagonalize(h.matrix, 10, 3);
  const auto e2 = diagonalize(ComplexMatrix(3.5 * h.matrix), 10, 3);
  for (Eigen::Index k = 0; k < 3; ++k) {
    const auto m1 = evaluate_markers(StateVector::normalized(5, e1.vectors.col(k)), {});
    const auto m2 = evaluate_markers(StateVector::normalized(5, e2.vectors.col(k)), {});
    EXPECT_NEAR(m1.d2, m2.d2, 1e-10);
    EXPECT_NEAR(m1.svn_max, m2.svn_max, 1e-10);
    EXPECT_NEAR(m1.m2, m2.m2, 1e-10);
  }
}

TEST(MarkerRecord, SelectionAndRanges) {
  MarkerSelection sel;
  sel.i2 = true;
  sel.svn = false;
  const auto r = evaluate_markers(bell(), sel);
  EXPECT_NEAR(r.i2, 0.5, 1e-15);
  EXPECT_NEAR(r.d2, 0.5, 1e-15);
  EXPECT_TRUE(std::isnan(r.svn_max));
  EXPECT_NO_THROW(r.check_ranges());
  MarkerRecord bad;
  bad.n_qubits = 4;
  bad.d2 = 1.1;
  EXPECT_THROW(bad.check_ranges(), std::logic_error);
  EXPECT_EQ(marker_from_string("SVN"), MarkerId::SVN);
  EXPECT_THROW(marker_from_string("S"), ArgumentError);
  const std::vector<MarkerId> ids{MarkerId::M2, MarkerId::D2};
  EXPECT_EQ(MarkerSelection::only(ids).ids(), (std::vector<MarkerId>{MarkerId::D2, MarkerId::M2}));
}

TEST(PauliSpectrum, ZeroState) {
  const std::vector<StateVector> states{StateVector::basis(3, 0)};
  const auto spec = pauli_spectrum(states, {});
  ASSERT_EQ(spec.mean_sq_expectation.size(), 64U);
  for (std::size_t i = 0; i < 64; ++i) {
    EXPECT_DOUBLE_EQ(spec.mean_sq_expectation[i], i < 8 ? 1.0 : 0.0);
    if (i < 8) {
      EXPECT_LT(spec.ordered_indices[i], 8U);
    }
  }
  double total = 0;
  for (double w : spec.histogram.weights) total += w;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_EQ(spec.histogram.weights.size(), 201U);
  // 8 strings at +1, 56 at 0.
  EXPECT_NEAR(spec.histogram.weights.back(), 8.0 / 64, 1e-12);
  EXPECT_NEAR(spec.histogram.weights[100], 56.0 / 64, 1e-12);
}

TEST(PauliSpectrum, OrderingFollowsReference) {
  std::mt19937_64 rng(13);
  const StateVector ref = random_state(2, rng);
  const std::vector<double> key = squared_pauli_expectations(ref);
  const std::vector<StateVector> states{random_state(2, rng), random_state(2, rng)};
  const auto spec = pauli_spectrum(states, key);
  for (std::size_t i = 0; i + 1 < 16; ++i) {
    const auto a = spec.ordered_indices[i], b = spec.ordered_indices[i + 1];
    if ((a < 4) == (b < 4)) {
      EXPECT_GE(key[a], key[b]);
    } else {
      EXPECT_LT(a, 4U);
    }
  }
  EXPECT_EQ(spec.ordered_indices[0], 0U);
  EXPECT_DOUBLE_EQ(spec.mean_sq_expectation[0], 1.0);
}

TEST(PauliSpectrum, Errors) {
  const std::vector<StateVector> mixed{StateVector::basis(2, 0), StateVector::basis(3, 0)};
  EXPECT_THROW(pauli_spectrum(mixed, {}), ArgumentError);
  const std::vector<StateVector> one{StateVector::basis(2, 0)};
  const std::vector<double> short_ref(3);
  EXPECT_THROW(pauli_spectrum(one, short_ref), DimensionError);
}

TEST(PauliSpectrum, HaarOffIdentityMean) {
  std::vector<StateVector> states;
  for (std::uint64_t s = 0; s < 500; ++s) states.push_back(sample_haar_state(6, SymmetryClass::GUE, s));
  const auto spec = pauli_spectrum(states, {});
  double sum = 0;
  for (std::size_t i = 1; i < spec.mean_sq_expectation.size(); ++i) sum += spec.mean_sq_expectation[i];
  const double mean = sum / static_cast<double>(spec.mean_sq_expectation.size() - 1);
  EXPECT_NEAR(mean, 1.0 / 65.0, 1e-9);  // exact: purity fixes the off-identity sum
  EXPECT_DOUBLE_EQ(spec.mean_sq_expectation[0], 1.0);
}

TEST(CrossPauli, MatchesDenseMatrixElements) {
  std::mt19937_64 rng(15);
  const StateVector a = random_state(3, rng), b = random_state(3, rng);
  for_each_cross_pauli_row(a, b, [&](std::uint64_t x, std::span<const cd> row) {
    for (std::uint64_t z = 0; z < 8; ++z) {
      const ComplexMatrix p = dense_matrix(PauliString{x, z}, 3);
      const cd direct = a.amplitudes().dot(p * b.amplitudes());
      EXPECT_NEAR(std::abs(row[z] - direct), 0.0, 1e-12);
    }
  });
}

TEST(HaarSampling, MarkersMatchReferencesAtN6) {
  // 500 complex Gaussian states; fixed half cut for the Page comparison.
  const int n = 6, draws = 500;
  std::vector<double> d2, svn, m2;
  const std::vector<int> cut{0, 1, 2};
  for (int s = 0; s < draws; ++s) {
    const StateVector psi = sample_haar_state(n, SymmetryClass::GUE, static_cast<std::uint64_t>(s));
    d2.push_back(fractal_dimension(psi, 2.0));
    svn.push_back(entanglement_entropy(psi, cut));
    m2.push_back(stabilizer_renyi_entropy(psi));
  }
  auto check = [](const std::vector<double>& v, double ref) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0;
    for (double x : v) var += (x - mean) * (x - mean);
    const double se = std::sqrt(var / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
    EXPECT_LT(std::abs(mean - ref), 3 * se) << mean << " vs " << ref;
  };
  check(d2, haar_d2(n));
  check(svn, page_value(8, 8));
  check(m2, haar_m2(n, SymmetryClass::GUE));
}

}  // namespace
}  // namespace qcx
