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
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "qcx/ensembles/ensembles.hpp"
#include "qcx/ensembles/rng.hpp"
#include "qcx/errors.hpp"
#include "qcx/hilbert/eigen.hpp"
#include "qcx/hilbert/majorana.hpp"
#include "qcx/hilbert/pauli.hpp"

namespace qcx {
namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double hermitian_gap(const ComplexMatrix& h) { return max_abs(h - h.adjoint()); }

TEST(Philox, KnownAnswerVectors) {
  using C = Philox4x32::Counter;
  EXPECT_EQ(Philox4x32::block({0, 0, 0, 0}, {0, 0}),
            (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                              {0xffffffff, 0xffffffff}),
            (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                              {0xa4093822, 0x299f31d0}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(CounterRng, StreamsAreReproducibleAndDistinct) {
  CounterRng a(42), b(42), c(42, 1), d(43);
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    EXPECT_EQ(va, b.next_u64());
    EXPECT_NE(va, c.next_u64());
    EXPECT_NE(va, d.next_u64());
  }
}

TEST(CounterRng, NormalMoments) {
  CounterRng rng(1);
  const int n = 200000;
  double s1 = 0, s2 = 0, s4 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    s1 += x;
    s2 += x * x;
    s4 += x * x * x * x;
  }
  EXPECT_NEAR(s1 / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.01);
  EXPECT_NEAR(s4 / n, 3.0, 0.05);
  CounterRng u(2);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
}

TEST(RealizationSeed, DependsOnEveryCoordinate) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n)
      for (std::uint64_t p = 0; p < 3; ++p)
        for (std::uint64_t s = 0; s < 3; ++s) seen.insert(realization_seed(7, m, n, p, s));
  EXPECT_EQ(seen.size(), 81U);
  EXPECT_EQ(realization_seed(7, 1, 2, 3, 4), realization_seed(7, 1, 2, 3, 4));
}

TEST(SampleGaussian, ExactHermiticityAndDeterminism) {
  for (auto cls : {SymmetryClass::GOE, SymmetryClass::GUE, SymmetryClass::GSE}) {
    const Hamiltonian a = sample_gaussian(cls, 16, 99);
    const Hamiltonian b = sample_gaussian(cls, 16, 99);
    EXPECT_EQ(hermitian_gap(a.matrix), 0.0);
    EXPECT_TRUE(a.matrix == b.matrix);
  }
  EXPECT_THROW(sample_gaussian(SymmetryClass::GUE, 1, 0), ArgumentError);
}

TEST(SampleGaussian, GoeIsRealSymmetric) {
  const Hamiltonian h = sample_gaussian(SymmetryClass::GOE, 32, 5);
  EXPECT_EQ(h.matrix.imag().cwiseAbs().maxCoeff(), 0.0);
}

TEST(SampleGaussian, GseKramersPairs) {
  for (int dim : {2, 5, 16}) {
    const Hamiltonian h = sample_gaussian(SymmetryClass::GSE, dim, 3);
    ASSERT_EQ(h.dim(), 2 * dim);
    const Eigen::VectorXd ev = eigenvalues(h.matrix);
    for (Eigen::Index k = 0; k < ev.size(); k += 2) {
      EXPECT_LT(ev[k + 1] - ev[k], 1e-8);
      if (k + 2 < ev.size()) {
        EXPECT_GT(ev[k + 2] - ev[k + 1], 1e-8);
      }
    }
  }
}

TEST(SampleGaussian, EntryVariances) {
  double gue_re = 0, gue_im = 0, gue_diag = 0, goe_off = 0, goe_diag = 0;
  int off = 0, diag = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto gue = sample_gaussian(SymmetryClass::GUE, 64, seed).matrix;
    const auto goe = sample_gaussian(SymmetryClass::GOE, 64, seed).matrix;
    for (int i = 0; i < 64; ++i) {
      gue_diag += std::norm(gue(i, i));
      goe_diag += std::norm(goe(i, i));
      ++diag;
      for (int j = i + 1; j < 64; ++j) {
        gue_re += gue(i, j).real() * gue(i, j).real();
        gue_im += gue(i, j).imag() * gue(i, j).imag();
        goe_off += std::norm(goe(i, j));
        ++off;
      }
    }
  }
  EXPECT_NEAR(gue_re / off, 0.5, 0.02);
  EXPECT_NEAR(gue_im / off, 0.5, 0.02);
  EXPECT_NEAR(gue_diag / diag, 1.0, 0.1);
  EXPECT_NEAR(goe_off / off, 1.0, 0.04);
  EXPECT_NEAR(goe_diag / diag, 2.0, 0.2);
}

TEST(BuildRp, OffDiagonalScale) {
  const Hamiltonian h0 = build_rp(2, 0.0, 17);
  const Hamiltonian h2 = build_rp(2, 2.0, 17);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const complex_t expected = i == j ? h0.matrix(i, j) : h0.matrix(i, j) / 4.0;
      EXPECT_NEAR(std::abs(h2.matrix(i, j) - expected), 0.0, 1e-15);
    }
  EXPECT_EQ(hermitian_gap(h2.matrix), 0.0);
}

TEST(BuildRp, Validation) {
  EXPECT_THROW(build_rp(1, 0.0, 0), ArgumentError);
  EXPECT_THROW(build_rp(4, -0.1, 0), ArgumentError);
  EXPECT_THROW(build_rp(4, 10.5, 0), ArgumentError);
}

// Two-sample variance comparison of off-diagonal real parts.
void expect_gue_like(const std::vector<double>& sample) {
  double mean = 0;
  for (double x : sample) mean += x;
  mean /= static_cast<double>(sample.size());
  double var = 0;
  for (double x : sample) var += (x - mean) * (x - mean);
  var /= static_cast<double>(sample.size() - 1);
  // Var of the sample variance of a normal with variance 1/2 is 2 (1/2)^2 / (n-1).
  const double se = std::sqrt(2.0 * 0.25 / static_cast<double>(sample.size() - 1));
  EXPECT_LT(std::abs(var - 0.5), 3.0 * std::sqrt(2.0) * se);
}

TEST(BuildRpAndPlrbm, ZeroControlOffDiagonalMatchesGue) {
  std::vector<double> rp, plrbm, gue;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = build_rp(6, 0.0, seed).matrix;
    const auto b = build_plrbm(6, 0.0, 1.0, seed).matrix;
    const auto c = sample_gaussian(SymmetryClass::GUE, 64, seed + 100).matrix;
    for (int i = 0; i < 64; ++i)
      for (int j = i + 1; j < 64; ++j) {
        rp.push_back(a(i, j).real());
        plrbm.push_back(b(i, j).real());
        gue.push_back(c(i, j).real());
      }
  }
  ASSERT_GE(rp.size(), 10000U);
  expect_gue_like(rp);
  expect_gue_like(plrbm);
  expect_gue_like(gue);
}

TEST(Plrbm, ProfileAndZeroExponent) {
  EXPECT_DOUBLE_EQ(plrbm_profile(2.0, 1.0, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(plrbm_profile(0.0, 1.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(plrbm_profile(1.0, 3.0, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(plrbm_profile(4.0, 2.0, 2.0), 0.25);
  const Hamiltonian h = build_plrbm(4, 0.0, 1.0, 8);
  const Hamiltonian g = sample_gaussian(SymmetryClass::GUE, 16, 8);
  EXPECT_TRUE(h.matrix == g.matrix);
  EXPECT_THROW(build_plrbm(4, 1.0, 0.0, 0), ArgumentError);
}

TEST(Plrbm, LargeExponentIsBandDominated) {
  const Hamiltonian h = build_plrbm(6, 10.0, 1.0, 4);
  double near = 0, far = 0;
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) (std::abs(i - j) <= 1 ? near : far) += std::norm(h.matrix(i, j));
  EXPECT_LT(far, 1e-3 * near);
}

ComplexMatrix zz(int n) {
  // Independent diagonal construction of sum_i Z_i Z_{i+1} on an open chain.
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n));
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    double e = 0;
    for (int q = 0; q + 1 < n; ++q) e += (((b >> q) & 1) == ((b >> (q + 1)) & 1)) ? 1.0 : -1.0;
    m(b, b) = e;
  }
  return m;
}

TEST(Ising, EqualsClassicalZZChain) {
  for (int m : {4, 6, 8, 10}) {
    const Hamiltonian h = build_ising_majorana(m, 1.0);
    EXPECT_LT(max_abs(h.matrix - zz(m / 2)), 1e-14);
    const Hamiltonian h2 = build_ising_majorana(m, 2.5);
    EXPECT_LT(max_abs(h2.matrix - 2.5 * zz(m / 2)), 1e-14);
  }
  EXPECT_THROW(build_ising_majorana(5, 1.0), ArgumentError);
}

TEST(Ising, GroundStatesAreAntiferromagnetic) {
  const Hamiltonian h = build_ising_majorana(8, 1.0);
  const Eigen::VectorXd ev = eigenvalues(h.matrix);
  EXPECT_NEAR(ev[0], -3.0, 1e-12);
  EXPECT_NEAR(ev[1], -3.0, 1e-12);
  EXPECT_GT(ev[2], -3.0 + 1.0);
  EXPECT_NEAR(h.matrix(0b0101, 0b0101).real(), -3.0, 1e-14);
  EXPECT_NEAR(h.matrix(0b1010, 0b1010).real(), -3.0, 1e-14);
}

TEST(Syk4, FourMajoranasSpectrum) {
  const Hamiltonian h = build_syk4(4, 1.0, 12);
  const Eigen::VectorXd ev = eigenvalues(h.matrix);
  EXPECT_NEAR(ev[0], ev[1], 1e-12);
  EXPECT_NEAR(ev[2], ev[3], 1e-12);
  EXPECT_NEAR(ev[0], -ev[3], 1e-12);
  EXPECT_GT(ev[3], 0.0);
  // H = -J psi1 psi2 psi3 psi4 and (psi1 psi2 psi3 psi4)^2 = 1, so H^2 = J^2.
  const ComplexMatrix sq = h.matrix * h.matrix;
  EXPECT_LT(max_abs(sq - ev[3] * ev[3] * ComplexMatrix::Identity(4, 4)), 1e-12);
}

TEST(Syk4, CouplingVariance) {
  // Tr(H^2)/L = sum J_ijkl^2, expectation C(M,4) * 6 J^2 / M^3.
  const int m = 8;
  double acc = 0;
  const int draws = 400;
  for (int s = 0; s < draws; ++s) {
    const auto h = build_syk4(m, 1.0, static_cast<std::uint64_t>(s)).matrix;
    acc += (h * h).trace().real() / 16.0;
  }
  const double expected = 70.0 * 6.0 / 512.0;
  // Each draw is a chi-square with 70 dof scaled by sigma^2; relative sd sqrt(2/70)/sqrt(400).
  EXPECT_NEAR(acc / draws / expected, 1.0, 5.0 * std::sqrt(2.0 / 70.0) / 20.0);
}

TEST(Syk4, MatchesDenseMajoranaProducts) {
  const int m = 6;
  const Hamiltonian h = build_syk4(m, 1.0, 77);
  // Recover the couplings in draw order and rebuild with dense matrices.
  CounterRng rng(77);
  const double sigma = std::sqrt(6.0 / (m * m * m));
  ComplexMatrix ref = ComplexMatrix::Zero(8, 8);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k)
        for (int l = k + 1; l <= m; ++l)
          ref -= sigma * rng.normal() * majorana_operator(i, m) * majorana_operator(j, m) *
                 majorana_operator(k, m) * majorana_operator(l, m);
  EXPECT_LT(max_abs(h.matrix - ref), 1e-13);
}

TEST(SykIsing, CommutesWithParity) {
  for (int m : {4, 6, 8, 10, 12}) {
    const ComplexMatrix p = fermion_parity(m);
    for (double lambda : {0.0, 0.3, 1.0}) {
      const ComplexMatrix h = build_syk_ising(m, lambda, 1.0, 1.0, 5).matrix;
      EXPECT_LT(max_abs(h * p - p * h), 1e-10) << m << " " << lambda;
      EXPECT_EQ(hermitian_gap(h), 0.0);
    }
  }
}

TEST(SykIsing, Endpoints) {
  const auto syk = build_syk4(8, 1.0, 3).matrix;
  const auto ising = build_ising_majorana(8, 1.0).matrix;
  EXPECT_TRUE(build_syk_ising(8, 0.0, 1.0, 1.0, 3).matrix == syk);
  EXPECT_TRUE(build_syk_ising(8, 1.0, 1.0, 1.0, 3).matrix == ising);
  EXPECT_THROW(build_syk_ising(8, 1.1, 1.0, 1.0, 3), ArgumentError);
  EXPECT_THROW(build_syk_ising(7, 0.5, 1.0, 1.0, 3), ArgumentError);
}

TEST(SymmetryTable, Classes) {
  EXPECT_EQ(classify_syk_symmetry(10), SymmetryClass::GUE);
  EXPECT_EQ(classify_syk_symmetry(16), SymmetryClass::GOE);
  EXPECT_EQ(classify_syk_symmetry(12), SymmetryClass::GSE);
  EXPECT_EQ(classify_syk_symmetry(8), SymmetryClass::GOE);
  EXPECT_EQ(classify_syk_symmetry(6), SymmetryClass::GUE);
  EXPECT_THROW(classify_syk_symmetry(9), ArgumentError);
}

TEST(Build, DispatchAndNames) {
  EnsembleSpec spec;
  spec.model = Model::GSE;
  spec.size = 3;
  spec.seed = 4;
  EXPECT_EQ(build(spec).dim(), 8);
  spec.model = Model::SYK4_ISING;
  spec.size = 8;
  spec.control = 0.25;
  EXPECT_EQ(build(spec).dim(), 16);
  EXPECT_EQ(spec.n_qubits(), 4);
  for (Model m : {Model::GOE, Model::GUE, Model::GSE, Model::RP, Model::PLRBM, Model::SYK4_ISING})
    EXPECT_EQ(model_from_string(to_string(m)), m);
  EXPECT_THROW(model_from_string("XYZ"), ArgumentError);
  EXPECT_EQ(symmetry_class_from_string("GSE"), SymmetryClass::GSE);
}

double spectral_kurtosis(double gamma) {
  std::vector<double> all;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Eigen::VectorXd ev = eigenvalues(build_rp(8, gamma, seed).matrix);
    all.insert(all.end(), ev.begin(), ev.end());
  }
  double m = 0;
  for (double x : all) m += x;
  m /= static_cast<double>(all.size());
  double m2 = 0, m4 = 0;
  for (double x : all) {
    const double d = (x - m) * (x - m);
    m2 += d;
    m4 += d * d;
  }
  m2 /= static_cast<double>(all.size());
  m4 /= static_cast<double>(all.size());
  return m4 / (m2 * m2);
}

TEST(BuildRp, SemicircleToGaussianKurtosis) {
  // Semicircle kurtosis 2, Gaussian 3.
  EXPECT_NEAR(spectral_kurtosis(0.0), 2.0, 0.1);
  EXPECT_NEAR(spectral_kurtosis(10.0), 3.0, 0.1);
}

}  // namespace
}  // namespace qcx
