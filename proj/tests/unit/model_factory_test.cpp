// Copyright 2026 The syklab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "syklab/couplings.hpp"
#include "syklab/errors.hpp"
#include "syklab/jordan_wigner.hpp"
#include "syklab/models.hpp"
#include "syklab/sectors.hpp"

namespace syklab {
namespace {

ModelSpec qudit(int d, int L, int q, std::uint64_t seed = 1) {
  ModelSpec s;
  s.family = ModelFamily::kQuditSyk;
  s.d = d;
  s.L = L;
  s.q = q;
  s.seed = seed;
  return s;
}

ModelSpec overlapping(int N, int M, int q_tilde = 2, std::uint64_t seed = 1) {
  ModelSpec s;
  s.family = ModelFamily::kOverlappingClustersSyk;
  s.N = N;
  s.M = M;
  s.q_tilde = q_tilde;
  s.seed = seed;
  return s;
}

ModelSpec gauged(int M, int L, std::uint64_t seed = 1) {
  ModelSpec s;
  s.family = ModelFamily::kGaugedClustersSyk;
  s.M = M;
  s.L = L;
  s.seed = seed;
  return s;
}

ModelSpec original(int N, std::uint64_t seed = 1) {
  ModelSpec s;
  s.family = ModelFamily::kOriginalSyk;
  s.N = N;
  s.seed = seed;
  return s;
}

ModelSpec clusters_spin(int L, std::uint64_t seed = 1) {
  ModelSpec s;
  s.family = ModelFamily::kClustersSpinSyk;
  s.L = L;
  s.seed = seed;
  return s;
}

std::vector<std::vector<int>> tuples(const CouplingTable& t) {
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k < t.count(); ++k) {
    const auto idx = t.index(k);
    out.emplace_back(idx.begin(), idx.end());
  }
  return out;
}

TEST(Variance, QuditClosedForm) {
  EXPECT_DOUBLE_EQ(qudit_variance(2, 1, 1), 1.0 / 3.0);
  EXPECT_NEAR(qudit_variance(3, 2, 2), 9.0 / 256.0, 1e-17);
  EXPECT_THROW(qudit_variance(1, 2, 1), ParameterError);
  EXPECT_THROW(qudit_variance(3, 2, 3), ParameterError);
  EXPECT_THROW(qudit_variance(3, 2, 0), ParameterError);
}

TEST(Variance, OverlappingM2ClosedForm) {
  EXPECT_NEAR(overlapping_m2_variance(8), 7.0 / 128.0, 1e-17);
  for (int N = 6; N <= 40; N += 2) {
    const double n = N;
    EXPECT_NEAR(overlapping_m2_variance(N), (n - 1) / (2 * n * n), 1e-15) << N;
  }
  EXPECT_NEAR(overlapping_m2_variance(4000) * 2 * 4000, 1.0, 1e-3);
  EXPECT_THROW(overlapping_m2_variance(7), ParameterError);
  EXPECT_THROW(overlapping_m2_variance(4), ParameterError);
}

TEST(Couplings, Counts) {
  EXPECT_EQ(coupling_count(qudit(3, 2, 2)), 64u);
  EXPECT_EQ(enumerate_couplings(qudit(3, 2, 2)).count(), 64u);
  EXPECT_EQ(coupling_count(clusters_spin(2)), 81u);
  EXPECT_EQ(coupling_count(overlapping(8, 2)), 15u);
  EXPECT_EQ(coupling_count(original(8)), 70u);
  EXPECT_EQ(coupling_count(overlapping(12, 2)), 45u);
  EXPECT_EQ(coupling_count(original(12)), 495u);
  for (int L = 2; L <= 5; ++L) {
    for (int q = 1; q <= L; ++q) {
      const auto s = qudit(3, L, q);
      EXPECT_EQ(coupling_count(s), binomial(L, q) * static_cast<std::uint64_t>(std::pow(8, q)));
      EXPECT_EQ(enumerate_couplings(s).count(), coupling_count(s));
    }
  }
}

TEST(Couplings, OverlappingM2TuplesAtN8) {
  // J_rs couples chi_r chi_{r+1} chi_s chi_{s+1} with r in 1..5, s in r+2..7.
  std::vector<std::vector<int>> expect;
  for (int r = 1; r <= 5; ++r) {
    for (int s = r + 2; s <= 7; ++s) expect.push_back({r, r + 1, s, s + 1});
  }
  EXPECT_EQ(tuples(enumerate_couplings(overlapping(8, 2))), expect);
}

TEST(CouplingsProperty, OverlappingMatchesBruteForce) {
  for (int M = 2; M <= 4; ++M) {
    for (int N = 8; N <= 16; N += 2) {
      for (int qt = 2; qt <= 3; ++qt) {
        const auto spec = overlapping(N, M, qt);
        auto got = tuples(enumerate_couplings(spec));
        auto want = oracle::brute_overlapping_tuples(N, M, qt);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        EXPECT_EQ(got, want) << "N=" << N << " M=" << M << " qt=" << qt;
        EXPECT_EQ(coupling_count(spec), want.size());
      }
    }
  }
}

TEST(CouplingsProperty, TermCountBoundedByClusterScaling) {
  // With L = N/M clusters the q_tilde = 2 count stays below L^2 M^4.
  for (int M = 2; M <= 4; ++M) {
    for (int N = 8; N <= 16; N += 2) {
      const double L = static_cast<double>(N) / M;
      EXPECT_LE(static_cast<double>(coupling_count(overlapping(N, M))), L * L * std::pow(M, 4));
    }
  }
}

TEST(Couplings, LargeWindowGivesOrderedSykSupport) {
  const int N = 10;
  const auto big = tuples(enumerate_couplings(overlapping(N, N)));
  const auto syk = tuples(enumerate_couplings(original(N)));
  const std::set<std::vector<int>> syk_set(syk.begin(), syk.end());
  for (const auto& t : big) EXPECT_TRUE(syk_set.count(t));
  EXPECT_EQ(big.size(), syk.size());
  // A window smaller than N gives a strict subset.
  EXPECT_LT(coupling_count(overlapping(N, 4)), syk.size());
}

TEST(Couplings, ReproducibleAndSampleDependent) {
  for (const auto& spec : {qudit(3, 3, 2, 9), overlapping(12, 3, 2, 9), gauged(4, 3, 9), clusters_spin(3, 9)}) {
    EXPECT_EQ(draw_couplings(spec, 4), draw_couplings(spec, 4));
    EXPECT_NE(draw_couplings(spec, 4).values, draw_couplings(spec, 5).values);
    auto other = spec;
    other.seed = 10;
    EXPECT_NE(draw_couplings(spec, 4).values, draw_couplings(other, 4).values);
  }
}

TEST(Couplings, CounterGaussianIsStandardNormal) {
  std::vector<double> x;
  for (int k = 0; k < 20000; ++k) {
    const int idx[2] = {k, 3};
    x.push_back(counter_gaussian(5, 0, 1, idx));
  }
  double mean = 0, m2 = 0;
  for (double v : x) mean += v;
  mean /= x.size();
  for (double v : x) m2 += (v - mean) * (v - mean);
  m2 /= x.size();
  EXPECT_NEAR(mean, 0.0, 4.0 / std::sqrt(20000.0));
  EXPECT_NEAR(m2, 1.0, 0.04);
}

TEST(Models, QuditSingleTermIsZZ) {
  const auto spec = qudit(2, 2, 2);
  auto table = enumerate_couplings(spec);
  for (std::size_t k = 0; k < table.count(); ++k) {
    const auto idx = table.index(k);
    table.values[k] = (idx[1] == 3 && idx[3] == 3) ? 1.0 : 0.0;
  }
  const auto h = assemble_hamiltonian(spec, table).dense();
  EXPECT_LT(oracle::max_abs_diff(h.matrix, oracle::pauli_string("ZZ")), 1e-15);
}

TEST(Models, QuditIsHermitianTracelessAndMatchesOracle) {
  const auto spec = qudit(3, 3, 2, 4);
  const auto inst = build_qudit_syk(spec, 2);
  const auto h = inst.dense();
  EXPECT_TRUE(h.hermitian);
  EXPECT_LT(std::abs(h.matrix.trace()), 1e-12);
  oracle::Matrix expect = oracle::Matrix::Zero(27, 27);
  const auto& c = inst.couplings();
  for (std::size_t k = 0; k < c.count(); ++k) {
    const auto idx = c.index(k);
    expect += c.values[k] * oracle::embed(oracle::gell_mann(3, idx[1]), idx[0], 3, 3) *
              oracle::embed(oracle::gell_mann(3, idx[3]), idx[2], 3, 3);
  }
  EXPECT_LT(oracle::max_abs_diff(h.matrix, expect), 1e-12);
}

TEST(ModelsProperty, QuditEnergyVarianceIsOne) {
  for (int d = 2; d <= 4; ++d) {
    for (int L = 2; L <= 4; ++L) {
      for (int q = 2; q <= std::min(3, L); ++q) {
        const auto spec = qudit(d, L, q, 77);
        const double dim = std::pow(d, L);
        std::vector<double> x;
        for (std::uint64_t s = 0; s < 200; ++s) {
          const auto h = build_hamiltonian(spec, s).dense().matrix;
          x.push_back(h.squaredNorm() / dim);  // Tr H^2 / d^L
        }
        double mean = 0, var = 0;
        for (double v : x) mean += v;
        mean /= x.size();
        for (double v : x) var += (v - mean) * (v - mean);
        const double se = std::sqrt(var / (x.size() - 1) / x.size());
        EXPECT_LT(std::abs(mean - 1.0), 3 * se + 1e-12) << "d=" << d << " L=" << L << " q=" << q;
      }
    }
  }
}

TEST(Models, QuditEnergyVarianceAtD3L4WithinTwoPercent) {
  const auto spec = qudit(3, 4, 2, 5);
  double mean = 0;
  for (std::uint64_t s = 0; s < 200; ++s) mean += build_hamiltonian(spec, s).dense().matrix.squaredNorm() / 81.0;
  EXPECT_NEAR(mean / 200, 1.0, 0.02);
}

TEST(Models, ClustersSpinTermSupport) {
  const auto inst = build_clusters_spin_syk(clusters_spin(3, 2), 0);
  EXPECT_EQ(inst.term_count(), 3u * 81u);
  const auto& c = inst.couplings();
  for (std::size_t k = 0; k < c.count(); ++k) {
    const auto idx = c.index(k);
    const auto& p = inst.pauli_terms().terms[k].string;
    const std::vector<int> want{2 * idx[0], 2 * idx[0] + 1, 2 * idx[3], 2 * idx[3] + 1};
    EXPECT_EQ(p.support(), want);
    EXPECT_EQ(p.phase_exponent(), 0);
  }
  EXPECT_TRUE(inst.dense().hermitian);
}

TEST(Models, ClustersSpinXYRestrictionIsPairwiseProduct) {
  // Letters restricted to {X, Y} give exactly the 16 products of two XY bonds
  // per cluster pair.
  const auto inst = build_clusters_spin_syk(clusters_spin(2, 3), 0);
  std::set<std::string> got;
  for (const auto& t : inst.pauli_terms().terms) {
    const auto s = t.string.str();
    if (s.find('Z') == std::string::npos) got.insert(s);
  }
  std::set<std::string> want;
  for (const char* a : {"XX", "XY", "YX", "YY"}) {
    for (const char* b : {"XX", "XY", "YX", "YY"}) want.insert("+" + std::string(a) + b);
  }
  EXPECT_EQ(got, want);
}

TEST(Models, OverlappingM2IsRealSymmetric) {
  for (int N = 6; N <= 12; N += 2) {
    const auto inst = build_overlapping_clusters_syk(overlapping(N, 2, 2, 3), 1);
    for (const auto& t : inst.pauli_terms().terms) EXPECT_EQ(t.string.count_y(), 0) << t.string.str();
    const auto h = inst.dense();
    EXPECT_TRUE(h.real);
    EXPECT_EQ(h.matrix.imag().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ((h.matrix.real() - h.matrix.real().transpose()).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(Models, OverlappingSingleTermMatchesBilinears) {
  const auto spec = overlapping(8, 2);
  auto table = enumerate_couplings(spec);
  for (std::size_t k = 0; k < table.count(); ++k) table.values[k] = (table.index(k)[0] == 1 && table.index(k)[2] == 3);
  const auto h = assemble_hamiltonian(spec, table).dense().matrix;
  const oracle::Matrix want = oracle::majorana(1, 4) * oracle::majorana(2, 4) * oracle::majorana(3, 4) *
                              oracle::majorana(4, 4);
  EXPECT_LT(oracle::max_abs_diff(h, want), 1e-15);
  const auto viaBilinears = build_dense(majorana_bilinear(1, 4) * majorana_bilinear(3, 4)).matrix;
  EXPECT_LT(oracle::max_abs_diff(h, viaBilinears), 1e-15);
  // chi_1 chi_2 = iZ_1 and chi_3 chi_4 = iZ_2, so the term is -Z_1 Z_2.
  EXPECT_EQ(majorana_bilinear(1, 4) * majorana_bilinear(3, 4), PauliString::parse("-ZZII"));
}

TEST(ModelsProperty, FermionicModelsMatchMajoranaOracle) {
  std::vector<ModelSpec> specs{overlapping(8, 3, 2, 2), overlapping(10, 2, 3, 2), gauged(4, 2, 2), original(8, 2),
                               overlapping(8, 4, 3, 2)};
  for (const auto& spec : specs) {
    const auto inst = build_hamiltonian(spec, 3);
    const int n = spec.num_qubits();
    oracle::Matrix want = oracle::Matrix::Zero(1 << n, 1 << n);
    const auto& c = inst.couplings();
    for (std::size_t k = 0; k < c.count(); ++k) {
      oracle::Matrix prod = oracle::identity(1 << n);
      for (int r : c.index(k)) prod = (prod * oracle::majorana(r, n)).eval();
      // Odd q_tilde products are anti-Hermitian and get a factor i.
      if (oracle::max_abs_diff(prod, prod.adjoint()) > 1e-12) prod *= oracle::cd(0.0, 1.0);
      want += c.values[k] * prod;
    }
    const auto h = inst.dense();
    EXPECT_LT(oracle::max_abs_diff(h.matrix, want), 1e-12) << spec.tag();
    EXPECT_LT(oracle::max_abs_diff(h.matrix, h.matrix.adjoint()), 1e-13) << spec.tag();
    EXPECT_LT(std::abs(h.matrix.trace()), 1e-12);
  }
}

TEST(Models, SykMatchedVarianceGivesSykEnergyScale) {
  // Tr H^2 / dim = J^2 * count, and the rule fixes it to (6/N^3) C(N,4).
  for (const auto& spec : {overlapping(12, 3), overlapping(12, 4, 3), gauged(4, 3)}) {
    const auto t = enumerate_couplings(spec);
    const double N = spec.majorana_count();
    EXPECT_NEAR(t.variance * t.count(), 6.0 / (N * N * N) * binomial(spec.majorana_count(), 4), 1e-14);
  }
  EXPECT_DOUBLE_EQ(enumerate_couplings(original(10)).variance, 6.0 / 1000.0);
}

TEST(Models, GaugedClusterParitiesCommute) {
  for (int M : {4, 6}) {
    const auto spec = gauged(M, M == 4 ? 3 : 2, 4);
    const auto inst = build_gauged_clusters_syk(spec, 0);
    const auto h = inst.dense().matrix;
    for (int j = 0; j < spec.L; ++j) {
      const auto q = build_dense(make_cluster_parity(M, spec.L, j).string).matrix;
      EXPECT_LT(oracle::max_abs_diff(h * q, q * h), 1e-12) << "M=" << M << " cluster " << j;
    }
  }
}

TEST(Models, GaugedM4ParityIsZZOnClusterQubits) {
  const auto q = make_cluster_parity(4, 3, 1);
  EXPECT_EQ(q.string, PauliString::parse("IIZZII"));
}

TEST(Models, FamilyMismatchAndBadParameters) {
  EXPECT_THROW(build_qudit_syk(overlapping(8, 2), 0), ParameterError);
  EXPECT_THROW(build_original_syk(qudit(2, 2, 2), 0), ParameterError);
  EXPECT_THROW(build_hamiltonian(gauged(5, 2), 0), ParameterError);
  EXPECT_THROW(build_hamiltonian(overlapping(9, 2), 0), ParameterError);
  EXPECT_THROW(build_hamiltonian(qudit(2, 2, 3), 0), ParameterError);
  EXPECT_THROW(build_hamiltonian(original(30), 0).dense(), CapacityError);
}

TEST(Models, QubitQuditHasPauliForm) {
  const auto inst = build_hamiltonian(qudit(2, 3, 2, 8), 0);
  const auto p = inst.as_pauli_sum();
  ASSERT_TRUE(p.has_value());
  EXPECT_LT(oracle::max_abs_diff(build_dense(*p).matrix, inst.dense().matrix), 1e-14);
  EXPECT_FALSE(build_hamiltonian(qudit(3, 2, 2), 0).as_pauli_sum().has_value());
  EXPECT_THROW(build_hamiltonian(qudit(3, 2, 2), 0).pauli_terms(), AlgebraError);
}

TEST(ModelSpecConfig, RoundTrip) {
  for (const auto& spec : {qudit(3, 5, 3, 42), overlapping(14, 3, 2, 7), gauged(6, 2, 1), original(10, 3),
                           clusters_spin(4, 0)}) {
    EXPECT_EQ(model_spec_from(to_key_values(spec)).tag(), spec.tag());
    auto back = model_spec_from(to_key_values(spec));
    if (spec.family == ModelFamily::kGaugedClustersSyk) back.N = spec.N;
    EXPECT_EQ(back, spec);
  }
}

}  // namespace
}  // namespace syklab
