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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "syklab/errors.hpp"
#include "syklab/models.hpp"
#include "syklab/sectors.hpp"

namespace syklab {
namespace {

ModelSpec overlapping_m2(int N, std::uint64_t seed = 3) {
  ModelSpec s;
  s.family = ModelFamily::kOverlappingClustersSyk;
  s.N = N;
  s.M = 2;
  s.q_tilde = 2;
  s.seed = seed;
  return s;
}

ModelSpec gauged(int M, int L, std::uint64_t seed = 3) {
  ModelSpec s;
  s.family = ModelFamily::kGaugedClustersSyk;
  s.M = M;
  s.L = L;
  s.seed = seed;
  return s;
}

// Joint eigenspace by diagonalizing the dense projector.
std::vector<double> projector_spectrum(const Eigen::MatrixXcd& h, const std::vector<ChargeValue>& charges) {
  const auto dim = h.rows();
  oracle::Matrix proj = oracle::identity(dim);
  for (const auto& c : charges) {
    const auto q = build_dense(c.charge.string).matrix;
    proj = (proj * (oracle::identity(dim) + double(c.eigenvalue) * q) * 0.5).eval();
  }
  Eigen::SelfAdjointEigenSolver<oracle::Matrix> es(proj);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (es.eigenvalues()(k) > 0.5) keep.push_back(k);
  }
  oracle::Matrix basis(dim, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) basis.col(k) = es.eigenvectors().col(keep[k]);
  return oracle::eigenvalues(basis.adjoint() * h * basis);
}

double max_pair_gap(const std::vector<double>& e) {
  double g = 0.0;
  for (std::size_t k = 0; k + 1 < e.size(); k += 2) g = std::max(g, e[k + 1] - e[k]);
  return g;
}

TEST(Charges, ParticleHoleAtN16) {
  const auto p = make_charge(ChargeKind::kParticleHole, 16);
  EXPECT_EQ(p.string, PauliString::parse("YXYXYXYX"));
  const auto m = build_dense(p.string).matrix;
  EXPECT_LT(oracle::max_abs_diff(m * m, oracle::identity(256)), 1e-15);
  EXPECT_TRUE(p.commutes_with_parity);
  EXPECT_TRUE(p.real_symmetric);
  EXPECT_EQ(m.imag().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Charges, ParticleHoleAnticommutesWithParityAtN10) {
  const auto p = build_dense(make_charge(ChargeKind::kParticleHole, 10).string).matrix;
  const auto z = build_dense(make_charge(ChargeKind::kGlobalParity, 10).string).matrix;
  EXPECT_LT(oracle::max_abs_diff(p * z, -z * p), 1e-15);
  EXPECT_GT(oracle::max_abs_diff(p * z, z * p), 1.0);
  EXPECT_FALSE(make_charge(ChargeKind::kParticleHole, 10).commutes_with_parity);
  EXPECT_FALSE(make_charge(ChargeKind::kParticleHole, 14).commutes_with_parity);
}

TEST(Charges, ParticleHoleImaginaryAntisymmetricAtN12) {
  const auto c = make_charge(ChargeKind::kParticleHole, 12);
  const auto p = build_dense(c.string).matrix;
  EXPECT_EQ(p.real().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LT(oracle::max_abs_diff(p.transpose(), -p), 1e-15);
  EXPECT_FALSE(c.real_symmetric);
  EXPECT_TRUE(c.commutes_with_parity);
}

TEST(Charges, ParityAndErrors) {
  EXPECT_EQ(make_charge(ChargeKind::kGlobalParity, 8).string, PauliString::parse("ZZZZ"));
  EXPECT_THROW(make_charge(ChargeKind::kGlobalParity, 9), ParameterError);
  EXPECT_THROW(make_cluster_parity(4, 2, 2), IndexError);
}

TEST(ChargesProperty, ParticleHoleAlgebraByResidue) {
  for (int N = 6; N <= 24; N += 2) {
    const auto c = make_charge(ChargeKind::kParticleHole, N);
    const auto z = make_charge(ChargeKind::kGlobalParity, N).string;
    EXPECT_EQ(c.string.num_qubits(), N / 2);
    EXPECT_EQ((c.string * c.string).is_identity(), true);
    EXPECT_EQ(c.string.commutes_with(z), N % 8 == 0 || N % 8 == 4) << N;
    if (N % 4 == 0) {
      EXPECT_EQ(c.string.is_real(), N % 8 == 0) << N;
    }
  }
}

TEST(Sectors, ZZInParityEvenSector) {
  ModelSpec spec;
  spec.family = ModelFamily::kQuditSyk;
  spec.d = 2;
  spec.L = 2;
  spec.q = 2;
  const HamiltonianInstance h(spec, 0, CouplingTable{}, PauliSum{2, {{1.0, PauliString::parse("ZZ")}}});
  const std::vector<ChargeValue> charges{{make_charge(ChargeKind::kGlobalParity, 4), 1}};
  const auto basis = sector_basis(2, charges);
  ASSERT_EQ(basis.dim(), 2u);
  EXPECT_EQ(basis.columns[0], (SectorBasis::Column{{0, 1.0}}));
  EXPECT_EQ(basis.columns[1], (SectorBasis::Column{{3, 1.0}}));
  const auto s = project_sector(h, charges);
  EXPECT_EQ(s.eigenvalues, (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(s.label, "parity+");
  EXPECT_EQ(s.quantum_numbers.at("parity"), 1);
}

TEST(Sectors, NonCommutingChargesRejected) {
  const auto p = make_charge(ChargeKind::kParticleHole, 10);
  const auto z = make_charge(ChargeKind::kGlobalParity, 10);
  const std::vector<ChargeValue> charges{{z, 1}, {p, 1}};
  EXPECT_THROW(sector_basis(5, charges), AlgebraError);
}

TEST(Sectors, N10ParitySectorsShareSpectrum) {
  const auto h = build_hamiltonian(overlapping_m2(10), 0);
  const auto z = make_charge(ChargeKind::kGlobalParity, 10);
  const auto even = project_sector(h, std::vector<ChargeValue>{{z, 1}});
  const auto odd = project_sector(h, std::vector<ChargeValue>{{z, -1}});
  ASSERT_EQ(even.eigenvalues.size(), 16u);
  ASSERT_EQ(odd.eigenvalues.size(), 16u);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_NEAR(even.eigenvalues[k], odd.eigenvalues[k], 1e-10);
}

TEST(Sectors, N12ParitySectorIsPairDegenerate) {
  const auto h = build_hamiltonian(overlapping_m2(12), 0);
  const auto z = make_charge(ChargeKind::kGlobalParity, 12);
  for (int s : {1, -1}) {
    const auto e = project_sector(h, std::vector<ChargeValue>{{z, s}}).eigenvalues;
    ASSERT_EQ(e.size(), 32u);
    const double scale = e.back() - e.front();
    EXPECT_LT(max_pair_gap(e), 1e-10 * scale);
    // Distinct pairs are well separated.
    for (std::size_t k = 1; k + 1 < e.size(); k += 2) EXPECT_GT(e[k + 1] - e[k], 1e-6 * scale);
  }
}

TEST(Sectors, MatchesDenseProjectorOracle) {
  for (int N : {8, 10, 12}) {
    const auto h = build_hamiltonian(overlapping_m2(N, 5), 1);
    const auto policy = overlapping_m2_policy(N);
    const auto dense = h.dense().matrix;
    for (const auto& r : policy.sectors) {
      const auto got = project_sector(h, r.charges).eigenvalues;
      const auto want = projector_spectrum(dense, r.charges);
      ASSERT_EQ(got.size(), want.size()) << r.label;
      for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], want[k], 1e-11) << r.label;
    }
  }
}

TEST(SectorsProperty, ParticleHoleAndParityConservedForEvenN) {
  for (int N = 6; N <= 16; N += 2) {
    for (std::uint64_t sample = 0; sample < 3; ++sample) {
      const auto h = build_hamiltonian(overlapping_m2(N, 11), sample);
      EXPECT_NO_THROW(check_conserved(h.pauli_terms(), make_charge(ChargeKind::kParticleHole, N))) << N;
      EXPECT_NO_THROW(check_conserved(h.pauli_terms(), make_charge(ChargeKind::kGlobalParity, N))) << N;
      if (N <= 12) {
        const auto m = h.dense().matrix;
        const auto p = build_dense(make_charge(ChargeKind::kParticleHole, N).string).matrix;
        const double norm = m.cwiseAbs().maxCoeff();
        EXPECT_LT(oracle::max_abs_diff(m * p, p * m), 1e-12 * norm * m.rows());
      }
    }
  }
}

TEST(Sectors, CheckConservedRejectsBrokenCharge) {
  const PauliSum h{2, {{1.0, PauliString::parse("XI")}}};
  ChargeOperator z;
  z.string = PauliString::parse("ZZ");
  EXPECT_THROW(check_conserved(h, z), AlgebraError);
}

TEST(SectorsProperty, DimensionsPartitionAndRealityByResidue) {
  for (int N = 6; N <= 16; N += 2) {
    const auto h = build_hamiltonian(overlapping_m2(N, 2), 0);
    const auto z = make_charge(ChargeKind::kGlobalParity, N);
    std::vector<SectorRequest> requests;
    if (N % 8 == 0) {
      requests = overlapping_m2_policy(N).sectors;
    } else {
      requests = {{"parity+", {{z, 1}}}, {"parity-", {{z, -1}}}};
    }
    std::size_t total = 0;
    for (const auto& r : requests) {
      const auto basis = sector_basis(N / 2, r.charges);
      total += basis.dim();
      const auto block = restrict_operator(h.pauli_terms(), basis);
      EXPECT_TRUE(basis.real);
      EXPECT_LT(block.imag().cwiseAbs().maxCoeff(), 1e-14) << N << " " << r.label;
      EXPECT_LT(oracle::max_abs_diff(block, block.transpose()), 1e-12);
    }
    EXPECT_EQ(total, std::size_t{1} << (N / 2)) << N;
    if (N % 8 == 4) {
      // Splitting further by P leaves blocks that cannot be made real.
      const auto p = make_charge(ChargeKind::kParticleHole, N);
      for (int s : {1, -1}) {
        const std::vector<ChargeValue> charges{{z, 1}, {p, s}};
        const auto block = restrict_operator(h.pauli_terms(), sector_basis(N / 2, charges));
        EXPECT_GT(block.imag().cwiseAbs().maxCoeff(), 1e-3) << N;
        EXPECT_FALSE(project_sector(h, charges).real_block);
      }
    }
  }
}

TEST(Policy, ResidueCases) {
  const auto p10 = overlapping_m2_policy(10);
  ASSERT_EQ(p10.sectors.size(), 1u);
  EXPECT_EQ(p10.sectors[0].label, "parity+");
  EXPECT_EQ(p10.expected_class, SpectralClass::kGOE);
  const auto p12 = overlapping_m2_policy(12);
  EXPECT_EQ(p12.sectors.size(), 2u);
  EXPECT_TRUE(p12.collapse_pairs);
  EXPECT_EQ(p12.degeneracy_factor, 2);
  EXPECT_EQ(p12.expected_class, SpectralClass::kGUE);
  const auto p16 = overlapping_m2_policy(16);
  ASSERT_EQ(p16.sectors.size(), 4u);
  std::vector<std::string> labels;
  for (const auto& r : p16.sectors) labels.push_back(r.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"parity+_P+", "parity+_P-", "parity-_P+", "parity-_P-"}));
  EXPECT_TRUE(p16.drop_zero_modes);
  EXPECT_EQ(p16.expected_class, SpectralClass::kGOE);
  EXPECT_EQ(overlapping_m2_policy(14).expected_class, SpectralClass::kGOE);
}

TEST(Policy, N10KeepsOneSector) {
  const auto h = build_hamiltonian(overlapping_m2(10), 0);
  const auto z = make_charge(ChargeKind::kGlobalParity, 10);
  std::vector<SectorSpectrum> in{project_sector(h, std::vector<ChargeValue>{{z, 1}}),
                                 project_sector(h, std::vector<ChargeValue>{{z, -1}})};
  const auto out = apply_policy(in, 10);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].label, "parity+");
}

TEST(Policy, N12SyntheticDoubledSpectrum) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<SectorSpectrum> in;
  std::vector<std::vector<double>> distinct;
  for (const char* label : {"parity+", "parity-"}) {
    std::vector<double> d(16);
    for (auto& x : d) x = u(rng);
    std::sort(d.begin(), d.end());
    SectorSpectrum s;
    s.label = label;
    for (double x : d) s.eigenvalues.insert(s.eigenvalues.end(), {x, x});
    s.dim = 32;
    in.push_back(s);
    distinct.push_back(d);
  }
  const auto out = apply_policy(in, 12);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].eigenvalues, distinct[0]);
  EXPECT_EQ(out[1].eigenvalues, distinct[1]);
  EXPECT_EQ(out[0].applied, DegeneracyHandling::kPairsCollapsed);
  // A broken pair is reported rather than silently merged.
  in[0].eigenvalues[1] += 0.1;
  EXPECT_THROW(apply_policy(in, 12), NumericalError);
}

TEST(Policy, N16FourSectorsAndCoverage) {
  const auto h = build_hamiltonian(overlapping_m2(16), 0);
  const auto out = resolve_sectors(h, overlapping_m2_policy(16));
  ASSERT_EQ(out.size(), 4u);
  std::size_t total = 0;
  for (const auto& s : out) {
    total += s.eigenvalues.size() + s.excluded_zero_modes;
    EXPECT_EQ(s.quantum_numbers.size(), 2u);
    EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
  }
  EXPECT_EQ(total, 256u);
  EXPECT_EQ(out[1].quantum_numbers.at("P"), -1);
  EXPECT_EQ(out[2].quantum_numbers.at("parity"), -1);
  std::vector<SectorSpectrum> partial(out.begin(), out.begin() + 3);
  EXPECT_THROW(apply_policy(partial, 16), CoverageError);
}

TEST(Gauged, M4SectorsHaveDimensionTwoToL) {
  const int L = 3;
  std::size_t total = 0;
  for (int signs = 0; signs < (1 << L); ++signs) {
    std::vector<ChargeValue> charges;
    for (int j = 0; j < L; ++j) charges.push_back({make_cluster_parity(4, L, j), (signs >> j) & 1 ? -1 : 1});
    const auto b = sector_basis(2 * L, charges);
    EXPECT_EQ(b.dim(), std::size_t{1} << L);
    total += b.dim();
  }
  EXPECT_EQ(total, std::size_t{1} << (2 * L));
}

TEST(Gauged, M4GaugeSectorIsXYModel) {
  // Within a cluster, chi_a chi_b with a on the first qubit and b on the
  // second restricts to the single-qubit operator below when Z Z = +1:
  // XX -> X, YY -> -X, XY -> Y, YX -> Y.
  const auto spec = gauged(4, 3, 8);
  const auto inst = build_gauged_clusters_syk(spec, 2);
  auto pair_op = [](int a, int b) -> oracle::Matrix {
    const int fa = (a - 1) % 2, fb = (b - 1) % 2;  // 0 for X flavour, 1 for Y
    const oracle::cd i(0.0, 1.0);
    // chi_a chi_b = (X or Y)_0 Z_0 (X or Y)_1 = -i (Y or -X) (X or Y).
    if (fa == 0 && fb == 0) return -i * oracle::pauli('Y');  // -i Y X
    if (fa == 0 && fb == 1) return i * oracle::pauli('X');   // -i Y Y
    if (fa == 1 && fb == 0) return i * oracle::pauli('X');   // i X X
    return i * oracle::pauli('Y');                           // i X Y
  };
  oracle::Matrix xy = oracle::Matrix::Zero(8, 8);
  const auto& c = inst.couplings();
  for (std::size_t k = 0; k < c.count(); ++k) {
    const auto idx = c.index(k);
    const int ci = (idx[0] - 1) / 4, cj = (idx[2] - 1) / 4;
    const auto lhs = pair_op((idx[0] - 1) % 4 + 1, (idx[1] - 1) % 4 + 1);
    const auto rhs = pair_op((idx[2] - 1) % 4 + 1, (idx[3] - 1) % 4 + 1);
    xy += c.values[k] * oracle::embed(lhs, ci, 2, 3) * oracle::embed(rhs, cj, 2, 3);
  }
  const auto want = oracle::eigenvalues(xy);
  const auto got = resolve_sectors(inst, sector_policy(spec)).at(0).eigenvalues;
  const auto oracle_sector = projector_spectrum(inst.dense().matrix, sector_policy(spec).sectors[0].charges);
  ASSERT_EQ(got.size(), 8u);
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_NEAR(got[k], want[k], 1e-12);
    EXPECT_NEAR(got[k], oracle_sector[k], 1e-12);
  }
}

TEST(Gauged, M6ReductionTable) {
  // In the +1 sector of Z Z Z the basis is |000>, |011>, |101>, |110>.
  const std::vector<ChargeValue> charges{{make_cluster_parity(6, 2, 0), 1}, {make_cluster_parity(6, 2, 1), 1}};
  const auto basis = sector_basis(6, charges);
  ASSERT_EQ(basis.dim(), 16u);
  EXPECT_EQ(basis.columns[0][0].first, 0u);
  EXPECT_EQ(basis.columns[4][0].first, 0b011000u);
  EXPECT_EQ(basis.columns[8][0].first, 0b101000u);
  EXPECT_EQ(basis.columns[12][0].first, 0b110000u);
  const PauliSum xx{6, {{1.0, PauliString::parse("XXIIII")}}};
  const auto block = restrict_operator(xx, basis);
  const auto want = oracle::kron(oracle::pauli_string("XX"), oracle::identity(4));
  EXPECT_LT(oracle::max_abs_diff(block, want), 1e-15);
}

}  // namespace
}  // namespace syklab
