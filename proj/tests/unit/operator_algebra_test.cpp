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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "syklab/dense_operator.hpp"
#include "syklab/errors.hpp"
#include "syklab/gell_mann.hpp"
#include "syklab/jordan_wigner.hpp"
#include "syklab/pauli_string.hpp"

namespace syklab {
namespace {

using oracle::cd;

PauliString random_string(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<int> phase(0, 3);
  return PauliString(n, bits(rng), bits(rng), phase(rng));
}

// Letters plus phase, read back through the public accessors.
oracle::Matrix via_oracle(const PauliString& p) {
  std::string letters;
  for (int q = 0; q < p.num_qubits(); ++q) letters += "IXZY"[static_cast<int>(p.at(q))];
  return oracle::pauli_string(letters, p.phase());
}

TEST(PauliString, XTimesXIsIdentity) {
  const auto x = PauliString::parse("X");
  EXPECT_TRUE((x * x).is_identity());
}

TEST(PauliString, XTimesZIsMinusIY) {
  const auto p = pauli_multiply(PauliString::parse("X"), PauliString::parse("Z"));
  EXPECT_EQ(p, PauliString::parse("-iY"));
  EXPECT_LT(oracle::max_abs_diff(via_oracle(p), oracle::pauli('X') * oracle::pauli('Z')), 1e-15);
}

TEST(PauliString, DisjointZsCombine) {
  EXPECT_EQ(PauliString::parse("ZI") * PauliString::parse("IZ"), PauliString::parse("ZZ"));
}

TEST(PauliString, SizeMismatchThrows) {
  EXPECT_THROW(PauliString::parse("XX") * PauliString::parse("X"), DimensionError);
}

TEST(PauliString, ParseAndPrintRoundTrip) {
  for (const char* s : {"+XIZY", "-iZZ", "+iY", "-IXI"}) {
    EXPECT_EQ(PauliString::parse(PauliString::parse(s).str()), PauliString::parse(s)) << s;
  }
}

TEST(PauliString, RejectsMaskBitsBeyondRegister) {
  EXPECT_THROW(PauliString(3, 0b1000, 0), IndexError);
  EXPECT_THROW(PauliString(0), DimensionError);
  EXPECT_THROW(PauliString::parse(""), ParameterError);
}

TEST(PauliStringProperty, ProductMatchesKroneckerOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 5;
    const auto a = random_string(n, rng);
    const auto b = random_string(n, rng);
    EXPECT_LT(oracle::max_abs_diff(via_oracle(a * b), via_oracle(a) * via_oracle(b)), 1e-13);
  }
}

TEST(PauliStringProperty, AssociativeAndPhaseInGroup) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_string(6, rng);
    const auto b = random_string(6, rng);
    const auto c = random_string(6, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_GE((a * b).phase_exponent(), 0);
    EXPECT_LT((a * b).phase_exponent(), 4);
  }
}

TEST(PauliStringProperty, HermitianIffRealPhase) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_string(4, rng);
    const auto m = via_oracle(p);
    EXPECT_EQ(p.is_hermitian(), oracle::max_abs_diff(m, m.adjoint()) < 1e-14);
    EXPECT_EQ(p.is_real(), m.imag().cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST(PauliStringProperty, CommutationMatchesMatrices) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_string(4, rng);
    const auto b = random_string(4, rng);
    const auto ma = via_oracle(a);
    const auto mb = via_oracle(b);
    EXPECT_EQ(a.commutes_with(b), oracle::max_abs_diff(ma * mb, mb * ma) < 1e-13);
  }
}

TEST(PauliStringProperty, BasisActionMatchesDenseColumn) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_string(5, rng);
    const auto m = via_oracle(p);
    for (std::uint64_t b = 0; b < 32; ++b) {
      const auto img = p.apply(b);
      EXPECT_LT(std::abs(m(static_cast<Eigen::Index>(img.target), static_cast<Eigen::Index>(b)) - img.amplitude),
                1e-15);
    }
  }
}

TEST(GellMann, QutritMatchesTextbookLambdas) {
  const GellMannBasis basis(3);
  ASSERT_EQ(basis.size(), 8);
  // lambda_8 = diag(1, 1, -2) / sqrt(3)
  Eigen::MatrixXcd l8 = Eigen::MatrixXcd::Zero(3, 3);
  l8(0, 0) = l8(1, 1) = 1.0 / std::sqrt(3.0);
  l8(2, 2) = -2.0 / std::sqrt(3.0);
  EXPECT_LT(oracle::max_abs_diff(basis.generator(8), l8), 1e-15);
  // lambda_2 has (0,1) entry -i.
  EXPECT_EQ(basis.generator(4)(0, 1), cd(0.0, -1.0));
}

TEST(GellMann, QubitGivesPauliMatrices) {
  const GellMannBasis basis(2);
  EXPECT_LT(oracle::max_abs_diff(basis.generator(1), oracle::pauli('X')), 1e-15);
  EXPECT_LT(oracle::max_abs_diff(basis.generator(2), oracle::pauli('Y')), 1e-15);
  EXPECT_LT(oracle::max_abs_diff(basis.generator(3), oracle::pauli('Z')), 1e-15);
}

TEST(GellMann, OrthonormalHermitianTracelessUpToSix) {
  for (int d = 2; d <= 6; ++d) {
    const GellMannBasis basis(d);
    ASSERT_EQ(basis.size(), d * d - 1);
    for (int a = 1; a <= basis.size(); ++a) {
      const auto& ta = basis.generator(a);
      EXPECT_LT(std::abs(ta.trace()), 1e-13);
      EXPECT_LT(oracle::max_abs_diff(ta, ta.adjoint()), 1e-15);
      EXPECT_LT(oracle::max_abs_diff(ta, oracle::gell_mann(d, a)), 1e-14) << "d=" << d << " alpha=" << a;
      for (int b = 1; b <= basis.size(); ++b) {
        const cd tr = (ta * basis.generator(b)).trace();
        EXPECT_LT(std::abs(tr - (a == b ? 2.0 : 0.0)), 1e-13);
      }
    }
  }
}

TEST(GellMann, ColumnsMatchDense) {
  const GellMannBasis basis(4);
  for (int a = 1; a <= basis.size(); ++a) {
    const auto& cols = basis.columns(a);
    for (int c = 0; c < 4; ++c) {
      for (int r = 0; r < 4; ++r) {
        const cd expect = cols[c].row == r ? cols[c].value : cd(0.0);
        EXPECT_EQ(basis.generator(a)(r, c), expect);
      }
    }
  }
}

TEST(GellMann, BadLabelThrows) {
  const GellMannBasis basis(3);
  EXPECT_THROW(basis.generator(0), IndexError);
  EXPECT_THROW(basis.generator(9), IndexError);
  EXPECT_THROW(GellMannBasis(1), ParameterError);
}

TEST(JordanWigner, SpecExamples) {
  EXPECT_EQ(jordan_wigner({1}, 3), PauliString::parse("XII"));
  EXPECT_EQ(jordan_wigner({4}, 3), PauliString::parse("ZYI"));
  EXPECT_THROW(jordan_wigner({7}, 3), IndexError);
  EXPECT_THROW(jordan_wigner({0}, 3), IndexError);
}

TEST(JordanWigner, MatchesOracleAndIsHermitian) {
  for (int r = 1; r <= 12; ++r) {
    const auto p = jordan_wigner({r}, 6);
    EXPECT_EQ(p.phase_exponent(), 0);
    EXPECT_LT(oracle::max_abs_diff(build_dense(p).matrix, oracle::majorana(r, 6)), 1e-15);
  }
}

TEST(JordanWigner, AnticommutatorIsTwoDeltaAtN12) {
  const int n = 6;
  std::vector<Eigen::MatrixXcd> chi;
  for (int r = 1; r <= 2 * n; ++r) chi.push_back(build_dense(jordan_wigner({r}, n)).matrix);
  const auto id = oracle::identity(1 << n);
  for (int j = 0; j < 2 * n; ++j) {
    for (int k = 0; k < 2 * n; ++k) {
      const Eigen::MatrixXcd ac = chi[j] * chi[k] + chi[k] * chi[j];
      EXPECT_LT(oracle::max_abs_diff(ac, (j == k ? 2.0 : 0.0) * id), 1e-12);
    }
  }
}

TEST(JordanWigner, IndexBijection) {
  for (int r = 1; r <= 20; ++r) {
    const MajoranaIndex m{r};
    EXPECT_EQ(MajoranaIndex::from_site(m.site(), m.flavor()).r, r);
    EXPECT_EQ(m.qubit(), m.site() - 1);
  }
}

TEST(JordanWigner, Bilinears) {
  EXPECT_EQ(majorana_bilinear(1, 3), PauliString::parse("iZII"));
  EXPECT_EQ(majorana_bilinear(2, 3), PauliString::parse("iXXI"));
  for (int r = 1; r < 8; ++r) {
    EXPECT_EQ(majorana_bilinear(r, 4), jordan_wigner({r}, 4) * jordan_wigner({r + 1}, 4));
  }
  EXPECT_THROW(majorana_bilinear(6, 3), IndexError);
}

TEST(JordanWigner, ProductIsOrderedProduct) {
  const std::vector<int> labels{2, 5, 3, 8};
  auto expect = PauliString(4);
  for (int r : labels) expect *= jordan_wigner({r}, 4);
  EXPECT_EQ(majorana_product(labels, 4), expect);
}

TEST(DenseOperator, SpecExamples) {
  const auto id = build_dense(PauliString::parse("II"));
  EXPECT_EQ(id.matrix, oracle::identity(4));
  const auto zz = build_dense(PauliString::parse("ZZ"));
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
  expect.diagonal() << 1, -1, -1, 1;
  EXPECT_EQ(zz.matrix, expect);
  EXPECT_TRUE(zz.real);
  EXPECT_TRUE(zz.hermitian);

  QuditTerm t8{{{0, 8}}, 1.0};
  const auto l8 = build_dense(t8, 3, 1);
  EXPECT_LT(oracle::max_abs_diff(l8.matrix, oracle::gell_mann(3, 8)), 1e-15);
}

TEST(DenseOperator, BudgetIsEnforced) {
  EXPECT_THROW(build_dense(PauliString(15), DenseBudget{1 << 14}), CapacityError);
  QuditSum big{3, 9, {}};
  EXPECT_THROW(build_dense(big, DenseBudget{1000}), CapacityError);
}

TEST(DenseOperatorProperty, Homomorphism) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_string(4, rng);
    const auto b = random_string(4, rng);
    const auto lhs = build_dense(a * b).matrix;
    const Eigen::MatrixXcd rhs = build_dense(a).matrix * build_dense(b).matrix;
    EXPECT_LT(oracle::max_abs_diff(lhs, rhs), 1e-12);
  }
}

TEST(DenseOperatorProperty, RealXZSumsAreRealSymmetric) {
  std::mt19937_64 rng(22);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<std::uint64_t> bits(0, 31);
  for (int trial = 0; trial < 30; ++trial) {
    PauliSum s{5, {}};
    for (int k = 0; k < 8; ++k) {
      // X and Z on disjoint qubits, so no Y appears.
      const auto x = bits(rng);
      const auto z = bits(rng) & ~x;
      s.terms.push_back({g(rng), PauliString(5, x, z)});
    }
    const auto d = build_dense(s);
    EXPECT_TRUE(d.real);
    EXPECT_EQ(d.matrix.imag().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ((d.matrix - d.matrix.transpose()).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(DenseOperatorProperty, QuditSumMatchesKroneckerOracle) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g;
  const int d = 3, L = 3;
  QuditSum sum{d, L, {}};
  oracle::Matrix expect = oracle::Matrix::Zero(27, 27);
  for (int k = 0; k < 10; ++k) {
    const int a1 = 1 + k % 8, a2 = 1 + (3 * k) % 8;
    const double c = g(rng);
    sum.terms.push_back({{{0, a1}, {2, a2}}, c});
    expect += c * oracle::embed(oracle::gell_mann(d, a1), 0, d, L) * oracle::embed(oracle::gell_mann(d, a2), 2, d, L);
  }
  EXPECT_LT(oracle::max_abs_diff(build_dense(sum).matrix, expect), 1e-13);
}

TEST(DenseOperator, QuditTermValidation) {
  EXPECT_THROW(validate_qudit_term({{{1, 1}, {0, 2}}, 1.0}, 3, 2), ParameterError);
  EXPECT_THROW(validate_qudit_term({{{0, 9}}, 1.0}, 3, 2), IndexError);
  EXPECT_THROW(validate_qudit_term({{{2, 1}}, 1.0}, 3, 2), IndexError);
}

}  // namespace
}  // namespace syklab
