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

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace syklab {

/// Generalized Gell-Mann generators of SU(d), normalized Tr(t_a t_b) = 2 delta_ab.
///
/// Labels alpha run 1..d^2-1 in the order S_ab (a<b, lexicographic), A_ab
/// (lexicographic), then D_1..D_{d-1}. The antisymmetric generators carry
/// (A_ab)_{ab} = -i so that d=2 yields (X, Y, Z) and d=3 yields lambda_1..8.
///
/// Every generator has at most one nonzero entry per column, which the dense
/// builders exploit through columns().
class GellMannBasis {
 public:
  explicit GellMannBasis(int d);

  int d() const { return d_; }
  int size() const { return static_cast<int>(matrices_.size()); }

  const Eigen::MatrixXcd& generator(int alpha) const;
  std::string label(int alpha) const;

  struct ColumnEntry {
    int row;  // -1 for an all-zero column
    std::complex<double> value;
  };
  /// Column-wise sparse form of generator(alpha), indexed by column.
  const std::vector<ColumnEntry>& columns(int alpha) const;

 private:
  int check(int alpha) const;

  int d_;
  std::vector<Eigen::MatrixXcd> matrices_;
  std::vector<std::vector<ColumnEntry>> columns_;
  std::vector<std::string> labels_;
};

/// Generator tau_alpha on one site.
struct GeneratorFactor {
  int site;   // 0-based
  int alpha;  // 1-based generator label
};

/// coefficient * T_{i_1,alpha_1} ... T_{i_q,alpha_q}, identity elsewhere.
struct QuditTerm {
  std::vector<GeneratorFactor> factors;  // strictly increasing sites
  double coefficient = 1.0;
};

/// Weighted sum of generator products on L qudits of dimension d.
struct QuditSum {
  int d = 2;
  int L = 1;
  std::vector<QuditTerm> terms;
};

/// Throws IndexError/ParameterError unless sites are strictly increasing and
/// inside 0..L-1 and labels inside 1..d^2-1.
void validate_qudit_term(const QuditTerm& term, int d, int L);

}  // namespace syklab
