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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "syklab/gell_mann.hpp"
#include "syklab/pauli_string.hpp"

namespace syklab {

/// Upper bound on the Hilbert dimension of any dense object we build.
struct DenseBudget {
  std::size_t max_dim = std::size_t{1} << 14;
};

/// Throws CapacityError when dim exceeds the budget.
void check_budget(std::size_t dim, const DenseBudget& budget, const char* what);

/// Exact dense matrix with structural flags.
///
/// `real` is set when every contribution was real, in which case the imaginary
/// parts are exactly zero. `hermitian` is measured on construction with the
/// tolerance max|A - A^dagger| <= 1e-12 max|A|.
struct DenseOperator {
  Eigen::MatrixXcd matrix;
  bool hermitian = false;
  bool real = false;

  Eigen::Index dim() const { return matrix.rows(); }
};

DenseOperator make_dense(Eigen::MatrixXcd matrix, bool real);

DenseOperator build_dense(const PauliString& op, const DenseBudget& budget = {});
DenseOperator build_dense(const PauliSum& op, const DenseBudget& budget = {});
DenseOperator build_dense(const QuditTerm& term, int d, int L,
                          const DenseBudget& budget = {});
DenseOperator build_dense(const QuditSum& op, const DenseBudget& budget = {});

/// Adds coefficient * P into matrix (dim 2^n) without forming P densely.
void accumulate_pauli(Eigen::MatrixXcd& matrix, const PauliString& p,
                      std::complex<double> coefficient);

/// Ascending eigenvalues of a Hermitian matrix. With `real` the real part is
/// diagonalized by the symmetric solver.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& matrix,
                                          bool real);
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& matrix);

/// max |A - A^dagger|.
double hermiticity_defect(const Eigen::MatrixXcd& matrix);

}  // namespace syklab
