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

#include "syklab/dense_operator.hpp"

#include <algorithm>
#include <string>

#include "syklab/errors.hpp"

namespace syklab {
namespace {

std::size_t qudit_dimension(int d, int L, const DenseBudget& budget) {
  std::size_t dim = 1;
  for (int i = 0; i < L; ++i) {
    dim *= static_cast<std::size_t>(d);
    check_budget(dim, budget, "qudit operator");
  }
  return dim;
}

std::size_t qubit_dimension(int n, const DenseBudget& budget) {
  if (n >= 63) check_budget(~std::size_t{0}, budget, "Pauli operator");
  const auto dim = std::size_t{1} << n;
  check_budget(dim, budget, "Pauli operator");
  return dim;
}

// Adds coefficient * term into matrix using the column-sparse generators.
void accumulate_qudit(Eigen::MatrixXcd& matrix, const QuditTerm& term,
                      const GellMannBasis& basis, int L) {
  const int d = basis.d();
  const auto dim = static_cast<std::size_t>(matrix.rows());
  std::vector<std::size_t> stride(L);
  std::size_t s = 1;
  for (int i = L - 1; i >= 0; --i) {
    stride[i] = s;
    s *= d;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t row = col;
    std::complex<double> value = term.coefficient;
    bool zero = false;
    for (const auto& f : term.factors) {
      const int digit = static_cast<int>((col / stride[f.site]) % d);
      const auto& entry = basis.columns(f.alpha)[digit];
      if (entry.row < 0) {
        zero = true;
        break;
      }
      row = row - digit * stride[f.site] + entry.row * stride[f.site];
      value *= entry.value;
    }
    if (!zero) matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += value;
  }
}

}  // namespace

void check_budget(std::size_t dim, const DenseBudget& budget, const char* what) {
  if (dim > budget.max_dim) {
    throw CapacityError(std::string(what) + ": dimension " + std::to_string(dim) +
                        " exceeds the dense budget of " +
                        std::to_string(budget.max_dim));
  }
}

double hermiticity_defect(const Eigen::MatrixXcd& matrix) {
  if (matrix.size() == 0) return 0.0;
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

DenseOperator make_dense(Eigen::MatrixXcd matrix, bool real) {
  DenseOperator out;
  const double scale = matrix.size() ? matrix.cwiseAbs().maxCoeff() : 0.0;
  out.hermitian = hermiticity_defect(matrix) <= 1e-12 * scale;
  out.real = real;
  out.matrix = std::move(matrix);
  return out;
}

void accumulate_pauli(Eigen::MatrixXcd& matrix, const PauliString& p,
                      std::complex<double> coefficient) {
  const auto action = p.basis_action();
  const auto dim = static_cast<std::uint64_t>(matrix.cols());
  for (std::uint64_t col = 0; col < dim; ++col) {
    const auto image = action(col);
    matrix(static_cast<Eigen::Index>(image.target), static_cast<Eigen::Index>(col)) +=
        coefficient * image.amplitude;
  }
}

DenseOperator build_dense(const PauliString& op, const DenseBudget& budget) {
  const auto dim = qubit_dimension(op.num_qubits(), budget);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  accumulate_pauli(m, op, 1.0);
  return make_dense(std::move(m), op.is_real());
}

DenseOperator build_dense(const PauliSum& op, const DenseBudget& budget) {
  const auto dim = qubit_dimension(op.n_qubits, budget);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  bool real = true;
  for (const auto& t : op.terms) {
    if (t.string.num_qubits() != op.n_qubits) {
      throw DimensionError("build_dense: term register does not match the sum");
    }
    accumulate_pauli(m, t.string, t.coefficient);
    real = real && t.string.is_real();
  }
  return make_dense(std::move(m), real);
}

DenseOperator build_dense(const QuditTerm& term, int d, int L,
                          const DenseBudget& budget) {
  QuditSum sum{d, L, {term}};
  return build_dense(sum, budget);
}

DenseOperator build_dense(const QuditSum& op, const DenseBudget& budget) {
  const auto dim = qudit_dimension(op.d, op.L, budget);
  const GellMannBasis basis(op.d);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  bool real = true;
  for (const auto& t : op.terms) {
    validate_qudit_term(t, op.d, op.L);
    accumulate_qudit(m, t, basis, op.L);
    for (const auto& f : t.factors) {
      for (const auto& e : basis.columns(f.alpha)) real = real && e.value.imag() == 0.0;
    }
  }
  return make_dense(std::move(m), real);
}

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge");
  }
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& matrix,
                                          bool real) {
  if (real) return symmetric_eigenvalues(matrix.real());
  if (matrix.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver did not converge");
  }
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace syklab
