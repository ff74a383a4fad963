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

#include "syklab/gell_mann.hpp"

#include <cmath>

#include "syklab/errors.hpp"

namespace syklab {

GellMannBasis::GellMannBasis(int d) : d_(d) {
  if (d < 2) throw ParameterError("GellMannBasis: d must be >= 2");
  using Complex = std::complex<double>;
  const auto zero = Eigen::MatrixXcd::Zero(d, d);

  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      Eigen::MatrixXcd m = zero;
      m(a, b) = 1.0;
      m(b, a) = 1.0;
      matrices_.push_back(m);
      labels_.push_back("S_" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      Eigen::MatrixXcd m = zero;
      m(a, b) = Complex(0.0, -1.0);
      m(b, a) = Complex(0.0, 1.0);
      matrices_.push_back(m);
      labels_.push_back("A_" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
  for (int n = 1; n < d; ++n) {
    Eigen::MatrixXcd m = zero;
    const double scale = std::sqrt(2.0 / (n * (n + 1.0)));
    for (int k = 0; k < n; ++k) m(k, k) = scale;
    m(n, n) = -n * scale;
    matrices_.push_back(m);
    labels_.push_back("D_" + std::to_string(n));
  }

  columns_.reserve(matrices_.size());
  for (const auto& m : matrices_) {
    std::vector<ColumnEntry> cols(d, ColumnEntry{-1, Complex(0.0, 0.0)});
    for (int c = 0; c < d; ++c) {
      for (int r = 0; r < d; ++r) {
        if (m(r, c) != Complex(0.0, 0.0)) cols[c] = {r, m(r, c)};
      }
    }
    columns_.push_back(std::move(cols));
  }
}

int GellMannBasis::check(int alpha) const {
  if (alpha < 1 || alpha > size()) {
    throw IndexError("GellMannBasis: generator label " + std::to_string(alpha) +
                     " outside 1.." + std::to_string(size()));
  }
  return alpha - 1;
}

const Eigen::MatrixXcd& GellMannBasis::generator(int alpha) const {
  return matrices_[check(alpha)];
}

std::string GellMannBasis::label(int alpha) const { return labels_[check(alpha)]; }

const std::vector<GellMannBasis::ColumnEntry>& GellMannBasis::columns(
    int alpha) const {
  return columns_[check(alpha)];
}

void validate_qudit_term(const QuditTerm& term, int d, int L) {
  int previous = -1;
  for (const auto& f : term.factors) {
    if (f.site < 0 || f.site >= L) {
      throw IndexError("QuditTerm: site " + std::to_string(f.site) +
                       " outside 0.." + std::to_string(L - 1));
    }
    if (f.site <= previous) {
      throw ParameterError("QuditTerm: sites must be strictly increasing");
    }
    if (f.alpha < 1 || f.alpha > d * d - 1) {
      throw IndexError("QuditTerm: generator label " + std::to_string(f.alpha) +
                       " outside 1.." + std::to_string(d * d - 1));
    }
    previous = f.site;
  }
}

}  // namespace syklab
