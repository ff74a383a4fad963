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
#include <cstdint>
#include <span>
#include <vector>

#include "syklab/model_spec.hpp"

namespace syklab {

/// Exact binomial coefficient; throws ParameterError on uint64 overflow.
std::uint64_t binomial(int n, int k);

/// J^2 = [C(L,q) (2(d^2-1)/d)^q]^{-1}, which makes <Tr H^2> = d^L.
double qudit_variance(int d, int L, int q);
/// J^2 = (6/N^3) C(N,4) / C(N-2,2) for the M = 2, q_tilde = 2 overlapping model.
double overlapping_m2_variance(int N);
/// 6/N^3.
double original_syk_variance(int N);

/// Coupling index tuples and their Gaussian values.
///
/// Tuple layout per family (flat, `arity` entries per coupling):
///   qudit            (site_1, alpha_1, ..., site_q, alpha_q), sites 0-based
///   clusters spin    (i_1, a_1, b_1, i_2, a_2, b_2), clusters 0-based, letters 1..3
///   fermionic        Majorana labels (1-based) in operator order
struct CouplingTable {
  int arity = 0;
  std::vector<int> indices;
  std::vector<double> values;
  double variance = 0.0;

  std::size_t count() const { return values.size(); }
  std::span<const int> index(std::size_t k) const {
    return {indices.data() + k * arity, static_cast<std::size_t>(arity)};
  }
  bool operator==(const CouplingTable&) const = default;
};

/// All index tuples of the family in canonical order, values left empty.
CouplingTable enumerate_couplings(const ModelSpec& spec);

/// Number of couplings without materializing them.
std::uint64_t coupling_count(const ModelSpec& spec);

/// J^2 for the model's family and variance convention given the coupling count.
double coupling_variance(const ModelSpec& spec, std::uint64_t count);

/// Standard normal deviate addressed by (seed, sample_id, stream, index tuple).
/// Pure function of its arguments, so assembly order never matters.
double counter_gaussian(std::uint64_t seed, std::uint64_t sample_id,
                        std::uint64_t stream, std::span<const int> index);

/// Enumerates and draws J with the family's variance for one sample.
CouplingTable draw_couplings(const ModelSpec& spec, std::uint64_t sample_id);

}  // namespace syklab
