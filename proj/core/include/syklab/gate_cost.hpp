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

#include <cstdint>
#include <string>

#include "syklab/model_spec.hpp"
#include "syklab/models.hpp"

namespace syklab {

/// Uncancelled gate counts of one first-order Trotter step, compared with the
/// 4-local original SYK model on the same number of Majoranas.
struct GateCostReport {
  ModelSpec spec;
  std::uint64_t term_count = 0;
  int max_length = 0;
  double mean_length = 0.0;
  std::uint64_t cnots_per_step = 0;
  std::uint64_t single_qubit_gates_per_step = 0;
  /// q_tilde * ceil(M/2 + 1) for overlapping clusters, -1 otherwise.
  int length_bound = -1;
  int reference_majoranas = 0;  // N used for the SYK comparison
  std::uint64_t syk_term_count = 0;
  std::uint64_t syk_cnots_per_step = 0;
  double cnot_ratio = 0.0;  // cnots_per_step / syk_cnots_per_step
};

/// Gate counts of sum over terms of exp(-i c dt P). Depends only on the term
/// structure; couplings are never drawn.
struct TermStructure {
  std::uint64_t term_count = 0;
  int max_length = 0;
  double mean_length = 0.0;
  std::uint64_t cnots = 0;
  std::uint64_t single_qubit_gates = 0;
};
TermStructure term_structure(const PauliSum& h);

/// Throws ParameterError for qudits with d > 2, which have no Pauli form.
GateCostReport gate_cost_report(const ModelSpec& spec);

/// Majorana count matched to a spec: N for fermionic families, 4L for the
/// clusters spin model (2L qubits), 2L for d = 2 qudits.
int equivalent_majoranas(const ModelSpec& spec);

}  // namespace syklab
