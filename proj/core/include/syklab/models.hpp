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
#include <optional>
#include <variant>

#include "syklab/couplings.hpp"
#include "syklab/dense_operator.hpp"
#include "syklab/model_spec.hpp"

namespace syklab {

/// One disorder realization. Immutable once built; the dense matrix is
/// produced on demand.
class HamiltonianInstance {
 public:
  HamiltonianInstance(ModelSpec spec, std::uint64_t sample_id, CouplingTable couplings,
                      std::variant<PauliSum, QuditSum> terms);

  const ModelSpec& spec() const { return spec_; }
  std::uint64_t sample_id() const { return sample_id_; }
  const CouplingTable& couplings() const { return couplings_; }

  bool is_pauli() const { return std::holds_alternative<PauliSum>(terms_); }
  /// Throws AlgebraError when the instance is not of that form.
  const PauliSum& pauli_terms() const;
  const QuditSum& qudit_terms() const;
  std::size_t term_count() const;

  /// Pauli form when one exists (every family except qudits with d > 2).
  std::optional<PauliSum> as_pauli_sum() const;

  DenseOperator dense(const DenseBudget& budget = {}) const;

 private:
  ModelSpec spec_;
  std::uint64_t sample_id_;
  CouplingTable couplings_;
  std::variant<PauliSum, QuditSum> terms_;
};

/// Builds the operator sum for explicit couplings (values and indices as laid
/// out by enumerate_couplings). Fermionic terms with anti-Hermitian Majorana
/// products (odd q_tilde) are multiplied by i.
HamiltonianInstance assemble_hamiltonian(const ModelSpec& spec, CouplingTable couplings,
                                         std::uint64_t sample_id = 0);

/// Draws couplings for sample_id and assembles, dispatching on spec.family.
HamiltonianInstance build_hamiltonian(const ModelSpec& spec, std::uint64_t sample_id);

// Family-checked entry points; each throws ParameterError on a family mismatch.
HamiltonianInstance build_qudit_syk(const ModelSpec& spec, std::uint64_t sample_id);
HamiltonianInstance build_clusters_spin_syk(const ModelSpec& spec, std::uint64_t sample_id);
HamiltonianInstance build_gauged_clusters_syk(const ModelSpec& spec, std::uint64_t sample_id);
HamiltonianInstance build_overlapping_clusters_syk(const ModelSpec& spec,
                                                   std::uint64_t sample_id);
HamiltonianInstance build_original_syk(const ModelSpec& spec, std::uint64_t sample_id);

/// sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
Pauli pauli_from_label(int alpha);

}  // namespace syklab
