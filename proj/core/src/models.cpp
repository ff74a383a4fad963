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

#include "syklab/models.hpp"

#include <string>

#include "syklab/errors.hpp"
#include "syklab/jordan_wigner.hpp"

namespace syklab {
namespace {

void require_family(const ModelSpec& spec, ModelFamily family) {
  if (spec.family != family) {
    throw ParameterError("expected family " + std::string(family_name(family)) + ", got " +
                         std::string(family_name(spec.family)));
  }
}

}  // namespace

Pauli pauli_from_label(int alpha) {
  switch (alpha) {
    case 1:
      return Pauli::X;
    case 2:
      return Pauli::Y;
    case 3:
      return Pauli::Z;
  }
  throw IndexError("Pauli label must be 1, 2 or 3, got " + std::to_string(alpha));
}

HamiltonianInstance::HamiltonianInstance(ModelSpec spec, std::uint64_t sample_id,
                                         CouplingTable couplings,
                                         std::variant<PauliSum, QuditSum> terms)
    : spec_(spec), sample_id_(sample_id), couplings_(std::move(couplings)),
      terms_(std::move(terms)) {}

const PauliSum& HamiltonianInstance::pauli_terms() const {
  if (!is_pauli()) throw AlgebraError("instance is a qudit operator sum");
  return std::get<PauliSum>(terms_);
}

const QuditSum& HamiltonianInstance::qudit_terms() const {
  if (is_pauli()) throw AlgebraError("instance is a Pauli operator sum");
  return std::get<QuditSum>(terms_);
}

std::size_t HamiltonianInstance::term_count() const {
  return is_pauli() ? pauli_terms().terms.size() : qudit_terms().terms.size();
}

std::optional<PauliSum> HamiltonianInstance::as_pauli_sum() const {
  if (is_pauli()) return pauli_terms();
  const auto& qs = qudit_terms();
  if (qs.d != 2) return std::nullopt;
  // For d = 2 the generators are exactly X, Y, Z.
  PauliSum out{qs.L, {}};
  for (const auto& t : qs.terms) {
    PauliString p(qs.L);
    for (const auto& f : t.factors) p *= PauliString::single(qs.L, f.site, pauli_from_label(f.alpha));
    out.terms.push_back({t.coefficient, p});
  }
  return out;
}

DenseOperator HamiltonianInstance::dense(const DenseBudget& budget) const {
  if (is_pauli()) return build_dense(pauli_terms(), budget);
  return build_dense(qudit_terms(), budget);
}

HamiltonianInstance assemble_hamiltonian(const ModelSpec& spec, CouplingTable couplings,
                                         std::uint64_t sample_id) {
  spec.validate();
  const std::size_t count = couplings.count();
  if (couplings.indices.size() != count * static_cast<std::size_t>(couplings.arity)) {
    throw DimensionError("coupling table indices do not match its values");
  }
  if (spec.family == ModelFamily::kQuditSyk) {
    QuditSum sum{spec.d, spec.L, {}};
    sum.terms.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      const auto idx = couplings.index(k);
      QuditTerm term;
      term.coefficient = couplings.values[k];
      for (std::size_t m = 0; m + 1 < idx.size(); m += 2) term.factors.push_back({idx[m], idx[m + 1]});
      validate_qudit_term(term, spec.d, spec.L);
      sum.terms.push_back(std::move(term));
    }
    return {spec, sample_id, std::move(couplings), std::move(sum)};
  }

  const int n = spec.num_qubits();
  PauliSum sum{n, {}};
  sum.terms.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto idx = couplings.index(k);
    PauliString p(n);
    if (spec.family == ModelFamily::kClustersSpinSyk) {
      for (int half = 0; half < 2; ++half) {
        const int cluster = idx[3 * half];
        p *= PauliString::single(n, 2 * cluster, pauli_from_label(idx[3 * half + 1]));
        p *= PauliString::single(n, 2 * cluster + 1, pauli_from_label(idx[3 * half + 2]));
      }
    } else {
      p = majorana_product(idx, n);
      if (!p.is_hermitian()) p = p.times_i_power(1);
    }
    if (!p.is_hermitian()) throw AlgebraError("assembled term is not Hermitian: " + p.str());
    sum.terms.push_back({couplings.values[k], p});
  }
  return {spec, sample_id, std::move(couplings), std::move(sum)};
}

HamiltonianInstance build_hamiltonian(const ModelSpec& spec, std::uint64_t sample_id) {
  return assemble_hamiltonian(spec, draw_couplings(spec, sample_id), sample_id);
}

HamiltonianInstance build_qudit_syk(const ModelSpec& spec, std::uint64_t sample_id) {
  require_family(spec, ModelFamily::kQuditSyk);
  return build_hamiltonian(spec, sample_id);
}

HamiltonianInstance build_clusters_spin_syk(const ModelSpec& spec, std::uint64_t sample_id) {
  require_family(spec, ModelFamily::kClustersSpinSyk);
  return build_hamiltonian(spec, sample_id);
}

HamiltonianInstance build_gauged_clusters_syk(const ModelSpec& spec, std::uint64_t sample_id) {
  require_family(spec, ModelFamily::kGaugedClustersSyk);
  return build_hamiltonian(spec, sample_id);
}

HamiltonianInstance build_overlapping_clusters_syk(const ModelSpec& spec,
                                                   std::uint64_t sample_id) {
  require_family(spec, ModelFamily::kOverlappingClustersSyk);
  return build_hamiltonian(spec, sample_id);
}

HamiltonianInstance build_original_syk(const ModelSpec& spec, std::uint64_t sample_id) {
  require_family(spec, ModelFamily::kOriginalSyk);
  return build_hamiltonian(spec, sample_id);
}

}  // namespace syklab
