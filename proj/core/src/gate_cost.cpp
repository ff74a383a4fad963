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

#include "syklab/gate_cost.hpp"

#include <algorithm>

#include "syklab/couplings.hpp"
#include "syklab/errors.hpp"

namespace syklab {
namespace {

HamiltonianInstance unit_instance(const ModelSpec& spec) {
  auto table = enumerate_couplings(spec);
  std::fill(table.values.begin(), table.values.end(), 1.0);
  return assemble_hamiltonian(spec, std::move(table));
}

}  // namespace

TermStructure term_structure(const PauliSum& h) {
  TermStructure out;
  std::uint64_t total_length = 0;
  for (const auto& t : h.terms) {
    const int len = t.string.weight();
    if (len == 0) continue;
    ++out.term_count;
    total_length += static_cast<std::uint64_t>(len);
    out.max_length = std::max(out.max_length, len);
    out.cnots += 2 * static_cast<std::uint64_t>(len - 1);
    int x = 0, y = 0;
    for (int q : t.string.support()) {
      if (t.string.at(q) == Pauli::X) ++x;
      if (t.string.at(q) == Pauli::Y) ++y;
    }
    out.single_qubit_gates += 1 + 2 * static_cast<std::uint64_t>(x) + 4 * static_cast<std::uint64_t>(y);
  }
  if (out.term_count) out.mean_length = static_cast<double>(total_length) / static_cast<double>(out.term_count);
  return out;
}

int equivalent_majoranas(const ModelSpec& spec) {
  switch (spec.family) {
    case ModelFamily::kQuditSyk:
      if (spec.d != 2) throw ParameterError("qudits with d > 2 have no Pauli form");
      return 2 * spec.L;
    case ModelFamily::kClustersSpinSyk:
      return 4 * spec.L;
    default:
      return spec.majorana_count();
  }
}

GateCostReport gate_cost_report(const ModelSpec& spec) {
  spec.validate();
  if (spec.family == ModelFamily::kQuditSyk && spec.d != 2) {
    throw ParameterError("gate costs need a Pauli form; qudits with d > 2 are not supported");
  }
  GateCostReport r;
  r.spec = spec;
  const auto h = unit_instance(spec).as_pauli_sum();
  const auto own = term_structure(*h);
  r.term_count = own.term_count;
  r.max_length = own.max_length;
  r.mean_length = own.mean_length;
  r.cnots_per_step = own.cnots;
  r.single_qubit_gates_per_step = own.single_qubit_gates;
  if (spec.family == ModelFamily::kOverlappingClustersSyk) {
    r.length_bound = spec.q_tilde * ((spec.M + 3) / 2);  // ceil(M/2 + 1)
  }
  r.reference_majoranas = equivalent_majoranas(spec);
  if (r.reference_majoranas >= 4 && r.reference_majoranas % 2 == 0) {
    ModelSpec syk;
    syk.family = ModelFamily::kOriginalSyk;
    syk.N = r.reference_majoranas;
    const auto ref = term_structure(*unit_instance(syk).as_pauli_sum());
    r.syk_term_count = ref.term_count;
    r.syk_cnots_per_step = ref.cnots;
    if (ref.cnots) r.cnot_ratio = static_cast<double>(r.cnots_per_step) / static_cast<double>(ref.cnots);
  }
  return r;
}

}  // namespace syklab
