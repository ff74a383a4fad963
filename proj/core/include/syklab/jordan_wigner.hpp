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

#include <span>

#include "syklab/pauli_string.hpp"

namespace syklab {

/// Majorana label chi_r with r in 1..N. The same operator is psi_{j,a} with
/// qubit site j = ceil(r/2) and flavor a = 1 (X-type) or 2 (Y-type).
struct MajoranaIndex {
  int r;

  static MajoranaIndex from_site(int j, int a) { return {2 * j - 2 + a}; }
  int site() const { return (r + 1) / 2; }   // 1-based j
  int qubit() const { return (r - 1) / 2; }  // 0-based
  int flavor() const { return (r - 1) % 2 + 1; }
};

/// chi_{2j-1} = Z_1...Z_{j-1} X_j and chi_{2j} = Z_1...Z_{j-1} Y_j.
PauliString jordan_wigner(MajoranaIndex index, int n_qubits);

/// chi_r chi_{r+1}: i Z_j for r = 2j-1, i X_j X_{j+1} for r = 2j.
PauliString majorana_bilinear(int r, int n_qubits);

/// Ordered product chi_{r_1} chi_{r_2} ... as one Pauli string.
PauliString majorana_product(std::span<const int> labels, int n_qubits);

}  // namespace syklab
