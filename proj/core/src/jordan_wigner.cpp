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

#include "syklab/jordan_wigner.hpp"

#include "syklab/errors.hpp"

namespace syklab {

PauliString jordan_wigner(MajoranaIndex index, int n_qubits) {
  if (index.r < 1 || index.r > 2 * n_qubits) {
    throw IndexError("jordan_wigner: chi_" + std::to_string(index.r) +
                     " needs r in 1.." + std::to_string(2 * n_qubits));
  }
  const int j = index.qubit();
  const std::uint64_t below = (std::uint64_t{1} << j) - 1;
  const std::uint64_t bit = std::uint64_t{1} << j;
  // Z string on qubits < j; X on j for odd r, Y (x and z set) for even r.
  const std::uint64_t z = below | (index.flavor() == 2 ? bit : 0);
  return PauliString(n_qubits, bit, z, 0);
}

PauliString majorana_bilinear(int r, int n_qubits) {
  if (r < 1 || r + 1 > 2 * n_qubits) {
    throw IndexError("majorana_bilinear: chi_" + std::to_string(r) + " chi_" +
                     std::to_string(r + 1) + " outside 1.." +
                     std::to_string(2 * n_qubits));
  }
  const int j = (r - 1) / 2;
  if (r % 2 == 1) {
    return PauliString::single(n_qubits, j, Pauli::Z).times_i_power(1);
  }
  return (PauliString::single(n_qubits, j, Pauli::X) *
          PauliString::single(n_qubits, j + 1, Pauli::X))
      .times_i_power(1);
}

PauliString majorana_product(std::span<const int> labels, int n_qubits) {
  PauliString out(n_qubits);
  for (int r : labels) out *= jordan_wigner(MajoranaIndex{r}, n_qubits);
  return out;
}

}  // namespace syklab
