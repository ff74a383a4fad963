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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace syklab {

/// Single-qubit Pauli letter. Bit 0 is the X component, bit 1 the Z component.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

/// A Pauli string i^k * P_0 (x) P_1 (x) ... (x) P_{n-1} on at most 64 qubits.
///
/// Qubit 0 is the leftmost tensor factor, so in dense form it owns the most
/// significant bit of the computational basis index. Letters are the Hermitian
/// Paulis, and the representation (x_mask, z_mask, k mod 4) is canonical: two
/// strings are equal as operators iff their fields are equal. Multiplication
/// follows XZ = -iY.
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
              int phase_exponent = 0);

  static PauliString single(int n_qubits, int qubit, Pauli letter);

  /// Parses "XIZY", optionally prefixed by "+", "-", "+i", "-i" or "i".
  static PauliString parse(std::string_view text);

  int num_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  /// k in phase = i^k, always in 0..3.
  int phase_exponent() const { return phase_; }
  std::complex<double> phase() const;

  Pauli at(int qubit) const;
  int weight() const;
  std::vector<int> support() const;
  int count_y() const;

  bool is_identity() const { return x_ == 0 && z_ == 0 && phase_ == 0; }
  bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const { return phase_ % 2 == 0; }
  /// True when every dense matrix entry is real.
  bool is_real() const { return (phase_ + count_y()) % 2 == 0; }
  /// Only I and Z letters, i.e. diagonal in the computational basis.
  bool is_diagonal() const { return x_ == 0; }

  bool commutes_with(const PauliString& other) const;

  /// Returns i^k times this string.
  PauliString times_i_power(int k) const;
  PauliString operator-() const { return times_i_power(2); }

  PauliString operator*(const PauliString& rhs) const;
  PauliString& operator*=(const PauliString& rhs);

  bool operator==(const PauliString& other) const = default;

  /// Action on a computational basis state: P|b> = amplitude * |target>.
  struct BasisImage {
    std::uint64_t target;
    std::complex<double> amplitude;
  };
  BasisImage apply(std::uint64_t basis_state) const;

  /// Basis-index form of the string: P|b> = i^{phase + 2 popcount(b & sign)}
  /// |b ^ flip>. Precompute once when applying to many states.
  struct BasisAction {
    std::uint64_t flip;
    std::uint64_t sign;
    int phase;
    BasisImage operator()(std::uint64_t b) const;
  };
  BasisAction basis_action() const;

  std::string str() const;

 private:
  int n_qubits_;
  std::uint64_t x_;
  std::uint64_t z_;
  int phase_;
};

/// Multiplies a by b; throws DimensionError on mismatched qubit counts.
PauliString pauli_multiply(const PauliString& a, const PauliString& b);

/// Real coefficient times a Pauli string.
struct PauliTerm {
  double coefficient;
  PauliString string;
};

/// Weighted sum of Pauli strings on a fixed register.
struct PauliSum {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;
};

/// i^k as an exact complex number.
std::complex<double> i_power(int k);

}  // namespace syklab
