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

#include "syklab/pauli_string.hpp"

#include <bit>
#include <sstream>

#include "syklab/errors.hpp"

namespace syklab {
namespace {

std::uint64_t register_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

// Basis-index bit owned by a qubit; qubit 0 is the most significant.
std::uint64_t to_basis_bits(std::uint64_t mask, int n) {
  std::uint64_t out = 0;
  while (mask) {
    const int q = std::countr_zero(mask);
    out |= std::uint64_t{1} << (n - 1 - q);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

std::complex<double> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

PauliString::PauliString(int n_qubits) : PauliString(n_qubits, 0, 0, 0) {}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask, int phase_exponent)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask),
      phase_(((phase_exponent % 4) + 4) % 4) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("PauliString: qubit count " +
                         std::to_string(n_qubits) + " outside 1..64");
  }
  const auto allowed = register_mask(n_qubits);
  if ((x_ | z_) & ~allowed) {
    throw IndexError("PauliString: mask bits beyond the register");
  }
}

PauliString PauliString::single(int n_qubits, int qubit, Pauli letter) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw IndexError("PauliString::single: qubit " + std::to_string(qubit) +
                     " out of range");
  }
  const auto bit = std::uint64_t{1} << qubit;
  const auto code = static_cast<unsigned>(letter);
  return PauliString(n_qubits, (code & 1u) ? bit : 0, (code & 2u) ? bit : 0);
}

PauliString PauliString::parse(std::string_view text) {
  int k = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') k += 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    k += 1;
    text.remove_prefix(1);
  }
  const int n = static_cast<int>(text.size());
  if (n == 0) throw ParameterError("PauliString::parse: empty string");
  PauliString out(n);
  for (int q = 0; q < n; ++q) {
    Pauli letter;
    switch (text[q]) {
      case 'I':
      case '_':
        continue;
      case 'X':
        letter = Pauli::X;
        break;
      case 'Y':
        letter = Pauli::Y;
        break;
      case 'Z':
        letter = Pauli::Z;
        break;
      default:
        throw ParameterError(std::string("PauliString::parse: bad letter '") +
                             text[q] + "'");
    }
    out *= single(n, q, letter);
  }
  return out.times_i_power(k);
}

std::complex<double> PauliString::phase() const { return i_power(phase_); }

Pauli PauliString::at(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw IndexError("PauliString::at: qubit out of range");
  }
  const unsigned x = (x_ >> qubit) & 1u;
  const unsigned z = (z_ >> qubit) & 1u;
  return static_cast<Pauli>(x | (z << 1));
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (auto m = x_ | z_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int PauliString::count_y() const { return std::popcount(x_ & z_); }

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.n_qubits_ != n_qubits_) {
    throw DimensionError("PauliString::commutes_with: size mismatch");
  }
  const int symplectic = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return symplectic % 2 == 0;
}

PauliString PauliString::times_i_power(int k) const {
  return PauliString(n_qubits_, x_, z_, phase_ + k);
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  PauliString out = *this;
  out *= rhs;
  return out;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (rhs.n_qubits_ != n_qubits_) {
    throw DimensionError("PauliString multiply: " + std::to_string(n_qubits_) +
                         " vs " + std::to_string(rhs.n_qubits_) + " qubits");
  }
  // Each letter is i^{xz} X^x Z^z; moving Z^{z1} past X^{x2} costs (-1)^{z1 x2}.
  const std::uint64_t x = x_ ^ rhs.x_;
  const std::uint64_t z = z_ ^ rhs.z_;
  const int k = phase_ + rhs.phase_ + std::popcount(x_ & z_) +
                std::popcount(rhs.x_ & rhs.z_) + 2 * std::popcount(z_ & rhs.x_) -
                std::popcount(x & z);
  x_ = x;
  z_ = z;
  phase_ = ((k % 4) + 4) % 4;
  return *this;
}

PauliString::BasisAction PauliString::basis_action() const {
  // Y|b> = i(-1)^b |b^1>, so each Y adds a factor i on top of the Z sign.
  return {to_basis_bits(x_, n_qubits_), to_basis_bits(z_, n_qubits_),
          (phase_ + count_y()) % 4};
}

PauliString::BasisImage PauliString::BasisAction::operator()(
    std::uint64_t b) const {
  return {b ^ flip, i_power(phase + 2 * (std::popcount(b & sign) & 1))};
}

PauliString::BasisImage PauliString::apply(std::uint64_t basis_state) const {
  return basis_action()(basis_state);
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase_];
  for (int q = 0; q < n_qubits_; ++q) out += "IXZY"[static_cast<int>(at(q))];
  return out;
}

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
  return a * b;
}

}  // namespace syklab
