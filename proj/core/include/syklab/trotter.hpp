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

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "syklab/dense_operator.hpp"
#include "syklab/models.hpp"

namespace syklab {

enum class GateKind { kH, kS, kSdg, kRz, kCnot };

struct GateOp {
  GateKind kind = GateKind::kH;
  int qubit = 0;   // target of one-qubit gates, control of CNOT
  int target = -1; // CNOT only
  double angle = 0.0;  // Rz only, radians

  static GateOp h(int q) { return {GateKind::kH, q, -1, 0.0}; }
  static GateOp s(int q) { return {GateKind::kS, q, -1, 0.0}; }
  static GateOp sdg(int q) { return {GateKind::kSdg, q, -1, 0.0}; }
  static GateOp rz(int q, double angle) { return {GateKind::kRz, q, -1, angle}; }
  static GateOp cnot(int control, int target) { return {GateKind::kCnot, control, target, 0.0}; }

  bool operator==(const GateOp&) const = default;
};

class Circuit {
 public:
  explicit Circuit(int n_qubits = 0);

  int num_qubits() const { return n_qubits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  std::size_t cnot_count() const { return cnots_; }
  std::size_t single_qubit_count() const { return ops_.size() - cnots_; }

  /// Throws IndexError for qubits outside the register or control == target.
  void append(const GateOp& op);
  void append(const Circuit& other);

  bool operator==(const Circuit&) const = default;

 private:
  int n_qubits_;
  std::vector<GateOp> ops_;
  std::size_t cnots_ = 0;
};

/// exp(-i epsilon p) up to global phase: basis change (H for X; SDG then H
/// for Y), CNOT ladder along the sorted support, Rz(2 epsilon sign) on the
/// last support qubit, then the mirror image. Throws AlgebraError when p is
/// not Hermitian or is the identity.
Circuit compile_pauli_exponential(const PauliString& p, double epsilon);

/// First-order product of the term exponentials in the order the terms are
/// stored: exp(-i c_1 dt P_1) is applied first.
Circuit trotter_step(const PauliSum& h, double dt);
/// Uses the Pauli form of the instance; qudits with d > 2 throw ParameterError.
Circuit trotter_step(const HamiltonianInstance& h, double dt);

/// Dense unitary of the circuit (qubit 0 is the most significant bit).
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit, const DenseBudget& budget = {});

/// exp(-i t A) for Hermitian A via eigendecomposition.
Eigen::MatrixXcd hermitian_exponential(const Eigen::MatrixXcd& a, double t);

/// min over global phases of max |a - e^{i phi} b|.
double distance_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Netlist: a "# qubits=N" header, then one gate per line
/// ("H q", "S q", "SDG q", "RZ q angle", "CNOT c t").
std::string to_netlist(const Circuit& circuit);
Circuit parse_netlist(std::string_view text);

}  // namespace syklab
