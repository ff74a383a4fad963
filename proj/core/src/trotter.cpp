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

#include "syklab/trotter.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "syklab/errors.hpp"

namespace syklab {
namespace {

using Amp = std::complex<double>;

// Left-multiplies u by the gate, acting on rows.
void apply_gate(Eigen::MatrixXcd& u, const GateOp& op, int n) {
  const auto dim = static_cast<std::uint64_t>(u.rows());
  const std::uint64_t bit = 1ULL << (n - 1 - op.qubit);
  switch (op.kind) {
    case GateKind::kH: {
      const double r = 1.0 / std::sqrt(2.0);
      for (std::uint64_t b = 0; b < dim; ++b) {
        if (b & bit) continue;
        const auto i0 = static_cast<Eigen::Index>(b);
        const auto i1 = static_cast<Eigen::Index>(b | bit);
        const Eigen::RowVectorXcd a = u.row(i0);
        const Eigen::RowVectorXcd c = u.row(i1);
        u.row(i0) = r * (a + c);
        u.row(i1) = r * (a - c);
      }
      break;
    }
    case GateKind::kS:
    case GateKind::kSdg: {
      const Amp phase = op.kind == GateKind::kS ? Amp(0, 1) : Amp(0, -1);
      for (std::uint64_t b = 0; b < dim; ++b) {
        if (b & bit) u.row(static_cast<Eigen::Index>(b)) *= phase;
      }
      break;
    }
    case GateKind::kRz: {
      const Amp lo = std::polar(1.0, -0.5 * op.angle);
      const Amp hi = std::polar(1.0, 0.5 * op.angle);
      for (std::uint64_t b = 0; b < dim; ++b) u.row(static_cast<Eigen::Index>(b)) *= (b & bit) ? hi : lo;
      break;
    }
    case GateKind::kCnot: {
      const std::uint64_t tbit = 1ULL << (n - 1 - op.target);
      for (std::uint64_t b = 0; b < dim; ++b) {
        if ((b & bit) && !(b & tbit)) u.row(static_cast<Eigen::Index>(b)).swap(u.row(static_cast<Eigen::Index>(b | tbit)));
      }
      break;
    }
  }
}

}  // namespace

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > PauliString::kMaxQubits) throw DimensionError("circuit register out of range");
}

void Circuit::append(const GateOp& op) {
  auto check = [this](int q) {
    if (q < 0 || q >= n_qubits_) throw IndexError("gate qubit " + std::to_string(q) + " outside the register");
  };
  check(op.qubit);
  if (op.kind == GateKind::kCnot) {
    check(op.target);
    if (op.target == op.qubit) throw IndexError("CNOT control equals target");
    ++cnots_;
  }
  ops_.push_back(op);
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) throw DimensionError("cannot append circuits on different registers");
  for (const auto& op : other.ops_) append(op);
}

Circuit compile_pauli_exponential(const PauliString& p, double epsilon) {
  if (!p.is_hermitian()) throw AlgebraError("exponent string " + p.str() + " is not Hermitian");
  if (p.is_identity_up_to_phase()) {
    throw AlgebraError("identity exponent only contributes a global phase");
  }
  const double sign = p.phase_exponent() == 0 ? 1.0 : -1.0;
  const auto support = p.support();
  Circuit c(p.num_qubits());
  for (int q : support) {
    if (p.at(q) == Pauli::X) c.append(GateOp::h(q));
    if (p.at(q) == Pauli::Y) {
      c.append(GateOp::sdg(q));
      c.append(GateOp::h(q));
    }
  }
  for (std::size_t k = 0; k + 1 < support.size(); ++k) c.append(GateOp::cnot(support[k], support[k + 1]));
  c.append(GateOp::rz(support.back(), 2.0 * epsilon * sign));
  for (std::size_t k = support.size() - 1; k-- > 0;) c.append(GateOp::cnot(support[k], support[k + 1]));
  for (int q : support) {
    if (p.at(q) == Pauli::X) c.append(GateOp::h(q));
    if (p.at(q) == Pauli::Y) {
      c.append(GateOp::h(q));
      c.append(GateOp::s(q));
    }
  }
  return c;
}

Circuit trotter_step(const PauliSum& h, double dt) {
  Circuit c(h.n_qubits);
  for (const auto& t : h.terms) {
    if (t.string.is_identity_up_to_phase()) continue;  // global phase
    c.append(compile_pauli_exponential(t.string, t.coefficient * dt));
  }
  return c;
}

Circuit trotter_step(const HamiltonianInstance& h, double dt) {
  const auto sum = h.as_pauli_sum();
  if (!sum) throw ParameterError("qudit Hamiltonians with d > 2 have no Pauli form to compile");
  return trotter_step(*sum, dt);
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit, const DenseBudget& budget) {
  const int n = circuit.num_qubits();
  if (n >= 63) check_budget(~std::size_t{0}, budget, "circuit unitary");
  const auto dim = std::size_t{1} << n;
  check_budget(dim, budget, "circuit unitary");
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& op : circuit.ops()) apply_gate(u, op, n);
  return u;
}

Eigen::MatrixXcd hermitian_exponential(const Eigen::MatrixXcd& a, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed in hermitian_exponential");
  Eigen::VectorXcd phases(solver.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::polar(1.0, -t * solver.eigenvalues()(k));
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

double distance_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix shapes differ");
  // The best phase aligns the overlap Tr(b^dagger a).
  const Amp overlap = (b.adjoint() * a).trace();
  const Amp phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Amp(1.0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

std::string to_netlist(const Circuit& circuit) {
  std::string out = "# qubits=" + std::to_string(circuit.num_qubits()) + "\n";
  char buf[64];
  for (const auto& op : circuit.ops()) {
    switch (op.kind) {
      case GateKind::kH:
        out += "H " + std::to_string(op.qubit) + "\n";
        break;
      case GateKind::kS:
        out += "S " + std::to_string(op.qubit) + "\n";
        break;
      case GateKind::kSdg:
        out += "SDG " + std::to_string(op.qubit) + "\n";
        break;
      case GateKind::kRz:
        std::snprintf(buf, sizeof buf, "%.17g", op.angle);
        out += "RZ " + std::to_string(op.qubit) + " " + buf + "\n";
        break;
      case GateKind::kCnot:
        out += "CNOT " + std::to_string(op.qubit) + " " + std::to_string(op.target) + "\n";
        break;
    }
  }
  return out;
}

Circuit parse_netlist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  Circuit c;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto pos = line.find("qubits=");
      if (pos != std::string::npos && n < 0) {
        n = std::stoi(line.substr(pos + 7));
        c = Circuit(n);
      }
      continue;
    }
    if (n < 0) throw InputError("netlist is missing the '# qubits=N' header");
    std::istringstream fields(line);
    std::string name;
    int q = -1;
    fields >> name >> q;
    if (fields.fail()) throw InputError("netlist line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
    if (name == "H") {
      c.append(GateOp::h(q));
    } else if (name == "S") {
      c.append(GateOp::s(q));
    } else if (name == "SDG") {
      c.append(GateOp::sdg(q));
    } else if (name == "RZ") {
      double angle = 0;
      fields >> angle;
      if (fields.fail()) throw InputError("netlist line " + std::to_string(line_no) + ": RZ needs an angle");
      c.append(GateOp::rz(q, angle));
    } else if (name == "CNOT") {
      int t = -1;
      fields >> t;
      if (fields.fail()) throw InputError("netlist line " + std::to_string(line_no) + ": CNOT needs a target");
      c.append(GateOp::cnot(q, t));
    } else {
      throw InputError("netlist line " + std::to_string(line_no) + ": unknown gate '" + name + "'");
    }
  }
  if (n < 0) throw InputError("netlist is missing the '# qubits=N' header");
  return c;
}

}  // namespace syklab
