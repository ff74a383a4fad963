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

#include "syklab/sectors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "syklab/errors.hpp"

namespace syklab {
namespace {

using Amp = std::complex<double>;

std::string signed_label(const std::string& name, int value) {
  return name + (value > 0 ? "+" : "-");
}

// Cross-checks the declared flags against the basis action for small registers.
void verify_charge_flags(const ChargeOperator& c) {
  const int n = c.string.num_qubits();
  if (n > 20) return;
  const auto q = c.string.basis_action();
  const auto parity = PauliString(n, 0, n == 64 ? ~0ULL : (1ULL << n) - 1).basis_action();
  const std::uint64_t dim = 1ULL << n;
  for (std::uint64_t b = 0; b < dim; ++b) {
    const auto img = q(b);
    const auto back = q(img.target);
    const bool sym = std::abs(back.amplitude - img.amplitude) < 1e-14;
    const bool real = std::abs(img.amplitude.imag()) < 1e-14;
    if (c.real_symmetric != (sym && real)) {
      throw NumericalError("charge " + c.name() + ": reality flag disagrees with its matrix");
    }
    // Z...Z Q |b> versus Q Z...Z |b>.
    const auto zq = parity(img.target).amplitude * img.amplitude;
    const auto qz = parity(b).amplitude * img.amplitude;
    const bool commutes = std::abs(zq - qz) < 1e-14;
    if (c.commutes_with_parity != commutes) {
      throw NumericalError("charge " + c.name() + ": parity algebra flag disagrees with its matrix");
    }
  }
}

ChargeOperator finish_charge(ChargeOperator c) {
  const int n = c.string.num_qubits();
  const PauliString parity(n, 0, n == 64 ? ~0ULL : (1ULL << n) - 1);
  c.commutes_with_parity = c.string.commutes_with(parity);
  c.real_symmetric = c.string.is_real();
  verify_charge_flags(c);
  return c;
}

void add_amp(SectorBasis::Column& v, std::uint64_t state, Amp a) {
  for (auto& [s, x] : v) {
    if (s == state) {
      x += a;
      return;
    }
  }
  v.emplace_back(state, a);
}

}  // namespace

std::string ChargeOperator::name() const {
  switch (kind) {
    case ChargeKind::kGlobalParity:
      return "parity";
    case ChargeKind::kParticleHole:
      return "P";
    case ChargeKind::kClusterParity:
      return "cluster" + std::to_string(cluster);
  }
  return "charge";
}

ChargeOperator make_charge(ChargeKind kind, int N) {
  if (N < 2 || N % 2 != 0 || N / 2 > PauliString::kMaxQubits) {
    throw ParameterError("make_charge needs an even Majorana count N with N/2 <= 64");
  }
  const int n = N / 2;
  ChargeOperator c;
  c.kind = kind;
  switch (kind) {
    case ChargeKind::kGlobalParity:
      c.string = PauliString(n, 0, n == 64 ? ~0ULL : (1ULL << n) - 1);
      break;
    case ChargeKind::kParticleHole: {
      PauliString p(n);
      for (int q = 0; q < n; ++q) p *= PauliString::single(n, q, q % 2 == 0 ? Pauli::Y : Pauli::X);
      c.string = p;
      break;
    }
    case ChargeKind::kClusterParity:
      throw ParameterError("cluster parities are built by make_cluster_parity");
  }
  return finish_charge(c);
}

ChargeOperator make_cluster_parity(int M, int L, int cluster) {
  if (M < 2 || M % 2 != 0 || L < 1 || M * L / 2 > PauliString::kMaxQubits) {
    throw ParameterError("make_cluster_parity needs even M and M*L/2 <= 64 qubits");
  }
  if (cluster < 0 || cluster >= L) {
    throw IndexError("cluster " + std::to_string(cluster) + " outside 0.." + std::to_string(L - 1));
  }
  const int n = M * L / 2;
  const int width = M / 2;
  ChargeOperator c;
  c.kind = ChargeKind::kClusterParity;
  c.cluster = cluster;
  PauliString z(n);
  for (int q = cluster * width; q < (cluster + 1) * width; ++q) z *= PauliString::single(n, q, Pauli::Z);
  c.string = z;
  return finish_charge(c);
}

Eigen::MatrixXcd SectorBasis::dense() const {
  const auto full = static_cast<Eigen::Index>(1ULL << n_qubits);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(full, static_cast<Eigen::Index>(dim()));
  for (std::size_t k = 0; k < dim(); ++k) {
    for (const auto& [s, a] : columns[k]) out(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(k)) = a;
  }
  return out;
}

SectorBasis sector_basis(int n_qubits, std::span<const ChargeValue> charges) {
  if (n_qubits < 0 || n_qubits > 30) {
    throw CapacityError("sector_basis supports at most 30 qubits");
  }
  std::vector<PauliString::BasisAction> actions;
  std::vector<int> lambdas;
  for (std::size_t i = 0; i < charges.size(); ++i) {
    const auto& c = charges[i];
    if (c.charge.string.num_qubits() != n_qubits) {
      throw DimensionError("charge " + c.charge.name() + " acts on a different register");
    }
    if (!c.charge.string.is_hermitian()) throw AlgebraError("charge " + c.charge.name() + " is not Hermitian");
    if (c.eigenvalue != 1 && c.eigenvalue != -1) throw ParameterError("charge eigenvalues must be +1 or -1");
    for (std::size_t j = 0; j < i; ++j) {
      if (!c.charge.string.commutes_with(charges[j].charge.string)) {
        throw AlgebraError("charges " + charges[j].charge.name() + " and " + c.charge.name() +
                           " do not commute");
      }
    }
    actions.push_back(c.charge.string.basis_action());
    lambdas.push_back(c.eigenvalue);
  }

  // GF(2) basis of the flip masks generates every orbit.
  std::vector<std::uint64_t> generators;
  for (const auto& a : actions) {
    std::uint64_t m = a.flip;
    for (auto g : generators) m = std::min(m, m ^ g);
    if (m) generators.push_back(m);
  }

  SectorBasis out;
  out.n_qubits = n_qubits;
  const std::uint64_t dim = 1ULL << n_qubits;
  std::vector<bool> covered(dim, false);
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (covered[b]) continue;
    for (std::uint64_t combo = 0; combo < (1ULL << generators.size()); ++combo) {
      std::uint64_t s = b;
      for (std::size_t g = 0; g < generators.size(); ++g) {
        if (combo >> g & 1) s ^= generators[g];
      }
      covered[s] = true;
    }
    SectorBasis::Column v{{b, Amp(1.0)}};
    for (std::size_t k = 0; k < actions.size(); ++k) {
      SectorBasis::Column next;
      for (const auto& [s, a] : v) {
        add_amp(next, s, 0.5 * a);
        const auto img = actions[k](s);
        add_amp(next, img.target, 0.5 * lambdas[k] * img.amplitude * a);
      }
      v = std::move(next);
    }
    std::erase_if(v, [](const auto& e) { return std::abs(e.second) < 1e-14; });
    if (v.empty()) continue;
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    double norm = 0.0;
    for (const auto& e : v) norm += std::norm(e.second);
    // Fix the global phase so the lowest state carries a positive amplitude.
    const Amp scale = std::conj(v.front().second) / (std::abs(v.front().second) * std::sqrt(norm));
    for (auto& e : v) {
      e.second *= scale;
      if (std::abs(e.second.imag()) < 1e-15) e.second = {e.second.real(), 0.0};
      else out.real = false;
    }
    out.columns.push_back(std::move(v));
  }
  return out;
}

Eigen::MatrixXcd restrict_operator(const PauliSum& h, const SectorBasis& basis) {
  if (h.n_qubits != basis.n_qubits) throw DimensionError("restrict_operator: register mismatch");
  const std::uint64_t full = 1ULL << basis.n_qubits;
  std::vector<std::int64_t> owner(full, -1);
  std::vector<Amp> coef(full);
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    for (const auto& [s, a] : basis.columns[k]) {
      owner[s] = static_cast<std::int64_t>(k);
      coef[s] = a;
    }
  }
  std::vector<PauliString::BasisAction> actions;
  actions.reserve(h.terms.size());
  for (const auto& t : h.terms) actions.push_back(t.string.basis_action());

  const auto k = static_cast<Eigen::Index>(basis.dim());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(k, k);
  for (Eigen::Index col = 0; col < k; ++col) {
    for (const auto& [s, a] : basis.columns[static_cast<std::size_t>(col)]) {
      for (std::size_t t = 0; t < actions.size(); ++t) {
        const auto img = actions[t](s);
        const auto row = owner[img.target];
        if (row < 0) continue;  // leaves the sector; excluded by check_conserved
        out(row, col) += std::conj(coef[img.target]) * h.terms[t].coefficient * img.amplitude * a;
      }
    }
  }
  return out;
}

void check_conserved(const PauliSum& h, const ChargeOperator& charge) {
  if (charge.string.num_qubits() != h.n_qubits) throw DimensionError("charge register mismatch");
  double norm = 0.0;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Amp> commutator;
  for (const auto& t : h.terms) {
    norm += std::abs(t.coefficient);
    if (t.string.commutes_with(charge.string)) continue;
    // [Q, P] = 2 QP for anticommuting strings.
    const auto qp = charge.string * t.string;
    commutator[{qp.x_mask(), qp.z_mask()}] += 2.0 * t.coefficient * qp.phase();
  }
  for (const auto& [key, value] : commutator) {
    if (std::abs(value) > 1e-12 * std::max(norm, 1.0)) {
      throw AlgebraError("charge " + charge.name() + " does not commute with the Hamiltonian");
    }
  }
}

SectorSpectrum project_sector(const HamiltonianInstance& h,
                              std::span<const ChargeValue> charges,
                              const DenseBudget& budget) {
  SectorSpectrum out;
  out.label = charges.empty() ? "full" : "";
  for (const auto& c : charges) {
    if (!out.label.empty()) out.label += "_";
    out.label += signed_label(c.charge.name(), c.eigenvalue);
    out.quantum_numbers[c.charge.name()] = c.eigenvalue;
  }

  if (!h.is_pauli()) {
    if (!charges.empty()) throw AlgebraError("qudit Hamiltonians take no Pauli charges");
    const auto dense = h.dense(budget);
    out.dim = static_cast<std::size_t>(dense.dim());
    out.real_block = dense.real;
    out.eigenvalues = hermitian_eigenvalues(dense.matrix, dense.real);
    return out;
  }

  const auto& terms = h.pauli_terms();
  for (const auto& c : charges) check_conserved(terms, c.charge);
  const auto basis = sector_basis(terms.n_qubits, charges);
  check_budget(basis.dim(), budget, "sector block");
  const auto block = restrict_operator(terms, basis);
  out.dim = basis.dim();
  const double scale = block.size() ? block.cwiseAbs().maxCoeff() : 0.0;
  out.real_block = block.size() == 0 || block.imag().cwiseAbs().maxCoeff() <= 1e-12 * scale;
  if (hermiticity_defect(block) > 1e-10 * std::max(scale, 1.0)) {
    throw NumericalError("restricted block is not Hermitian");
  }
  out.eigenvalues = hermitian_eigenvalues(block, out.real_block);
  return out;
}

std::string_view class_name(SpectralClass c) {
  switch (c) {
    case SpectralClass::kGOE:
      return "GOE";
    case SpectralClass::kGUE:
      return "GUE";
    case SpectralClass::kUnknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

SectorRequest make_request(std::vector<ChargeValue> charges) {
  SectorRequest r;
  for (const auto& c : charges) {
    if (!r.label.empty()) r.label += "_";
    r.label += signed_label(c.charge.name(), c.eigenvalue);
  }
  if (r.label.empty()) r.label = "full";
  r.charges = std::move(charges);
  return r;
}

SectorPolicy parity_policy(int N, bool mirrored_pairs) {
  SectorPolicy p;
  p.n_mod_8 = N % 8;
  const auto parity = make_charge(ChargeKind::kGlobalParity, N);
  if (mirrored_pairs && (p.n_mod_8 == 2 || p.n_mod_8 == 6)) {
    p.sectors.push_back(make_request({{parity, 1}}));
    p.degeneracy_factor = 2;
    p.description = "parity-even sector only; the odd sector has the same spectrum";
    return p;
  }
  p.sectors.push_back(make_request({{parity, 1}}));
  p.sectors.push_back(make_request({{parity, -1}}));
  if (mirrored_pairs && p.n_mod_8 == 4) {
    p.collapse_pairs = true;
    p.degeneracy_factor = 2;
    p.description = "both parity sectors, two-fold degeneracy removed";
  } else {
    p.description = "both parity sectors";
  }
  return p;
}

}  // namespace

SectorPolicy overlapping_m2_policy(int N) {
  if (N < 6 || N % 2 != 0) throw ParameterError("overlapping_m2_policy needs even N >= 6");
  if (N % 8 != 0) {
    auto p = parity_policy(N, true);
    p.expected_class = p.n_mod_8 == 4 ? SpectralClass::kGUE : SpectralClass::kGOE;
    return p;
  }
  SectorPolicy p;
  p.n_mod_8 = 0;
  const auto parity = make_charge(ChargeKind::kGlobalParity, N);
  const auto ph = make_charge(ChargeKind::kParticleHole, N);
  for (int s : {1, -1}) {
    for (int t : {1, -1}) p.sectors.push_back(make_request({{parity, s}, {ph, t}}));
  }
  p.drop_zero_modes = true;
  p.degeneracy_factor = 1;
  p.expected_class = SpectralClass::kGOE;
  p.description = "four (parity, P) sectors, exact zero modes excluded";
  return p;
}

SectorPolicy sector_policy(const ModelSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case ModelFamily::kQuditSyk: {
      SectorPolicy p;
      p.sectors.push_back(make_request({}));
      p.expected_class = SpectralClass::kGUE;
      p.description = "full Hilbert space";
      return p;
    }
    case ModelFamily::kClustersSpinSyk: {
      SectorPolicy p;
      p.sectors.push_back(make_request({}));
      p.description = "full Hilbert space";
      return p;
    }
    case ModelFamily::kGaugedClustersSyk: {
      SectorPolicy p;
      std::vector<ChargeValue> gauge;
      for (int j = 0; j < spec.L; ++j) gauge.push_back({make_cluster_parity(spec.M, spec.L, j), 1});
      auto r = make_request(std::move(gauge));
      r.label = "gauge+";
      p.sectors.push_back(std::move(r));
      p.description = "all cluster parities +1";
      return p;
    }
    case ModelFamily::kOverlappingClustersSyk:
      if (spec.M == 2 && spec.q_tilde == 2) return overlapping_m2_policy(spec.N);
      return parity_policy(spec.N, spec.q_tilde == 2);
    case ModelFamily::kOriginalSyk:
      return parity_policy(spec.N, true);
  }
  throw ParameterError("sector_policy: unknown family");
}

std::vector<double> collapse_pairs(const std::vector<double>& sorted) {
  if (sorted.size() % 2 != 0) {
    throw NumericalError("pair collapsing needs an even number of levels, got " +
                         std::to_string(sorted.size()));
  }
  if (sorted.empty()) return {};
  const double width = sorted.back() - sorted.front();
  std::vector<double> out;
  out.reserve(sorted.size() / 2);
  for (std::size_t k = 0; k < sorted.size(); k += 2) {
    if (sorted[k + 1] - sorted[k] > kPairTolerance * width) {
      throw NumericalError("levels " + std::to_string(k) + " and " + std::to_string(k + 1) +
                           " are not degenerate");
    }
    out.push_back(sorted[k]);
  }
  return out;
}

std::vector<SectorSpectrum> apply_policy(std::vector<SectorSpectrum> spectra,
                                         const SectorPolicy& policy) {
  std::vector<SectorSpectrum> out;
  for (const auto& request : policy.sectors) {
    auto it = std::find_if(spectra.begin(), spectra.end(),
                           [&](const SectorSpectrum& s) { return s.label == request.label; });
    if (it == spectra.end()) throw CoverageError("missing sector " + request.label);
    SectorSpectrum s = std::move(*it);
    if (policy.collapse_pairs) {
      s.eigenvalues = collapse_pairs(s.eigenvalues);
      s.applied = DegeneracyHandling::kPairsCollapsed;
    }
    if (policy.drop_zero_modes) {
      const auto before = s.eigenvalues.size();
      std::erase_if(s.eigenvalues, [](double e) { return std::abs(e) < kZeroModeCutoff; });
      s.excluded_zero_modes = before - s.eigenvalues.size();
      s.applied = DegeneracyHandling::kZeroModesDropped;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SectorSpectrum> apply_policy(std::vector<SectorSpectrum> spectra, int N) {
  return apply_policy(std::move(spectra), overlapping_m2_policy(N));
}

std::vector<SectorSpectrum> resolve_sectors(const HamiltonianInstance& h,
                                            const SectorPolicy& policy,
                                            const DenseBudget& budget) {
  std::vector<SectorSpectrum> raw;
  for (const auto& request : policy.sectors) {
    auto s = project_sector(h, request.charges, budget);
    s.label = request.label;
    raw.push_back(std::move(s));
  }
  return apply_policy(std::move(raw), policy);
}

}  // namespace syklab
