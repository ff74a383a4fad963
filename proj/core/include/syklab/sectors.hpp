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
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "syklab/models.hpp"

namespace syklab {

enum class ChargeKind { kGlobalParity, kParticleHole, kClusterParity };

/// A conserved Pauli-string charge Q with Q^2 = I.
struct ChargeOperator {
  ChargeKind kind = ChargeKind::kGlobalParity;
  int cluster = -1;  // 0-based, kClusterParity only
  PauliString string{1};
  bool commutes_with_parity = true;
  bool real_symmetric = true;  // otherwise imaginary antisymmetric

  std::string name() const;  // "parity", "P", "cluster3"
};

/// Global parity Z...Z or the particle-hole string Y X Y X ... of length N/2.
/// Flags are computed from the algebra and cross-checked on the dense action.
ChargeOperator make_charge(ChargeKind kind, int N);
/// Z string over the qubits of cluster j (M/2 qubits per cluster).
ChargeOperator make_cluster_parity(int M, int L, int cluster);

struct ChargeValue {
  ChargeOperator charge;
  int eigenvalue = 1;  // +1 or -1
};

/// Orthonormal basis of a joint eigenspace, one sparse column per vector.
struct SectorBasis {
  using Column = std::vector<std::pair<std::uint64_t, std::complex<double>>>;
  int n_qubits = 0;
  std::vector<Column> columns;
  bool real = true;

  std::size_t dim() const { return columns.size(); }
  Eigen::MatrixXcd dense() const;
};

/// Sweeps computational basis states in increasing order; each uncovered
/// state seeds prod_k (I + lambda_k Q_k)/2 |b>, which is either zero or a new
/// basis vector supported on the charge orbit of b. Throws AlgebraError when
/// the charges do not commute.
SectorBasis sector_basis(int n_qubits, std::span<const ChargeValue> charges);

/// B^dagger H B computed from the Pauli terms without forming H.
Eigen::MatrixXcd restrict_operator(const PauliSum& h, const SectorBasis& basis);

/// Throws AlgebraError unless [Q, H] = 0 to 1e-12 * sum |c|.
void check_conserved(const PauliSum& h, const ChargeOperator& charge);

enum class DegeneracyHandling { kNone, kPairsCollapsed, kZeroModesDropped };

struct SectorSpectrum {
  std::string label;  // "full", "parity+", "parity+_P-", "gauge+"
  std::map<std::string, int> quantum_numbers;
  std::vector<double> eigenvalues;  // ascending
  std::size_t dim = 0;              // sector dimension before policy
  DegeneracyHandling applied = DegeneracyHandling::kNone;
  std::size_t excluded_zero_modes = 0;
  bool real_block = false;
};

/// Restricts H to the joint eigenspace of the charges and diagonalizes.
/// An empty charge list diagonalizes the whole space. The budget applies to
/// the sector dimension.
SectorSpectrum project_sector(const HamiltonianInstance& h,
                              std::span<const ChargeValue> charges,
                              const DenseBudget& budget = {});

enum class SpectralClass { kGOE, kGUE, kUnknown };
std::string_view class_name(SpectralClass c);

struct SectorRequest {
  std::string label;
  std::vector<ChargeValue> charges;
};

/// Which sectors to diagonalize and how to post-process them.
struct SectorPolicy {
  int n_mod_8 = -1;  // -1 when not a fermionic family
  std::vector<SectorRequest> sectors;
  bool collapse_pairs = false;
  bool drop_zero_modes = false;
  /// Full spectrum multiplicity of each retained level.
  int degeneracy_factor = 1;
  SpectralClass expected_class = SpectralClass::kUnknown;
  std::string description;
};

/// Pair gap threshold (relative to spectral width) and zero-mode cutoff.
inline constexpr double kPairTolerance = 1e-8;
inline constexpr double kZeroModeCutoff = 1e-10;

SectorPolicy sector_policy(const ModelSpec& spec);
/// The M = 2 overlapping-clusters policy for N Majoranas.
SectorPolicy overlapping_m2_policy(int N);

/// Keeps the sectors the policy names, in policy order, and applies pair
/// collapsing / zero-mode removal. Throws CoverageError if one is missing.
std::vector<SectorSpectrum> apply_policy(std::vector<SectorSpectrum> spectra,
                                         const SectorPolicy& policy);
std::vector<SectorSpectrum> apply_policy(std::vector<SectorSpectrum> spectra, int N);

/// Keeps the first level of each adjacent pair; throws NumericalError when a
/// pair gap exceeds kPairTolerance * width.
std::vector<double> collapse_pairs(const std::vector<double>& sorted);

/// Projects every sector the policy requests and applies the policy.
std::vector<SectorSpectrum> resolve_sectors(const HamiltonianInstance& h,
                                            const SectorPolicy& policy,
                                            const DenseBudget& budget = {});

}  // namespace syklab
