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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "syklab/key_value.hpp"
#include "syklab/model_spec.hpp"
#include "syklab/spectral.hpp"

namespace syklab {

enum class Diagnostic { kDos, kSpacings, kGapRatio, kSff, kGatecost };
std::string_view diagnostic_name(Diagnostic d);
Diagnostic parse_diagnostic(std::string_view name);

/// Default cap on qudit Hilbert dimension (exclusive) and on N.
inline constexpr std::size_t kQuditDimensionCap = 59049;  // 3^10
inline constexpr int kMajoranaCap = 26;

/// Everything one ensemble run needs. Keys in the config file:
///   family d L q q_tilde M N seed variance same_site    model
///   samples workers output_dir diagnostics             run control
///   unfold_degree unfold_trim unfold_min_levels        unfolding
///   unfold_levels_per_degree
///   sff_points sff_t_min sff_t_max                     SFF grid (units of 1/sigma_E)
///   dos_bins bulk_fraction allow_large                 misc
struct RunConfig {
  ModelSpec model;
  std::uint64_t n_samples = 1;
  std::vector<Diagnostic> diagnostics{Diagnostic::kDos, Diagnostic::kSpacings,
                                      Diagnostic::kGapRatio, Diagnostic::kSff};
  std::filesystem::path output_dir;
  int workers = 1;
  UnfoldOptions unfold;
  std::size_t unfold_min_levels = kMinUnfoldLevels;
  SffOptions sff;
  int dos_bins = 0;
  double bulk_fraction = 0.6;
  bool allow_large = false;

  /// Throws ConfigError / ParameterError on out-of-range values and
  /// CapacityError past the desk-scale caps unless allow_large is set.
  void validate() const;
  bool wants(Diagnostic d) const;
  /// Largest sector the run may diagonalize.
  std::size_t dense_limit() const;
};

/// Reads key = value lines; "include = path" splices another file in place
/// (relative paths resolve against the including file). Throws ConfigError on
/// unreadable files and include cycles.
KeyValueBlock load_config_file(const std::filesystem::path& path);

RunConfig run_config_from(const KeyValueBlock& block);
KeyValueBlock to_key_values(const RunConfig& config);

/// $SYKLAB_OUTPUT_ROOT if set, otherwise "syklab-output".
std::filesystem::path default_output_root();

}  // namespace syklab
