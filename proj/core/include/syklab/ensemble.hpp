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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "syklab/archive.hpp"
#include "syklab/config.hpp"
#include "syklab/gate_cost.hpp"

namespace syklab {

/// Archive header a config produces (sector labels and policy included).
ArchiveHeader archive_header_for(const RunConfig& config);

/// Builds, projects and diagonalizes one sample; one record per sector.
std::vector<ArchiveRecord> compute_sample(const RunConfig& config, const SectorPolicy& policy,
                                          std::uint64_t sample_id);

std::filesystem::path archive_path_for(const RunConfig& config);

struct RunResult {
  std::filesystem::path archive;
  std::uint64_t resumed_samples = 0;  // already present before this run
  std::uint64_t computed_samples = 0;
};

/// Runs samples 0..n_samples-1 on `workers` threads; a single writer appends
/// them in sample order, so the archive does not depend on the worker count.
/// An existing archive for the same run is resumed.
RunResult run_ensemble(const RunConfig& config,
                       const std::function<void(const std::string&)>& log = {});

/// Everything the diagnose step computes, before anything is written.
struct DiagnosticsBundle {
  std::optional<DosHistogram> dos;
  std::optional<EdgeMetrics> edges;
  std::optional<SurmiseComparison> spacings;
  std::optional<GapRatioCurve> gap_ratio;
  std::optional<EdgeRatioContrast> edge_contrast;  // lowest five ratios against the bulk
  std::optional<SffSeries> sff;
  std::optional<GateCostReport> gatecost;
  double energy_scale = 0.0;
  std::vector<std::string> warnings;
};

/// Diagnostics requested by the config. Insufficient data for a diagnostic
/// (e.g. too few levels to unfold) skips it with a warning.
DiagnosticsBundle compute_diagnostics(const EigenvalueArchive& archive, const RunConfig& config);

}  // namespace syklab
