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

#include <filesystem>
#include <string>
#include <vector>

#include "syklab/ensemble.hpp"

namespace syklab {

/// Whitespace-separated tables with one header line.
std::string dos_table(const DosHistogram& dos);
std::string spacing_table(const SurmiseComparison& cmp, SpectralClass cls);
std::string gap_ratio_index_table(const GapRatioCurve& curve);
std::string gap_ratio_hist_table(const GapRatioCurve& curve);
std::string sff_table(const SffSeries& sff);
std::string gatecost_table(const GateCostReport& report);

/// Acceptance thresholds used by the summary report.
inline constexpr double kGapRatioTolerance = 0.01;
inline constexpr double kSurmiseL1Limit = 0.05;
inline constexpr double kPlateauTolerance = 0.2;
inline constexpr double kRampSlopeMin = 0.8;
inline constexpr double kRampSlopeMax = 1.2;

/// Human-readable summary: measured values and pass/fail lines.
std::string summary_report(const DiagnosticsBundle& bundle, const ArchiveHeader& header,
                           const RunConfig& config);

struct ManifestEntry {
  std::string file;
  std::string figure;
  std::string description;
};

/// Table files a run emits, each mapped to the figure it feeds.
std::vector<ManifestEntry> figure_manifest(const RunConfig& config);
std::string manifest_text(const std::vector<ManifestEntry>& entries);

/// Writes tables, report and manifest under config.output_dir; returns the
/// written paths.
std::vector<std::filesystem::path> write_diagnostics(const DiagnosticsBundle& bundle,
                                                     const ArchiveHeader& header,
                                                     const RunConfig& config);

}  // namespace syklab
