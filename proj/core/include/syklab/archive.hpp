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
#include <fstream>
#include <string>
#include <vector>

#include "syklab/model_spec.hpp"
#include "syklab/sectors.hpp"
#include "syklab/spectral.hpp"

namespace syklab {

inline constexpr const char* kArchiveMagic = "SYKLAB-EIGENVALUE-ARCHIVE";
inline constexpr int kArchiveVersion = 1;

/// Text header of an eigenvalue archive. Written as key=value lines between
/// the magic line and "end_header".
struct ArchiveHeader {
  int version = kArchiveVersion;
  ModelSpec spec;
  std::uint64_t n_samples = 0;
  std::vector<std::string> sector_labels;
  std::string policy;
  int degeneracy_factor = 1;
  SpectralClass expected_class = SpectralClass::kUnknown;

  std::string str() const;
  bool operator==(const ArchiveHeader&) const = default;
};

/// Binary record, little endian: u64 sample_id, u32 sector, u32 count,
/// u32 excluded_zero_modes, count x f64 (ascending), u32 CRC-32 of all
/// preceding record bytes.
struct ArchiveRecord {
  std::uint64_t sample_id = 0;
  std::uint32_t sector = 0;
  std::uint32_t excluded_zero_modes = 0;
  std::vector<double> eigenvalues;

  bool operator==(const ArchiveRecord&) const = default;
};

struct EigenvalueArchive {
  ArchiveHeader header;
  std::vector<ArchiveRecord> records;

  /// Samples whose every sector record is present (records are sample-major).
  std::uint64_t complete_samples() const;
  bool complete() const { return complete_samples() == header.n_samples; }
  /// One spectrum per record, in file order.
  SpectrumEnsemble spectra() const;
  /// Levels of all sectors of each sample concatenated, one entry per sample.
  SpectrumEnsemble per_sample_levels() const;
};

/// Reads and validates an archive. Throws ArchiveError on a bad header, CRC
/// mismatch, or (unless allow_partial) a truncated or incomplete file.
EigenvalueArchive read_archive(const std::filesystem::path& path, bool allow_partial = false);

/// Append-only writer. Opening an existing archive whose header matches
/// resumes it: a partial trailing record and any incomplete sample are cut
/// off, and next_sample() reports where to continue.
class ArchiveWriter {
 public:
  ArchiveWriter(const std::filesystem::path& path, const ArchiveHeader& header, bool resume);

  std::uint64_t next_sample() const { return next_sample_; }
  /// Records of one sample, one per sector in header order.
  void append_sample(const std::vector<ArchiveRecord>& records);
  void flush();

 private:
  std::filesystem::path path_;
  ArchiveHeader header_;
  std::ofstream out_;
  std::uint64_t next_sample_ = 0;
};

std::vector<char> encode_record(const ArchiveRecord& record);

}  // namespace syklab
