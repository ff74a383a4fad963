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

#include "syklab/archive.hpp"

#include <bit>
#include <cstring>
#include <sstream>

#include <zlib.h>

#include "syklab/errors.hpp"

namespace syklab {
namespace {

constexpr const char* kEndHeader = "end_header";

template <typename T>
void put_le(std::vector<char>& out, T value) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  U bits;
  std::memcpy(&bits, &value, sizeof bits);
  for (std::size_t k = 0; k < sizeof bits; ++k) out.push_back(static_cast<char>((bits >> (8 * k)) & 0xFF));
}

template <typename T>
T get_le(const char* data) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  U bits = 0;
  for (std::size_t k = 0; k < sizeof bits; ++k) {
    bits |= static_cast<U>(static_cast<unsigned char>(data[k])) << (8 * k);
  }
  T value;
  std::memcpy(&value, &bits, sizeof value);
  return value;
}

std::uint32_t crc32_of(const char* data, std::size_t n) {
  return static_cast<std::uint32_t>(
      crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef*>(data), static_cast<uInt>(n)));
}

SpectralClass parse_class(const std::string& s) {
  if (s == "GOE") return SpectralClass::kGOE;
  if (s == "GUE") return SpectralClass::kGUE;
  if (s == "unknown") return SpectralClass::kUnknown;
  throw ArchiveError("unknown symmetry class '" + s + "' in archive header");
}

struct Parsed {
  ArchiveHeader header;
  std::size_t data_offset = 0;
  std::vector<ArchiveRecord> records;
  std::size_t valid_bytes = 0;  // offset just past the last intact record
  bool trailing_garbage = false;
};

Parsed parse_archive(const std::string& bytes) {
  Parsed p;
  std::size_t pos = 0;
  auto next_line = [&]() -> std::string {
    const auto nl = bytes.find('\n', pos);
    if (nl == std::string::npos) throw ArchiveError("archive header is truncated");
    auto line = bytes.substr(pos, nl - pos);
    pos = nl + 1;
    return line;
  };
  if (next_line() != kArchiveMagic) throw ArchiveError("not an eigenvalue archive (bad magic line)");
  std::string text;
  while (true) {
    const auto line = next_line();
    if (line == kEndHeader) break;
    text += line + "\n";
  }
  const auto block = KeyValueBlock::parse(text);
  const auto version = block.get_int("version");
  if (!version) throw ArchiveError("archive header has no version");
  if (*version != kArchiveVersion) {
    throw ArchiveError("unsupported archive version " + std::to_string(*version));
  }
  p.header.version = static_cast<int>(*version);
  KeyValueBlock spec_keys;
  for (const auto& [k, v] : block.values()) {
    if (k.rfind("spec.", 0) == 0) spec_keys.set(k.substr(5), v);
  }
  p.header.spec = model_spec_from(spec_keys);
  p.header.n_samples = block.get_uint("samples").value_or(0);
  std::stringstream labels(block.get_or("sectors", ""));
  for (std::string item; std::getline(labels, item, ',');) {
    if (!item.empty()) p.header.sector_labels.push_back(item);
  }
  if (p.header.sector_labels.empty()) throw ArchiveError("archive header lists no sectors");
  p.header.policy = block.get_or("policy", "");
  p.header.degeneracy_factor = static_cast<int>(block.get_int("degeneracy_factor").value_or(1));
  p.header.expected_class = parse_class(block.get_or("expected_class", "unknown"));
  p.data_offset = pos;
  p.valid_bytes = pos;

  constexpr std::size_t kFixed = 8 + 4 + 4 + 4;
  while (pos < bytes.size()) {
    if (bytes.size() - pos < kFixed) {
      p.trailing_garbage = true;
      break;
    }
    const char* d = bytes.data() + pos;
    ArchiveRecord r;
    r.sample_id = get_le<std::uint64_t>(d);
    r.sector = get_le<std::uint32_t>(d + 8);
    const auto count = get_le<std::uint32_t>(d + 12);
    r.excluded_zero_modes = get_le<std::uint32_t>(d + 16);
    const std::size_t size = kFixed + 8 * static_cast<std::size_t>(count) + 4;
    if (bytes.size() - pos < size) {
      p.trailing_garbage = true;
      break;
    }
    if (crc32_of(d, size - 4) != get_le<std::uint32_t>(d + size - 4)) {
      throw ArchiveError("checksum mismatch in record at byte " + std::to_string(pos));
    }
    r.eigenvalues.resize(count);
    for (std::uint32_t k = 0; k < count; ++k) r.eigenvalues[k] = get_le<double>(d + kFixed + 8 * k);
    const auto expect_sample = p.records.size() / p.header.sector_labels.size();
    const auto expect_sector = p.records.size() % p.header.sector_labels.size();
    if (r.sample_id != expect_sample || r.sector != expect_sector) {
      throw ArchiveError("record out of order at byte " + std::to_string(pos));
    }
    p.records.push_back(std::move(r));
    pos += size;
    p.valid_bytes = pos;
  }
  return p;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArchiveError("cannot open archive " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string ArchiveHeader::str() const {
  std::string out = std::string(kArchiveMagic) + "\n";
  out += "version=" + std::to_string(version) + "\n";
  const auto spec_keys = to_key_values(spec);
  for (const auto& [k, v] : spec_keys.values()) out += "spec." + k + "=" + v + "\n";
  out += "samples=" + std::to_string(n_samples) + "\n";
  std::string labels;
  for (const auto& l : sector_labels) labels += (labels.empty() ? "" : ",") + l;
  out += "sectors=" + labels + "\n";
  out += "policy=" + policy + "\n";
  out += "degeneracy_factor=" + std::to_string(degeneracy_factor) + "\n";
  out += "expected_class=" + std::string(class_name(expected_class)) + "\n";
  out += std::string(kEndHeader) + "\n";
  return out;
}

std::vector<char> encode_record(const ArchiveRecord& r) {
  std::vector<char> out;
  out.reserve(24 + 8 * r.eigenvalues.size());
  put_le(out, r.sample_id);
  put_le(out, r.sector);
  put_le(out, static_cast<std::uint32_t>(r.eigenvalues.size()));
  put_le(out, r.excluded_zero_modes);
  for (double e : r.eigenvalues) put_le(out, e);
  put_le(out, crc32_of(out.data(), out.size()));
  return out;
}

std::uint64_t EigenvalueArchive::complete_samples() const {
  const auto n = header.sector_labels.size();
  return n ? records.size() / n : 0;
}

SpectrumEnsemble EigenvalueArchive::spectra() const {
  SpectrumEnsemble out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.eigenvalues);
  return out;
}

SpectrumEnsemble EigenvalueArchive::per_sample_levels() const {
  const auto n = header.sector_labels.size();
  SpectrumEnsemble out(complete_samples());
  for (std::size_t k = 0; k < out.size() * n; ++k) {
    const auto& e = records[k].eigenvalues;
    out[k / n].insert(out[k / n].end(), e.begin(), e.end());
  }
  return out;
}

EigenvalueArchive read_archive(const std::filesystem::path& path, bool allow_partial) {
  auto parsed = parse_archive(read_file(path));
  EigenvalueArchive a{std::move(parsed.header), std::move(parsed.records)};
  if (!allow_partial) {
    if (parsed.trailing_garbage) throw ArchiveError("archive ends with a truncated record");
    if (a.records.size() != a.header.n_samples * a.header.sector_labels.size()) {
      throw ArchiveError("archive holds " + std::to_string(a.records.size()) + " records, expected " +
                         std::to_string(a.header.n_samples * a.header.sector_labels.size()));
    }
  } else {
    a.records.resize(a.complete_samples() * a.header.sector_labels.size());
  }
  return a;
}

ArchiveWriter::ArchiveWriter(const std::filesystem::path& path, const ArchiveHeader& header, bool resume)
    : path_(path), header_(header) {
  if (header.sector_labels.empty()) throw ArchiveError("archive header needs at least one sector");
  const auto text = header.str();
  // A file holding only part of the header (crash during creation) is restarted.
  bool existing = resume && std::filesystem::exists(path);
  if (existing) {
    const auto bytes = read_file(path);
    if (bytes.size() < text.size() && text.compare(0, bytes.size(), bytes) == 0) existing = false;
  }
  if (existing) {
    const auto parsed = parse_archive(read_file(path));
    if (!(parsed.header == header)) {
      throw ArchiveError("existing archive " + path.string() + " was written for a different run");
    }
    const auto per = header.sector_labels.size();
    next_sample_ = parsed.records.size() / per;
    // Keep only complete samples; everything after is rewritten.
    std::size_t keep = parsed.data_offset;
    {
      const auto bytes = read_file(path);
      std::size_t pos = parsed.data_offset;
      for (std::size_t k = 0; k < next_sample_ * per; ++k) {
        const auto count = get_le<std::uint32_t>(bytes.data() + pos + 12);
        pos += 24 + 8 * static_cast<std::size_t>(count);
      }
      keep = pos;
    }
    std::filesystem::resize_file(path, keep);
    out_.open(path, std::ios::binary | std::ios::app);
  } else {
    out_.open(path, std::ios::binary | std::ios::trunc);
    out_.write(text.data(), static_cast<std::streamsize>(text.size()));
  }
  if (!out_) throw ArchiveError("cannot write archive " + path.string());
}

void ArchiveWriter::append_sample(const std::vector<ArchiveRecord>& records) {
  if (records.size() != header_.sector_labels.size()) {
    throw ArchiveError("sample needs one record per sector");
  }
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (records[k].sample_id != next_sample_ || records[k].sector != k) {
      throw ArchiveError("records must be appended in sample order");
    }
    const auto bytes = encode_record(records[k]);
    out_.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  if (!out_) throw ArchiveError("write failed on " + path_.string());
  ++next_sample_;
}

void ArchiveWriter::flush() { out_.flush(); }

}  // namespace syklab
