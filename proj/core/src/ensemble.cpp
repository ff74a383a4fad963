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

#include "syklab/ensemble.hpp"

#include <atomic>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "syklab/errors.hpp"

namespace syklab {
namespace {

ModelSpec normalized(ModelSpec spec) {
  if (spec.family == ModelFamily::kGaugedClustersSyk) spec.N = spec.M * spec.L;
  return spec;
}

}  // namespace

ArchiveHeader archive_header_for(const RunConfig& config) {
  ArchiveHeader h;
  h.spec = normalized(config.model);
  h.n_samples = config.n_samples;
  const auto policy = sector_policy(h.spec);
  for (const auto& s : policy.sectors) h.sector_labels.push_back(s.label);
  h.policy = policy.description;
  h.degeneracy_factor = policy.degeneracy_factor;
  h.expected_class = policy.expected_class;
  return h;
}

std::filesystem::path archive_path_for(const RunConfig& config) {
  const auto dir = config.output_dir.empty() ? default_output_root() : config.output_dir;
  return dir / (normalized(config.model).tag() + ".eig");
}

std::vector<ArchiveRecord> compute_sample(const RunConfig& config, const SectorPolicy& policy,
                                          std::uint64_t sample_id) {
  const auto h = build_hamiltonian(normalized(config.model), sample_id);
  const auto spectra = resolve_sectors(h, policy, DenseBudget{config.dense_limit()});
  std::vector<ArchiveRecord> out;
  out.reserve(spectra.size());
  for (std::size_t k = 0; k < spectra.size(); ++k) {
    ArchiveRecord r;
    r.sample_id = sample_id;
    r.sector = static_cast<std::uint32_t>(k);
    r.excluded_zero_modes = static_cast<std::uint32_t>(spectra[k].excluded_zero_modes);
    r.eigenvalues = spectra[k].eigenvalues;
    out.push_back(std::move(r));
  }
  return out;
}

RunResult run_ensemble(const RunConfig& config, const std::function<void(const std::string&)>& log) {
  config.validate();
  RunResult result;
  result.archive = archive_path_for(config);
  std::filesystem::create_directories(result.archive.parent_path());
  const auto header = archive_header_for(config);
  const auto policy = sector_policy(header.spec);
  ArchiveWriter writer(result.archive, header, /*resume=*/true);
  const std::uint64_t start = writer.next_sample();
  const std::uint64_t end = config.n_samples;
  result.resumed_samples = start;
  if (log && start > 0) log("resuming at sample " + std::to_string(start));

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::uint64_t, std::vector<ArchiveRecord>> done;
  std::exception_ptr error;
  std::uint64_t written = start;
  std::atomic<std::uint64_t> next{start};
  // Workers may run at most this far ahead of the writer.
  const std::uint64_t window = 2 * static_cast<std::uint64_t>(config.workers) + 2;

  auto worker = [&] {
    while (true) {
      const auto id = next.fetch_add(1);
      if (id >= end) return;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return error || id < written + window; });
        if (error) return;
      }
      try {
        auto records = compute_sample(config, policy, id);
        std::lock_guard lock(mu);
        done.emplace(id, std::move(records));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  const auto n_threads = static_cast<std::uint64_t>(config.workers);
  for (std::uint64_t k = 0; k < std::min(n_threads, end > start ? end - start : 0); ++k) pool.emplace_back(worker);

  try {
    for (std::uint64_t id = start; id < end; ++id) {
      std::vector<ArchiveRecord> records;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return error || done.count(id); });
        if (error) break;
        records = std::move(done[id]);
        done.erase(id);
      }
      writer.append_sample(records);
      writer.flush();
      {
        std::lock_guard lock(mu);
        written = id + 1;
      }
      cv.notify_all();
      ++result.computed_samples;
      if (log && (id + 1) % 100 == 0) log("sample " + std::to_string(id + 1) + "/" + std::to_string(end));
    }
  } catch (...) {
    std::lock_guard lock(mu);
    if (!error) error = std::current_exception();
  }
  cv.notify_all();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return result;
}

DiagnosticsBundle compute_diagnostics(const EigenvalueArchive& archive, const RunConfig& config) {
  DiagnosticsBundle b;
  const auto spectra = archive.spectra();
  const auto samples = archive.per_sample_levels();
  auto attempt = [&b](const char* what, auto&& fn) {
    try {
      fn();
    } catch (const UnfoldingError& e) {
      b.warnings.push_back(std::string(what) + " skipped: " + e.what());
    } catch (const InputError& e) {
      b.warnings.push_back(std::string(what) + " skipped: " + e.what());
    } catch (const ParameterError& e) {
      b.warnings.push_back(std::string(what) + " skipped: " + e.what());
    }
  };
  if (config.wants(Diagnostic::kDos)) {
    attempt("dos", [&] {
      b.dos = density_of_states(spectra, config.dos_bins);
      b.edges = edge_metrics(spectra);
    });
  }
  if (config.wants(Diagnostic::kSpacings)) {
    attempt("spacings", [&] {
      auto cls = archive.header.expected_class;
      if (cls == SpectralClass::kUnknown) {
        b.warnings.push_back("spacings: symmetry class unknown, distances are against the GOE surmise");
        cls = SpectralClass::kGOE;
      }
      b.spacings = compare_to_surmise(unfolded_spacings(spectra, config.unfold, config.unfold_min_levels, config.bulk_fraction), cls);
    });
  }
  if (config.wants(Diagnostic::kGapRatio)) {
    attempt("gap_ratio", [&] {
      b.gap_ratio = gap_ratio_stats(spectra, {config.bulk_fraction, 50});
      b.edge_contrast = edge_ratio_contrast(spectra, 5, config.bulk_fraction);
      if (b.gap_ratio->excluded_zero_spacings) {
        b.warnings.push_back("gap_ratio: " + std::to_string(b.gap_ratio->excluded_zero_spacings) +
                             " ratios excluded for zero spacings");
      }
    });
  }
  if (config.wants(Diagnostic::kSff)) {
    attempt("sff", [&] {
      b.energy_scale = ensemble_energy_scale(samples);
      const auto grid = sff_time_grid(config.sff, 1.0 / b.energy_scale);
      b.sff = spectral_form_factor(samples, grid, archive.header.degeneracy_factor);
    });
  }
  if (config.wants(Diagnostic::kGatecost)) {
    attempt("gatecost", [&] { b.gatecost = gate_cost_report(config.model); });
  }
  return b;
}

}  // namespace syklab
