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

#include "syklab/diagnostics_report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "syklab/errors.hpp"

namespace syklab {
namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string sff_figure(const ModelSpec& spec) {
  if (spec.family == ModelFamily::kOverlappingClustersSyk && spec.M == 2 && spec.q_tilde == 2) {
    return "sff_overlapping_m2";
  }
  return "sff_" + std::string(family_name(spec.family));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw InputError("cannot write " + path.string());
}

}  // namespace

std::string dos_table(const DosHistogram& dos) {
  std::string out = "e_lo e_hi density\n";
  for (std::size_t b = 0; b < dos.density.size(); ++b) {
    out += num(dos.edges[b]) + " " + num(dos.edges[b + 1]) + " " + num(dos.density[b]) + "\n";
  }
  return out;
}

std::string spacing_table(const SurmiseComparison& cmp, SpectralClass cls) {
  std::string out = "s_lo s_hi empirical surmise_" + std::string(class_name(cls)) + " goe gue\n";
  for (std::size_t b = 0; b < cmp.empirical.size(); ++b) {
    const double lo = cmp.edges[b];
    const double hi = cmp.edges[b + 1];
    const double w = hi - lo;
    out += num(lo) + " " + num(hi) + " " + num(cmp.empirical[b]) + " " + num(cmp.surmise[b]) + " " +
           num((wigner_surmise_cdf(SpectralClass::kGOE, hi) - wigner_surmise_cdf(SpectralClass::kGOE, lo)) / w) +
           " " +
           num((wigner_surmise_cdf(SpectralClass::kGUE, hi) - wigner_surmise_cdf(SpectralClass::kGUE, lo)) / w) +
           "\n";
  }
  return out;
}

std::string gap_ratio_index_table(const GapRatioCurve& curve) {
  std::string out = "i mean_r se count\n";
  for (std::size_t i = 0; i < curve.index_mean.size(); ++i) {
    out += std::to_string(i) + " " + num(curve.index_mean[i]) + " " + num(curve.index_se[i]) + " " +
           std::to_string(curve.index_count[i]) + "\n";
  }
  return out;
}

std::string gap_ratio_hist_table(const GapRatioCurve& curve) {
  std::string out = "r_lo r_hi density goe gue\n";
  for (std::size_t b = 0; b < curve.hist_density.size(); ++b) {
    const double mid = 0.5 * (curve.hist_edges[b] + curve.hist_edges[b + 1]);
    out += num(curve.hist_edges[b]) + " " + num(curve.hist_edges[b + 1]) + " " + num(curve.hist_density[b]) +
           " " + num(gap_ratio_surmise(SpectralClass::kGOE, mid)) + " " +
           num(gap_ratio_surmise(SpectralClass::kGUE, mid)) + "\n";
  }
  return out;
}

std::string sff_table(const SffSeries& sff) {
  std::string out = "t sff\n";
  for (std::size_t k = 0; k < sff.t.size(); ++k) out += num(sff.t[k]) + " " + num(sff.value[k]) + "\n";
  return out;
}

std::string gatecost_table(const GateCostReport& r) {
  std::string out =
      "family N M q_tilde terms max_length mean_length length_bound cnots_per_step single_qubit_per_step "
      "syk_terms syk_cnots_per_step cnot_ratio\n";
  out += std::string(family_name(r.spec.family)) + " " + std::to_string(r.reference_majoranas) + " " +
         std::to_string(r.spec.M) + " " + std::to_string(r.spec.q_tilde) + " " + std::to_string(r.term_count) +
         " " + std::to_string(r.max_length) + " " + num(r.mean_length) + " " + std::to_string(r.length_bound) +
         " " + std::to_string(r.cnots_per_step) + " " + std::to_string(r.single_qubit_gates_per_step) + " " +
         std::to_string(r.syk_term_count) + " " + std::to_string(r.syk_cnots_per_step) + " " +
         num(r.cnot_ratio) + "\n";
  return out;
}

std::string summary_report(const DiagnosticsBundle& b, const ArchiveHeader& header, const RunConfig& config) {
  std::string out = "# syklab diagnostics report\n";
  out += "model " + header.spec.tag() + "\n";
  out += "samples " + std::to_string(header.n_samples) + "\n";
  std::string labels;
  for (const auto& l : header.sector_labels) labels += (labels.empty() ? "" : ",") + l;
  out += "sectors " + labels + "\n";
  out += "policy " + header.policy + "\n";
  out += "degeneracy_factor " + std::to_string(header.degeneracy_factor) + "\n";
  out += "expected_class " + std::string(class_name(header.expected_class)) + "\n";
  out += "unfolding max_degree=" + std::to_string(config.unfold.poly_degree) +
         " levels_per_degree=" + std::to_string(config.unfold.levels_per_degree) +
         " trim=" + num(config.unfold.edge_trim) + " min_levels=" + std::to_string(config.unfold_min_levels) +
         " bulk_fraction=" + num(config.bulk_fraction) + "\n";
  const bool known = header.expected_class != SpectralClass::kUnknown;
  if (b.dos) {
    out += "dos bins=" + std::to_string(b.dos->density.size()) + " integral=" + num(b.dos->integral()) + "\n";
  }
  if (b.edges) {
    out += "dos_edges excess_kurtosis=" + num(b.edges->excess_kurtosis) + " tail_mass=" + num(b.edges->tail_mass) +
           "\n";
  }
  if (b.spacings) {
    out += "spacings n=" + std::to_string(b.spacings->n_spacings) + " l1_distance=" + num(b.spacings->l1_distance);
    if (known) out += " limit=" + num(kSurmiseL1Limit) + " " + verdict(b.spacings->l1_distance < kSurmiseL1Limit);
    out += "\n";
  }
  if (b.gap_ratio) {
    out += "gap_ratio bulk_mean=" + num(b.gap_ratio->bulk_mean) + " se=" + num(b.gap_ratio->bulk_se) +
           " ratios=" + std::to_string(b.gap_ratio->n_ratios) +
           " excluded=" + std::to_string(b.gap_ratio->excluded_zero_spacings);
    if (known) {
      const double ref = gap_ratio_reference(header.expected_class);
      const double dev = std::abs(b.gap_ratio->bulk_mean - ref);
      out += " reference=" + num(ref) + " deviation=" + num(dev) + " " + verdict(dev < kGapRatioTolerance);
    }
    out += "\n";
  }
  if (b.edge_contrast) {
    const auto& c = *b.edge_contrast;
    out += "edge_ratio edge_mean=" + num(c.edge_mean) + " bulk_mean=" + num(c.bulk_mean) +
           " difference=" + num(c.difference) + " se=" + num(c.standard_error) +
           " z=" + num(c.standard_error > 0.0 ? c.difference / c.standard_error : 0.0) + "\n";
  }
  if (b.sff) {
    const double rel = std::abs(b.sff->plateau - b.sff->expected_plateau) / b.sff->expected_plateau;
    out += "sff plateau=" + num(b.sff->plateau) + " expected=" + num(b.sff->expected_plateau) +
           " relative_deviation=" + num(rel) + " " + verdict(rel <= kPlateauTolerance) + "\n";
    if (b.sff->ramp.valid) {
      const double s = b.sff->ramp.slope;
      out += "sff_ramp slope=" + num(s) + " t_begin=" + num(b.sff->ramp.t_begin) + " t_end=" +
             num(b.sff->ramp.t_end) + " points=" + std::to_string(b.sff->ramp.points) + " " +
             verdict(s >= kRampSlopeMin && s <= kRampSlopeMax) + "\n";
    } else {
      out += "sff_ramp not found\n";
    }
  }
  if (b.gatecost) {
    out += "gatecost terms=" + std::to_string(b.gatecost->term_count) +
           " cnots_per_step=" + std::to_string(b.gatecost->cnots_per_step) +
           " syk_cnots_per_step=" + std::to_string(b.gatecost->syk_cnots_per_step) +
           " ratio=" + num(b.gatecost->cnot_ratio) + "\n";
  }
  for (const auto& w : b.warnings) out += "warning " + w + "\n";
  return out;
}

std::vector<ManifestEntry> figure_manifest(const RunConfig& config) {
  const auto tag = config.model.tag();
  const std::string family(family_name(config.model.family));
  std::vector<ManifestEntry> out;
  if (config.wants(Diagnostic::kDos)) {
    out.push_back({tag + "_dos.tsv", "dos_" + family, "density of states rho(E), pooled over samples"});
  }
  if (config.wants(Diagnostic::kSpacings)) {
    out.push_back({tag + "_spacings.tsv", "spacings_" + family,
                   "unfolded nearest-neighbour spacing histogram with Wigner surmises"});
  }
  if (config.wants(Diagnostic::kGapRatio)) {
    out.push_back({tag + "_gap_ratio_index.tsv", "gap_ratio_index_" + family, "<r_i> at fixed level index i"});
    out.push_back({tag + "_gap_ratio_hist.tsv", "gap_ratio_distribution_" + family,
                   "whole-spectrum gap ratio distribution"});
  }
  if (config.wants(Diagnostic::kSff)) {
    out.push_back({tag + "_sff.tsv", sff_figure(config.model),
                   "spectral form factor <|Z(t)|^2>/<|Z(0)|^2> on log axes"});
  }
  if (config.wants(Diagnostic::kGatecost)) {
    out.push_back({tag + "_gatecost.tsv", "gatecost_counts", "Trotter-step term and CNOT counts vs original SYK"});
  }
  out.push_back({tag + "_report.txt", "-", "summary of measured values against thresholds"});
  return out;
}

std::string manifest_text(const std::vector<ManifestEntry>& entries) {
  std::string out = "file figure description\n";
  for (const auto& e : entries) out += e.file + " " + e.figure + " \"" + e.description + "\"\n";
  return out;
}

std::vector<std::filesystem::path> write_diagnostics(const DiagnosticsBundle& b, const ArchiveHeader& header,
                                                     const RunConfig& config) {
  const auto dir = config.output_dir.empty() ? default_output_root() : config.output_dir;
  std::filesystem::create_directories(dir);
  const auto tag = config.model.tag();
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& suffix, const std::string& text) {
    const auto path = dir / (tag + suffix);
    write_text(path, text);
    written.push_back(path);
  };
  if (b.dos) emit("_dos.tsv", dos_table(*b.dos));
  if (b.spacings) {
    const auto cls = header.expected_class == SpectralClass::kUnknown ? SpectralClass::kGOE : header.expected_class;
    emit("_spacings.tsv", spacing_table(*b.spacings, cls));
  }
  if (b.gap_ratio) {
    emit("_gap_ratio_index.tsv", gap_ratio_index_table(*b.gap_ratio));
    emit("_gap_ratio_hist.tsv", gap_ratio_hist_table(*b.gap_ratio));
  }
  if (b.sff) emit("_sff.tsv", sff_table(*b.sff));
  if (b.gatecost) emit("_gatecost.tsv", gatecost_table(*b.gatecost));
  emit("_report.txt", summary_report(b, header, config));
  emit("_manifest.txt", manifest_text(figure_manifest(config)));
  return written;
}

}  // namespace syklab
