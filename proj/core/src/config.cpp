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

#include "syklab/config.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "syklab/errors.hpp"

namespace syklab {
namespace {

void load_into(const std::filesystem::path& path, KeyValueBlock& out,
               std::vector<std::filesystem::path>& stack) {
  std::error_code ec;
  auto canonical = std::filesystem::weakly_canonical(path, ec);
  if (ec) canonical = path;
  if (std::find(stack.begin(), stack.end(), canonical) != stack.end()) {
    throw ConfigError("include cycle through " + path.string());
  }
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  stack.push_back(canonical);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    KeyValueBlock one;
    try {
      one = KeyValueBlock::parse(line);
    } catch (const ConfigError& e) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (auto inc = one.get("include")) {
      std::filesystem::path target(*inc);
      if (target.is_relative()) target = path.parent_path() / target;
      load_into(target, out, stack);
      continue;
    }
    out.merge(one);
  }
  stack.pop_back();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string_view diagnostic_name(Diagnostic d) {
  switch (d) {
    case Diagnostic::kDos:
      return "dos";
    case Diagnostic::kSpacings:
      return "spacings";
    case Diagnostic::kGapRatio:
      return "gap_ratio";
    case Diagnostic::kSff:
      return "sff";
    case Diagnostic::kGatecost:
      return "gatecost";
  }
  return "unknown";
}

Diagnostic parse_diagnostic(std::string_view name) {
  for (auto d : {Diagnostic::kDos, Diagnostic::kSpacings, Diagnostic::kGapRatio, Diagnostic::kSff,
                 Diagnostic::kGatecost}) {
    if (diagnostic_name(d) == name) return d;
  }
  throw ConfigError("unknown diagnostic '" + std::string(name) + "'");
}

bool RunConfig::wants(Diagnostic d) const {
  return std::find(diagnostics.begin(), diagnostics.end(), d) != diagnostics.end();
}

std::size_t RunConfig::dense_limit() const {
  if (allow_large) return std::size_t{1} << 20;
  if (model.family == ModelFamily::kQuditSyk) return kQuditDimensionCap - 1;
  return std::size_t{1} << (kMajoranaCap / 2);
}

void RunConfig::validate() const {
  model.validate();
  if (n_samples < 1) throw ConfigError("samples must be >= 1");
  if (workers < 1 || workers > 256) throw ConfigError("workers must be in 1..256");
  if (unfold.poly_degree < 3 || unfold.poly_degree > 30) throw ConfigError("unfold_degree must be in 3..30");
  if (!(unfold.edge_trim >= 0.0 && unfold.edge_trim < 0.25)) throw ConfigError("unfold_trim must be in [0, 0.25)");
  if (unfold.levels_per_degree < 1) throw ConfigError("unfold_levels_per_degree must be >= 1");
  if (sff.points < 2 || sff.points > 100000) throw ConfigError("sff_points must be in 2..100000");
  if (!(sff.t_min > 0.0 && sff.t_max > sff.t_min)) throw ConfigError("need 0 < sff_t_min < sff_t_max");
  if (dos_bins < 0) throw ConfigError("dos_bins must be >= 0 (0 = automatic)");
  if (!(bulk_fraction > 0.0 && bulk_fraction <= 1.0)) throw ConfigError("bulk_fraction must be in (0, 1]");
  if (allow_large) return;
  if (model.family == ModelFamily::kQuditSyk) {
    if (model.hilbert_dim() >= kQuditDimensionCap) {
      throw CapacityError("qudit dimension d^L = " + std::to_string(model.hilbert_dim()) +
                          " reaches the desk-scale cap " + std::to_string(kQuditDimensionCap) +
                          "; lower L or set allow_large = true");
    }
  } else if (model.majorana_count() > kMajoranaCap ||
             (model.family == ModelFamily::kClustersSpinSyk && model.num_qubits() > kMajoranaCap / 2)) {
    throw CapacityError("register of " + std::to_string(model.num_qubits()) + " qubits (dimension " +
                        std::to_string(model.hilbert_dim()) + ") exceeds the desk-scale cap of " +
                        std::to_string(kMajoranaCap / 2) + " qubits; lower N or set allow_large = true");
  }
}

KeyValueBlock load_config_file(const std::filesystem::path& path) {
  KeyValueBlock out;
  std::vector<std::filesystem::path> stack;
  load_into(path, out, stack);
  return out;
}

RunConfig run_config_from(const KeyValueBlock& block) {
  RunConfig c;
  c.model = model_spec_from(block);
  if (auto v = block.get_uint("samples")) c.n_samples = *v;
  if (auto v = block.get_int("workers")) {
    if (*v < 1 || *v > 256) throw ConfigError("workers must be in 1..256");
    c.workers = static_cast<int>(*v);
  }
  if (auto v = block.get("output_dir")) c.output_dir = *v;
  if (auto v = block.get("diagnostics")) {
    c.diagnostics.clear();
    std::stringstream list(*v);
    std::string item;
    while (std::getline(list, item, ',')) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      if (item.empty()) continue;
      const auto d = parse_diagnostic(item);
      if (!c.wants(d)) c.diagnostics.push_back(d);
    }
  }
  if (auto v = block.get_int("unfold_degree")) c.unfold.poly_degree = static_cast<int>(*v);
  if (auto v = block.get_double("unfold_trim")) c.unfold.edge_trim = *v;
  if (auto v = block.get_uint("unfold_min_levels")) c.unfold_min_levels = *v;
  if (auto v = block.get_int("unfold_levels_per_degree")) c.unfold.levels_per_degree = static_cast<int>(*v);
  if (auto v = block.get_int("sff_points")) c.sff.points = static_cast<int>(*v);
  if (auto v = block.get_double("sff_t_min")) c.sff.t_min = *v;
  if (auto v = block.get_double("sff_t_max")) c.sff.t_max = *v;
  if (auto v = block.get_int("dos_bins")) c.dos_bins = static_cast<int>(*v);
  if (auto v = block.get_double("bulk_fraction")) c.bulk_fraction = *v;
  if (auto v = block.get_bool("allow_large")) c.allow_large = *v;
  c.validate();
  return c;
}

KeyValueBlock to_key_values(const RunConfig& c) {
  auto b = to_key_values(c.model);
  b.set("samples", std::to_string(c.n_samples));
  b.set("workers", std::to_string(c.workers));
  if (!c.output_dir.empty()) b.set("output_dir", c.output_dir.string());
  std::string diags;
  for (auto d : c.diagnostics) {
    if (!diags.empty()) diags += ",";
    diags += diagnostic_name(d);
  }
  b.set("diagnostics", diags);
  b.set("unfold_degree", std::to_string(c.unfold.poly_degree));
  b.set("unfold_trim", format_double(c.unfold.edge_trim));
  b.set("unfold_min_levels", std::to_string(c.unfold_min_levels));
  b.set("unfold_levels_per_degree", std::to_string(c.unfold.levels_per_degree));
  b.set("sff_points", std::to_string(c.sff.points));
  b.set("sff_t_min", format_double(c.sff.t_min));
  b.set("sff_t_max", format_double(c.sff.t_max));
  b.set("dos_bins", std::to_string(c.dos_bins));
  b.set("bulk_fraction", format_double(c.bulk_fraction));
  if (c.allow_large) b.set("allow_large", "true");
  return b;
}

std::filesystem::path default_output_root() {
  if (const char* env = std::getenv("SYKLAB_OUTPUT_ROOT"); env && *env) return env;
  return "syklab-output";
}

}  // namespace syklab
