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

// Command-line front end: run ensembles, compute diagnostics, report gate
// costs, and list the tables a config produces.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "syklab/diagnostics_report.hpp"
#include "syklab/ensemble.hpp"
#include "syklab/errors.hpp"
#include "syklab/trotter.hpp"
#include "exit_codes.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_dir;
  long long samples = -1;
  int workers = -1;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("config", o.config_path, "key = value config file (optional when --set covers the model)");
  cmd->add_option("-s,--set", o.overrides, "override a config key, e.g. --set N=12")->allow_extra_args(false);
  cmd->add_option("-o,--output-dir", o.output_dir, "output directory (default: $SYKLAB_OUTPUT_ROOT or ./syklab-output)");
  cmd->add_option("-n,--samples", o.samples, "number of disorder samples");
  cmd->add_option("-j,--workers", o.workers, "worker threads");
}

syklab::RunConfig load(const CommonOptions& o) {
  syklab::KeyValueBlock block;
  if (!o.config_path.empty()) block = syklab::load_config_file(o.config_path);
  for (const auto& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw syklab::ConfigError("--set expects key=value, got '" + kv + "'");
    block.merge(syklab::KeyValueBlock::parse(kv));
  }
  if (!o.output_dir.empty()) block.set("output_dir", o.output_dir);
  if (o.samples >= 0) block.set("samples", std::to_string(o.samples));
  if (o.workers >= 0) block.set("workers", std::to_string(o.workers));
  auto config = syklab::run_config_from(block);
  if (config.output_dir.empty()) config.output_dir = syklab::default_output_root();
  return config;
}

void print_files(const std::vector<std::filesystem::path>& files) {
  for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
}

int cmd_run(const CommonOptions& o, bool diagnose) {
  const auto config = load(o);
  const auto result = syklab::run_ensemble(config, [](const std::string& m) { std::cerr << m << "\n"; });
  std::cout << "archive " << result.archive.string() << " samples=" << config.n_samples
            << " resumed=" << result.resumed_samples << " computed=" << result.computed_samples << "\n";
  if (diagnose) {
    const auto archive = syklab::read_archive(result.archive);
    const auto bundle = syklab::compute_diagnostics(archive, config);
    print_files(syklab::write_diagnostics(bundle, archive.header, config));
    for (const auto& w : bundle.warnings) std::cerr << "warning: " << w << "\n";
  }
  return 0;
}

int cmd_diagnose(const CommonOptions& o, const std::string& archive_path) {
  const auto config = load(o);
  const auto path = archive_path.empty() ? syklab::archive_path_for(config) : std::filesystem::path(archive_path);
  const auto archive = syklab::read_archive(path);
  if (!(archive.header == syklab::archive_header_for(config))) {
    throw syklab::ConfigError("archive " + path.string() + " was written for a different config");
  }
  const auto bundle = syklab::compute_diagnostics(archive, config);
  print_files(syklab::write_diagnostics(bundle, archive.header, config));
  for (const auto& w : bundle.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << syklab::summary_report(bundle, archive.header, config);
  return 0;
}

int cmd_gatecost(const CommonOptions& o, const std::string& netlist, double dt, long long sample) {
  auto config = load(o);
  const auto report = syklab::gate_cost_report(config.model);
  const auto table = syklab::gatecost_table(report);
  std::filesystem::create_directories(config.output_dir);
  const auto path = config.output_dir / (config.model.tag() + "_gatecost.tsv");
  std::ofstream(path) << table;
  std::cout << table << "wrote " << path.string() << "\n";
  if (!netlist.empty()) {
    const auto h = syklab::build_hamiltonian(config.model, static_cast<std::uint64_t>(sample));
    std::ofstream(netlist) << syklab::to_netlist(syklab::trotter_step(h, dt));
    std::cout << "wrote " << netlist << "\n";
  }
  return 0;
}

int cmd_manifest(const CommonOptions& o) {
  const auto config = load(o);
  const auto text = syklab::manifest_text(syklab::figure_manifest(config));
  std::filesystem::create_directories(config.output_dir);
  const auto path = config.output_dir / (config.model.tag() + "_manifest.txt");
  std::ofstream(path) << text;
  std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syklab: disorder ensembles, spectral diagnostics and gate costs for SYK-type models"};
  app.require_subcommand(1);

  CommonOptions run_opts, diag_opts, gate_opts, manifest_opts;
  bool also_diagnose = false;
  auto* run = app.add_subcommand("run", "diagonalize an ensemble into an eigenvalue archive (resumes if present)");
  add_common(run, run_opts);
  run->add_flag("--diagnose", also_diagnose, "compute diagnostics after the run");

  std::string archive_path;
  auto* diagnose = app.add_subcommand("diagnose", "compute diagnostics tables and the summary report");
  add_common(diagnose, diag_opts);
  diagnose->add_option("--archive", archive_path, "archive to read (default: derived from the config)");

  std::string netlist;
  double dt = 0.1;
  long long sample = 0;
  auto* gatecost = app.add_subcommand("gatecost", "report Trotter-step gate counts");
  add_common(gatecost, gate_opts);
  gatecost->add_option("--netlist", netlist, "also write one Trotter step of a sample as a netlist");
  gatecost->add_option("--dt", dt, "Trotter step for --netlist");
  gatecost->add_option("--sample", sample, "sample id for --netlist");

  auto* manifest = app.add_subcommand("manifest", "list emitted tables and the figures they feed");
  add_common(manifest, manifest_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? syklab::cli::kExitOk : syklab::cli::kExitConfig;
  }

  try {
    if (*run) return cmd_run(run_opts, also_diagnose);
    if (*diagnose) return cmd_diagnose(diag_opts, archive_path);
    if (*gatecost) return cmd_gatecost(gate_opts, netlist, dt, sample);
    if (*manifest) return cmd_manifest(manifest_opts);
  } catch (...) {
    const auto status = syklab::cli::exit_status_for(std::current_exception());
    std::cerr << status.message << "\n";
    return status.code;
  }
  return 0;
}
