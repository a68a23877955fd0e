// Copyright 2026 The nlmotion Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nlmotion: command-line front end for the trapped-atom motional dynamics
// library. Exit codes: 0 success, 2 validation error, 3 runtime error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "nlmotion/cli/config.hpp"
#include "nlmotion/cli/presets.hpp"
#include "nlmotion/cli/scenario.hpp"
#include "nlmotion/couplings.hpp"
#include "nlmotion/version.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw nlmotion::cli::IoError("cannot open '" + out_path + "' for writing");
  out << text;
  if (!out) throw nlmotion::cli::IoError("failed writing '" + out_path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nlmotion::cli::IoError("cannot read config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = nlmotion::cli;

  CLI::App app{"Nonlinear motional dynamics of a Raman-driven trapped atom"};
  app.set_version_flag("--version", nlmotion::kVersion);
  app.require_subcommand(1);

  int k = 1;
  double eta = 0.25;
  int n_max = 250;
  std::string out_path;

  auto* coupling = app.add_subcommand("coupling", "Tabulate f_k(n; eta) as CSV (n,f)");
  coupling->add_option("--k", k, "Sideband order k >= 0")->capture_default_str();
  coupling->add_option("--eta", eta, "Lamb-Dicke parameter")->capture_default_str();
  coupling->add_option("--n-max", n_max, "Largest level n")->capture_default_str();
  coupling->add_option("--out", out_path, "Output file (default: stdout)");

  auto* zones = app.add_subcommand("zones", "Phase-space zone boundaries of f_k as CSV");
  zones->add_option("--k", k, "Sideband order k >= 0")->capture_default_str();
  zones->add_option("--eta", eta, "Lamb-Dicke parameter > 0")->capture_default_str();
  zones->add_option("--n-max", n_max, "Scan limit")->capture_default_str();
  zones->add_option("--out", out_path, "Output file (default: stdout)");

  std::string config_path;
  bool override_cutoff = false;
  unsigned workers = 0;
  auto* evolve = app.add_subcommand("evolve", "Run a scenario config and write its tables");
  evolve->add_option("--config", config_path, "Scenario config file")->required();
  evolve->add_option("--out", out_path, "Output directory")->required();
  evolve->add_flag("--override-cutoff", override_cutoff,
                   "Accept cutoffs below the coherent-state guidance");
  evolve->add_option("--workers", workers, "Q-grid threads (0 = hardware count)");

  std::string preset_name;
  auto* preset = app.add_subcommand("preset", "Print a built-in scenario config");
  preset->add_option("name", preset_name, "splitting | squeezing | kerr | parametric")
      ->required();
  preset->add_option("--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*coupling) {
      emit(cli::coupling_table(k, eta, n_max), out_path);
    } else if (*zones) {
      emit(cli::zones_table(nlmotion::zone_boundaries(k, eta, n_max)), out_path);
    } else if (*evolve) {
      const auto config = cli::parse_config(read_file(config_path));
      const auto summary = cli::run_scenario(
          config, out_path, {.override_cutoff = override_cutoff, .qgrid_workers = workers});
      std::cout << "wrote " << summary.files.size() + 1 << " files to " << out_path
                << " (config " << summary.config_hash << ", max norm defect "
                << summary.max_norm_defect << ")\n";
    } else if (*preset) {
      emit(cli::preset_text(preset_name), out_path);
    }
  } catch (const nlmotion::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const nlmotion::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
