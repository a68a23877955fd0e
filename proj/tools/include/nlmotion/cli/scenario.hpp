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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nlmotion/cli/config.hpp"
#include "nlmotion/couplings.hpp"
#include "nlmotion/phasespace.hpp"

namespace nlmotion::cli {

struct RunOptions {
  /// Accept cutoffs below the coherent-state guidance.
  bool override_cutoff = false;
  /// Q-grid worker threads; 0 picks the hardware count.
  unsigned qgrid_workers = 0;
};

struct SampleRecord {
  double time = 0.0;
  NumberStats stats;
  /// Present for two-mode runs: <n_1 + 2 n_2>.
  std::optional<double> charge;
  /// Present for samples with a written Q grid.
  std::optional<std::vector<QPeak>> peaks;
  std::optional<std::string> qgrid_file;
  std::optional<double> qgrid_max;
};

struct RunSummary {
  std::string version;
  std::string config_hash;
  double max_norm_defect = 0.0;
  TimeUnit time_unit = TimeUnit::kRaw;
  std::vector<SampleRecord> samples;
  std::vector<double> zone_radii;
  std::vector<std::string> files;
};

/// FNV-1a 64 of the serialized config, as 16 lowercase hex digits.
std::string config_hash(const SimulationConfig& config);

/// Runs one scenario and writes the requested tables plus summary.json into
/// `out_dir` (created if needed). Throws ConfigError when a coherent mode's
/// cutoff is below the guidance and no override is set, IoError when the
/// directory or a file cannot be written.
RunSummary run_scenario(const SimulationConfig& config, const std::filesystem::path& out_dir,
                        RunOptions options = {});

/// f_k(n; eta) for n = 0..n_max as CSV with header `n,f`.
std::string coupling_table(int k, double eta, int n_max);

/// Zone table as CSV with header `index,n_lower,n_upper,n_star,radius`.
std::string zones_table(const ZoneBoundaries& zones);

/// Q grid as CSV with header `re_alpha,im_alpha,q`, rows in storage order.
std::string qgrid_table(const QGrid& grid);

std::string summary_json(const RunSummary& summary);

}  // namespace nlmotion::cli
