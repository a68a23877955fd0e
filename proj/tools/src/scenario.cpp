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

#include "nlmotion/cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "nlmotion/evolution.hpp"
#include "nlmotion/hamiltonians.hpp"
#include "nlmotion/version.hpp"

namespace nlmotion::cli {
namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string ratio_text(const std::optional<double>& ratio) {
  return ratio ? format_number(*ratio) : std::string("nan");
}

StateVector mode_state(const SimulationConfig& c, std::size_t mode) {
  const int cutoff = c.cutoffs[mode];
  if (c.initial == InitialKind::kFock) return fock_state(c.fock_n[mode], cutoff);
  return coherent_state(Complex(c.alpha_re[mode], c.alpha_im[mode]), cutoff);
}

void check_cutoff_guidance(const SimulationConfig& c, bool override_cutoff) {
  if (override_cutoff || c.initial != InitialKind::kCoherent) return;
  for (std::size_t m = 0; m < c.cutoffs.size(); ++m) {
    const int recommended = recommended_cutoff(Complex(c.alpha_re[m], c.alpha_im[m]));
    if (c.cutoffs[m] < recommended) {
      std::ostringstream msg;
      msg << "cutoff " << c.cutoffs[m] << " for mode " << (m + 1)
          << " is below the coherent-state guidance; recommended cutoff " << recommended
          << " (pass --override-cutoff or set override_cutoff = true to proceed)";
      throw ConfigError(msg.str());
    }
  }
}

OperatorMatrix build_hamiltonian(const SimulationConfig& c) {
  if (c.scenario == Scenario::kOneMode) {
    return h_one_mode(c.k, c.etas[0], c.omega(), c.cutoffs[0]);
  }
  ResonanceSpec spec{.s1 = c.s1, .s2 = c.s2, .etas = c.etas, .omega = c.omega()};
  std::size_t active = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (c.etas[i] > 0.0) spec.cutoffs[i] = c.cutoffs[active++];
  }
  return h_resonant(spec);
}

// Zone circle closest to the initial amplitude, for the auto window.
std::optional<double> zone_of_interest(const SimulationConfig& c) {
  if (c.scenario != Scenario::kOneMode || !(c.etas[0] > 0.0)) return std::nullopt;
  const auto zones = zone_boundaries(c.k, c.etas[0], std::max(c.zones_n_max, c.cutoffs[0]));
  if (zones.radii.empty()) return std::nullopt;
  double center = 0.0;
  if (c.initial == InitialKind::kCoherent) {
    center = std::abs(Complex(c.alpha_re[0], c.alpha_im[0]));
  } else {
    center = std::sqrt(static_cast<double>(c.fock_n[0]));
  }
  return *std::min_element(zones.radii.begin(), zones.radii.end(), [&](double a, double b) {
    return std::abs(a - center) < std::abs(b - center);
  });
}

bool wants_qgrid(const SimulationConfig& c, double t) {
  if (!c.outputs.qgrid) return false;
  if (c.qgrid_times.empty()) return true;
  return std::find(c.qgrid_times.begin(), c.qgrid_times.end(), t) != c.qgrid_times.end();
}

}  // namespace

std::string config_hash(const SimulationConfig& config) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : serialize_config(config)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string coupling_table(int k, double eta, int n_max) {
  if (n_max < 0) throw InputError("n_max must be >= 0");
  std::string out = "n,f\n";
  for (int n = 0; n <= n_max; ++n) {
    out += std::to_string(n) + "," + format_number(f_scalar(k, n, eta)) + "\n";
  }
  return out;
}

std::string zones_table(const ZoneBoundaries& zones) {
  std::string out = "index,n_lower,n_upper,n_star,radius\n";
  for (std::size_t i = 0; i < zones.radii.size(); ++i) {
    out += std::to_string(i + 1) + "," + std::to_string(zones.brackets[i].first) + "," +
           std::to_string(zones.brackets[i].second) + "," + format_number(zones.levels[i]) +
           "," + format_number(zones.radii[i]) + "\n";
  }
  return out;
}

std::string qgrid_table(const QGrid& grid) {
  std::string out = "re_alpha,im_alpha,q\n";
  out.reserve(out.size() + grid.values.size() * 32);
  for (int j = 0; j < grid.im_count; ++j) {
    for (int i = 0; i < grid.re_count; ++i) {
      out += format_number(grid.re(i));
      out += ',';
      out += format_number(grid.im(j));
      out += ',';
      out += format_number(grid.at(i, j));
      out += '\n';
    }
  }
  return out;
}

std::string summary_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  j["version"] = s.version;
  j["config_hash"] = s.config_hash;
  j["time_unit"] = std::string(to_string(s.time_unit));
  j["max_norm_defect"] = s.max_norm_defect;
  j["zone_radii"] = s.zone_radii;
  auto samples = nlohmann::ordered_json::array();
  for (const auto& r : s.samples) {
    nlohmann::ordered_json row;
    row["time"] = r.time;
    row["mean_n"] = r.stats.mean_n;
    row["var_n"] = r.stats.var_n;
    row["ratio"] = r.stats.ratio ? nlohmann::ordered_json(*r.stats.ratio) : nullptr;
    row["norm_defect"] = r.stats.norm_defect;
    if (r.charge) row["charge"] = *r.charge;
    if (r.qgrid_file) {
      row["qgrid_file"] = *r.qgrid_file;
      row["qgrid_max"] = *r.qgrid_max;
      auto peaks = nlohmann::ordered_json::array();
      for (const auto& p : *r.peaks) {
        peaks.push_back({{"re", p.alpha.real()}, {"im", p.alpha.imag()}, {"q", p.q}});
      }
      row["peak_count"] = r.peaks->size();
      row["peaks"] = std::move(peaks);
    }
    samples.push_back(std::move(row));
  }
  j["samples"] = std::move(samples);
  j["files"] = s.files;
  return j.dump(2) + "\n";
}

RunSummary run_scenario(const SimulationConfig& config, const fs::path& out_dir,
                        RunOptions options) {
  check_cutoff_guidance(config, options.override_cutoff || config.override_cutoff);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) {
    throw IoError("cannot create output directory '" + out_dir.string() + "'");
  }

  const OperatorMatrix h = build_hamiltonian(config);
  StateVector psi0 = mode_state(config, 0);
  for (std::size_t m = 1; m < config.active_mode_count(); ++m) {
    psi0 = tensor_product(psi0, mode_state(config, m));
  }
  const Trajectory trajectory = evolve(psi0, h, config.times, config.time_axis());

  RunSummary summary;
  summary.version = kVersion;
  summary.config_hash = config_hash(config);
  summary.time_unit = config.time_unit;
  summary.max_norm_defect = trajectory.max_norm_drift();

  std::optional<PhaseWindow> window = config.qgrid_window;
  if (config.outputs.qgrid && !window) {
    window = auto_window(Complex(config.initial == InitialKind::kCoherent ? config.alpha_re[0] : 0.0,
                                 config.initial == InitialKind::kCoherent ? config.alpha_im[0] : 0.0),
                         zone_of_interest(config), config.qgrid_step);
  }

  std::string observables = "time,time_unit,mean_n,var_n,ratio,norm_defect\n";
  for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
    const StateVector& psi = trajectory.states[i];
    SampleRecord record;
    record.time = trajectory.times[i];
    record.stats = number_stats(psi);
    record.stats.norm_defect = trajectory.norm_drift[i];
    if (psi.mode_count() == 2) record.charge = two_mode_charge(psi);

    if (wants_qgrid(config, record.time)) {
      const QGrid grid = q_function(psi, *window, config.qgrid_step, options.qgrid_workers);
      char name[32];
      std::snprintf(name, sizeof(name), "qgrid_%03zu.csv", i);
      write_file(out_dir / name, qgrid_table(grid));
      summary.files.emplace_back(name);
      record.qgrid_file = name;
      record.qgrid_max = grid.max_value();
      record.peaks = find_q_maxima(grid, config.peak_floor);
    }

    observables += format_number(record.time) + "," + std::string(to_string(config.time_unit)) +
                   "," + format_number(record.stats.mean_n) + "," +
                   format_number(record.stats.var_n) + "," + ratio_text(record.stats.ratio) +
                   "," + format_number(record.stats.norm_defect) + "\n";
    summary.samples.push_back(std::move(record));
  }
  if (config.outputs.observables) {
    write_file(out_dir / "observables.csv", observables);
    summary.files.emplace_back("observables.csv");
  }
  if (config.outputs.zones) {
    const ZoneBoundaries zones = zone_boundaries(config.k, config.etas[0], config.zones_n_max);
    summary.zone_radii = zones.radii;
    write_file(out_dir / "zones.csv", zones_table(zones));
    summary.files.emplace_back("zones.csv");
  }
  std::sort(summary.files.begin(), summary.files.end());
  write_file(out_dir / "summary.json", summary_json(summary));
  return summary;
}

}  // namespace nlmotion::cli
