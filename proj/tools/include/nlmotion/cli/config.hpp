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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlmotion/error.hpp"
#include "nlmotion/evolution.hpp"
#include "nlmotion/phasespace.hpp"

namespace nlmotion::cli {

/// Malformed or inconsistent scenario configuration.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

/// Output location that cannot be created or written.
class IoError : public Error {
 public:
  using Error::Error;
};

enum class Scenario { kOneMode, kResonantMultimode };
enum class InitialKind { kCoherent, kFock };

struct OutputSet {
  bool observables = true;
  bool qgrid = false;
  bool zones = false;

  bool operator==(const OutputSet&) const = default;
};

/// A fully resolved scenario. Every defaulted field is filled in by
/// parse_config, so serialize_config writes it back explicitly.
///
/// Per-mode vectors (cutoffs, alpha_re, alpha_im, fock_n) hold one entry
/// per mode with a nonzero Lamb-Dicke parameter, in mode order.
struct SimulationConfig {
  std::string name;
  Scenario scenario = Scenario::kOneMode;

  int k = 0;                             // one_mode
  int s1 = 0;                            // resonant_multimode
  int s2 = 0;                            // resonant_multimode
  std::array<double, 3> etas{0.0, 0.0, 0.0};  // one_mode uses etas[0]

  double omega_abs = 1.0;
  double omega_phase = 0.0;

  InitialKind initial = InitialKind::kCoherent;
  std::vector<double> alpha_re;
  std::vector<double> alpha_im;
  std::vector<int> fock_n;
  std::vector<int> cutoffs;

  std::vector<double> times;
  TimeUnit time_unit = TimeUnit::kRaw;

  OutputSet outputs;
  std::optional<PhaseWindow> qgrid_window;  // empty: auto-sized
  double qgrid_step = 0.1;
  std::vector<double> qgrid_times;          // empty: every sample time
  double peak_floor = 0.01;
  int zones_n_max = 250;
  bool override_cutoff = false;

  std::size_t active_mode_count() const;
  Complex omega() const;
  /// Sample-time axis implied by time_unit.
  TimeAxis time_axis() const;

  bool operator==(const SimulationConfig&) const = default;
};

/// Parses the flat `key = value` format (`#` comments, comma-separated
/// lists) and validates the result. Throws ConfigError naming the offending
/// key, or listing the required keys when some are missing.
SimulationConfig parse_config(std::string_view text);

/// Inverse of parse_config; numbers are written as shortest round-trip
/// decimals so parse_config(serialize_config(c)) == c.
std::string serialize_config(const SimulationConfig& config);

std::string_view to_string(Scenario scenario);

/// Shortest decimal that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace nlmotion::cli
