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

#include "nlmotion/cli/presets.hpp"

#include <cmath>

#include "nlmotion/cli/config.hpp"
#include "nlmotion/couplings.hpp"

namespace nlmotion::cli {
namespace {

double first_zone_radius(int k, double eta) {
  const auto zones = zone_boundaries(k, eta, 250);
  return zones.radii.empty() ? 0.0 : zones.radii.front();
}

std::string splitting() {
  const double r1 = first_zone_radius(1, 0.25);
  return "# Coherent state placed on the first zone boundary of the k = 1 coupling\n"
         "# (eta = 0.25). The amplitude is alpha = i r1, on the boundary circle and\n"
         "# perpendicular to the displacement axis (Omega real), so the two halves\n"
         "# of the state are pushed in opposite directions along the real axis.\n"
         "name = splitting\n"
         "scenario = one_mode\n"
         "k = 1\n"
         "eta = 0.25\n"
         "omega_abs = 1\n"
         "omega_phase = 0\n"
         "alpha_re = 0\n"
         "alpha_im = " +
         format_number(r1) +
         "\n"
         "cutoff = 160\n"
         "times = 0, 2.5, 5, 15\n"
         "time_unit = eta_omega_t\n"
         "outputs = observables, qgrid, zones\n"
         "qgrid_step = 0.1\n"
         "peak_floor = 0.01\n";
}

std::string squeezing() {
  return "# Amplitude squeezing: a coherent state inside the second zone of the\n"
         "# k = 1 coupling is displaced towards the first boundary circle. The\n"
         "# observables scan eta |Omega| t over [8, 12]; one Q grid at 10.\n"
         "name = squeezing\n"
         "scenario = one_mode\n"
         "k = 1\n"
         "eta = 0.25\n"
         "omega_abs = 1\n"
         "omega_phase = 0\n"
         "alpha_re = -9\n"
         "alpha_im = 0\n"
         "cutoff = 200\n"
         "times = 8, 8.25, 8.5, 8.75, 9, 9.25, 9.5, 9.75, 10, 10.25, 10.5, 10.75, 11, 11.25, "
         "11.5, 11.75, 12\n"
         "time_unit = eta_omega_t\n"
         "outputs = observables, qgrid, zones\n"
         "qgrid_times = 10\n"
         "qgrid_step = 0.1\n";
}

std::string kerr() {
  const double r0 = first_zone_radius(0, 0.25);
  return "# Kerr-type evolution (k = 0, eta = 0.25) of a coherent state on the\n"
         "# circle where f_0 changes sign, alpha = r0 on the real axis.\n"
         "name = kerr\n"
         "scenario = one_mode\n"
         "k = 0\n"
         "eta = 0.25\n"
         "omega_abs = 1\n"
         "omega_phase = 0\n"
         "alpha_re = " +
         format_number(r0) +
         "\n"
         "alpha_im = 0\n"
         "cutoff = 100\n"
         "times = 0, 173.5, 346.6, 500\n"
         "time_unit = omega_t\n"
         "outputs = observables, qgrid, zones\n"
         "qgrid_step = 0.1\n";
}

std::string parametric() {
  return "# Two-mode parametric coupling, Delta = 2 nu_1 - nu_2, from |4>|0>.\n"
         "name = parametric\n"
         "scenario = resonant_multimode\n"
         "s1 = 2\n"
         "s2 = -1\n"
         "etas = 0.2, 0.2, 0\n"
         "omega_abs = 1\n"
         "omega_phase = 0\n"
         "fock_n = 4, 0\n"
         "cutoffs = 12, 8\n"
         "times = 0, 25, 50, 75, 100, 125, 150, 175, 200\n"
         "time_unit = omega_t\n"
         "outputs = observables\n";
}

}  // namespace

std::vector<std::string> preset_names() { return {"splitting", "squeezing", "kerr", "parametric"}; }

std::string preset_text(std::string_view name) {
  if (name == "splitting") return splitting();
  if (name == "squeezing") return squeezing();
  if (name == "kerr") return kerr();
  if (name == "parametric") return parametric();
  throw ConfigError("unknown preset '" + std::string(name) +
                    "' (available: splitting, squeezing, kerr, parametric)");
}

}  // namespace nlmotion::cli
