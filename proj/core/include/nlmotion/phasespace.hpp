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

#include <cstddef>
#include <optional>
#include <vector>

#include "nlmotion/fock.hpp"

namespace nlmotion {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const Interval&) const = default;
};

/// Rectangle in the complex alpha plane.
struct PhaseWindow {
  Interval re;
  Interval im;

  bool operator==(const PhaseWindow&) const = default;
};

/// Husimi function sampled on a regular grid. Samples are stored row-major
/// with the imaginary axis as the row index:
/// values[j * re_count + i] = Q(re(i) + i im(j)).
struct QGrid {
  PhaseWindow window;
  double step = 0.1;
  int re_count = 0;
  int im_count = 0;
  std::vector<double> values;

  double re(int i) const { return window.re.lo + i * step; }
  double im(int j) const { return window.im.lo + j * step; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * re_count + i]; }
  double max_value() const;
};

struct NumberStats {
  double mean_n = 0.0;
  double var_n = 0.0;
  /// var_n / mean_n; empty when mean_n == 0.
  std::optional<double> ratio;
  double norm_defect = 0.0;
};

struct QPeak {
  Complex alpha;
  double q = 0.0;
};

/// <alpha|psi> for a single-mode state, summing
/// e^{-|alpha|^2/2} conj(alpha)^n / sqrt(n!) c_n by a multiplicative recurrence.
Complex coherent_overlap(Complex alpha, const StateVector& psi);

/// Q(alpha) = |<alpha|psi>|^2 / pi on the grid spanned by `window` and `step`.
/// Rows are split across `workers` threads (0 picks the hardware count); the
/// result does not depend on the split.
QGrid q_function(const StateVector& psi, const PhaseWindow& window, double step,
                 unsigned workers = 0);

/// Default sampling window: center +/- 5 standard contours of a coherent
/// state, widened to contain the circle of radius `zone_radius` (plus a unit
/// margin) when given. Bounds are snapped outward to multiples of `step`.
PhaseWindow auto_window(Complex center, std::optional<double> zone_radius, double step);

/// Marginal number distribution of one mode.
std::vector<double> number_distribution(const StateVector& psi, std::size_t mode = 0);

/// Moments of the total excitation number summed over all modes.
NumberStats number_stats(const StateVector& psi);
/// Moments of the excitation number of a single mode.
NumberStats number_stats(const StateVector& psi, std::size_t mode);

/// Local maxima (8-neighbourhood, not exceeded by any neighbour and strictly
/// above at least one) with Q >= floor, sorted by Q descending. A candidate
/// closer than 2 step to an already accepted peak is merged into it.
std::vector<QPeak> find_q_maxima(const QGrid& grid, double floor);

/// <n_1 + 2 n_2> of a two-mode state; conserved by the 2 nu_1 - nu_2 coupling.
double two_mode_charge(const StateVector& psi);

}  // namespace nlmotion
