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

#include "nlmotion/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "nlmotion/error.hpp"

namespace nlmotion {
namespace {

int axis_count(const Interval& range, double step) {
  return static_cast<int>(std::floor((range.hi - range.lo) / step + 1e-9)) + 1;
}

void require_single_mode(const StateVector& psi) {
  if (psi.mode_count() != 1) {
    throw DimensionError(
        "Husimi sampling needs a single-mode state; prepare the mode of interest separately");
  }
}

NumberStats moments(const std::vector<double>& weights, double norm_defect) {
  long double mean = 0.0L;
  long double second = 0.0L;
  for (std::size_t n = 0; n < weights.size(); ++n) {
    mean += static_cast<long double>(weights[n]) * n;
    second += static_cast<long double>(weights[n]) * n * n;
  }
  NumberStats stats;
  stats.mean_n = static_cast<double>(mean);
  stats.var_n = std::max(0.0, static_cast<double>(second - mean * mean));
  if (stats.mean_n > 0.0) stats.ratio = stats.var_n / stats.mean_n;
  stats.norm_defect = norm_defect;
  return stats;
}

}  // namespace

double QGrid::max_value() const {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

Complex coherent_overlap(Complex alpha, const StateVector& psi) {
  require_single_mode(psi);
  const Complex ratio = std::conj(alpha);
  Complex term = std::exp(-0.5 * std::norm(alpha));
  Complex sum = term * psi[0];
  for (Eigen::Index n = 1; n < psi.size(); ++n) {
    term *= ratio / std::sqrt(static_cast<double>(n));
    sum += term * psi[n];
  }
  return sum;
}

QGrid q_function(const StateVector& psi, const PhaseWindow& window, double step,
                 unsigned workers) {
  require_single_mode(psi);
  if (!(step > 0.0) || !std::isfinite(step)) throw InputError("grid step must be > 0");
  for (double v : {window.re.lo, window.re.hi, window.im.lo, window.im.hi}) {
    if (!std::isfinite(v)) throw InputError("phase-space window must be finite");
  }
  if (window.re.hi < window.re.lo || window.im.hi < window.im.lo) {
    throw InputError("phase-space window is empty");
  }

  QGrid grid;
  grid.window = window;
  grid.step = step;
  grid.re_count = axis_count(window.re, step);
  grid.im_count = axis_count(window.im, step);
  grid.values.assign(static_cast<std::size_t>(grid.re_count) * grid.im_count, 0.0);

  auto fill_rows = [&](int first, int last) {
    for (int j = first; j < last; ++j) {
      for (int i = 0; i < grid.re_count; ++i) {
        const Complex alpha(grid.re(i), grid.im(j));
        grid.values[static_cast<std::size_t>(j) * grid.re_count + i] =
            std::norm(coherent_overlap(alpha, psi)) * std::numbers::inv_pi;
      }
    }
  };

  unsigned count = workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : workers;
  count = std::min<unsigned>(count, static_cast<unsigned>(grid.im_count));
  if (count <= 1) {
    fill_rows(0, grid.im_count);
    return grid;
  }
  std::vector<std::jthread> pool;
  pool.reserve(count);
  const int chunk = (grid.im_count + static_cast<int>(count) - 1) / static_cast<int>(count);
  for (int first = 0; first < grid.im_count; first += chunk) {
    pool.emplace_back(fill_rows, first, std::min(grid.im_count, first + chunk));
  }
  pool.clear();
  return grid;
}

PhaseWindow auto_window(Complex center, std::optional<double> zone_radius, double step) {
  if (!(step > 0.0)) throw InputError("grid step must be > 0");
  const double half_width = 5.0 * std::numbers::sqrt2 / 2.0;
  PhaseWindow w{{center.real() - half_width, center.real() + half_width},
                {center.imag() - half_width, center.imag() + half_width}};
  if (zone_radius) {
    const double r = *zone_radius + 1.0;
    w.re = {std::min(w.re.lo, -r), std::max(w.re.hi, r)};
    w.im = {std::min(w.im.lo, -r), std::max(w.im.hi, r)};
  }
  auto snap = [step](Interval in) {
    return Interval{std::floor(in.lo / step) * step, std::ceil(in.hi / step) * step};
  };
  return {snap(w.re), snap(w.im)};
}

std::vector<double> number_distribution(const StateVector& psi, std::size_t mode) {
  const ModeDims& dims = psi.mode_dims();
  if (mode >= dims.size()) throw DimensionError("mode index out of range");
  Eigen::Index inner = 1;
  for (std::size_t m = mode + 1; m < dims.size(); ++m) inner *= dims[m];
  const int cutoff = dims[mode];
  std::vector<double> p(cutoff, 0.0);
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    p[static_cast<std::size_t>((idx / inner) % cutoff)] += std::norm(psi[idx]);
  }
  return p;
}

NumberStats number_stats(const StateVector& psi) {
  const ModeDims& dims = psi.mode_dims();
  int max_total = 0;
  for (int d : dims) max_total += d - 1;
  std::vector<double> weights(static_cast<std::size_t>(max_total) + 1, 0.0);
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    Eigen::Index rest = idx;
    int total = 0;
    for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
      total += static_cast<int>(rest % *it);
      rest /= *it;
    }
    weights[static_cast<std::size_t>(total)] += std::norm(psi[idx]);
  }
  return moments(weights, psi.norm_defect());
}

NumberStats number_stats(const StateVector& psi, std::size_t mode) {
  return moments(number_distribution(psi, mode), psi.norm_defect());
}

std::vector<QPeak> find_q_maxima(const QGrid& grid, double floor) {
  if (floor < 0.0) throw InputError("peak floor must be >= 0");
  std::vector<QPeak> candidates;
  for (int j = 0; j < grid.im_count; ++j) {
    for (int i = 0; i < grid.re_count; ++i) {
      const double q = grid.at(i, j);
      if (q < floor) continue;
      bool dominated = false;
      bool above_some = false;
      for (int dj = -1; dj <= 1 && !dominated; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if (di == 0 && dj == 0) continue;
          const int ni = i + di;
          const int nj = j + dj;
          if (ni < 0 || nj < 0 || ni >= grid.re_count || nj >= grid.im_count) continue;
          const double neighbour = grid.at(ni, nj);
          if (neighbour > q) {
            dominated = true;
            break;
          }
          if (q > neighbour) above_some = true;
        }
      }
      if (!dominated && above_some) candidates.push_back({{grid.re(i), grid.im(j)}, q});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const QPeak& a, const QPeak& b) { return a.q > b.q; });

  std::vector<QPeak> peaks;
  const double merge_radius = 2.0 * grid.step;
  for (const QPeak& c : candidates) {
    const bool merged = std::any_of(peaks.begin(), peaks.end(), [&](const QPeak& p) {
      return std::abs(p.alpha - c.alpha) < merge_radius;
    });
    if (!merged) peaks.push_back(c);
  }
  return peaks;
}

double two_mode_charge(const StateVector& psi) {
  if (psi.mode_count() != 2) {
    throw DimensionError("two-mode charge needs exactly two modes, got " +
                         std::to_string(psi.mode_count()));
  }
  const NumberStats first = number_stats(psi, 0);
  const NumberStats second = number_stats(psi, 1);
  return first.mean_n + 2.0 * second.mean_n;
}

}  // namespace nlmotion
