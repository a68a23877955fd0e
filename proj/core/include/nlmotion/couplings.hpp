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

#include <utility>
#include <vector>

#include "nlmotion/fock.hpp"

namespace nlmotion {

/// Raman drive acting on a single mode: sideband order, Lamb-Dicke parameter
/// and complex two-photon Rabi frequency |Omega| e^{i phi}.
struct CouplingSpec {
  int k = 0;
  double eta = 0.0;
  Complex omega{1.0, 0.0};

  /// Throws InputError for eta < 0 or non-finite values.
  void validate() const;
};

/// Radii at which the diagonal coupling f_k(n; eta) changes sign.
struct ZoneBoundaries {
  int k = 0;
  double eta = 0.0;
  /// Interpolated crossing level n* for each boundary, ascending.
  std::vector<double> levels;
  /// sqrt(n*), ascending.
  std::vector<double> radii;
  /// Integer pair (n, n+1) with f_k(n) f_k(n+1) < 0.
  std::vector<std::pair<int, int>> brackets;
};

/// Diagonal matrix element <n| f_k(n^; eta) |n> of the normally ordered
/// coupling function
///
///   f_k = e^{-eta^2/2} sum_l (-1)^l eta^{2l} / (l! (l+k)!) a^dagger^l a^l.
///
/// On |n> the sum terminates at l = n. Terms are generated by the ratio
/// t_{l+1}/t_l = -eta^2 (n-l) / ((l+1)(l+k+1)) from t_0 = 1/k!, so no
/// factorial is ever formed.
double f_scalar(int k, int n, double eta);

/// diag(f_scalar(k, n, eta)) for n < cutoff.
OperatorMatrix f_operator(int k, double eta, int cutoff);

/// Sideband operator g_k: (i eta a^dagger)^k f_k for k >= 0 and
/// f_|k| (i eta a)^|k| for k < 0. Returns a zero matrix (with a warning)
/// when |k| >= cutoff, where no matrix element survives truncation.
OperatorMatrix g_operator(int k, double eta, int cutoff);

/// Scans f_k(n; eta) for n = 0..n_max and records every strict sign change.
/// The crossing is placed by linear interpolation between the bracketing
/// integers.
ZoneBoundaries zone_boundaries(int k, double eta, int n_max);

}  // namespace nlmotion
