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

#include "nlmotion/couplings.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "nlmotion/error.hpp"

namespace nlmotion {
namespace {

void require_eta(double eta) {
  if (!std::isfinite(eta) || eta < 0.0) {
    throw InputError("Lamb-Dicke parameter must be finite and >= 0");
  }
}

// i^k
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace

void CouplingSpec::validate() const {
  require_eta(eta);
  if (!std::isfinite(omega.real()) || !std::isfinite(omega.imag())) {
    throw InputError("Rabi frequency must be finite");
  }
}

double f_scalar(int k, int n, double eta) {
  if (k < 0) throw InputError("coupling order k must be >= 0");
  if (n < 0) throw InputError("Fock level n must be >= 0");
  require_eta(eta);

  long double term = 1.0L;
  for (int j = 2; j <= k; ++j) term /= j;
  long double sum = term;
  const long double eta2 = static_cast<long double>(eta) * eta;
  for (int l = 0; l < n; ++l) {
    term *= -eta2 * (n - l) / (static_cast<long double>(l + 1) * (l + k + 1));
    sum += term;
  }
  return std::exp(-0.5 * eta * eta) * static_cast<double>(sum);
}

OperatorMatrix f_operator(int k, double eta, int cutoff) {
  if (cutoff < 1) throw InputError("cutoff must be >= 1");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  for (int n = 0; n < cutoff; ++n) m(n, n) = f_scalar(k, n, eta);
  return OperatorMatrix::hermitian(std::move(m));
}

OperatorMatrix g_operator(int k, double eta, int cutoff) {
  if (cutoff < 1) throw InputError("cutoff must be >= 1");
  require_eta(eta);
  const int order = std::abs(k);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  if (order >= cutoff) {
    std::ostringstream msg;
    msg << "sideband operator g_" << k << " vanishes at cutoff " << cutoff;
    warn(msg.str());
    return OperatorMatrix(std::move(m));
  }
  const Complex prefactor = i_power(order) * std::pow(eta, order);
  for (int n = 0; n + order < cutoff; ++n) {
    // sqrt((n+order)! / n!)
    double ladder = 1.0;
    for (int j = 1; j <= order; ++j) ladder *= std::sqrt(static_cast<double>(n + j));
    const Complex value = prefactor * ladder * f_scalar(order, n, eta);
    if (k >= 0) {
      m(n + order, n) = value;
    } else {
      m(n, n + order) = value;
    }
  }
  if (k == 0) return OperatorMatrix::hermitian(std::move(m));
  return OperatorMatrix(std::move(m));
}

ZoneBoundaries zone_boundaries(int k, double eta, int n_max) {
  if (k < 0) throw InputError("coupling order k must be >= 0");
  if (!(eta > 0.0) || !std::isfinite(eta)) throw InputError("zone scan needs eta > 0");
  if (n_max < 1) throw InputError("zone scan needs n_max >= 1");

  ZoneBoundaries zones;
  zones.k = k;
  zones.eta = eta;
  double prev = f_scalar(k, 0, eta);
  for (int n = 0; n < n_max; ++n) {
    const double next = f_scalar(k, n + 1, eta);
    if (prev * next < 0.0) {
      const double level = n + prev / (prev - next);
      zones.levels.push_back(level);
      zones.radii.push_back(std::sqrt(level));
      zones.brackets.emplace_back(n, n + 1);
    }
    prev = next;
  }
  return zones;
}

}  // namespace nlmotion
