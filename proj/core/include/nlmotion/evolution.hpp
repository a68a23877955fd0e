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

#include <span>
#include <string_view>
#include <vector>

#include "nlmotion/fock.hpp"

namespace nlmotion {

enum class TimeUnit {
  kRaw,        // t
  kOmegaT,     // |Omega| t
  kEtaOmegaT,  // eta |Omega| t
};

std::string_view to_string(TimeUnit unit);
/// Accepts "t", "omega_t", "eta_omega_t"; throws InputError otherwise.
TimeUnit parse_time_unit(std::string_view text);

/// Maps dimensionless sample times onto the raw time of the Hamiltonian:
/// tau = scale * t.
struct TimeAxis {
  TimeUnit unit = TimeUnit::kRaw;
  double scale = 1.0;

  static TimeAxis raw() { return {}; }
  static TimeAxis omega_t(double omega_abs);
  static TimeAxis eta_omega_t(double eta, double omega_abs);

  double to_raw(double tau) const { return tau / scale; }
};

/// Eigendecomposition H = V diag(lambda) V^dagger of a Hermitian operator,
/// reusable for any number of propagation times. Diagonal input skips the
/// eigensolver and keeps V = I exactly.
class HermitianSpectrum {
 public:
  /// Throws NumericalError unless `h` carries the Hermitian flag.
  explicit HermitianSpectrum(const OperatorMatrix& h);

  const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
  const Eigen::MatrixXcd& eigenvectors() const noexcept { return eigenvectors_; }
  const ModeDims& mode_dims() const noexcept { return mode_dims_; }
  bool is_diagonal() const noexcept { return diagonal_; }

  /// exp(-i H t), flagged unitary.
  OperatorMatrix propagator(double t) const;

  /// Amplitudes of psi in the eigenbasis.
  Eigen::VectorXcd to_eigenbasis(const StateVector& psi) const;
  /// V exp(-i lambda t) coefficients.
  StateVector from_eigenbasis(const Eigen::VectorXcd& coefficients, double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
  ModeDims mode_dims_;
  bool diagonal_ = false;
};

OperatorMatrix propagator(const OperatorMatrix& h, double t);

/// exp[-(eta Omega^* t / 2) a^dagger f_1 + (eta Omega t / 2) f_1 a], the
/// excitation-dependent displacement generated by the first sideband.
OperatorMatrix nonlinear_displacement(double eta, Complex omega, double t, int cutoff);

struct Trajectory {
  /// Sample times in `unit`, strictly increasing.
  std::vector<double> times;
  TimeUnit unit = TimeUnit::kRaw;
  std::vector<StateVector> states;
  /// |1 - ||psi||^2| before any renormalization, per sample.
  std::vector<double> norm_drift;

  double max_norm_drift() const;
};

/// Propagates psi0 under h to every sample time with a single
/// eigendecomposition. A state is renormalized only if its drift exceeds
/// 1e-12; the drift itself is always recorded.
Trajectory evolve(const StateVector& psi0, const OperatorMatrix& h, std::span<const double> times,
                  TimeAxis axis = {});

}  // namespace nlmotion
