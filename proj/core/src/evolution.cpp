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

#include "nlmotion/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "nlmotion/couplings.hpp"
#include "nlmotion/error.hpp"

namespace nlmotion {
namespace {

constexpr double kRenormalizeThreshold = 1e-12;

bool is_exactly_diagonal(const Eigen::MatrixXcd& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i != j && m(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

Eigen::VectorXcd phases(const Eigen::VectorXd& eigenvalues, double t) {
  Eigen::VectorXcd out(eigenvalues.size());
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    out(i) = std::polar(1.0, -eigenvalues(i) * t);
  }
  return out;
}

}  // namespace

std::string_view to_string(TimeUnit unit) {
  switch (unit) {
    case TimeUnit::kRaw:
      return "t";
    case TimeUnit::kOmegaT:
      return "omega_t";
    case TimeUnit::kEtaOmegaT:
      return "eta_omega_t";
  }
  return "t";
}

TimeUnit parse_time_unit(std::string_view text) {
  if (text == "t") return TimeUnit::kRaw;
  if (text == "omega_t") return TimeUnit::kOmegaT;
  if (text == "eta_omega_t") return TimeUnit::kEtaOmegaT;
  throw InputError("unknown time unit '" + std::string(text) +
                   "' (expected t, omega_t or eta_omega_t)");
}

TimeAxis TimeAxis::omega_t(double omega_abs) {
  if (!(omega_abs > 0.0)) throw InputError("|Omega| t time axis needs |Omega| > 0");
  return {TimeUnit::kOmegaT, omega_abs};
}

TimeAxis TimeAxis::eta_omega_t(double eta, double omega_abs) {
  if (!(eta > 0.0) || !(omega_abs > 0.0)) {
    throw InputError("eta |Omega| t time axis needs eta > 0 and |Omega| > 0");
  }
  return {TimeUnit::kEtaOmegaT, eta * omega_abs};
}

HermitianSpectrum::HermitianSpectrum(const OperatorMatrix& h) : mode_dims_(h.mode_dims()) {
  if (!h.is_hermitian()) throw NumericalError("propagation needs a Hermitian-flagged operator");
  const Eigen::MatrixXcd& m = h.entries();
  if (is_exactly_diagonal(m)) {
    diagonal_ = true;
    eigenvalues_ = m.diagonal().real();
    eigenvectors_ = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigendecomposition did not converge");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

OperatorMatrix HermitianSpectrum::propagator(double t) const {
  const Eigen::VectorXcd p = phases(eigenvalues_, t);
  if (diagonal_) {
    return OperatorMatrix::unitary(p.asDiagonal().toDenseMatrix(), mode_dims_);
  }
  Eigen::MatrixXcd u = eigenvectors_ * p.asDiagonal() * eigenvectors_.adjoint();
  return OperatorMatrix::unitary(std::move(u), mode_dims_);
}

Eigen::VectorXcd HermitianSpectrum::to_eigenbasis(const StateVector& psi) const {
  if (psi.mode_dims() != mode_dims_) throw DimensionError("state and Hamiltonian layouts differ");
  if (diagonal_) return psi.amplitudes();
  return eigenvectors_.adjoint() * psi.amplitudes();
}

StateVector HermitianSpectrum::from_eigenbasis(const Eigen::VectorXcd& coefficients,
                                               double t) const {
  Eigen::VectorXcd rotated = phases(eigenvalues_, t).cwiseProduct(coefficients);
  if (diagonal_) return StateVector(std::move(rotated), mode_dims_);
  return StateVector(eigenvectors_ * rotated, mode_dims_);
}

OperatorMatrix propagator(const OperatorMatrix& h, double t) {
  return HermitianSpectrum(h).propagator(t);
}

OperatorMatrix nonlinear_displacement(double eta, Complex omega, double t, int cutoff) {
  if (cutoff < 2) throw InputError("nonlinear displacement needs cutoff >= 2");
  if (!std::isfinite(t)) throw InputError("time must be finite");
  const Eigen::MatrixXcd a = annihilation_matrix(cutoff).entries();
  const Eigen::MatrixXcd f1 = f_operator(1, eta, cutoff).entries();
  const Complex half = 0.5 * eta * t;
  // Anti-Hermitian generator G; exponentiate through the Hermitian K = iG.
  const Eigen::MatrixXcd generator =
      -half * std::conj(omega) * (a.adjoint() * f1) + half * omega * (f1 * a);
  Eigen::MatrixXcd k = Complex(0.0, 1.0) * generator;
  k = 0.5 * (k + k.adjoint()).eval();
  return HermitianSpectrum(OperatorMatrix::hermitian(std::move(k))).propagator(1.0);
}

double Trajectory::max_norm_drift() const {
  return norm_drift.empty() ? 0.0 : *std::max_element(norm_drift.begin(), norm_drift.end());
}

Trajectory evolve(const StateVector& psi0, const OperatorMatrix& h, std::span<const double> times,
                  TimeAxis axis) {
  if (psi0.mode_dims() != h.mode_dims()) {
    throw DimensionError("initial state and Hamiltonian layouts differ");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw InputError("sample times must be finite");
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw InputError("sample times must be strictly increasing");
    }
  }
  const HermitianSpectrum spectrum(h);
  const Eigen::VectorXcd coefficients = spectrum.to_eigenbasis(psi0);

  Trajectory out;
  out.unit = axis.unit;
  out.times.assign(times.begin(), times.end());
  out.states.reserve(times.size());
  out.norm_drift.reserve(times.size());
  for (double tau : times) {
    StateVector psi = spectrum.from_eigenbasis(coefficients, axis.to_raw(tau));
    const double drift = psi.norm_defect();
    out.norm_drift.push_back(drift);
    out.states.push_back(drift > kRenormalizeThreshold ? psi.normalized() : std::move(psi));
  }
  return out;
}

}  // namespace nlmotion
