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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "nlmotion/error.hpp"
#include "nlmotion/evolution.hpp"
#include "nlmotion/hamiltonians.hpp"
#include "nlmotion/phasespace.hpp"
#include "support/oracles.hpp"

namespace nlmotion {
namespace {

TEST(TimeUnits, RoundTripNames) {
  for (TimeUnit u : {TimeUnit::kRaw, TimeUnit::kOmegaT, TimeUnit::kEtaOmegaT}) {
    EXPECT_EQ(parse_time_unit(to_string(u)), u);
  }
  EXPECT_THROW(parse_time_unit("seconds"), InputError);
}

TEST(TimeUnits, Scaling) {
  EXPECT_DOUBLE_EQ(TimeAxis::raw().to_raw(3.0), 3.0);
  EXPECT_DOUBLE_EQ(TimeAxis::omega_t(2.0).to_raw(3.0), 1.5);
  EXPECT_DOUBLE_EQ(TimeAxis::eta_omega_t(0.25, 2.0).to_raw(3.0), 6.0);
  EXPECT_THROW(TimeAxis::omega_t(0.0), InputError);
  EXPECT_THROW(TimeAxis::eta_omega_t(0.0, 1.0), InputError);
}

TEST(Propagator, MatchesDenseExponential) {
  const OperatorMatrix h = h_one_mode(2, 0.3, Complex(0.6, -0.2), 30);
  const double t = 4.2;
  const Eigen::MatrixXcd gen = Complex(0.0, -t) * h.entries();
  const Eigen::MatrixXcd ref = gen.exp();
  const OperatorMatrix u = propagator(h, t);
  EXPECT_TRUE(u.is_unitary());
  EXPECT_LT(max_abs_difference(u.entries(), ref), 1e-11);
}

TEST(Propagator, DiagonalFastPathIsExactPhase) {
  const OperatorMatrix h = h_one_mode(0, 0.25, 1.0, 50);
  const HermitianSpectrum spec(h);
  EXPECT_TRUE(spec.is_diagonal());
  const OperatorMatrix u = spec.propagator(7.0);
  for (int n = 0; n < 50; ++n) {
    EXPECT_NEAR(std::abs(u(n, n) - std::exp(Complex(0.0, -7.0 * h(n, n).real()))), 0.0,
                1e-15);
  }
}

TEST(Propagator, RequiresHermitianFlag) {
  EXPECT_THROW(HermitianSpectrum(annihilation_matrix(4)), NumericalError);
  EXPECT_THROW(HermitianSpectrum(OperatorMatrix(number_matrix(4).entries())), NumericalError);
}

TEST(NonlinearDisplacement, AgreesWithFirstSidebandPropagator) {
  for (double eta : {0.1, 0.25}) {
    for (double t : {1.0, 5.0, 10.0}) {
      const Complex omega(0.9, 0.0);
      const OperatorMatrix d = nonlinear_displacement(eta, omega, t, 80);
      const OperatorMatrix u = propagator(h_one_mode(1, eta, omega, 80), t);
      EXPECT_LT(max_abs_difference(d.entries(), u.entries()), 1e-9) << eta << " " << t;
    }
  }
}

TEST(NonlinearDisplacement, LambDickeLimitIsCoherentDisplacement) {
  const double eta = 0.01;
  const Complex omega(1.0, 0.0);
  const double t = 2.0 / eta;  // |eta Omega t / 2| = 1
  const StateVector out = nonlinear_displacement(eta, omega, t, 60).apply(fock_state(0, 60));
  const Complex beta = -eta * std::conj(omega) * t / 2.0;
  EXPECT_GE(fidelity(out, coherent_state(beta, 60)), 0.999);
}

TEST(Evolve, NormAndEnergyConserved) {
  const OperatorMatrix h = h_one_mode(1, 0.25, Complex(1.0, 0.5), 80);
  const StateVector psi0 = coherent_state(Complex(2.0, -1.0), 80);
  std::vector<double> times;
  for (int i = 0; i <= 20; ++i) times.push_back(1.5 * i);
  const Trajectory traj = evolve(psi0, h, times, TimeAxis::raw());
  ASSERT_EQ(traj.states.size(), times.size());
  const double e0 = expectation(h, psi0).real();
  for (const StateVector& psi : traj.states) {
    EXPECT_LT(psi.norm_defect(), 1e-12);
    EXPECT_NEAR(expectation(h, psi).real(), e0, 1e-9 * std::max(1.0, std::abs(e0)));
  }
  EXPECT_LT(traj.max_norm_drift(), 1e-12);
}

TEST(Evolve, RejectsBadTimes) {
  const OperatorMatrix h = h_one_mode(1, 0.25, 1.0, 10);
  const StateVector psi = fock_state(0, 10);
  const std::vector<double> repeated{0.0, 1.0, 1.0};
  EXPECT_THROW(evolve(psi, h, repeated, TimeAxis::raw()), InputError);
  const std::vector<double> ok{0.0};
  EXPECT_THROW(evolve(fock_state(0, 11), h, ok, TimeAxis::raw()), DimensionError);
}

TEST(Evolve, SqueezeLimitOfSecondSideband) {
  // H -> -(eta^2 Omega / 4) a^2 + h.c., i.e. S(xi) with xi = -i eta^2 conj(Omega) t / 2.
  const double eta = 0.02;
  const Complex omega(1.0, 0.0);
  const double t = 1.0 / (eta * eta);  // r = 0.5
  const int cutoff = 60;
  const std::vector<double> times{t};
  const Trajectory traj =
      evolve(fock_state(0, cutoff), h_one_mode(2, eta, omega, cutoff), times, TimeAxis::raw());
  const Complex xi = Complex(0.0, -0.5) * eta * eta * std::conj(omega) * t;
  const StateVector ref(testing::squeezed_vacuum(xi, cutoff), {cutoff});
  EXPECT_GE(fidelity(traj.states.back(), ref), 0.999);
}

TEST(Evolve, CarrierKeepsNumberDistribution) {
  const OperatorMatrix h = h_one_mode(0, 0.25, 1.0, 100);
  const StateVector psi0 = coherent_state(Complex(4.8, 0.0), 100);
  const std::vector<double> times{0.0, 173.5, 346.6, 500.0};
  const Trajectory traj = evolve(psi0, h, times, TimeAxis::omega_t(1.0));
  const auto p0 = number_distribution(psi0);
  for (const StateVector& psi : traj.states) {
    const auto p = number_distribution(psi);
    for (std::size_t n = 0; n < p.size(); ++n) EXPECT_NEAR(p[n], p0[n], 1e-12);
  }
}

}  // namespace
}  // namespace nlmotion
