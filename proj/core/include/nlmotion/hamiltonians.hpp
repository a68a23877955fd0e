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

#include "nlmotion/fock.hpp"

// Interaction-picture Hamiltonians of a Raman-driven trapped atom. hbar = 1,
// so every Hamiltonian carries the units of the Rabi frequency.

namespace nlmotion {

/// Beat resonance Delta = s1 nu_1 + s2 nu_2 coupling up to three modes.
///
/// A mode with eta == 0 is not part of the Hilbert space of the result: its
/// sideband factor is the identity for order 0 and zero otherwise.
struct ResonanceSpec {
  int s1 = 0;
  int s2 = 0;
  std::array<double, 3> etas{0.0, 0.0, 0.0};
  Complex omega{1.0, 0.0};
  std::array<int, 3> cutoffs{1, 1, 1};

  void validate() const;
  /// Cutoffs of the modes with eta > 0, in mode order.
  ModeDims active_dims() const;
};

/// Effective two-photon Rabi frequency Omega_1 conj(Omega_2) / (2 detuning),
/// detuning = omega_21 - omega_L. Throws InputError for zero detuning.
Complex two_photon_rabi(Complex omega1, Complex omega2, double detuning);

/// H = (Omega/2) f_k(n^; eta) (i eta a)^k + H.c. on one mode, Delta = k nu.
OperatorMatrix h_one_mode(int k, double eta, Complex omega, int cutoff);

/// H = (Omega/2) sum_n g_{n-s1}(1) (x) g_{n-s2}(2) (x) g_n(3) + H.c.
/// The sum runs over every n for which all factors survive truncation.
OperatorMatrix h_resonant(const ResonanceSpec& spec);

/// Nonlinear parametric coupling for Delta = 2 nu_1 - nu_2, assembled
/// directly from the coupling functions:
///   -(i/2) eta1^2 eta2 Omega f_2(n^_1; eta1) a_1^2 a_2^dagger f_1(n^_2; eta2) + H.c.
OperatorMatrix h_parametric(double eta1, double eta2, Complex omega, int cutoff1, int cutoff2);

/// Small-eta limit of h_parametric: -(i/4) eta1^2 eta2 Omega a_1^2 a_2^dagger + H.c.
/// The extra 1/2 relative to the bare parametric form is f_2(n; 0) = 1/2!.
OperatorMatrix h_parametric_lamb_dicke(double eta1, double eta2, Complex omega, int cutoff1,
                                       int cutoff2);

}  // namespace nlmotion
