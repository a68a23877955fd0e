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

#include "nlmotion/hamiltonians.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <optional>
#include <sstream>

#include "nlmotion/couplings.hpp"
#include "nlmotion/error.hpp"

namespace nlmotion {
namespace {

void require_finite(Complex omega) {
  if (!std::isfinite(omega.real()) || !std::isfinite(omega.imag())) {
    throw InputError("Rabi frequency must be finite");
  }
}

// A + A^dagger, flagged Hermitian.
OperatorMatrix hermitian_part_sum(const Eigen::MatrixXcd& a, const ModeDims& dims) {
  Eigen::MatrixXcd h = a + a.adjoint();
  return OperatorMatrix::hermitian(std::move(h), dims);
}

}  // namespace

void ResonanceSpec::validate() const {
  bool any_active = false;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    if (!std::isfinite(etas[i]) || etas[i] < 0.0) {
      throw InputError("Lamb-Dicke parameters must be finite and >= 0");
    }
    if (etas[i] > 0.0) {
      any_active = true;
      if (cutoffs[i] < 1) throw InputError("active mode needs cutoff >= 1");
    }
  }
  if (!any_active) throw InputError("resonance needs at least one Lamb-Dicke parameter > 0");
  require_finite(omega);
}

ModeDims ResonanceSpec::active_dims() const {
  ModeDims dims;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    if (etas[i] > 0.0) dims.push_back(cutoffs[i]);
  }
  return dims;
}

Complex two_photon_rabi(Complex omega1, Complex omega2, double detuning) {
  if (detuning == 0.0) {
    throw InputError(
        "two-photon Rabi frequency needs a nonzero detuning from the electronic transition "
        "(the Raman pair is assumed off-resonant)");
  }
  return 0.5 * omega1 * std::conj(omega2) / detuning;
}

OperatorMatrix h_one_mode(int k, double eta, Complex omega, int cutoff) {
  if (k < 0) throw InputError("one-mode sideband order must be >= 0");
  require_finite(omega);
  const OperatorMatrix lowering = g_operator(-k, eta, cutoff);
  return hermitian_part_sum(0.5 * omega * lowering.entries(), lowering.mode_dims());
}

OperatorMatrix h_resonant(const ResonanceSpec& spec) {
  spec.validate();
  const std::array<int, 3> shifts{spec.s1, spec.s2, 0};

  // Admissible n: every active mode needs |n - s_i| < cutoff_i, every
  // disabled mode needs n == s_i.
  long lo = LONG_MIN;
  long hi = LONG_MAX;
  std::optional<long> pinned;
  bool consistent = true;
  for (std::size_t i = 0; i < 3; ++i) {
    if (spec.etas[i] > 0.0) {
      lo = std::max(lo, static_cast<long>(shifts[i]) - spec.cutoffs[i] + 1);
      hi = std::min(hi, static_cast<long>(shifts[i]) + spec.cutoffs[i] - 1);
    } else if (pinned && *pinned != shifts[i]) {
      consistent = false;
    } else {
      pinned = shifts[i];
    }
  }
  if (pinned) {
    lo = std::max(lo, *pinned);
    hi = std::min(hi, *pinned);
  }

  const ModeDims dims = spec.active_dims();
  Eigen::Index total = 1;
  for (int d : dims) total *= d;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(total, total);

  bool any_term = false;
  if (consistent) {
    for (long n = lo; n <= hi; ++n) {
      std::optional<OperatorMatrix> term;
      for (std::size_t i = 0; i < 3; ++i) {
        if (!(spec.etas[i] > 0.0)) continue;
        OperatorMatrix factor =
            g_operator(static_cast<int>(n - shifts[i]), spec.etas[i], spec.cutoffs[i]);
        term = term ? tensor_product(*term, factor) : std::move(factor);
      }
      sum += term->entries();
      any_term = true;
    }
  }
  if (!any_term) {
    std::ostringstream msg;
    msg << "resonance (s1=" << spec.s1 << ", s2=" << spec.s2
        << ") has no representable term; Hamiltonian is zero";
    warn(msg.str());
  }
  return hermitian_part_sum(0.5 * spec.omega * sum, dims);
}

OperatorMatrix h_parametric(double eta1, double eta2, Complex omega, int cutoff1, int cutoff2) {
  require_finite(omega);
  const Eigen::MatrixXcd a1 = annihilation_matrix(cutoff1).entries();
  const Eigen::MatrixXcd a2 = annihilation_matrix(cutoff2).entries();
  const OperatorMatrix mode1(f_operator(2, eta1, cutoff1).entries() * a1 * a1);
  const OperatorMatrix mode2(a2.adjoint() * f_operator(1, eta2, cutoff2).entries());
  const Complex coupling = Complex(0.0, -0.5) * eta1 * eta1 * eta2 * omega;
  return hermitian_part_sum(coupling * tensor_product(mode1, mode2).entries(),
                            {cutoff1, cutoff2});
}

OperatorMatrix h_parametric_lamb_dicke(double eta1, double eta2, Complex omega, int cutoff1,
                                       int cutoff2) {
  require_finite(omega);
  const Eigen::MatrixXcd a1 = annihilation_matrix(cutoff1).entries();
  const OperatorMatrix mode1(a1 * a1);
  const OperatorMatrix mode2 = creation_matrix(cutoff2);
  const Complex coupling = Complex(0.0, -0.25) * eta1 * eta1 * eta2 * omega;
  return hermitian_part_sum(coupling * tensor_product(mode1, mode2).entries(),
                            {cutoff1, cutoff2});
}

}  // namespace nlmotion
