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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace nlmotion {

using Complex = std::complex<double>;

/// Per-mode Fock cutoffs. Mode 1 is the slowest-varying index of the
/// flattened (row-major) basis.
using ModeDims = std::vector<int>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-10;

/// Pure motional state in a truncated number basis.
///
/// The constructor only checks that the amplitude count matches the product
/// of the mode cutoffs. Normalization is established by the factories below
/// and maintained by the evolution routines; `norm_defect()` reports it.
class StateVector {
 public:
  StateVector(Eigen::VectorXcd amplitudes, ModeDims mode_dims);

  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  const ModeDims& mode_dims() const noexcept { return mode_dims_; }
  Eigen::Index size() const noexcept { return amplitudes_.size(); }
  std::size_t mode_count() const noexcept { return mode_dims_.size(); }
  Complex operator[](Eigen::Index i) const { return amplitudes_(i); }

  double squared_norm() const { return amplitudes_.squaredNorm(); }
  double norm_defect() const { return std::abs(1.0 - squared_norm()); }
  StateVector normalized() const;

 private:
  Eigen::VectorXcd amplitudes_;
  ModeDims mode_dims_;
};

/// Dense square operator on a truncated (multi)mode Fock space.
///
/// The Hermitian/unitary flags are only ever set by the checked factories,
/// so a set flag is a verified property of the entries.
class OperatorMatrix {
 public:
  /// Unflagged operator. An empty `mode_dims` means a single mode of size
  /// `entries.rows()`.
  explicit OperatorMatrix(Eigen::MatrixXcd entries, ModeDims mode_dims = {});

  /// Throws NumericalError if max|M - M^dagger| exceeds kHermitianTolerance.
  static OperatorMatrix hermitian(Eigen::MatrixXcd entries, ModeDims mode_dims = {});
  /// Throws NumericalError if max|M^dagger M - I| exceeds kUnitaryTolerance.
  static OperatorMatrix unitary(Eigen::MatrixXcd entries, ModeDims mode_dims = {});
  /// Sets each requested flag after verifying it; throws like the above.
  static OperatorMatrix checked(Eigen::MatrixXcd entries, ModeDims mode_dims, bool hermitian,
                                bool unitary);
  static OperatorMatrix identity(ModeDims mode_dims);

  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const ModeDims& mode_dims() const noexcept { return mode_dims_; }
  bool is_hermitian() const noexcept { return hermitian_; }
  bool is_unitary() const noexcept { return unitary_; }
  Complex operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

  double hermiticity_defect() const;
  double unitarity_defect() const;

  OperatorMatrix adjoint() const;
  StateVector apply(const StateVector& psi) const;

 private:
  Eigen::MatrixXcd entries_;
  ModeDims mode_dims_;
  bool hermitian_ = false;
  bool unitary_ = false;
};

/// Product of two operators on the same mode layout. Unitarity survives the
/// product; Hermiticity does not in general and is dropped.
OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
OperatorMatrix operator+(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

StateVector fock_state(int n, int cutoff);

/// Smallest cutoff satisfying |alpha|^2 + 8|alpha| + 20 <= cutoff.
int recommended_cutoff(Complex alpha);

/// Probability mass of the coherent state |alpha> above level cutoff-1.
double coherent_tail_mass(Complex alpha, int cutoff);

/// Coherent state, renormalized in the truncated space. Emits a warning when
/// the discarded tail mass reaches 1e-8.
StateVector coherent_state(Complex alpha, int cutoff);

OperatorMatrix annihilation_matrix(int cutoff);
OperatorMatrix creation_matrix(int cutoff);
OperatorMatrix number_matrix(int cutoff);

StateVector tensor_product(const StateVector& a, const StateVector& b);
OperatorMatrix tensor_product(const OperatorMatrix& a, const OperatorMatrix& b);

Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2 for pure states.
double fidelity(const StateVector& a, const StateVector& b);

/// <psi|op|psi>.
Complex expectation(const OperatorMatrix& op, const StateVector& psi);

/// Largest entrywise modulus of a - b.
double max_abs_difference(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace nlmotion
