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

#include "nlmotion/fock.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "nlmotion/error.hpp"

namespace nlmotion {
namespace {

Eigen::Index dims_product(const ModeDims& dims) {
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d < 1) throw InputError("mode cutoff must be >= 1");
    total *= d;
  }
  return total;
}

void require_cutoff(int cutoff) {
  if (cutoff < 1) throw InputError("cutoff must be >= 1, got " + std::to_string(cutoff));
}

ModeDims concat(const ModeDims& a, const ModeDims& b) {
  ModeDims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

struct TruncatedCoherent {
  Eigen::VectorXcd amplitudes;
  double tail_mass;
};

// c_{n+1} = c_n * alpha / sqrt(n+1) from c_0 = exp(-|alpha|^2/2), carried as
// log-modulus plus phase so that large |alpha| neither underflows c_0 nor
// overflows intermediate powers.
TruncatedCoherent truncated_coherent(Complex alpha, int cutoff) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw InputError("coherent amplitude must be finite");
  }
  require_cutoff(cutoff);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff);
  const double r = std::abs(alpha);
  if (r == 0.0) {
    c(0) = 1.0;
    return {std::move(c), 0.0};
  }
  const double log_r = std::log(r);
  const double phase = std::arg(alpha);
  double log_mod = -0.5 * r * r;
  long double mass = 0.0L;
  for (int n = 0; n < cutoff; ++n) {
    if (n > 0) log_mod += log_r - 0.5 * std::log(static_cast<double>(n));
    c(n) = std::polar(std::exp(log_mod), phase * n);
    mass += std::norm(c(n));
  }
  double tail = static_cast<double>(1.0L - mass);
  return {std::move(c), tail > 0.0 ? tail : 0.0};
}

}  // namespace

StateVector::StateVector(Eigen::VectorXcd amplitudes, ModeDims mode_dims)
    : amplitudes_(std::move(amplitudes)), mode_dims_(std::move(mode_dims)) {
  if (mode_dims_.empty()) throw DimensionError("state needs at least one mode");
  if (dims_product(mode_dims_) != amplitudes_.size()) {
    throw DimensionError("amplitude count does not match the product of mode cutoffs");
  }
}

StateVector StateVector::normalized() const {
  const double n = amplitudes_.norm();
  if (n == 0.0) throw NumericalError("cannot normalize the zero vector");
  return StateVector(amplitudes_ / n, mode_dims_);
}

OperatorMatrix::OperatorMatrix(Eigen::MatrixXcd entries, ModeDims mode_dims)
    : entries_(std::move(entries)), mode_dims_(std::move(mode_dims)) {
  if (entries_.rows() != entries_.cols()) throw DimensionError("operator must be square");
  if (mode_dims_.empty()) mode_dims_ = {static_cast<int>(entries_.rows())};
  if (dims_product(mode_dims_) != entries_.rows()) {
    throw DimensionError("operator size does not match the product of mode cutoffs");
  }
}

OperatorMatrix OperatorMatrix::checked(Eigen::MatrixXcd entries, ModeDims mode_dims,
                                       bool hermitian, bool unitary) {
  OperatorMatrix op(std::move(entries), std::move(mode_dims));
  if (hermitian) {
    const double defect = op.hermiticity_defect();
    if (defect > kHermitianTolerance) {
      std::ostringstream msg;
      msg << "operator is not Hermitian: max|M - M^dagger| = " << defect;
      throw NumericalError(msg.str());
    }
    op.hermitian_ = true;
  }
  if (unitary) {
    const double defect = op.unitarity_defect();
    if (defect > kUnitaryTolerance) {
      std::ostringstream msg;
      msg << "operator is not unitary: max|U^dagger U - I| = " << defect;
      throw NumericalError(msg.str());
    }
    op.unitary_ = true;
  }
  return op;
}

OperatorMatrix OperatorMatrix::hermitian(Eigen::MatrixXcd entries, ModeDims mode_dims) {
  return checked(std::move(entries), std::move(mode_dims), true, false);
}

OperatorMatrix OperatorMatrix::unitary(Eigen::MatrixXcd entries, ModeDims mode_dims) {
  return checked(std::move(entries), std::move(mode_dims), false, true);
}

OperatorMatrix OperatorMatrix::identity(ModeDims mode_dims) {
  const Eigen::Index n = dims_product(mode_dims);
  OperatorMatrix op(Eigen::MatrixXcd::Identity(n, n), std::move(mode_dims));
  op.hermitian_ = true;
  op.unitary_ = true;
  return op;
}

double OperatorMatrix::hermiticity_defect() const {
  return max_abs_difference(entries_, entries_.adjoint());
}

double OperatorMatrix::unitarity_defect() const {
  const Eigen::MatrixXcd gram = entries_.adjoint() * entries_;
  return max_abs_difference(gram, Eigen::MatrixXcd::Identity(dim(), dim()));
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix op(entries_.adjoint(), mode_dims_);
  op.hermitian_ = hermitian_;
  op.unitary_ = unitary_;
  return op;
}

StateVector OperatorMatrix::apply(const StateVector& psi) const {
  if (psi.mode_dims() != mode_dims_) {
    throw DimensionError("operator and state mode layouts differ");
  }
  return StateVector(entries_ * psi.amplitudes(), mode_dims_);
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  if (lhs.mode_dims() != rhs.mode_dims()) {
    throw DimensionError("operator product needs identical mode layouts");
  }
  Eigen::MatrixXcd product = lhs.entries() * rhs.entries();
  if (lhs.is_unitary() && rhs.is_unitary()) {
    return OperatorMatrix::unitary(std::move(product), lhs.mode_dims());
  }
  return OperatorMatrix(std::move(product), lhs.mode_dims());
}

OperatorMatrix operator+(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  if (lhs.mode_dims() != rhs.mode_dims()) {
    throw DimensionError("operator sum needs identical mode layouts");
  }
  Eigen::MatrixXcd sum = lhs.entries() + rhs.entries();
  if (lhs.is_hermitian() && rhs.is_hermitian()) {
    return OperatorMatrix::hermitian(std::move(sum), lhs.mode_dims());
  }
  return OperatorMatrix(std::move(sum), lhs.mode_dims());
}

StateVector fock_state(int n, int cutoff) {
  require_cutoff(cutoff);
  if (n < 0 || n >= cutoff) {
    throw InputError("Fock level " + std::to_string(n) + " outside [0, " +
                     std::to_string(cutoff) + ")");
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff);
  c(n) = 1.0;
  return StateVector(std::move(c), {cutoff});
}

int recommended_cutoff(Complex alpha) {
  const double r = std::abs(alpha);
  return static_cast<int>(std::ceil(r * r + 8.0 * r + 20.0));
}

double coherent_tail_mass(Complex alpha, int cutoff) {
  return truncated_coherent(alpha, cutoff).tail_mass;
}

StateVector coherent_state(Complex alpha, int cutoff) {
  auto [amplitudes, tail] = truncated_coherent(alpha, cutoff);
  if (tail >= 1e-8) {
    std::ostringstream msg;
    msg << "coherent state alpha=" << alpha << " truncated at cutoff " << cutoff
        << " discards mass " << tail << "; recommended cutoff " << recommended_cutoff(alpha);
    warn(msg.str());
  }
  amplitudes /= amplitudes.norm();
  return StateVector(std::move(amplitudes), {cutoff});
}

OperatorMatrix annihilation_matrix(int cutoff) {
  require_cutoff(cutoff);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return OperatorMatrix(std::move(a));
}

OperatorMatrix creation_matrix(int cutoff) { return annihilation_matrix(cutoff).adjoint(); }

OperatorMatrix number_matrix(int cutoff) {
  require_cutoff(cutoff);
  Eigen::VectorXd diag = Eigen::VectorXd::LinSpaced(cutoff, 0.0, cutoff - 1.0);
  return OperatorMatrix::hermitian(diag.cast<Complex>().asDiagonal().toDenseMatrix());
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const Eigen::Index nb = b.size();
  Eigen::VectorXcd out(a.size() * nb);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * nb, nb) = a[i] * b.amplitudes();
  }
  return StateVector(std::move(out), concat(a.mode_dims(), b.mode_dims()));
}

OperatorMatrix tensor_product(const OperatorMatrix& a, const OperatorMatrix& b) {
  const Eigen::Index nb = b.dim();
  Eigen::MatrixXcd out(a.dim() * nb, a.dim() * nb);
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    for (Eigen::Index j = 0; j < a.dim(); ++j) {
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b.entries();
    }
  }
  return OperatorMatrix::checked(std::move(out), concat(a.mode_dims(), b.mode_dims()),
                                 a.is_hermitian() && b.is_hermitian(),
                                 a.is_unitary() && b.is_unitary());
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.mode_dims() != b.mode_dims()) {
    throw DimensionError("inner product of states with different mode layouts");
  }
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

Complex expectation(const OperatorMatrix& op, const StateVector& psi) {
  return inner_product(psi, op.apply(psi));
}

double max_abs_difference(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shapes differ");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace nlmotion
