// Copyright 2026 The phaseshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phaseshift/linalg.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "phaseshift/errors.hpp"
#include "phaseshift/rng.hpp"

namespace phaseshift {

namespace {

std::string residual_message(const char* name, double value, double tol) {
  std::ostringstream os;
  os.precision(6);
  os << name << " = " << value << " exceeds tolerance " << tol;
  return os.str();
}

}  // namespace

StateVector::StateVector(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw Error(ErrorCode::BadDimension, "state vector is empty");
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorCode::NotNormalized,
                residual_message("|sum |a|^2 - 1|", std::abs(norm2 - 1.0), kNormalizationTolerance));
  }
}

StateVector StateVector::normalized(ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw Error(ErrorCode::NotNormalized, "zero vector cannot be normalized");
  amplitudes /= norm;
  return StateVector(std::move(amplitudes));
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& matrix) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

DensityMatrix validate_density(const ComplexMatrix& matrix, double tol) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
    throw Error(ErrorCode::BadDimension, "density matrix must be square and non-empty");
  }
  DensityMatrix rho;
  rho.matrix_ = matrix;
  rho.hermiticity_residual_ = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (rho.hermiticity_residual_ > tol) {
    throw Error(ErrorCode::NotHermitian,
                residual_message("hermiticity_residual", rho.hermiticity_residual_, tol));
  }
  rho.trace_residual_ = std::abs(matrix.trace() - Complex(1.0, 0.0));
  if (rho.trace_residual_ > tol) {
    throw Error(ErrorCode::TraceNotOne, residual_message("trace_residual", rho.trace_residual_, tol));
  }
  const ComplexMatrix hermitian_part = 0.5 * (matrix + matrix.adjoint());
  rho.min_eigenvalue_ = hermitian_eigenvalues(hermitian_part)(0);
  if (rho.min_eigenvalue_ < -tol) {
    throw Error(ErrorCode::NotPSD, residual_message("min_eigenvalue", rho.min_eigenvalue_, -tol));
  }
  return rho;
}

DensityMatrix from_statevector(const StateVector& psi) {
  const ComplexVector& a = psi.amplitudes();
  return validate_density(a * a.adjoint());
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (dim == 0 || rank < 1 || rank > dim) {
    throw Error(ErrorCode::BadRank, "rank must satisfy 1 <= rank <= dim (dim = " +
                                        std::to_string(dim) + ", rank = " + std::to_string(rank) + ")");
  }
  Rng rng(seed);
  const auto d = static_cast<Eigen::Index>(dim);
  const auto r = static_cast<Eigen::Index>(rank);
  ComplexMatrix g(d, r);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) g(i, j) = rng.complex_normal();
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Exact Hermitian symmetry; the product leaves ~1 ulp asymmetry.
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return validate_density(rho);
}

StateVector ghz_state(std::size_t num_qubits) {
  if (num_qubits < 2) {
    throw Error(ErrorCode::TooFewQubits,
                "GHZ state needs at least 2 qubits, got " + std::to_string(num_qubits));
  }
  if (num_qubits > 30) throw Error(ErrorCode::BadDimension, "too many qubits");
  const auto dim = Eigen::Index{1} << num_qubits;
  ComplexVector a = ComplexVector::Zero(dim);
  a(0) = a(dim - 1) = Complex(1.0 / std::sqrt(2.0), 0.0);
  return StateVector::normalized(std::move(a));
}

StateVector plus_state(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::BadDimension, "dimension must be positive");
  const auto d = static_cast<Eigen::Index>(dim);
  return StateVector::normalized(ComplexVector::Constant(d, Complex(1.0, 0.0)));
}

StateVector basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw Error(ErrorCode::IndexOutOfRange,
                "basis index " + std::to_string(index) + " >= dim " + std::to_string(dim));
  }
  ComplexVector a = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  a(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(a));
}

DensityMatrix maximally_mixed(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::BadDimension, "dimension must be positive");
  const auto d = static_cast<Eigen::Index>(dim);
  return validate_density(ComplexMatrix::Identity(d, d) / static_cast<double>(dim));
}

}  // namespace phaseshift
