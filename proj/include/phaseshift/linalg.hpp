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

#ifndef PHASESHIFT_LINALG_HPP
#define PHASESHIFT_LINALG_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace phaseshift {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDensityTolerance = 1e-9;
inline constexpr double kNormalizationTolerance = 1e-12;

/// Normalized pure state. Basis index i maps to |i>; for qubit registers
/// i = i1 i2 ... iN in binary with qubit 1 the most significant bit.
class StateVector {
 public:
  /// Throws NotNormalized if sum |a_i|^2 differs from 1 by more than 1e-12.
  explicit StateVector(ComplexVector amplitudes);

  /// Rescales `amplitudes` to unit norm. Throws NotNormalized on a zero vector.
  static StateVector normalized(ComplexVector amplitudes);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const ComplexVector& amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

 private:
  ComplexVector amps_;
};

/// Hermitian, unit-trace, positive semidefinite matrix together with the
/// residuals measured when it was validated. Only obtainable through
/// validate_density (directly or via the factory functions below).
class DensityMatrix {
 public:
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return matrix_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// max_ij |rho - rho^dagger|
  double hermiticity_residual() const noexcept { return hermiticity_residual_; }
  /// |Tr rho - 1|
  double trace_residual() const noexcept { return trace_residual_; }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  friend DensityMatrix validate_density(const ComplexMatrix&, double);
  DensityMatrix() = default;

  ComplexMatrix matrix_;
  double hermiticity_residual_ = 0.0;
  double trace_residual_ = 0.0;
  double min_eigenvalue_ = 0.0;
};

/// Checks Hermiticity, unit trace and positivity (in that order) at `tol`.
/// Throws NotHermitian, TraceNotOne or NotPSD naming the offending residual,
/// or BadDimension for an empty or non-square matrix.
DensityMatrix validate_density(const ComplexMatrix& matrix, double tol = kDensityTolerance);

/// rho_ij = psi_i conj(psi_j).
DensityMatrix from_statevector(const StateVector& psi);

/// Ginibre ensemble: G G^dagger / Tr(G G^dagger) with G a dim x rank matrix of
/// complex normals drawn from Rng(seed). Throws BadRank unless 1 <= rank <= dim.
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// (|0...0> + |1...1>)/sqrt(2). Throws TooFewQubits for num_qubits < 2.
StateVector ghz_state(std::size_t num_qubits);

/// Uniform superposition (1/sqrt d) sum_i |i>.
StateVector plus_state(std::size_t dim);

/// Computational basis state |index>.
StateVector basis_state(std::size_t dim, std::size_t index);

/// I / d.
DensityMatrix maximally_mixed(std::size_t dim);

/// Eigenvalues of a Hermitian matrix in ascending order.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& matrix);

}  // namespace phaseshift

#endif  // PHASESHIFT_LINALG_HPP
