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

#ifndef PHASESHIFT_PROTOCOL_HPP
#define PHASESHIFT_PROTOCOL_HPP

#include <array>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>

#include "phaseshift/linalg.hpp"

namespace phaseshift {

/// Addresses one projector K = Q_n(theta)^dag Q_m(phi)^dag |+><+| Q_m(phi) Q_n(theta).
struct PhaseSetting {
  std::size_t n = 0;
  std::size_t m = 1;
  double theta = 0.0;
  double phi = 0.0;
};

inline constexpr std::size_t kPlanSize = 6;

/// The six-setting schedule for one element (n, m) of a d-level state.
///
/// Settings are position addressed in the fixed order
///   (0,0), (0,pi), (pi/2,0), (pi/2,pi), (-pi/2,0), (-pi/2,pi)
/// and the element is recovered as
///   Re rho_nm = sum_g real_coefficients[g] * <K_g>,
///   Im rho_nm = sum_g imag_coefficients[g] * <K_g>.
struct ReconstructionPlan {
  std::size_t dim = 0;
  std::array<PhaseSetting, kPlanSize> settings{};
  std::array<double, kPlanSize> real_coefficients{};
  std::array<double, kPlanSize> imag_coefficients{};

  /// Throws IndexOutOfRange / IndicesEqual for invalid (n, m).
  static ReconstructionPlan canonical(std::size_t dim, std::size_t n, std::size_t m);

  std::size_t n() const noexcept { return settings[0].n; }
  std::size_t m() const noexcept { return settings[0].m; }
};

/// Direct matrix-product values of the terms in the expansion
/// <K> = p_m(phi) + s_nm(theta) + cross_term.
struct ExpectationAudit {
  double p_m = 0.0;
  double s_nm = 0.0;
  /// k_expectation - p_m - s_nm
  double cross_term = 0.0;
  /// (2/d)[cos(theta-phi) - cos phi] Re rho_nm - (2/d)[sin(theta-phi) + sin phi] Im rho_nm
  double predicted_cross_term = 0.0;
};

struct ElementEstimate {
  std::size_t n = 0;
  std::size_t m = 0;
  double real_part = 0.0;
  double imag_part = 0.0;
  std::array<double, kPlanSize> expectations{};
  /// p_m(0) and p_m(pi), filled only when the source state was available.
  std::optional<std::array<double, 2>> p_m;

  Complex value() const noexcept { return {real_part, imag_part}; }
};

/// I + (e^{i theta} - 1)|n><n|. Throws IndexOutOfRange.
ComplexMatrix phase_shift_operator(std::size_t dim, std::size_t n, double theta);

/// Tr[rho K] for the projector addressed by `setting`. Throws IndexOutOfRange.
double k_expectation(const DensityMatrix& rho, const PhaseSetting& setting);

/// <K_g> for every setting of `plan`, in plan order.
std::array<double, kPlanSize> plan_expectations(const DensityMatrix& rho,
                                               const ReconstructionPlan& plan);

/// Linear combination of six expectations. Throws WrongArity unless exactly
/// six values are supplied.
ElementEstimate reconstruct_offdiagonal(std::span<const double> expectations,
                                        const ReconstructionPlan& plan);

/// Exact six-setting measurement of rho_nm (n != m), with p_m diagnostics.
ElementEstimate measure_element(const DensityMatrix& rho, std::size_t n, std::size_t m);

/// <n|rho|n>, i.e. a computational-basis measurement. Throws IndexOutOfRange.
double measure_diagonal(const DensityMatrix& rho, std::size_t n);

/// Rebuilds the whole matrix from d diagonal measurements and d(d-1)/2
/// six-setting reconstructions; the lower triangle is filled by conjugation.
ComplexMatrix reconstruct_full(const DensityMatrix& rho);

/// p_m(phi) = <+|Q_m rho Q_m^dag|+> evaluated with dense operators.
double postselection_baseline(const DensityMatrix& rho, std::size_t m, double phi);

/// Throws IndicesEqual when n == m, IndexOutOfRange for bad indices.
ExpectationAudit expectation_decomposition_audit(const DensityMatrix& rho,
                                                 const PhaseSetting& setting);

}  // namespace phaseshift

#endif  // PHASESHIFT_PROTOCOL_HPP
