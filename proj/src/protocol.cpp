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

#include "phaseshift/protocol.hpp"

#include <cmath>
#include <string>

#include "phaseshift/errors.hpp"

namespace phaseshift {

namespace {

constexpr double kPi = std::numbers::pi;

void check_index(std::size_t index, std::size_t dim) {
  if (index >= dim) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(index) + " out of range for dimension " + std::to_string(dim));
  }
}

void check_pair(std::size_t n, std::size_t m, std::size_t dim) {
  check_index(n, dim);
  check_index(m, dim);
  if (n == m) {
    throw Error(ErrorCode::IndicesEqual,
                "off-diagonal element needs n != m (got n = m = " + std::to_string(n) + ")");
  }
}

Complex phase(double angle) { return std::polar(1.0, angle); }

ComplexVector plus_vector(std::size_t dim) {
  return ComplexVector::Constant(static_cast<Eigen::Index>(dim),
                                 Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

}  // namespace

ReconstructionPlan ReconstructionPlan::canonical(std::size_t dim, std::size_t n, std::size_t m) {
  check_pair(n, m, dim);
  ReconstructionPlan plan;
  plan.dim = dim;
  constexpr std::array<double, kPlanSize> thetas{0.0, 0.0, kPi / 2, kPi / 2, -kPi / 2, -kPi / 2};
  constexpr std::array<double, kPlanSize> phis{0.0, kPi, 0.0, kPi, 0.0, kPi};
  constexpr std::array<double, kPlanSize> real_weights{2, -2, -1, 1, -1, 1};
  constexpr std::array<double, kPlanSize> imag_weights{0, 0, 1, -1, -1, 1};
  const double scale = static_cast<double>(dim) / 8.0;
  for (std::size_t g = 0; g < kPlanSize; ++g) {
    plan.settings[g] = PhaseSetting{n, m, thetas[g], phis[g]};
    plan.real_coefficients[g] = scale * real_weights[g];
    plan.imag_coefficients[g] = -scale * imag_weights[g];
  }
  return plan;
}

ComplexMatrix phase_shift_operator(std::size_t dim, std::size_t n, double theta) {
  check_index(n, dim);
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix q = ComplexMatrix::Identity(d, d);
  q(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) = phase(theta);
  return q;
}

double k_expectation(const DensityMatrix& rho, const PhaseSetting& setting) {
  const std::size_t dim = rho.dim();
  check_index(setting.n, dim);
  check_index(setting.m, dim);
  // K = |v><v| with v = Q_n(theta)^dag Q_m(phi)^dag |+>; both shifts are diagonal.
  ComplexVector v = plus_vector(dim);
  v(static_cast<Eigen::Index>(setting.m)) *= phase(-setting.phi);
  v(static_cast<Eigen::Index>(setting.n)) *= phase(-setting.theta);
  return v.dot(rho.matrix() * v).real();
}

std::array<double, kPlanSize> plan_expectations(const DensityMatrix& rho,
                                               const ReconstructionPlan& plan) {
  if (plan.dim != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "plan dimension " + std::to_string(plan.dim) +
                                                  " != state dimension " + std::to_string(rho.dim()));
  }
  std::array<double, kPlanSize> out{};
  for (std::size_t g = 0; g < kPlanSize; ++g) out[g] = k_expectation(rho, plan.settings[g]);
  return out;
}

ElementEstimate reconstruct_offdiagonal(std::span<const double> expectations,
                                        const ReconstructionPlan& plan) {
  if (expectations.size() != kPlanSize) {
    throw Error(ErrorCode::WrongArity,
                "expected 6 expectation values, got " + std::to_string(expectations.size()));
  }
  ElementEstimate est;
  est.n = plan.n();
  est.m = plan.m();
  for (std::size_t g = 0; g < kPlanSize; ++g) {
    est.expectations[g] = expectations[g];
    est.real_part += plan.real_coefficients[g] * expectations[g];
    est.imag_part += plan.imag_coefficients[g] * expectations[g];
  }
  return est;
}

ElementEstimate measure_element(const DensityMatrix& rho, std::size_t n, std::size_t m) {
  const auto plan = ReconstructionPlan::canonical(rho.dim(), n, m);
  const auto expectations = plan_expectations(rho, plan);
  ElementEstimate est = reconstruct_offdiagonal(expectations, plan);
  est.p_m = std::array<double, 2>{postselection_baseline(rho, m, 0.0),
                                  postselection_baseline(rho, m, kPi)};
  return est;
}

double measure_diagonal(const DensityMatrix& rho, std::size_t n) {
  check_index(n, rho.dim());
  return rho(n, n).real();
}

ComplexMatrix reconstruct_full(const DensityMatrix& rho) {
  const std::size_t dim = rho.dim();
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (std::size_t n = 0; n < dim; ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    out(i, i) = measure_diagonal(rho, n);
    for (std::size_t m = n + 1; m < dim; ++m) {
      const auto plan = ReconstructionPlan::canonical(dim, n, m);
      const auto est = reconstruct_offdiagonal(plan_expectations(rho, plan), plan);
      const auto j = static_cast<Eigen::Index>(m);
      out(i, j) = est.value();
      out(j, i) = std::conj(est.value());
    }
  }
  return out;
}

double postselection_baseline(const DensityMatrix& rho, std::size_t m, double phi) {
  const ComplexMatrix q = phase_shift_operator(rho.dim(), m, phi);
  const ComplexVector plus = plus_vector(rho.dim());
  return plus.dot(q * rho.matrix() * q.adjoint() * plus).real();
}

ExpectationAudit expectation_decomposition_audit(const DensityMatrix& rho,
                                                 const PhaseSetting& setting) {
  const std::size_t dim = rho.dim();
  check_pair(setting.n, setting.m, dim);
  const auto d = static_cast<double>(dim);
  const auto n = static_cast<Eigen::Index>(setting.n);
  const auto m = static_cast<Eigen::Index>(setting.m);
  const ComplexMatrix& r = rho.matrix();

  // Full sandwich with dense operators, independent of k_expectation's shortcut.
  const ComplexMatrix qn = phase_shift_operator(dim, setting.n, setting.theta);
  const ComplexMatrix qm = phase_shift_operator(dim, setting.m, setting.phi);
  const ComplexVector plus = plus_vector(dim);
  const ComplexMatrix shifted = qm * qn * r * qn.adjoint() * qm.adjoint();
  const double k = plus.dot(shifted * plus).real();

  Complex row_sum{0.0, 0.0};  // sum_{i != m} rho_ni
  Complex col_sum{0.0, 0.0};  // sum_{i != m} rho_in
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    if (i == m) continue;
    row_sum += r(n, i);
    col_sum += r(i, n);
  }
  const Complex s = (2.0 / d) * (1.0 - std::cos(setting.theta)) * r(n, n) +
                    (1.0 / d) * (phase(setting.theta) - 1.0) * row_sum +
                    (1.0 / d) * (phase(-setting.theta) - 1.0) * col_sum;

  ExpectationAudit audit;
  audit.p_m = postselection_baseline(rho, setting.m, setting.phi);
  audit.s_nm = s.real();
  audit.cross_term = k - audit.p_m - audit.s_nm;
  const double th = setting.theta;
  const double ph = setting.phi;
  audit.predicted_cross_term = (2.0 / d) * (std::cos(th - ph) - std::cos(ph)) * r(n, m).real() -
                               (2.0 / d) * (std::sin(th - ph) + std::sin(ph)) * r(n, m).imag();
  return audit;
}

}  // namespace phaseshift
