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

#include "phaseshift/cvgrid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phaseshift/errors.hpp"

namespace phaseshift {

namespace {

void check_grid(std::size_t grid_points, double x_min, double x_max) {
  if (grid_points < kMinGridPoints) {
    throw Error(ErrorCode::BadDimension, "grid needs at least " + std::to_string(kMinGridPoints) +
                                             " points, got " + std::to_string(grid_points));
  }
  if (!(x_max > x_min)) throw Error(ErrorCode::BadDimension, "grid requires x_max > x_min");
}

double raw_gaussian(double x, double center, double width) {
  const double u = x - center;
  return std::exp(-u * u / (4.0 * width * width));
}

}  // namespace

GridState::GridState(std::size_t grid_points, double x_min, double x_max, DensityMatrix rho)
    : grid_points_(grid_points), x_min_(x_min), x_max_(x_max), rho_(std::move(rho)) {
  check_grid(grid_points, x_min, x_max);
  if (rho_.dim() != grid_points) {
    throw Error(ErrorCode::BadDimension, "grid of " + std::to_string(grid_points) +
                                             " points holds a matrix of dimension " +
                                             std::to_string(rho_.dim()));
  }
}

GridState gaussian_grid_state(std::size_t grid_points, double x_min, double x_max, double center,
                              double width) {
  check_grid(grid_points, x_min, x_max);
  if (!(width > 0.0)) throw Error(ErrorCode::BadDimension, "width must be positive");
  for (double edge : {x_min, x_max}) {
    const double u = edge - center;
    const double density = std::exp(-u * u / (2.0 * width * width)) /
                           std::sqrt(2.0 * std::numbers::pi * width * width);
    if (density > kSupportTolerance) {
      throw Error(ErrorCode::SupportClipped, "|psi|^2 = " + std::to_string(density) + " at x = " +
                                                 std::to_string(edge) + " exceeds " +
                                                 std::to_string(kSupportTolerance));
    }
  }
  const double dx = (x_max - x_min) / static_cast<double>(grid_points);
  ComplexVector amps(static_cast<Eigen::Index>(grid_points));
  for (std::size_t a = 0; a < grid_points; ++a) {
    amps(static_cast<Eigen::Index>(a)) = raw_gaussian(x_min + static_cast<double>(a) * dx, center, width);
  }
  return GridState(grid_points, x_min, x_max,
                   from_statevector(StateVector::normalized(std::move(amps))));
}

double gaussian_grid_amplitude(std::size_t grid_points, double x_min, double x_max, double center,
                               double width, std::size_t a) {
  check_grid(grid_points, x_min, x_max);
  const double dx = (x_max - x_min) / static_cast<double>(grid_points);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double v = raw_gaussian(x_min + static_cast<double>(i) * dx, center, width);
    norm2 += v * v * dx;
  }
  return raw_gaussian(x_min + static_cast<double>(a) * dx, center, width) / std::sqrt(norm2);
}

double cv_k_expectation(const GridState& state, std::size_t a, std::size_t b, double theta,
                        double phi) {
  if (a == b && a < state.grid_points()) {
    throw Error(ErrorCode::IndicesEqual, "grid points x' and x'' must differ");
  }
  return k_expectation(state.rho(), PhaseSetting{a, b, theta, phi});
}

ElementEstimate cv_reconstruct(const GridState& state, std::size_t a, std::size_t b) {
  return measure_element(state.rho(), a, b);
}

Complex cv_coherent_overlap(const GridState& state, std::size_t a, std::size_t b, double phi) {
  const std::size_t g = state.grid_points();
  if (a >= g || b >= g) throw Error(ErrorCode::IndexOutOfRange, "grid index out of range");
  const double amp = 1.0 / std::sqrt(static_cast<double>(g));
  ComplexVector y = ComplexVector::Constant(static_cast<Eigen::Index>(g), Complex(amp, 0.0));
  y(static_cast<Eigen::Index>(b)) *= std::polar(1.0, -phi);
  return state.rho().matrix().row(static_cast<Eigen::Index>(a)) * y;
}

}  // namespace phaseshift
