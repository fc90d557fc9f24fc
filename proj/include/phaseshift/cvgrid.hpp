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

#ifndef PHASESHIFT_CVGRID_HPP
#define PHASESHIFT_CVGRID_HPP

#include <cstddef>

#include "phaseshift/linalg.hpp"
#include "phaseshift/protocol.hpp"

namespace phaseshift {

// A continuous-variable state sampled on G points x_a = x_min + a dx,
// dx = (x_max - x_min) / G. The stored matrix holds rho(x_a, x_b) dx, so it is
// an ordinary unit-trace density matrix of dimension G and the discrete
// six-setting formulas apply unchanged with d = G and a normalized |+>.
// Continuous values are recovered as rho(x', x'') = stored(a, b) / dx.

inline constexpr std::size_t kMinGridPoints = 4;

class GridState {
 public:
  /// Throws BadDimension when rho.dim() != grid_points, G < 4 or x_max <= x_min.
  GridState(std::size_t grid_points, double x_min, double x_max, DensityMatrix rho);

  std::size_t grid_points() const noexcept { return grid_points_; }
  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  double spacing() const noexcept { return (x_max_ - x_min_) / static_cast<double>(grid_points_); }
  double position(std::size_t a) const noexcept {
    return x_min_ + static_cast<double>(a) * spacing();
  }
  const DensityMatrix& rho() const noexcept { return rho_; }

 private:
  std::size_t grid_points_;
  double x_min_;
  double x_max_;
  DensityMatrix rho_;
};

/// Largest boundary probability density |psi(x)|^2 tolerated by gaussian_grid_state.
inline constexpr double kSupportTolerance = 1e-8;

/// Pure state psi(x) ~ exp(-(x - center)^2 / (4 width^2)) normalized on the grid.
/// Throws SupportClipped if |psi|^2 at x_min or x_max exceeds kSupportTolerance,
/// BadDimension for width <= 0 or an invalid grid.
GridState gaussian_grid_state(std::size_t grid_points, double x_min, double x_max, double center,
                              double width);

/// Grid-normalized wavefunction value psi(x_a) (sum_a |psi(x_a)|^2 dx = 1).
double gaussian_grid_amplitude(std::size_t grid_points, double x_min, double x_max, double center,
                               double width, std::size_t a);

/// Same machinery as k_expectation with d = G. Throws IndexOutOfRange / IndicesEqual.
double cv_k_expectation(const GridState& state, std::size_t a, std::size_t b, double theta,
                        double phi);

/// Six-setting reconstruction of stored(a, b) = rho(x_a, x_b) dx.
ElementEstimate cv_reconstruct(const GridState& state, std::size_t a, std::size_t b);

/// <x_a|rho|y_b(phi)> with |y_b(phi)> = Q_b(phi)^dag |+>. The difference between
/// phi = 0 and phi = pi equals 2 stored(a, b) / sqrt(G).
Complex cv_coherent_overlap(const GridState& state, std::size_t a, std::size_t b, double phi);

}  // namespace phaseshift

#endif  // PHASESHIFT_CVGRID_HPP
