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

#ifndef PHASESHIFT_SAMPLING_HPP
#define PHASESHIFT_SAMPLING_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "phaseshift/linalg.hpp"
#include "phaseshift/protocol.hpp"

namespace phaseshift {

/// Tally of one setting. A shot is one preparation; success is the all-zero
/// (post-selected) outcome, failures stay in the denominator.
struct ShotRecord {
  PhaseSetting setting;
  std::uint64_t shots = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;

  double estimate() const noexcept {
    return static_cast<double>(successes) / static_cast<double>(shots);
  }
};

struct NoisyElementEstimate {
  std::size_t n = 0;
  std::size_t m = 0;
  double real_part = 0.0;
  double imag_part = 0.0;
  double real_stderr = 0.0;
  double imag_stderr = 0.0;
  std::uint64_t total_shots = 0;
  std::array<ShotRecord, kPlanSize> records{};
};

/// successes ~ Binomial(shots, k_expectation(rho, setting)). Throws ZeroShots.
ShotRecord sample_expectation(const DensityMatrix& rho, const PhaseSetting& setting,
                              std::uint64_t shots, std::uint64_t seed);

/// Samples all six settings (setting g uses derive_seed(seed, g)) and
/// reconstructs. stderr = sqrt(sum_g c_g^2 p_g (1 - p_g) / M) per coefficient vector.
NoisyElementEstimate estimate_element(const DensityMatrix& rho, std::uint64_t shots_per_setting,
                                      std::uint64_t seed, const ReconstructionPlan& plan);

struct SweepRow {
  std::uint64_t shots = 0;
  double rmse_real = 0.0;
  double rmse_imag = 0.0;
  /// Mean of real_stderr over the repeats.
  double mean_stderr = 0.0;
  double mean_real = 0.0;
  double mean_imag = 0.0;
};

/// Empirical RMSE against the true rho_nm over `repeats` seeded runs for each
/// shot count. Throws ZeroShots / BadDimension (repeats < 8).
std::vector<SweepRow> convergence_sweep(const DensityMatrix& rho, std::size_t n, std::size_t m,
                                        std::span<const std::uint64_t> shot_grid,
                                        std::size_t repeats, std::uint64_t seed);

inline constexpr std::size_t kMinSweepRepeats = 8;

}  // namespace phaseshift

#endif  // PHASESHIFT_SAMPLING_HPP
