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

#include "phaseshift/sampling.hpp"

#include <cmath>

#include "phaseshift/errors.hpp"
#include "phaseshift/rng.hpp"

namespace phaseshift {

ShotRecord sample_expectation(const DensityMatrix& rho, const PhaseSetting& setting,
                              std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw Error(ErrorCode::ZeroShots, "at least one shot is required");
  const double p = k_expectation(rho, setting);
  Rng rng(seed);
  return ShotRecord{setting, shots, rng.binomial(shots, p), seed};
}

NoisyElementEstimate estimate_element(const DensityMatrix& rho, std::uint64_t shots_per_setting,
                                      std::uint64_t seed, const ReconstructionPlan& plan) {
  if (shots_per_setting == 0) throw Error(ErrorCode::ZeroShots, "at least one shot is required");
  if (plan.dim != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "plan dimension does not match the state");
  }
  NoisyElementEstimate out;
  out.n = plan.n();
  out.m = plan.m();
  std::array<double, kPlanSize> estimates{};
  double var_real = 0.0;
  double var_imag = 0.0;
  const auto shots = static_cast<double>(shots_per_setting);
  for (std::size_t g = 0; g < kPlanSize; ++g) {
    out.records[g] = sample_expectation(rho, plan.settings[g], shots_per_setting, derive_seed(seed, g));
    const double p = out.records[g].estimate();
    estimates[g] = p;
    const double bernoulli = p * (1.0 - p) / shots;
    var_real += plan.real_coefficients[g] * plan.real_coefficients[g] * bernoulli;
    var_imag += plan.imag_coefficients[g] * plan.imag_coefficients[g] * bernoulli;
  }
  const ElementEstimate est = reconstruct_offdiagonal(estimates, plan);
  out.real_part = est.real_part;
  out.imag_part = est.imag_part;
  out.real_stderr = std::sqrt(var_real);
  out.imag_stderr = std::sqrt(var_imag);
  out.total_shots = shots_per_setting * kPlanSize;
  return out;
}

std::vector<SweepRow> convergence_sweep(const DensityMatrix& rho, std::size_t n, std::size_t m,
                                        std::span<const std::uint64_t> shot_grid,
                                        std::size_t repeats, std::uint64_t seed) {
  if (repeats < kMinSweepRepeats) {
    throw Error(ErrorCode::BadDimension, "a sweep needs at least " + std::to_string(kMinSweepRepeats) +
                                             " repeats, got " + std::to_string(repeats));
  }
  const auto plan = ReconstructionPlan::canonical(rho.dim(), n, m);
  const Complex truth = rho(n, m);
  std::vector<SweepRow> rows;
  rows.reserve(shot_grid.size());
  for (std::size_t i = 0; i < shot_grid.size(); ++i) {
    SweepRow row;
    row.shots = shot_grid[i];
    const std::uint64_t grid_seed = derive_seed(seed, i);
    double se_real = 0.0;
    double se_imag = 0.0;
    for (std::size_t r = 0; r < repeats; ++r) {
      const auto est = estimate_element(rho, shot_grid[i], derive_seed(grid_seed, r), plan);
      se_real += (est.real_part - truth.real()) * (est.real_part - truth.real());
      se_imag += (est.imag_part - truth.imag()) * (est.imag_part - truth.imag());
      row.mean_stderr += est.real_stderr;
      row.mean_real += est.real_part;
      row.mean_imag += est.imag_part;
    }
    const auto count = static_cast<double>(repeats);
    row.rmse_real = std::sqrt(se_real / count);
    row.rmse_imag = std::sqrt(se_imag / count);
    row.mean_stderr /= count;
    row.mean_real /= count;
    row.mean_imag /= count;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace phaseshift
