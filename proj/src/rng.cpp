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

#include "phaseshift/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace phaseshift {

double Rng::normal() {
  // 1 - u keeps the logarithm finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::binomial(std::uint64_t trials, double p) {
  p = std::clamp(p, 0.0, 1.0);
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;
  if (trials >= kInverseCdfThreshold) return binomial_inverse_cdf(trials, p);
  std::uint64_t successes = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (uniform() < p) ++successes;
  }
  return successes;
}

// Inverts the CDF with a single uniform draw. Probabilities are built by the
// pmf ratio recursion outward from the mode (weight 1 at the mode) and cut
// once the relative weight drops below 1e-40, far under the resolution of u.
std::uint64_t Rng::binomial_inverse_cdf(std::uint64_t trials, double p) {
  const double u = uniform();
  const double odds = p / (1.0 - p);
  const auto mode = std::min<std::uint64_t>(
      trials, static_cast<std::uint64_t>(std::floor((static_cast<double>(trials) + 1.0) * p)));
  constexpr double kCut = 1e-40;

  std::vector<double> below;  // weights of mode-1, mode-2, ...
  double w = 1.0;
  for (std::uint64_t k = mode; k > 0; --k) {
    // w_{k-1} = w_k * k / ((trials - k + 1) * odds)
    w *= static_cast<double>(k) / (static_cast<double>(trials - k + 1) * odds);
    if (w < kCut) break;
    below.push_back(w);
  }
  std::vector<double> above;  // weights of mode, mode+1, ...
  w = 1.0;
  above.push_back(w);
  for (std::uint64_t k = mode; k < trials; ++k) {
    w *= static_cast<double>(trials - k) / static_cast<double>(k + 1) * odds;
    if (w < kCut) break;
    above.push_back(w);
  }

  double total = 0.0;
  for (auto it = below.rbegin(); it != below.rend(); ++it) total += *it;
  for (double x : above) total += x;

  const double target = u * total;
  double cumulative = 0.0;
  const std::uint64_t lowest = mode - below.size();
  for (std::size_t i = 0; i < below.size(); ++i) {
    cumulative += below[below.size() - 1 - i];
    if (cumulative > target) return lowest + i;
  }
  for (std::size_t i = 0; i < above.size(); ++i) {
    cumulative += above[i];
    if (cumulative > target) return mode + i;
  }
  return mode + above.size() - 1;
}

}  // namespace phaseshift
