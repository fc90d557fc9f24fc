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

#ifndef PHASESHIFT_RNG_HPP
#define PHASESHIFT_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace phaseshift {

/// SplitMix64 finalizer; used to derive independent substream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of substream `stream` under `seed`. Deterministic and platform independent.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix_seed(mix_seed(seed) ^ mix_seed(stream + 0x632BE59BD9B4E019ULL));
}

/// Portable random source: std::mt19937_64 (bit-exact across standard
/// libraries) with hand-written variate transforms, because the standard
/// distributions are implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (one value per call, no caching).
  double normal();

  /// Complex normal with independent N(0,1) real and imaginary parts.
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  /// Binomial(trials, p). Direct Bernoulli summation below
  /// kInverseCdfThreshold trials, exact inverse-CDF above.
  std::uint64_t binomial(std::uint64_t trials, double p);

  static constexpr std::uint64_t kInverseCdfThreshold = 100000;

 private:
  std::uint64_t binomial_inverse_cdf(std::uint64_t trials, double p);

  std::mt19937_64 engine_;
};

}  // namespace phaseshift

#endif  // PHASESHIFT_RNG_HPP
