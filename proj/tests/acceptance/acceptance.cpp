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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "phaseshift/applications.hpp"
#include "phaseshift/circuit.hpp"
#include "phaseshift/cvgrid.hpp"
#include "phaseshift/protocol.hpp"
#include "phaseshift/rng.hpp"
#include "phaseshift/sampling.hpp"

using namespace phaseshift;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

Outcome exact_reconstruction() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::size_t dim : {2u, 3u, 4u, 8u, 16u}) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const DensityMatrix rho = random_density(dim, dim, derive_seed(dim, s));
      for (std::size_t n = 0; n < dim; ++n)
        for (std::size_t m = 0; m < dim; ++m) {
          if (n == m) continue;
          worst = std::max(worst, std::abs(measure_element(rho, n, m).value() - rho(n, m)));
        }
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-10 && elapsed <= 10.0, fmt("max error %.2e, %.2f s", worst, elapsed)};
}

Outcome contrast_identities() {
  Rng rng(2024);
  double worst_contrast = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::size_t dim = 2 + static_cast<std::size_t>(rng.uniform() * 9);
    const DensityMatrix rho = random_density(dim, 1 + s % dim, 100 + s);
    const std::size_t n = static_cast<std::size_t>(rng.uniform() * double(dim));
    const std::size_t m = (n + 1 + static_cast<std::size_t>(rng.uniform() * double(dim - 1))) % dim;
    const double d = static_cast<double>(dim);
    const double dp = oracle::p_value(rho.matrix(), m, 0) - oracle::p_value(rho.matrix(), m, kPi);
    auto contrast = [&](double theta) {
      return k_expectation(rho, {n, m, theta, 0}) - k_expectation(rho, {n, m, theta, kPi});
    };
    const double re = rho(n, m).real();
    const double im = rho(n, m).imag();
    worst_contrast = std::max({worst_contrast, std::abs(contrast(0) - dp),
                               std::abs(contrast(kPi / 2) - (-4 / d * re - 4 / d * im + dp)),
                               std::abs(contrast(-kPi / 2) - (-4 / d * re + 4 / d * im + dp))});
  }
  double worst_audit = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const std::size_t dim = 2 + s % 7;
    const DensityMatrix rho = random_density(dim, dim, 700 + s);
    const std::size_t n = s % dim;
    const std::size_t m = (n + 1) % dim;
    const double theta = (rng.uniform() - 0.5) * 2 * kPi;
    const double phi = (rng.uniform() - 0.5) * 2 * kPi;
    const ExpectationAudit a = expectation_decomposition_audit(rho, {n, m, theta, phi});
    const double k = oracle::k_value(rho.matrix(), n, m, theta, phi);
    worst_audit = std::max({worst_audit, std::abs(a.p_m + a.s_nm + a.cross_term - k),
                            std::abs(a.cross_term - a.predicted_cross_term),
                            std::abs(k_expectation(rho, {n, m, theta, phi}) - k)});
  }
  return {worst_contrast <= 1e-10 && worst_audit <= 1e-10,
          fmt("contrast %.2e, audit %.2e", worst_contrast, worst_audit)};
}

Outcome circuit_equivalence() {
  Rng rng(31337);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t qubits = 1 + static_cast<std::size_t>(rng.uniform() * 4);
    const std::size_t dim = std::size_t{1} << qubits;
    const std::size_t n = static_cast<std::size_t>(rng.uniform() * double(dim));
    const std::size_t m = static_cast<std::size_t>(rng.uniform() * double(dim));
    const double theta = (rng.uniform() - 0.5) * 2 * kPi;
    const double phi = (rng.uniform() - 0.5) * 2 * kPi;
    const DensityMatrix rho = random_density(dim, 1 + static_cast<std::size_t>(trial) % dim, 40000 + trial);
    const double p = simulate_circuit(rho, compile_measurement(qubits, {n, m, theta, phi})).success_probability;
    worst = std::max(worst, std::abs(p - oracle::k_value(rho.matrix(), n, m, theta, phi)));
  }
  double worst_unitary = 0.0;
  for (std::size_t qubits = 1; qubits <= 4; ++qubits)
    for (std::size_t n = 0; n < (std::size_t{1} << qubits); ++n)
      for (double theta : {kPi / 2, -kPi / 2, kPi, 0.3}) {
        const ComplexMatrix u = circuit_unitary(compile_phase_shift(qubits, n, theta));
        worst_unitary = std::max(
            worst_unitary, (u - oracle::phase_gate(std::size_t{1} << qubits, n, theta)).cwiseAbs().maxCoeff());
      }
  return {worst <= 1e-10 && worst_unitary <= 1e-12, fmt("probability %.2e, unitary %.2e", worst, worst_unitary)};
}

Outcome full_round_trip() {
  double worst = 0.0;
  bool valid = true;
  for (std::size_t dim : {2u, 4u, 9u, 16u}) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const DensityMatrix rho = random_density(dim, 1 + s % dim, 5000 + dim * 10 + s);
      const ComplexMatrix est = reconstruct_full(rho);
      worst = std::max(worst, (est - rho.matrix()).norm());
      try {
        validate_density(est, 1e-8);
      } catch (const std::exception&) {
        valid = false;
      }
    }
  }
  return {worst <= 1e-9 && valid, fmt("max Frobenius error %.2e", worst) + (valid ? ", all valid" : ", invalid output")};
}

Outcome shot_noise() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::uint64_t> grid{10000, 1000000};
  constexpr std::size_t kRepeats = 32;
  double min_ratio = 1e300;
  double max_ratio = 0.0;
  double worst_bias = 0.0;  // in units of the allowed interval
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {1, 3}, {2, 0}};
  for (std::uint64_t fixture = 0; fixture < 3; ++fixture) {
    const DensityMatrix rho = random_density(4, 4 - fixture, 8100 + fixture);
    for (auto [n, m] : pairs) {
      const auto rows = convergence_sweep(rho, n, m, grid, kRepeats, 77 + fixture);
      for (double ratio : {rows[0].rmse_real / rows[1].rmse_real, rows[0].rmse_imag / rows[1].rmse_imag}) {
        min_ratio = std::min(min_ratio, ratio);
        max_ratio = std::max(max_ratio, ratio);
      }
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const NoisyElementEstimate probe =
            estimate_element(rho, grid[i], 1, ReconstructionPlan::canonical(4, n, m));
        const double scale = 5.0 / std::sqrt(double(kRepeats));
        worst_bias = std::max({worst_bias,
                               std::abs(rows[i].mean_real - rho(n, m).real()) / (scale * rows[i].mean_stderr),
                               std::abs(rows[i].mean_imag - rho(n, m).imag()) / (scale * probe.imag_stderr)});
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {min_ratio >= 5.0 && max_ratio <= 20.0 && worst_bias <= 1.0 && elapsed <= 60.0,
          fmt("RMSE ratio in [%.2f, %.2f], worst bias %.2f of bound", min_ratio, max_ratio, worst_bias) +
              fmt(", %.2f s", elapsed)};
}

Outcome cv_grid() {
  constexpr std::size_t kG = 64;
  const GridState s = gaussian_grid_state(kG, -8, 8, 0, 1);
  double worst = 0.0;
  for (std::size_t a = 0; a < kG; ++a)
    for (std::size_t b = 0; b < kG; ++b) {
      if (a == b) continue;
      const double expected = gaussian_grid_amplitude(kG, -8, 8, 0, 1, a) *
                              gaussian_grid_amplitude(kG, -8, 8, 0, 1, b) * s.spacing();
      worst = std::max(worst, std::abs(cv_reconstruct(s, a, b).value() - expected));
    }
  // Narrow packet so the discretization error is above roundoff on the coarse grids.
  std::vector<double> values;
  for (std::size_t g : {32u, 64u, 128u}) {
    const GridState r = gaussian_grid_state(g, -8, 8, 0, 0.25);
    values.push_back(cv_reconstruct(r, g / 2, g / 2 + g / 32).real_part / r.spacing());
  }
  const double d1 = std::abs(values[1] - values[0]);
  const double d2 = std::abs(values[2] - values[1]);
  return {worst <= 1e-10 && d2 < d1, fmt("max error %.2e, refinement %.2e -> %.2e", worst, d1, d2)};
}

Outcome applications() {
  double worst = 0.0;
  bool counts = true;
  for (std::size_t n : {2u, 3u, 4u}) {
    const FidelityReport r = ghz_fidelity(from_statevector(ghz_state(n)), n);
    worst = std::max(worst, std::abs(r.fidelity - 1.0));
    counts = counts && r.elements.size() == 4 && r.diagonal_queries + r.offdiagonal_queries == 3;
  }
  const double witness = bell_witness(from_statevector(ghz_state(2)));
  const double l1 = l1_coherence(from_statevector(plus_state(2)));
  const bool pass = worst <= 1e-10 && counts && std::abs(witness + 0.5) <= 1e-10 && std::abs(l1 - 1.0) <= 1e-10;
  return {pass, fmt("GHZ error %.2e, witness %.12f, l1 %.12f", worst, witness, l1) +
                    (counts ? ", 3 reconstructions / 4 elements" : ", wrong element count")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 exact off-diagonal reconstruction", exact_reconstruction},
      {"AC2 contrast identities and expectation audit", contrast_identities},
      {"AC3 circuit-operator equivalence", circuit_equivalence},
      {"AC4 full-matrix round trip", full_round_trip},
      {"AC5 shot-noise scaling and bias", shot_noise},
      {"AC6 continuous-variable grid", cv_grid},
      {"AC7 GHZ fidelity, Bell witness, l1 coherence", applications},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
