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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "phaseshift/errors.hpp"
#include "phaseshift/protocol.hpp"
#include "phaseshift/rng.hpp"

using namespace phaseshift;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix phased_qubit() {
  ComplexVector a(2);
  a << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), kPi / 4);
  return from_statevector(StateVector(a));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("canonical plan layout") {
  const auto plan = ReconstructionPlan::canonical(4, 1, 2);
  const std::array<double, 6> thetas{0, 0, kPi / 2, kPi / 2, -kPi / 2, -kPi / 2};
  const std::array<double, 6> phis{0, kPi, 0, kPi, 0, kPi};
  const std::array<double, 6> re{1, -1, -0.5, 0.5, -0.5, 0.5};   // (4/8)[2,-2,-1,1,-1,1]
  const std::array<double, 6> im{0, 0, -0.5, 0.5, 0.5, -0.5};    // (-4/8)[0,0,1,-1,-1,1]
  double sum_re = 0.0, sum_im = 0.0;
  for (std::size_t g = 0; g < 6; ++g) {
    CHECK(plan.settings[g].n == 1);
    CHECK(plan.settings[g].m == 2);
    CHECK(plan.settings[g].theta == thetas[g]);
    CHECK(plan.settings[g].phi == phis[g]);
    CHECK(plan.real_coefficients[g] == re[g]);
    CHECK(plan.imag_coefficients[g] == im[g]);
    sum_re += plan.real_coefficients[g];
    sum_im += plan.imag_coefficients[g];
  }
  CHECK(sum_re == 0.0);
  CHECK(sum_im == 0.0);

  const auto doubled = ReconstructionPlan::canonical(8, 1, 2);
  for (std::size_t g = 0; g < 6; ++g) CHECK(doubled.real_coefficients[g] == 2.0 * plan.real_coefficients[g]);

  CHECK(code_of([] { ReconstructionPlan::canonical(4, 2, 2); }) == ErrorCode::IndicesEqual);
  CHECK(code_of([] { ReconstructionPlan::canonical(4, 0, 4); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("phase_shift_operator examples") {
  CHECK(phase_shift_operator(2, 0, 0.0).isApprox(ComplexMatrix::Identity(2, 2), 0.0));
  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  CHECK((phase_shift_operator(2, 1, kPi) - z).cwiseAbs().maxCoeff() < 1e-15);
  ComplexMatrix expected = ComplexMatrix::Identity(3, 3);
  expected(1, 1) = Complex(0, 1);
  CHECK((phase_shift_operator(3, 1, kPi / 2) - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(code_of([] { phase_shift_operator(3, 3, 0.0); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("phase_shift_operator is unitary") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const std::size_t dim = 2 + static_cast<std::size_t>(rng.uniform() * 15);
    const std::size_t n = static_cast<std::size_t>(rng.uniform() * static_cast<double>(dim));
    const double theta = (rng.uniform() - 0.5) * 4 * kPi;
    const ComplexMatrix u = phase_shift_operator(dim, n, theta);
    const auto d = static_cast<Eigen::Index>(dim);
    CHECK((u * u.adjoint() - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(u.isDiagonal());
  }
}

TEST_CASE("k_expectation examples") {
  for (std::size_t d : {2u, 3u, 5u}) {
    const DensityMatrix mixed = maximally_mixed(d);
    CHECK(k_expectation(mixed, {0, d - 1, 0.7, -1.3}) == doctest::Approx(1.0 / static_cast<double>(d)));
  }
  CHECK(k_expectation(from_statevector(plus_state(4)), {1, 2, 0, 0}) == doctest::Approx(1.0));
  const DensityMatrix zero = from_statevector(basis_state(2, 0));
  CHECK(k_expectation(zero, {0, 1, kPi / 2, 0}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(code_of([&] { k_expectation(zero, {0, 2, 0, 0}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("k_expectation agrees with the dense projector and stays in [0, 1]") {
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t dim = 2 + seed % 9;
    const DensityMatrix rho = random_density(dim, 1 + seed % dim, seed);
    const std::size_t n = static_cast<std::size_t>(rng.uniform() * double(dim));
    const std::size_t m = static_cast<std::size_t>(rng.uniform() * double(dim));
    const double theta = (rng.uniform() - 0.5) * 2 * kPi;
    const double phi = (rng.uniform() - 0.5) * 2 * kPi;
    const double k = k_expectation(rho, {n, m, theta, phi});
    CHECK(std::abs(k - oracle::k_value(rho.matrix(), n, m, theta, phi)) <= 1e-12);
    CHECK(k >= -1e-12);
    CHECK(k <= 1.0 + 1e-12);
    // 2 pi periodicity
    CHECK(std::abs(k - k_expectation(rho, {n, m, theta + 2 * kPi, phi - 2 * kPi})) <= 1e-12);
    // Q_m Q_n = Q_n Q_m for n != m: swapping roles leaves <K> unchanged.
    if (n != m) CHECK(std::abs(k - k_expectation(rho, {m, n, phi, theta})) <= 1e-12);
  }
}

TEST_CASE("reconstruct_offdiagonal examples") {
  const auto plan01 = ReconstructionPlan::canonical(2, 0, 1);

  const DensityMatrix mixed = maximally_mixed(3);
  const auto plan = ReconstructionPlan::canonical(3, 0, 2);
  const ElementEstimate zero = reconstruct_offdiagonal(plan_expectations(mixed, plan), plan);
  CHECK(std::abs(zero.real_part) < 1e-15);
  CHECK(std::abs(zero.imag_part) < 1e-15);

  const DensityMatrix phased = phased_qubit();
  std::array<double, 6> expectations{};
  for (std::size_t g = 0; g < 6; ++g) {
    const auto& s = plan01.settings[g];
    expectations[g] = oracle::k_value(phased.matrix(), s.n, s.m, s.theta, s.phi);
  }
  const ElementEstimate est = reconstruct_offdiagonal(expectations, plan01);
  CHECK(est.real_part == doctest::Approx(std::sqrt(2.0) / 4).epsilon(1e-13));
  CHECK(est.imag_part == doctest::Approx(-std::sqrt(2.0) / 4).epsilon(1e-13));
  CHECK(est.expectations == expectations);

  const DensityMatrix plus4 = from_statevector(plus_state(4));
  const ElementEstimate quarter = measure_element(plus4, 1, 2);
  CHECK(quarter.real_part == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(std::abs(quarter.imag_part) < 1e-14);
  REQUIRE(quarter.p_m.has_value());

  const std::vector<double> five(5, 0.1);
  CHECK(code_of([&] { reconstruct_offdiagonal(five, plan01); }) == ErrorCode::WrongArity);
}

TEST_CASE("measure_diagonal examples") {
  CHECK(measure_diagonal(from_statevector(basis_state(2, 0)), 0) == 1.0);
  CHECK(measure_diagonal(maximally_mixed(5), 3) == doctest::Approx(0.2));
  CHECK(measure_diagonal(from_statevector(ghz_state(2)), 0) == doctest::Approx(0.5));
  const DensityMatrix rho = random_density(6, 3, 4);
  double total = 0.0;
  for (std::size_t n = 0; n < 6; ++n) total += measure_diagonal(rho, n);
  CHECK(std::abs(total - 1.0) <= 1e-10);
  CHECK(code_of([&] { measure_diagonal(rho, 6); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("reconstruct_full examples") {
  const DensityMatrix mixed = maximally_mixed(4);
  CHECK((reconstruct_full(mixed) - mixed.matrix()).norm() <= 1e-14);

  const DensityMatrix rho = random_density(3, 3, 5);
  CHECK((reconstruct_full(rho) - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-10);

  const ComplexMatrix ghz = reconstruct_full(from_statevector(ghz_state(2)));
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) {
      const bool corner = (i == 0 || i == 3) && (j == 0 || j == 3);
      CHECK(std::abs(std::abs(ghz(i, j)) - (corner ? 0.5 : 0.0)) <= 1e-12);
    }
}

TEST_CASE("exact reconstruction property") {
  for (std::size_t dim : {2u, 3u, 4u, 8u}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const DensityMatrix rho = random_density(dim, 1 + seed % dim, 1000 * dim + seed);
      for (std::size_t n = 0; n < dim; ++n)
        for (std::size_t m = 0; m < dim; ++m) {
          if (n == m) continue;
          const ElementEstimate e = measure_element(rho, n, m);
          CHECK(std::abs(e.value() - rho(n, m)) <= 1e-10);
          // Cauchy-Schwarz bound for PSD matrices
          CHECK(std::abs(e.value()) <= std::sqrt(rho(n, n).real() * rho(m, m).real()) + 1e-10);
        }
    }
  }
}

TEST_CASE("expectation audit examples") {
  const DensityMatrix mixed = maximally_mixed(3);
  CHECK(std::abs(expectation_decomposition_audit(mixed, {0, 2, 0.4, 1.1}).cross_term) <= 1e-15);

  const DensityMatrix phased = phased_qubit();
  const ExpectationAudit a = expectation_decomposition_audit(phased, {0, 1, kPi / 2, 0});
  CHECK(std::abs(a.cross_term) <= 1e-12);
  CHECK(std::abs(a.predicted_cross_term) <= 1e-12);

  // theta = 0: s_nm vanishes and <K> = p_m(phi), so the cross term is 0.
  const ExpectationAudit b = expectation_decomposition_audit(phased, {0, 1, 0, kPi});
  CHECK(std::abs(b.s_nm) <= 1e-15);
  CHECK(std::abs(b.cross_term) <= 1e-12);
  CHECK(std::abs(b.predicted_cross_term) <= 1e-12);
  CHECK(std::abs(b.p_m - oracle::p_value(phased.matrix(), 1, kPi)) <= 1e-14);

  CHECK(code_of([&] { expectation_decomposition_audit(phased, {1, 1, 0, 0}); }) == ErrorCode::IndicesEqual);
}

TEST_CASE("audit matches the re-derived cross term for arbitrary angles") {
  Rng rng(21);
  int printed_form_mismatches = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t dim = 2 + seed % 6;
    const DensityMatrix rho = random_density(dim, dim, seed + 77);
    const std::size_t n = seed % dim;
    const std::size_t m = (n + 1 + seed % (dim - 1)) % dim;
    const double theta = (rng.uniform() - 0.5) * 2 * kPi;
    const double phi = (rng.uniform() - 0.5) * 2 * kPi;
    const ExpectationAudit a = expectation_decomposition_audit(rho, {n, m, theta, phi});
    const double k = oracle::k_value(rho.matrix(), n, m, theta, phi);
    CHECK(std::abs(a.p_m + a.s_nm + a.cross_term - k) <= 1e-12);
    CHECK(std::abs(a.cross_term - a.predicted_cross_term) <= 1e-10);
    // The alternative sign, sin(theta - phi) - sin(phi), is wrong away from phi in {0, pi}.
    const double d = static_cast<double>(dim);
    const double alt = (2.0 / d) * (std::cos(theta - phi) - std::cos(phi)) * rho(n, m).real() -
                       (2.0 / d) * (std::sin(theta - phi) - std::sin(phi)) * rho(n, m).imag();
    if (std::abs(alt - a.cross_term) > 1e-8) ++printed_form_mismatches;
  }
  CHECK(printed_form_mismatches > 30);
}

TEST_CASE("phi contrasts isolate the coherence") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t dim = 2 + seed % 7;
    const DensityMatrix rho = random_density(dim, 1 + seed % dim, seed + 500);
    const std::size_t n = (seed * 3) % dim;
    const std::size_t m = (n + 1) % dim;
    const double d = static_cast<double>(dim);
    const double dp = postselection_baseline(rho, m, 0) - postselection_baseline(rho, m, kPi);
    auto contrast = [&](double theta) {
      return k_expectation(rho, {n, m, theta, 0}) - k_expectation(rho, {n, m, theta, kPi});
    };
    const double re = rho(n, m).real();
    const double im = rho(n, m).imag();
    CHECK(std::abs(contrast(0) - dp) <= 1e-10);
    CHECK(std::abs(contrast(kPi / 2) - (-4 / d * re - 4 / d * im + dp)) <= 1e-10);
    CHECK(std::abs(contrast(-kPi / 2) - (-4 / d * re + 4 / d * im + dp)) <= 1e-10);
  }
}
