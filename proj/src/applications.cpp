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

#include "phaseshift/applications.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "phaseshift/circuit.hpp"
#include "phaseshift/errors.hpp"
#include "phaseshift/protocol.hpp"
#include "phaseshift/rng.hpp"
#include "phaseshift/sampling.hpp"

namespace phaseshift {

namespace {

constexpr std::uint64_t kDiagonalStream = 0xD1A6;
constexpr std::uint64_t kOffDiagonalStream = 0x0FFD;

}  // namespace

ElementValue ExactElementSource::diagonal(std::size_t n) {
  return ElementValue{Complex(measure_diagonal(rho_, n), 0.0)};
}

ElementValue ExactElementSource::offdiagonal(std::size_t n, std::size_t m) {
  const auto plan = ReconstructionPlan::canonical(rho_.dim(), n, m);
  return ElementValue{reconstruct_offdiagonal(plan_expectations(rho_, plan), plan).value()};
}

SampledElementSource::SampledElementSource(DensityMatrix rho, std::uint64_t shots, std::uint64_t seed)
    : rho_(std::move(rho)), shots_(shots), seed_(seed) {
  if (shots_ == 0) throw Error(ErrorCode::ZeroShots, "at least one shot is required");
}

ElementValue SampledElementSource::diagonal(std::size_t n) {
  const double p = measure_diagonal(rho_, n);
  Rng rng(derive_seed(derive_seed(seed_, kDiagonalStream), n));
  const double estimate = static_cast<double>(rng.binomial(shots_, p)) / static_cast<double>(shots_);
  return ElementValue{Complex(estimate, 0.0),
                      std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(shots_))};
}

ElementValue SampledElementSource::offdiagonal(std::size_t n, std::size_t m) {
  const auto plan = ReconstructionPlan::canonical(rho_.dim(), n, m);
  const std::uint64_t stream = static_cast<std::uint64_t>(n) * rho_.dim() + m;
  const auto est = estimate_element(rho_, shots_, derive_seed(derive_seed(seed_, kOffDiagonalStream), stream), plan);
  return ElementValue{Complex(est.real_part, est.imag_part), est.real_stderr, est.imag_stderr};
}

CircuitElementSource::CircuitElementSource(DensityMatrix rho) : rho_(std::move(rho)) {
  if (!std::has_single_bit(rho_.dim()) || rho_.dim() < 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "circuit backend needs a qubit register, got dimension " + std::to_string(rho_.dim()));
  }
  num_qubits_ = static_cast<std::size_t>(std::countr_zero(rho_.dim()));
}

ElementValue CircuitElementSource::diagonal(std::size_t n) {
  if (n >= rho_.dim()) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
  // Map |n> to |0...0> and post-select.
  GateCircuit circuit(num_qubits_);
  XLayer flips;
  for (std::size_t q = 1; q <= num_qubits_; ++q) {
    if ((n >> (num_qubits_ - q)) & 1U) flips.qubits.push_back(q);
  }
  circuit.append(flips);
  circuit.append(PostSelectAllZero{});
  return ElementValue{Complex(simulate_circuit(rho_, circuit).success_probability, 0.0)};
}

ElementValue CircuitElementSource::offdiagonal(std::size_t n, std::size_t m) {
  const auto plan = ReconstructionPlan::canonical(rho_.dim(), n, m);
  std::array<double, kPlanSize> probabilities{};
  for (std::size_t g = 0; g < kPlanSize; ++g) {
    probabilities[g] =
        simulate_circuit(rho_, compile_measurement(num_qubits_, plan.settings[g])).success_probability;
  }
  return ElementValue{reconstruct_offdiagonal(probabilities, plan).value()};
}

FidelityReport ghz_fidelity(ElementSource& source, std::size_t num_qubits) {
  if (num_qubits < 2) {
    throw Error(ErrorCode::TooFewQubits, "GHZ fidelity needs N >= 2, got " + std::to_string(num_qubits));
  }
  if (num_qubits >= 63 || source.dim() != (std::size_t{1} << num_qubits)) {
    throw Error(ErrorCode::DimensionMismatch, "state dimension " + std::to_string(source.dim()) +
                                                  " is not 2^" + std::to_string(num_qubits));
  }
  const std::size_t last = source.dim() - 1;
  const ElementValue first = source.diagonal(0);
  const ElementValue final_ = source.diagonal(last);
  const ElementValue corner = source.offdiagonal(0, last);

  FidelityReport report;
  report.num_qubits = num_qubits;
  report.fidelity = 0.5 * (first.value.real() + final_.value.real()) + corner.value.real();
  report.fidelity_stderr =
      std::sqrt(0.25 * first.real_stderr * first.real_stderr +
                0.25 * final_.real_stderr * final_.real_stderr + corner.real_stderr * corner.real_stderr);
  ElementValue mirrored{std::conj(corner.value), corner.real_stderr, corner.imag_stderr};
  report.elements = {{0, 0, first}, {last, last, final_}, {0, last, corner}, {last, 0, mirrored}};
  report.diagonal_queries = 2;
  report.offdiagonal_queries = 1;
  return report;
}

FidelityReport ghz_fidelity(const DensityMatrix& rho, std::size_t num_qubits) {
  ExactElementSource source(rho);
  return ghz_fidelity(source, num_qubits);
}

double l1_coherence(ElementSource& source) {
  double total = 0.0;
  const std::size_t dim = source.dim();
  for (std::size_t n = 0; n < dim; ++n) {
    for (std::size_t m = n + 1; m < dim; ++m) total += 2.0 * std::abs(source.offdiagonal(n, m).value);
  }
  return total;
}

double l1_coherence(const DensityMatrix& rho) {
  ExactElementSource source(rho);
  return l1_coherence(source);
}

WitnessValue bell_witness(ElementSource& source) {
  if (source.dim() != 4) {
    throw Error(ErrorCode::DimensionMismatch,
                "Bell witness needs a two-qubit state, got dimension " + std::to_string(source.dim()));
  }
  // Tr[(I/2 - |Phi+><Phi+|) rho] = 1/2 - <Phi+|rho|Phi+>.
  const FidelityReport overlap = ghz_fidelity(source, 2);
  return WitnessValue{0.5 - overlap.fidelity, overlap.fidelity_stderr};
}

double bell_witness(const DensityMatrix& rho) {
  ExactElementSource source(rho);
  return bell_witness(source).value;
}

}  // namespace phaseshift
