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

#ifndef PHASESHIFT_APPLICATIONS_HPP
#define PHASESHIFT_APPLICATIONS_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "phaseshift/linalg.hpp"

namespace phaseshift {

/// One queried element with its statistical uncertainty (zero for exact sources).
struct ElementValue {
  Complex value;
  double real_stderr = 0.0;
  double imag_stderr = 0.0;
};

/// "Give me element (n, m)" interface. Applications only see this, so they run
/// unchanged on exact, sampled or circuit-simulated backends.
class ElementSource {
 public:
  virtual ~ElementSource() = default;
  virtual std::size_t dim() const = 0;
  /// Computational-basis measurement of rho_nn.
  virtual ElementValue diagonal(std::size_t n) = 0;
  /// Six-setting reconstruction of rho_nm, n != m.
  virtual ElementValue offdiagonal(std::size_t n, std::size_t m) = 0;
};

/// Exact expectations via k_expectation.
class ExactElementSource final : public ElementSource {
 public:
  explicit ExactElementSource(DensityMatrix rho) : rho_(std::move(rho)) {}
  std::size_t dim() const override { return rho_.dim(); }
  ElementValue diagonal(std::size_t n) override;
  ElementValue offdiagonal(std::size_t n, std::size_t m) override;

 private:
  DensityMatrix rho_;
};

/// Finite-shot estimates. Every query draws from its own substream of `seed`,
/// so results do not depend on query order.
class SampledElementSource final : public ElementSource {
 public:
  SampledElementSource(DensityMatrix rho, std::uint64_t shots, std::uint64_t seed);
  std::size_t dim() const override { return rho_.dim(); }
  ElementValue diagonal(std::size_t n) override;
  ElementValue offdiagonal(std::size_t n, std::size_t m) override;

 private:
  DensityMatrix rho_;
  std::uint64_t shots_;
  std::uint64_t seed_;
};

/// Expectations from simulating the compiled gate circuits. Requires d = 2^N.
class CircuitElementSource final : public ElementSource {
 public:
  explicit CircuitElementSource(DensityMatrix rho);
  std::size_t dim() const override { return rho_.dim(); }
  ElementValue diagonal(std::size_t n) override;
  ElementValue offdiagonal(std::size_t n, std::size_t m) override;

 private:
  DensityMatrix rho_;
  std::size_t num_qubits_;
};

struct ElementReading {
  std::size_t n = 0;
  std::size_t m = 0;
  ElementValue value;
};

struct FidelityReport {
  std::size_t num_qubits = 0;
  double fidelity = 0.0;
  double fidelity_stderr = 0.0;
  /// The four corner elements (0,0), (D,D), (0,D), (D,0); the last is the
  /// conjugate of the third and is not measured separately.
  std::vector<ElementReading> elements;
  std::size_t diagonal_queries = 0;
  std::size_t offdiagonal_queries = 0;
};

/// F = (rho_00 + rho_DD)/2 + Re rho_0D with D = 2^N - 1.
/// Throws DimensionMismatch unless source.dim() == 2^N, TooFewQubits for N < 2.
FidelityReport ghz_fidelity(ElementSource& source, std::size_t num_qubits);
FidelityReport ghz_fidelity(const DensityMatrix& rho, std::size_t num_qubits);

/// sum_{n != m} |rho_nm| from d(d-1)/2 reconstructions.
double l1_coherence(ElementSource& source);
double l1_coherence(const DensityMatrix& rho);

struct WitnessValue {
  double value = 0.0;
  double standard_error = 0.0;
};

/// Tr[W rho] for W = I/2 - |Phi+><Phi+|; negative certifies entanglement.
/// Throws DimensionMismatch unless d = 4.
WitnessValue bell_witness(ElementSource& source);
double bell_witness(const DensityMatrix& rho);

}  // namespace phaseshift

#endif  // PHASESHIFT_APPLICATIONS_HPP
