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

#ifndef PHASESHIFT_CIRCUIT_HPP
#define PHASESHIFT_CIRCUIT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phaseshift/linalg.hpp"
#include "phaseshift/protocol.hpp"

namespace phaseshift {

// Qubits are numbered 1..N with qubit 1 the most significant bit of the basis
// index. Only the qubit gate set is provided; a qudit register would need a
// cyclic-shift X and a d-dimensional Fourier layer in place of XLayer and
// HadamardAll, which is where such an extension would plug in.

/// Pauli X on each listed qubit (1-based, strictly increasing).
struct XLayer {
  std::vector<std::size_t> qubits;
  bool operator==(const XLayer&) const = default;
};

/// N-qubit diagonal gate: phase e^{i angle} on |1...1>, identity elsewhere.
/// The angle is stored reduced to [0, 2 pi).
struct ControlledPhase {
  double angle = 0.0;
  bool operator==(const ControlledPhase&) const = default;
};

struct HadamardAll {
  bool operator==(const HadamardAll&) const = default;
};

/// Projects onto |0...0>; must be the last gate.
struct PostSelectAllZero {
  bool operator==(const PostSelectAllZero&) const = default;
};

using Gate = std::variant<XLayer, ControlledPhase, HadamardAll, PostSelectAllZero>;

/// Reduces an angle to [0, 2 pi).
double reduce_angle(double angle);

class GateCircuit {
 public:
  explicit GateCircuit(std::size_t num_qubits);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return std::size_t{1} << num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  bool post_selected() const noexcept;

  /// Validates qubit indices and the post-selection placement; reduces
  /// ControlledPhase angles. Empty X layers are dropped.
  void append(Gate gate);
  void append(const GateCircuit& other);

  bool operator==(const GateCircuit&) const = default;

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
};

inline constexpr std::size_t kMaxQubits = 20;

/// X^{i_k + 1} layer, controlled phase, X^{i_k + 1} layer: the gate form of
/// phase_shift_operator(2^N, n, theta).
GateCircuit compile_phase_shift(std::size_t num_qubits, std::size_t n, double theta);

/// Q_n(theta), Q_m(phi), H on every qubit, post-select |0...0>.
GateCircuit compile_measurement(std::size_t num_qubits, const PhaseSetting& setting);

struct SimulationResult {
  std::optional<DensityMatrix> post_state;
  double success_probability = 1.0;
};

/// Applies each gate by conjugation. The post-selected state is dropped when the
/// success probability falls below 1e-14. Throws DimensionMismatch.
SimulationResult simulate_circuit(const DensityMatrix& rho, const GateCircuit& circuit);

/// Product of the unitary gates (post-selection excluded).
ComplexMatrix circuit_unitary(const GateCircuit& circuit);

/// One gate per line after a "QUBITS N" header:
///   X q1 q3 / CPHASE(<radians>) all / H all / POSTSELECT 000
std::string to_text(const GateCircuit& circuit);

/// Inverse of to_text. Throws ParseError with the offending line number.
GateCircuit parse_circuit(std::string_view text);

}  // namespace phaseshift

#endif  // PHASESHIFT_CIRCUIT_HPP
