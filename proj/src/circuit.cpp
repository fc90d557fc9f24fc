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

#include "phaseshift/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "phaseshift/errors.hpp"

namespace phaseshift {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t bit_of_qubit(std::size_t num_qubits, std::size_t qubit) { return num_qubits - qubit; }

std::size_t x_mask(std::size_t num_qubits, const XLayer& layer) {
  std::size_t mask = 0;
  for (std::size_t q : layer.qubits) mask |= std::size_t{1} << bit_of_qubit(num_qubits, q);
  return mask;
}

void check_qubits(std::size_t num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw Error(ErrorCode::IndexOutOfRange, "number of qubits must be in [1, " +
                                                std::to_string(kMaxQubits) + "], got " +
                                                std::to_string(num_qubits));
  }
}

// Applies H to every qubit of the rows (left multiplication) of a matrix.
void hadamard_rows(ComplexMatrix& a) {
  const double s = 1.0 / std::sqrt(2.0);
  const Eigen::Index dim = a.rows();
  for (Eigen::Index bit = 1; bit < dim; bit <<= 1) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const Eigen::Index j = i | bit;
      const Eigen::RowVectorXcd top = a.row(i);
      a.row(i) = s * (top + a.row(j));
      a.row(j) = s * (top - a.row(j));
    }
  }
}

std::string format_angle(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream is{std::string(s)};
  for (std::string w; is >> w;) words.push_back(w);
  return words;
}

std::size_t parse_size(std::string_view s, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) parse_fail(line, "bad integer '" + std::string(s) + "'");
  return value;
}

}  // namespace

double reduce_angle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

GateCircuit::GateCircuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
  check_qubits(num_qubits);
}

bool GateCircuit::post_selected() const noexcept {
  return !gates_.empty() && std::holds_alternative<PostSelectAllZero>(gates_.back());
}

void GateCircuit::append(Gate gate) {
  if (post_selected()) {
    throw Error(ErrorCode::ParseError, "no gate may follow the post-selection");
  }
  if (auto* layer = std::get_if<XLayer>(&gate)) {
    if (layer->qubits.empty()) return;
    std::sort(layer->qubits.begin(), layer->qubits.end());
    if (std::adjacent_find(layer->qubits.begin(), layer->qubits.end()) != layer->qubits.end()) {
      throw Error(ErrorCode::IndexOutOfRange, "X layer lists a qubit twice");
    }
    if (layer->qubits.front() < 1 || layer->qubits.back() > num_qubits_) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "X layer qubit outside 1.." + std::to_string(num_qubits_));
    }
  } else if (auto* cp = std::get_if<ControlledPhase>(&gate)) {
    cp->angle = reduce_angle(cp->angle);
  }
  gates_.push_back(std::move(gate));
}

void GateCircuit::append(const GateCircuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw Error(ErrorCode::DimensionMismatch, "cannot concatenate circuits of different width");
  }
  for (const Gate& g : other.gates_) append(g);
}

GateCircuit compile_phase_shift(std::size_t num_qubits, std::size_t n, double theta) {
  GateCircuit circuit(num_qubits);
  if (n >= circuit.dim()) {
    throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(n) + " >= 2^" +
                                                std::to_string(num_qubits));
  }
  // X^{i_k + 1} is X exactly when bit i_k is 0.
  XLayer flips;
  for (std::size_t q = 1; q <= num_qubits; ++q) {
    if (((n >> bit_of_qubit(num_qubits, q)) & 1U) == 0) flips.qubits.push_back(q);
  }
  circuit.append(flips);
  circuit.append(ControlledPhase{theta});
  circuit.append(flips);
  return circuit;
}

GateCircuit compile_measurement(std::size_t num_qubits, const PhaseSetting& setting) {
  GateCircuit circuit = compile_phase_shift(num_qubits, setting.n, setting.theta);
  circuit.append(compile_phase_shift(num_qubits, setting.m, setting.phi));
  circuit.append(HadamardAll{});
  circuit.append(PostSelectAllZero{});
  return circuit;
}

SimulationResult simulate_circuit(const DensityMatrix& rho, const GateCircuit& circuit) {
  if (rho.dim() != circuit.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state dimension " + std::to_string(rho.dim()) +
                                                  " != 2^" + std::to_string(circuit.num_qubits()));
  }
  const std::size_t n_qubits = circuit.num_qubits();
  const auto dim = static_cast<Eigen::Index>(rho.dim());
  ComplexMatrix state = rho.matrix();
  SimulationResult result;
  bool projected = false;

  for (const Gate& gate : circuit.gates()) {
    std::visit(Overloaded{
                   [&](const XLayer& layer) {
                     const auto mask = static_cast<Eigen::Index>(x_mask(n_qubits, layer));
                     ComplexMatrix next(dim, dim);
                     for (Eigen::Index i = 0; i < dim; ++i)
                       for (Eigen::Index j = 0; j < dim; ++j) next(i, j) = state(i ^ mask, j ^ mask);
                     state = std::move(next);
                   },
                   [&](const ControlledPhase& cp) {
                     const Complex ph = std::polar(1.0, cp.angle);
                     state.row(dim - 1) *= ph;
                     state.col(dim - 1) *= std::conj(ph);
                   },
                   [&](const HadamardAll&) {
                     hadamard_rows(state);
                     state.adjointInPlace();
                     hadamard_rows(state);
                     state.adjointInPlace();
                   },
                   [&](const PostSelectAllZero&) {
                     projected = true;
                     result.success_probability = state(0, 0).real();
                   },
               },
               gate);
  }

  if (!projected) {
    result.post_state = validate_density(state);
  } else if (result.success_probability >= 1e-14) {
    ComplexMatrix zero = ComplexMatrix::Zero(dim, dim);
    zero(0, 0) = 1.0;
    result.post_state = validate_density(zero);
  }
  return result;
}

ComplexMatrix circuit_unitary(const GateCircuit& circuit) {
  const auto dim = static_cast<Eigen::Index>(circuit.dim());
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const Gate& gate : circuit.gates()) {
    std::visit(Overloaded{
                   [&](const XLayer& layer) {
                     const auto mask = static_cast<Eigen::Index>(x_mask(circuit.num_qubits(), layer));
                     ComplexMatrix next(dim, dim);
                     for (Eigen::Index i = 0; i < dim; ++i) next.row(i) = u.row(i ^ mask);
                     u = std::move(next);
                   },
                   [&](const ControlledPhase& cp) { u.row(dim - 1) *= std::polar(1.0, cp.angle); },
                   [&](const HadamardAll&) { hadamard_rows(u); },
                   [&](const PostSelectAllZero&) {},
               },
               gate);
  }
  return u;
}

std::string to_text(const GateCircuit& circuit) {
  std::string out = "QUBITS " + std::to_string(circuit.num_qubits()) + "\n";
  for (const Gate& gate : circuit.gates()) {
    std::visit(Overloaded{
                   [&](const XLayer& layer) {
                     out += "X";
                     for (std::size_t q : layer.qubits) out += " q" + std::to_string(q);
                     out += "\n";
                   },
                   [&](const ControlledPhase& cp) { out += "CPHASE(" + format_angle(cp.angle) + ") all\n"; },
                   [&](const HadamardAll&) { out += "H all\n"; },
                   [&](const PostSelectAllZero&) {
                     out += "POSTSELECT " + std::string(circuit.num_qubits(), '0') + "\n";
                   },
               },
               gate);
  }
  return out;
}

GateCircuit parse_circuit(std::string_view text) {
  std::optional<GateCircuit> circuit;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto words = split_words(line);

    if (!circuit) {
      if (words.size() != 2 || words[0] != "QUBITS") parse_fail(line_no, "expected 'QUBITS N' header");
      try {
        circuit.emplace(parse_size(words[1], line_no));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        parse_fail(line_no, e.what());
      }
      continue;
    }

    try {
      if (words[0] == "X") {
        XLayer layer;
        for (std::size_t k = 1; k < words.size(); ++k) {
          if (words[k].size() < 2 || words[k][0] != 'q') parse_fail(line_no, "bad qubit '" + words[k] + "'");
          layer.qubits.push_back(parse_size(std::string_view(words[k]).substr(1), line_no));
        }
        if (layer.qubits.empty()) parse_fail(line_no, "X layer without qubits");
        circuit->append(std::move(layer));
      } else if (words[0].rfind("CPHASE(", 0) == 0) {
        const std::string& w = words[0];
        if (w.back() != ')' || words.size() != 2 || words[1] != "all") {
          parse_fail(line_no, "expected 'CPHASE(<radians>) all'");
        }
        const std::string_view num = std::string_view(w).substr(7, w.size() - 8);
        double angle = 0.0;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), angle);
        if (ec != std::errc() || ptr != num.data() + num.size()) parse_fail(line_no, "bad angle '" + std::string(num) + "'");
        circuit->append(ControlledPhase{angle});
      } else if (words[0] == "H") {
        if (words.size() != 2 || words[1] != "all") parse_fail(line_no, "expected 'H all'");
        circuit->append(HadamardAll{});
      } else if (words[0] == "POSTSELECT") {
        if (words.size() != 2 || words[1] != std::string(circuit->num_qubits(), '0')) {
          parse_fail(line_no, "expected 'POSTSELECT' followed by " +
                                  std::to_string(circuit->num_qubits()) + " zeros");
        }
        circuit->append(PostSelectAllZero{});
      } else {
        parse_fail(line_no, "unknown gate '" + words[0] + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      parse_fail(line_no, e.what());
    }
  }
  if (!circuit) throw Error(ErrorCode::ParseError, "empty circuit text");
  return *std::move(circuit);
}

}  // namespace phaseshift
