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

#include "phaseshift/phaseshift.h"

#include <cmath>
#include <cstring>
#include <bit>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "phaseshift/applications.hpp"
#include "phaseshift/circuit.hpp"
#include "phaseshift/cvgrid.hpp"
#include "phaseshift/errors.hpp"
#include "phaseshift/io.hpp"
#include "phaseshift/protocol.hpp"
#include "phaseshift/sampling.hpp"

using namespace phaseshift;

struct ps_state {
  DensityMatrix rho;
  std::optional<GridState> grid;
};

struct ps_circuit {
  GateCircuit circuit;
};

namespace {

thread_local std::string g_last_error;

ps_status fail(ps_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body` and converts exceptions into status codes.
template <class F>
ps_status guarded(F&& body) {
  try {
    body();
    return PS_OK;
  } catch (const Error& e) {
    return fail(static_cast<ps_status>(e.category()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PS_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* ptr, const char* name) {
  if (ptr == nullptr) throw Error(ErrorCode::ParseError, std::string(name) + " must not be NULL");
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ps_state* wrap(DensityMatrix rho) { return new ps_state{std::move(rho), std::nullopt}; }
ps_state* wrap(GridState grid) { return new ps_state{grid.rho(), std::move(grid)}; }

ps_state* wrap(io::StateFile file) {
  if (auto* grid = std::get_if<GridState>(&file)) return wrap(std::move(*grid));
  return wrap(io::density_of(file));
}

template <class Make>
ps_status make_state(ps_state** out, Make&& make) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = wrap(make());
  });
}

std::unique_ptr<ElementSource> source_for(const ps_state* state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) return std::make_unique<ExactElementSource>(state->rho);
  return std::make_unique<SampledElementSource>(state->rho, shots, seed);
}

ps_element to_element(const ElementEstimate& e) {
  ps_element out{};
  out.n = e.n;
  out.m = e.m;
  out.re = e.real_part;
  out.im = e.imag_part;
  for (std::size_t g = 0; g < kPlanSize; ++g) out.expectations[g] = e.expectations[g];
  return out;
}

ps_element to_element(const NoisyElementEstimate& e) {
  ps_element out{};
  out.n = e.n;
  out.m = e.m;
  out.re = e.real_part;
  out.im = e.imag_part;
  out.re_stderr = e.real_stderr;
  out.im_stderr = e.imag_stderr;
  out.total_shots = e.total_shots;
  for (std::size_t g = 0; g < kPlanSize; ++g) out.expectations[g] = e.records[g].estimate();
  return out;
}

io::Json measure_json(const ps_state* state, std::size_t n, std::size_t m, std::uint64_t shots,
                      std::uint64_t seed) {
  if (n == m) {
    auto source = source_for(state, shots, seed);
    const ElementValue v = source->diagonal(n);
    io::Json j{{"n", n}, {"m", m}, {"re", v.value.real()}, {"im", 0.0}};
    if (shots > 0) {
      j["re_stderr"] = v.real_stderr;
      j["im_stderr"] = 0.0;
      j["total_shots"] = shots;
    }
    return j;
  }
  if (shots == 0) return io::to_json(measure_element(state->rho, n, m));
  const auto plan = ReconstructionPlan::canonical(state->rho.dim(), n, m);
  return io::to_json(estimate_element(state->rho, shots, seed, plan));
}

}  // namespace

extern "C" {

const char* ps_version(void) { return "1.0.0"; }

const char* ps_last_error(void) { return g_last_error.c_str(); }

void ps_string_free(char* str) { delete[] str; }

ps_status ps_state_ginibre(size_t dim, size_t rank, uint64_t seed, ps_state** out) {
  return make_state(out, [&] { return random_density(dim, rank, seed); });
}

ps_status ps_state_ghz(size_t num_qubits, ps_state** out) {
  return make_state(out, [&] { return from_statevector(ghz_state(num_qubits)); });
}

ps_status ps_state_plus(size_t dim, ps_state** out) {
  return make_state(out, [&] { return from_statevector(plus_state(dim)); });
}

ps_status ps_state_mixed(size_t dim, ps_state** out) {
  return make_state(out, [&] { return maximally_mixed(dim); });
}

ps_status ps_state_basis(size_t dim, size_t index, ps_state** out) {
  return make_state(out, [&] { return from_statevector(basis_state(dim, index)); });
}

ps_status ps_state_gaussian_grid(size_t grid_points, double x_min, double x_max, double center,
                                 double width, ps_state** out) {
  return make_state(out, [&] { return gaussian_grid_state(grid_points, x_min, x_max, center, width); });
}

ps_status ps_state_from_entries(size_t dim, const double* re_im, double tol, ps_state** out) {
  return make_state(out, [&] {
    require(re_im, "re_im");
    if (dim == 0) throw Error(ErrorCode::BadDimension, "dimension must be positive");
    const auto d = static_cast<Eigen::Index>(dim);
    ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        const double* p = re_im + 2 * (i * d + j);
        m(i, j) = Complex(p[0], p[1]);
      }
    return validate_density(m, tol);
  });
}

ps_status ps_state_from_json(const char* text, ps_state** out) {
  return make_state(out, [&] {
    require(text, "text");
    return io::parse_state(text);
  });
}

ps_status ps_state_load(const char* path, ps_state** out) {
  return make_state(out, [&] {
    require(path, "path");
    return io::load_state(path);
  });
}

void ps_state_free(ps_state* state) { delete state; }

size_t ps_state_dim(const ps_state* state) { return state ? state->rho.dim() : 0; }

int ps_state_is_grid(const ps_state* state) { return state && state->grid ? 1 : 0; }

ps_status ps_state_residuals(const ps_state* state, double* hermiticity, double* trace,
                             double* min_eigenvalue) {
  return guarded([&] {
    require(state, "state");
    if (hermiticity) *hermiticity = state->rho.hermiticity_residual();
    if (trace) *trace = state->rho.trace_residual();
    if (min_eigenvalue) *min_eigenvalue = state->rho.min_eigenvalue();
  });
}

ps_status ps_state_element(const ps_state* state, size_t i, size_t j, double* re, double* im) {
  return guarded([&] {
    require(state, "state");
    if (i >= state->rho.dim() || j >= state->rho.dim()) {
      throw Error(ErrorCode::IndexOutOfRange, "element index out of range");
    }
    if (re) *re = state->rho(i, j).real();
    if (im) *im = state->rho(i, j).imag();
  });
}

ps_status ps_state_to_json(const ps_state* state, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = duplicate((state->grid ? io::to_json(*state->grid) : io::to_json(state->rho)).dump());
  });
}

ps_status ps_k_expectation(const ps_state* state, size_t n, size_t m, double theta, double phi,
                           double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = k_expectation(state->rho, PhaseSetting{n, m, theta, phi});
  });
}

ps_status ps_measure(const ps_state* state, size_t n, size_t m, uint64_t shots, uint64_t seed,
                     ps_element* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    if (n == m) {
      auto source = source_for(state, shots, seed);
      const ElementValue v = source->diagonal(n);
      *out = ps_element{};
      out->n = out->m = n;
      out->re = v.value.real();
      out->re_stderr = v.real_stderr;
      out->total_shots = shots;
    } else if (shots == 0) {
      *out = to_element(measure_element(state->rho, n, m));
    } else {
      *out = to_element(
          estimate_element(state->rho, shots, seed, ReconstructionPlan::canonical(state->rho.dim(), n, m)));
    }
  });
}

ps_status ps_measure_json(const ps_state* state, size_t n, size_t m, uint64_t shots, uint64_t seed,
                          char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = duplicate(measure_json(state, n, m, shots, seed).dump());
  });
}

ps_status ps_reconstruct_full_json(const ps_state* state, char** out, double* frobenius_error) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    const ComplexMatrix rebuilt = reconstruct_full(state->rho);
    const double error = (rebuilt - state->rho.matrix()).norm();
    if (frobenius_error) *frobenius_error = error;
    io::Json j = io::to_json(rebuilt);
    j["frobenius_error"] = error;
    *out = duplicate(j.dump());
  });
}

ps_status ps_circuit_phase_shift(size_t num_qubits, size_t n, double theta, ps_circuit** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ps_circuit{compile_phase_shift(num_qubits, n, theta)};
  });
}

ps_status ps_circuit_measurement(size_t num_qubits, size_t n, size_t m, double theta, double phi,
                                 ps_circuit** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ps_circuit{compile_measurement(num_qubits, PhaseSetting{n, m, theta, phi})};
  });
}

ps_status ps_circuit_parse(const char* text, ps_circuit** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new ps_circuit{parse_circuit(text)};
  });
}

void ps_circuit_free(ps_circuit* circuit) { delete circuit; }

size_t ps_circuit_num_qubits(const ps_circuit* circuit) {
  return circuit ? circuit->circuit.num_qubits() : 0;
}

size_t ps_circuit_num_gates(const ps_circuit* circuit) {
  return circuit ? circuit->circuit.gates().size() : 0;
}

ps_status ps_circuit_to_text(const ps_circuit* circuit, char** out) {
  return guarded([&] {
    require(circuit, "circuit");
    require(out, "out");
    *out = duplicate(to_text(circuit->circuit));
  });
}

ps_status ps_circuit_simulate(const ps_state* state, const ps_circuit* circuit, double* probability) {
  return guarded([&] {
    require(state, "state");
    require(circuit, "circuit");
    require(probability, "probability");
    *probability = simulate_circuit(state->rho, circuit->circuit).success_probability;
  });
}

ps_status ps_sweep(const ps_state* state, size_t n, size_t m, const uint64_t* shot_grid,
                   size_t grid_size, size_t repeats, uint64_t seed, int csv, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    if (grid_size > 0) require(shot_grid, "shot_grid");
    for (size_t i = 0; i < grid_size; ++i) {
      if (shot_grid[i] == 0) throw Error(ErrorCode::ZeroShots, "shot grid contains 0");
    }
    const auto rows = convergence_sweep(state->rho, n, m, std::span(shot_grid, grid_size), repeats, seed);
    *out = duplicate(csv ? io::sweep_to_csv(rows) : io::sweep_to_json(rows).dump());
  });
}

ps_status ps_ghz_fidelity(const ps_state* state, uint64_t shots, uint64_t seed, double* fidelity,
                          double* stderr_out) {
  return guarded([&] {
    require(state, "state");
    require(fidelity, "fidelity");
    auto source = source_for(state, shots, seed);
    const auto report = ghz_fidelity(*source, static_cast<std::size_t>(std::countr_zero(state->rho.dim())));
    *fidelity = report.fidelity;
    if (stderr_out) *stderr_out = report.fidelity_stderr;
  });
}

ps_status ps_ghz_fidelity_json(const ps_state* state, uint64_t shots, uint64_t seed, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    auto source = source_for(state, shots, seed);
    const auto report = ghz_fidelity(*source, static_cast<std::size_t>(std::countr_zero(state->rho.dim())));
    *out = duplicate(io::to_json(report).dump());
  });
}

ps_status ps_bell_witness(const ps_state* state, uint64_t shots, uint64_t seed, double* value,
                          double* stderr_out) {
  return guarded([&] {
    require(state, "state");
    require(value, "value");
    auto source = source_for(state, shots, seed);
    const WitnessValue w = bell_witness(*source);
    *value = w.value;
    if (stderr_out) *stderr_out = w.standard_error;
  });
}

ps_status ps_l1_coherence(const ps_state* state, uint64_t shots, uint64_t seed, double* value) {
  return guarded([&] {
    require(state, "state");
    require(value, "value");
    auto source = source_for(state, shots, seed);
    *value = l1_coherence(*source);
  });
}

ps_status ps_cv_reconstruct_json(const ps_state* state, size_t a, size_t b, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    if (!state->grid) throw Error(ErrorCode::ParseError, "state is not a grid state");
    const GridState& grid = *state->grid;
    const ElementEstimate est = cv_reconstruct(grid, a, b);
    io::Json j = io::to_json(est);
    j["x_a"] = grid.position(a);
    j["x_b"] = grid.position(b);
    j["dx"] = grid.spacing();
    j["rho_re"] = est.real_part / grid.spacing();
    j["rho_im"] = est.imag_part / grid.spacing();
    *out = duplicate(j.dump());
  });
}

}  // extern "C"
