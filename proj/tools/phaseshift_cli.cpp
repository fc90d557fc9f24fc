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

// Command line front end. Talks to the library exclusively through the C
// interface in phaseshift.h; exit codes are the ps_status values
// (0 ok, 1 parse, 2 validation, 3 range, 4 numerical verification).

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phaseshift/phaseshift.h"

namespace {

constexpr double kCircuitTolerance = 1e-10;
constexpr double kFullTolerance = 1e-9;

/// Failure carrying the exit code.
struct Failure {
  ps_status status;
  std::string message;
};

void check(ps_status status) {
  if (status != PS_OK) throw Failure{status, ps_last_error()};
}

struct StateDeleter {
  void operator()(ps_state* s) const { ps_state_free(s); }
};
struct CircuitDeleter {
  void operator()(ps_circuit* c) const { ps_circuit_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { ps_string_free(s); }
};
using StatePtr = std::unique_ptr<ps_state, StateDeleter>;
using CircuitPtr = std::unique_ptr<ps_circuit, CircuitDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* raw) {
  OwnedString owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

StatePtr load(const std::string& path) {
  ps_state* raw = nullptr;
  check(ps_state_load(path.c_str(), &raw));
  return StatePtr(raw);
}

/// Accepts raw radians or [-][k*]pi[/j], e.g. "pi/2", "-pi/2", "pi", "0.5".
double parse_angle(const std::string& text) {
  std::string s = text;
  double sign = 1.0;
  if (!s.empty() && s[0] == '-') {
    sign = -1.0;
    s.erase(0, 1);
  }
  const auto pi_pos = s.find("pi");
  auto number = [&](const std::string& part) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw Failure{PS_ERR_PARSE, "cannot parse angle '" + text + "'"};
    }
    return v;
  };
  if (pi_pos == std::string::npos) return sign * number(s);
  double factor = 1.0;
  if (pi_pos > 0) {
    std::string head = s.substr(0, pi_pos);
    if (head.back() == '*') head.pop_back();
    factor = number(head);
  }
  std::string tail = s.substr(pi_pos + 2);
  if (!tail.empty()) {
    if (tail[0] != '/') throw Failure{PS_ERR_PARSE, "cannot parse angle '" + text + "'"};
    factor /= number(tail.substr(1));
  }
  return sign * factor * std::numbers::pi;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Failure{PS_ERR_PARSE, "cannot write '" + path + "'"};
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

struct Common {
  std::string state_path;
  std::size_t n = 0;
  std::size_t m = 1;
  std::uint64_t shots = 0;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format = "json";
};

void require_seed(const Common& c) {
  if (c.shots > 0 && !c.seed) throw Failure{PS_ERR_PARSE, "--seed is required whenever --shots is given"};
}

// ---- state ----------------------------------------------------------------

template <class T>
T spec_number(const std::vector<std::string>& spec, std::size_t pos, const char* what) {
  if (pos >= spec.size()) {
    throw Failure{PS_ERR_PARSE, "state spec: missing argument " + std::to_string(pos + 1) + " (" + what + ")"};
  }
  const std::string& s = spec[pos];
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Failure{PS_ERR_PARSE, "state spec: argument " + std::to_string(pos + 1) + " ('" + s +
                                    "') is not a valid " + what};
  }
  return value;
}

void expect_arity(const std::vector<std::string>& spec, std::size_t count) {
  if (spec.size() != count) {
    throw Failure{PS_ERR_PARSE, "state spec '" + spec[0] + "' takes " + std::to_string(count - 1) +
                                    " arguments, got " + std::to_string(spec.size() - 1)};
  }
}

int cmd_state(const std::vector<std::string>& spec, const Common& c) {
  if (spec.empty()) throw Failure{PS_ERR_PARSE, "state spec: missing generator name"};
  ps_state* raw = nullptr;
  const std::string& kind = spec[0];
  if (kind == "ginibre") {
    expect_arity(spec, 4);
    check(ps_state_ginibre(spec_number<std::size_t>(spec, 1, "dimension"), spec_number<std::size_t>(spec, 2, "rank"),
                           spec_number<std::uint64_t>(spec, 3, "seed"), &raw));
  } else if (kind == "ghz") {
    expect_arity(spec, 2);
    check(ps_state_ghz(spec_number<std::size_t>(spec, 1, "qubit count"), &raw));
  } else if (kind == "plus") {
    expect_arity(spec, 2);
    check(ps_state_plus(spec_number<std::size_t>(spec, 1, "dimension"), &raw));
  } else if (kind == "mixed") {
    expect_arity(spec, 2);
    check(ps_state_mixed(spec_number<std::size_t>(spec, 1, "dimension"), &raw));
  } else if (kind == "statevector") {
    expect_arity(spec, 2);
    check(ps_state_load(spec[1].c_str(), &raw));
  } else if (kind == "gaussian-grid") {
    expect_arity(spec, 6);
    check(ps_state_gaussian_grid(spec_number<std::size_t>(spec, 1, "grid size"), spec_number<double>(spec, 2, "x_min"),
                                 spec_number<double>(spec, 3, "x_max"), spec_number<double>(spec, 4, "center"),
                                 spec_number<double>(spec, 5, "width"), &raw));
  } else {
    throw Failure{PS_ERR_PARSE, "state spec: argument 1 ('" + kind +
                                    "') must be one of ginibre, ghz, plus, mixed, statevector, gaussian-grid"};
  }
  StatePtr state(raw);
  char* json = nullptr;
  check(ps_state_to_json(state.get(), &json));
  Output out(c.out_path);
  out.stream() << take(json) << "\n";

  double herm = 0.0, trace = 0.0, min_eig = 0.0;
  check(ps_state_residuals(state.get(), &herm, &trace, &min_eig));
  std::ostream& report = out.to_file() ? std::cout : std::cerr;
  report << "dim " << ps_state_dim(state.get()) << " hermiticity_residual " << herm << " trace_residual "
         << trace << " min_eigenvalue " << min_eig << "\n";
  return PS_OK;
}

// ---- measure / full ---------------------------------------------------------

int cmd_measure(const Common& c) {
  require_seed(c);
  StatePtr state = load(c.state_path);
  char* json = nullptr;
  check(ps_measure_json(state.get(), c.n, c.m, c.shots, c.seed.value_or(0), &json));
  Output out(c.out_path);
  out.stream() << take(json) << "\n";
  return PS_OK;
}

int cmd_full(const Common& c) {
  StatePtr state = load(c.state_path);
  char* json = nullptr;
  double error = 0.0;
  check(ps_reconstruct_full_json(state.get(), &json, &error));
  Output out(c.out_path);
  out.stream() << take(json) << "\n";
  std::cerr << "frobenius_error " << error << "\n";
  return error <= kFullTolerance ? PS_OK : PS_ERR_VERIFICATION;
}

// ---- circuit -----------------------------------------------------------------

struct CircuitArgs {
  std::size_t qubits = 2;
  std::string theta = "0";
  std::string phi = "0";
  std::string plan;
  std::size_t max_compile = 10;
  std::size_t max_verify = 6;
};

int cmd_circuit(const Common& c, const CircuitArgs& a) {
  if (a.qubits > a.max_compile) {
    throw Failure{PS_ERR_RANGE, "compilation limited to " + std::to_string(a.max_compile) + " qubits"};
  }
  if (!c.state_path.empty() && a.qubits > a.max_verify) {
    throw Failure{PS_ERR_RANGE, "verification limited to " + std::to_string(a.max_verify) + " qubits"};
  }
  struct Angles {
    double theta;
    double phi;
  };
  std::vector<Angles> settings;
  if (a.plan.empty()) {
    settings.push_back({parse_angle(a.theta), parse_angle(a.phi)});
  } else if (a.plan == "canonical") {
    const double h = std::numbers::pi / 2;
    const double p = std::numbers::pi;
    settings = {{0, 0}, {0, p}, {h, 0}, {h, p}, {-h, 0}, {-h, p}};
  } else {
    throw Failure{PS_ERR_PARSE, "unknown plan '" + a.plan + "' (only 'canonical' is defined)"};
  }

  StatePtr state;
  if (!c.state_path.empty()) state = load(c.state_path);

  Output out(c.out_path);
  std::ostream& os = out.stream();
  os.precision(17);
  int status = PS_OK;
  for (const Angles& s : settings) {
    ps_circuit* raw = nullptr;
    check(ps_circuit_measurement(a.qubits, c.n, c.m, s.theta, s.phi, &raw));
    CircuitPtr circuit(raw);
    char* text = nullptr;
    check(ps_circuit_to_text(circuit.get(), &text));
    os << take(text);
    if (state) {
      double probability = 0.0;
      double expectation = 0.0;
      check(ps_circuit_simulate(state.get(), circuit.get(), &probability));
      check(ps_k_expectation(state.get(), c.n, c.m, s.theta, s.phi, &expectation));
      const double difference = std::abs(probability - expectation);
      os << "# probability " << probability << "\n# expectation " << expectation << "\n# difference "
         << difference << "\n";
      if (!(difference <= kCircuitTolerance)) status = PS_ERR_VERIFICATION;
    }
  }
  return status;
}

// ---- sweep -------------------------------------------------------------------

int cmd_sweep(const Common& c, const std::vector<std::uint64_t>& grid, std::size_t repeats) {
  if (!c.seed) throw Failure{PS_ERR_PARSE, "--seed is required for sweeps"};
  StatePtr state = load(c.state_path);
  const bool csv = c.format == "csv";
  char* text = nullptr;
  check(ps_sweep(state.get(), c.n, c.m, grid.data(), grid.size(), repeats, *c.seed, csv ? 1 : 0, &text));
  Output out(c.out_path);
  out.stream() << take(text);
  if (!csv) out.stream() << "\n";
  return PS_OK;
}

// ---- fidelity ------------------------------------------------------------------

int cmd_fidelity(const std::string& kind, const Common& c) {
  require_seed(c);
  StatePtr state = load(c.state_path);
  const std::uint64_t seed = c.seed.value_or(0);
  Output out(c.out_path);
  std::ostream& os = out.stream();
  if (kind == "ghz") {
    char* json = nullptr;
    check(ps_ghz_fidelity_json(state.get(), c.shots, seed, &json));
    os << take(json) << "\n";
    return PS_OK;
  }
  os.precision(17);
  if (kind == "bell") {
    double value = 0.0, se = 0.0;
    check(ps_bell_witness(state.get(), c.shots, seed, &value, &se));
    os << "{\"witness\":" << value << ",\"stderr\":" << se << ",\"entangled\":" << (value < 0 ? "true" : "false")
       << "}\n";
    return PS_OK;
  }
  if (kind == "l1") {
    double value = 0.0;
    check(ps_l1_coherence(state.get(), c.shots, seed, &value));
    os << "{\"l1_coherence\":" << value << "}\n";
    return PS_OK;
  }
  throw Failure{PS_ERR_PARSE, "fidelity kind must be ghz, bell or l1"};
}

// ---- cv --------------------------------------------------------------------------

int cmd_cv(const Common& c) {
  StatePtr state = load(c.state_path);
  if (!ps_state_is_grid(state.get())) throw Failure{PS_ERR_PARSE, "'cv' needs a grid state file"};
  char* json = nullptr;
  check(ps_cv_reconstruct_json(state.get(), c.n, c.m, &json));
  Output out(c.out_path);
  out.stream() << take(json) << "\n";
  return PS_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Direct measurement of density-matrix elements by phase shifting"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ps_version()));

  Common common;
  CircuitArgs circuit_args;
  std::vector<std::string> spec;
  std::vector<std::uint64_t> shot_grid{10000, 1000000};
  std::size_t repeats = 32;
  std::string fidelity_kind;

  auto add_state = [&](CLI::App* sub) { sub->add_option("--state", common.state_path, "State file (JSON)")->required(); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", common.out_path, "Write output to PATH"); };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--n", common.n, "Row index n");
    sub->add_option("--m", common.m, "Column index m");
  };
  auto add_shots = [&](CLI::App* sub) {
    sub->add_option("--shots", common.shots, "Shots per setting (0 = exact)");
    sub->add_option("--seed", common.seed, "Seed for all randomness");
  };
  auto add_format = [&](CLI::App* sub, const std::string& def) {
    common.format = def;
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* state_cmd = app.add_subcommand("state", "Generate a state file");
  state_cmd->add_option("spec", spec,
                        "ginibre D RANK SEED | ghz N | plus D | mixed D | statevector FILE | "
                        "gaussian-grid G XMIN XMAX CENTER WIDTH")
      ->required();
  add_out(state_cmd);

  auto* measure_cmd = app.add_subcommand("measure", "Reconstruct one element from six expectation values");
  add_state(measure_cmd);
  add_pair(measure_cmd);
  add_shots(measure_cmd);
  add_out(measure_cmd);

  auto* full_cmd = app.add_subcommand("full", "Reconstruct the whole density matrix");
  add_state(full_cmd);
  add_out(full_cmd);

  auto* circuit_cmd = app.add_subcommand("circuit", "Compile (and optionally verify) measurement circuits");
  circuit_cmd->add_option("--qubits,-N", circuit_args.qubits, "Number of qubits");
  add_pair(circuit_cmd);
  circuit_cmd->add_option("--theta", circuit_args.theta, "Phase on |n> (0, pi/2, -pi/2, pi or radians)");
  circuit_cmd->add_option("--phi", circuit_args.phi, "Phase on |m>");
  circuit_cmd->add_option("--plan", circuit_args.plan, "'canonical' emits all six settings");
  circuit_cmd->add_option("--state", common.state_path, "Verify against this state");
  circuit_cmd->add_option("--max-qubits", circuit_args.max_compile, "Compilation limit");
  circuit_cmd->add_option("--max-verify-qubits", circuit_args.max_verify, "Verification limit");
  add_out(circuit_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Shot-noise convergence table");
  add_state(sweep_cmd);
  add_pair(sweep_cmd);
  sweep_cmd->add_option("--shots-grid", shot_grid, "Shot counts per setting")->delimiter(',');
  sweep_cmd->add_option("--repeats", repeats, "Repeats per shot count (>= 8)");
  sweep_cmd->add_option("--seed", common.seed, "Seed for all randomness");
  add_out(sweep_cmd);

  auto* fidelity_cmd = app.add_subcommand("fidelity", "GHZ fidelity, Bell witness or l1 coherence");
  fidelity_cmd->add_option("kind", fidelity_kind, "ghz | bell | l1")->required();
  add_state(fidelity_cmd);
  add_shots(fidelity_cmd);
  add_out(fidelity_cmd);

  auto* cv_cmd = app.add_subcommand("cv", "Reconstruct rho(x_a, x_b) of a grid state");
  add_state(cv_cmd);
  cv_cmd->add_option("--a,--n", common.n, "Grid index of x'");
  cv_cmd->add_option("--b,--m", common.m, "Grid index of x''");
  add_out(cv_cmd);

  add_format(sweep_cmd, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return PS_ERR_PARSE;
  }

  try {
    if (state_cmd->parsed()) return cmd_state(spec, common);
    if (measure_cmd->parsed()) return cmd_measure(common);
    if (full_cmd->parsed()) return cmd_full(common);
    if (circuit_cmd->parsed()) return cmd_circuit(common, circuit_args);
    if (sweep_cmd->parsed()) return cmd_sweep(common, shot_grid, repeats);
    if (fidelity_cmd->parsed()) return cmd_fidelity(fidelity_kind, common);
    if (cv_cmd->parsed()) return cmd_cv(common);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.status;
  }
  return PS_ERR_PARSE;
}
