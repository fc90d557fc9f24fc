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

#include "phaseshift/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "phaseshift/errors.hpp"

namespace phaseshift::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Json pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex read_pair(const Json& j, std::size_t index) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail("entry " + std::to_string(index) + " is not a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::size_t read_size(const Json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_number_integer() || it->get<long long>() <= 0) {
    fail(std::string("'") + key + "' must be a positive integer");
  }
  return it->get<std::size_t>();
}

double read_double(const Json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_number()) fail(std::string("'") + key + "' must be a number");
  return it->get<double>();
}

ComplexMatrix read_square(const Json& doc, std::size_t dim) {
  const auto it = doc.find("entries");
  if (it == doc.end() || !it->is_array()) fail("'entries' must be an array");
  if (it->size() != dim * dim) {
    fail("'entries' holds " + std::to_string(it->size()) + " values, dimension " +
         std::to_string(dim) + " requires " + std::to_string(dim * dim));
  }
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix m(d, d);
  for (std::size_t k = 0; k < dim * dim; ++k) {
    m(static_cast<Eigen::Index>(k / dim), static_cast<Eigen::Index>(k % dim)) = read_pair((*it)[k], k);
  }
  return m;
}

}  // namespace

Json to_json(const ComplexMatrix& matrix) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) entries.push_back(pair(matrix(i, j)));
  return Json{{"dim", matrix.rows()}, {"entries", std::move(entries)}};
}

Json to_json(const DensityMatrix& rho) { return to_json(rho.matrix()); }

Json to_json(const StateVector& psi) {
  Json amps = Json::array();
  for (std::size_t i = 0; i < psi.dim(); ++i) amps.push_back(pair(psi[i]));
  return Json{{"dim", psi.dim()}, {"amps", std::move(amps)}};
}

Json to_json(const GridState& grid) {
  Json j = to_json(grid.rho());
  return Json{{"G", grid.grid_points()},
              {"x_min", grid.x_min()},
              {"x_max", grid.x_max()},
              {"entries", std::move(j["entries"])}};
}

StateFile parse_state(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("state file must be a JSON object");

  if (doc.contains("G")) {
    const std::size_t g = read_size(doc, "G");
    const double x_min = read_double(doc, "x_min");
    const double x_max = read_double(doc, "x_max");
    return GridState(g, x_min, x_max, validate_density(read_square(doc, g)));
  }
  const std::size_t dim = read_size(doc, "dim");
  if (doc.contains("amps")) {
    const Json& amps = doc["amps"];
    if (!amps.is_array()) fail("'amps' must be an array");
    if (amps.size() != dim) {
      fail("'amps' holds " + std::to_string(amps.size()) + " values, dimension is " + std::to_string(dim));
    }
    ComplexVector a(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) a(static_cast<Eigen::Index>(i)) = read_pair(amps[i], i);
    return StateVector(std::move(a));
  }
  if (doc.contains("entries")) return validate_density(read_square(doc, dim));
  fail("state file needs 'entries' or 'amps'");
}

StateFile load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

DensityMatrix density_of(const StateFile& state) {
  if (const auto* rho = std::get_if<DensityMatrix>(&state)) return *rho;
  if (const auto* psi = std::get_if<StateVector>(&state)) return from_statevector(*psi);
  return std::get<GridState>(state).rho();
}

Json to_json(const ElementEstimate& estimate) {
  Json j{{"n", estimate.n},
         {"m", estimate.m},
         {"re", estimate.real_part},
         {"im", estimate.imag_part},
         {"expectations", estimate.expectations}};
  if (estimate.p_m) j["diagnostics"] = Json{{"p_m_0", (*estimate.p_m)[0]}, {"p_m_pi", (*estimate.p_m)[1]}};
  return j;
}

Json to_json(const NoisyElementEstimate& estimate) {
  Json expectations = Json::array();
  Json successes = Json::array();
  for (const ShotRecord& r : estimate.records) {
    expectations.push_back(r.estimate());
    successes.push_back(r.successes);
  }
  return Json{{"n", estimate.n},
              {"m", estimate.m},
              {"re", estimate.real_part},
              {"im", estimate.imag_part},
              {"re_stderr", estimate.real_stderr},
              {"im_stderr", estimate.imag_stderr},
              {"total_shots", estimate.total_shots},
              {"expectations", std::move(expectations)},
              {"successes", std::move(successes)}};
}

Json to_json(const FidelityReport& report) {
  Json used = Json::array();
  Json values = Json::array();
  for (const ElementReading& e : report.elements) {
    used.push_back(Json::array({e.n, e.m}));
    values.push_back(Json{{"n", e.n},
                          {"m", e.m},
                          {"re", e.value.value.real()},
                          {"im", e.value.value.imag()},
                          {"re_stderr", e.value.real_stderr},
                          {"im_stderr", e.value.imag_stderr}});
  }
  return Json{{"num_qubits", report.num_qubits},
              {"fidelity", report.fidelity},
              {"fidelity_stderr", report.fidelity_stderr},
              {"elements_used", std::move(used)},
              {"elements", std::move(values)},
              {"reconstructions",
               Json{{"diagonal", report.diagonal_queries}, {"offdiagonal", report.offdiagonal_queries}}}};
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
  std::string out = "M,rmse_real,rmse_imag,mean_stderr\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.shots) + "," + format_double(r.rmse_real) + "," +
           format_double(r.rmse_imag) + "," + format_double(r.mean_stderr) + "\n";
  }
  return out;
}

Json sweep_to_json(std::span<const SweepRow> rows) {
  Json out = Json::array();
  for (const SweepRow& r : rows) {
    out.push_back(Json{{"M", r.shots},
                       {"rmse_real", r.rmse_real},
                       {"rmse_imag", r.rmse_imag},
                       {"mean_stderr", r.mean_stderr}});
  }
  return out;
}

}  // namespace phaseshift::io
