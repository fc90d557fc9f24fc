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

#ifndef PHASESHIFT_IO_HPP
#define PHASESHIFT_IO_HPP

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "phaseshift/applications.hpp"
#include "phaseshift/cvgrid.hpp"
#include "phaseshift/linalg.hpp"
#include "phaseshift/protocol.hpp"
#include "phaseshift/sampling.hpp"

namespace phaseshift::io {

using Json = nlohmann::json;

// State files:
//   density      { "dim": d, "entries": [[re, im], ...] }          (row major, d^2 pairs)
//   state vector { "dim": d, "amps": [[re, im], ...] }             (d pairs)
//   grid         { "G": G, "x_min": .., "x_max": .., "entries": [...] }

Json to_json(const DensityMatrix& rho);
Json to_json(const StateVector& psi);
Json to_json(const GridState& grid);
Json to_json(const ComplexMatrix& matrix);

using StateFile = std::variant<DensityMatrix, StateVector, GridState>;

/// Throws ParseError on malformed JSON, unknown layout or an entry count that
/// does not match the declared dimension; validation errors propagate.
StateFile parse_state(std::string_view text);
StateFile load_state(const std::string& path);

/// Density matrix of any state file (pure states are expanded, grids unwrapped).
DensityMatrix density_of(const StateFile& state);

Json to_json(const ElementEstimate& estimate);
Json to_json(const NoisyElementEstimate& estimate);
Json to_json(const FidelityReport& report);

/// Columns: M,rmse_real,rmse_imag,mean_stderr
std::string sweep_to_csv(std::span<const SweepRow> rows);
Json sweep_to_json(std::span<const SweepRow> rows);

/// Shortest round-trip decimal representation.
std::string format_double(double value);

}  // namespace phaseshift::io

#endif  // PHASESHIFT_IO_HPP
