// Copyright 2026 The Bunching Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BUNCHING_IO_HPP
#define BUNCHING_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bunching/analysis.hpp"
#include "bunching/circuit.hpp"
#include "bunching/ensemble.hpp"
#include "bunching/matrix.hpp"
#include "bunching/photonic.hpp"

namespace bunching::io {

using Json = nlohmann::json;

/// Shortest decimal that parses back to the same double.
std::string format_shortest(double value);

/// Fixed 17 significant digits (%.17g).
std::string format_17(double value);

// Unitary file: {"m": int, "re": [[...]], "im": [[...]]}, row-major.
Json unitary_to_json(const UnitaryMatrix& u);
/// Enforces unitarity at `tol` and reports the residual on failure.
UnitaryMatrix unitary_from_json(const Json& doc, double tol = kLoadedUnitaryTol);
void save_unitary(const UnitaryMatrix& u, const std::filesystem::path& path);
UnitaryMatrix load_unitary(const std::filesystem::path& path);

// Circuit file: {"m": int, "elements": [{"type": "coupler", "a": 1, "b": 2, "t": 0.5} |
//                                       {"type": "phase", "mode": 3, "phi": 1.57}, ...]}
// with 1-based mode numbers.
Json circuit_to_json(const CircuitSpec& spec);
CircuitSpec circuit_from_json(const Json& doc);
CircuitSpec load_circuit(const std::filesystem::path& path);

// Distribution CSV: header "h1,...,hm,probability", rows in colex order,
// probabilities with 17 significant digits.
void write_distribution_csv(std::ostream& out, const Distribution& dist);
Distribution read_distribution_csv(std::istream& in);

// Report JSON: {"p_bunch", "collision_free", "full_bunch": [...], "r_fb": [... | null], "model"}
// plus "weight" when a mixture weight is set.
Json report_to_json(const BunchingReport& report);

// Ensemble CSV: header "index,p_b", one row per sample.
void write_ensemble_csv(std::ostream& out, const EnsembleReport& report);
Json ensemble_summary_json(const EnsembleReport& report);

/// Parses a comma-separated list of 1-based mode numbers such as "1,2,3"
/// into 0-based indices. Throws ValidationError on malformed entries or
/// modes outside 1..modes.
std::vector<std::size_t> parse_mode_list(std::string_view text, std::size_t modes);

/// Splits "a,a,b" into labels; empty labels are rejected.
std::vector<std::string> parse_label_list(std::string_view text);

void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace bunching::io

#endif
