// Copyright 2026 The pauligeo Authors
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

#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pauligeo/lattice_geodesic.hpp"
#include "pauligeo/metrics.hpp"
#include "pauligeo/pauli_transform.hpp"

namespace pauligeo::cli {

/// Malformed document (not JSON, wrong types, missing or conflicting
/// fields). Semantic problems such as a wrong length are pauligeo::Error.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": 3, "phases": [...]} or {"n": 3, "diag": [[re, im], ...]}.
struct InputDocument {
  unsigned n = 0;
  std::optional<std::vector<double>> phases;
  std::optional<std::vector<std::complex<double>>> diag;

  /// Phases are used verbatim; diag entries become canonical eigenphases.
  /// Throws DimensionMismatch, BadDimension or NonUnitModulus.
  PhaseVector to_phases() const;

  nlohmann::json to_json() const;

  static InputDocument from_phases(const PhaseVector& h);
};

InputDocument parse_input_document(std::string_view text);

/// Reads a file, or standard input for "-".
InputDocument read_input_document(const std::filesystem::path& path);

/// Reals as text with 17 significant digits; negative zero prints as 0.
std::string format_real(double value);

/// `mask,weight,coefficient` with a header row, masks ascending.
std::string coefficient_csv(const CoeffVector& coeffs);

nlohmann::json metric_to_json(const MetricSpec& spec);
MetricSpec metric_from_json(const nlohmann::json& doc);

/// ResultDocument for a solver run on `phases` (echoed as the input).
nlohmann::json make_result_document(const PhaseVector& phases,
                                    const MetricSpec& spec,
                                    const GeodesicResult& result,
                                    double wall_ms);

/// |length recomputed from (input, j, metric) - recorded length|.
double result_document_discrepancy(const nlohmann::json& doc);

}  // namespace pauligeo::cli
