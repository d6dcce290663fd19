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

#include "pauligeo/cli/documents.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "pauligeo/error.hpp"

namespace pauligeo::cli {

using nlohmann::json;

namespace {

std::vector<double> read_reals(const json& array, const char* field) {
  if (!array.is_array()) {
    throw ParseError(std::string("field '") + field + "' must be an array");
  }
  std::vector<double> out;
  out.reserve(array.size());
  for (const auto& v : array) {
    if (!v.is_number()) {
      throw ParseError(std::string("field '") + field +
                       "' must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

PhaseVector InputDocument::to_phases() const {
  const std::size_t size = dimension(n);
  if (phases) {
    if (phases->size() != size) {
      throw Error(ErrorKind::DimensionMismatch,
                  "phases has " + std::to_string(phases->size()) +
                      " entries, expected 2^n = " + std::to_string(size));
    }
    return PhaseVector(n, *phases);
  }
  if (diag->size() != size) {
    throw Error(ErrorKind::DimensionMismatch,
                "diag has " + std::to_string(diag->size()) +
                    " entries, expected 2^n = " + std::to_string(size));
  }
  return eigenphases_from_unitary(*diag);
}

json InputDocument::to_json() const {
  json doc;
  doc["n"] = n;
  if (phases) doc["phases"] = *phases;
  if (diag) {
    json entries = json::array();
    for (const auto& z : *diag) entries.push_back({z.real(), z.imag()});
    doc["diag"] = std::move(entries);
  }
  return doc;
}

InputDocument InputDocument::from_phases(const PhaseVector& h) {
  InputDocument doc;
  doc.n = h.qubits();
  doc.phases = std::vector<double>(h.values().begin(), h.values().end());
  return doc;
}

InputDocument parse_input_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() ||
      doc["n"].get<long long>() < 0) {
    throw ParseError("field 'n' must be a non-negative integer");
  }
  const bool has_phases = doc.contains("phases");
  const bool has_diag = doc.contains("diag");
  if (has_phases == has_diag) {
    throw ParseError("exactly one of 'phases' or 'diag' is required");
  }

  InputDocument out;
  const auto n = doc["n"].get<long long>();
  if (n > static_cast<long long>(kMaxQubits)) {
    throw Error(ErrorKind::BadDimension,
                "n = " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxQubits));
  }
  out.n = static_cast<unsigned>(n);
  if (has_phases) {
    out.phases = read_reals(doc["phases"], "phases");
  } else {
    const json& entries = doc["diag"];
    if (!entries.is_array()) throw ParseError("field 'diag' must be an array");
    std::vector<std::complex<double>> values;
    values.reserve(entries.size());
    for (const auto& pair : entries) {
      const std::vector<double> parts =
          pair.is_array() ? read_reals(pair, "diag") : std::vector<double>{};
      if (parts.size() != 2) {
        throw ParseError("every 'diag' entry must be a [re, im] pair");
      }
      values.emplace_back(parts[0], parts[1]);
    }
    out.diag = std::move(values);
  }
  return out;
}

InputDocument read_input_document(const std::filesystem::path& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path.string());
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_input_document(text);
}

std::string format_real(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string coefficient_csv(const CoeffVector& coeffs) {
  std::ostringstream out;
  out << "mask,weight,coefficient\n";
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const PauliMask mask{static_cast<std::uint32_t>(m)};
    out << m << ',' << pauli_weight(mask) << ',' << format_real(coeffs[m])
        << '\n';
  }
  return out.str();
}

json metric_to_json(const MetricSpec& spec) {
  json doc;
  doc["kind"] = spec.name();
  if (spec.kind == MetricKind::Fq) doc["q"] = spec.q;
  return doc;
}

MetricSpec metric_from_json(const json& doc) {
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "fq") return MetricSpec::fq(doc.at("q").get<double>());
  if (kind == "f2") return MetricSpec::f2();
  if (kind == "f1") return MetricSpec::f1(F1Variant::LiteralSqrt);
  if (kind == "f1-l1") return MetricSpec::f1(F1Variant::PlainL1);
  throw ParseError("unknown metric kind '" + kind + "'");
}

json make_result_document(const PhaseVector& phases, const MetricSpec& spec,
                          const GeodesicResult& result, double wall_ms) {
  json doc;
  doc["input"] = InputDocument::from_phases(phases).to_json();
  doc["metric"] = metric_to_json(spec);
  doc["solver"] = std::string(to_string(result.solver));
  doc["j"] = result.offset.values();
  doc["length"] = result.length;
  doc["coeffs"] = std::vector<double>(result.coeffs.values().begin(),
                                      result.coeffs.values().end());

  // The identity coefficient is a global phase; report it separately.
  std::vector<double> without_identity(result.coeffs.values().begin(),
                                       result.coeffs.values().end());
  without_identity[0] = 0.0;
  doc["identity_coefficient"] = result.coeffs[0];
  doc["length_without_identity"] = metric_value(
      CoeffVector(result.coeffs.qubits(), std::move(without_identity)), spec);

  // F1 has no exact minimiser here; its value at this offset bounds the F1
  // minimum from above.
  doc["f1_upper_bounds"] = {
      {"literal_sqrt",
       metric_value(result.coeffs, MetricSpec::f1(F1Variant::LiteralSqrt))},
      {"plain_l1",
       metric_value(result.coeffs, MetricSpec::f1(F1Variant::PlainL1))}};
  doc["optimal"] = result.optimal;
  doc["wall_time_ms"] = wall_ms;
  return doc;
}

double result_document_discrepancy(const json& doc) {
  const InputDocument input = parse_input_document(doc.at("input").dump());
  const PhaseVector h = input.to_phases();
  const MetricSpec spec = metric_from_json(doc.at("metric"));
  const LatticeOffset j(doc.at("j").get<std::vector<std::int64_t>>());
  return std::abs(geodesic_length(h, j, spec) -
                  doc.at("length").get<double>());
}

}  // namespace pauligeo::cli
