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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pauligeo::cli {

struct SuiteOptions {
  std::string suite;
  std::optional<int> trials;  // per-suite default when unset
  std::uint64_t seed = 42;
  std::optional<unsigned> n_max;
  unsigned workers = 1;
};

struct PropertyOutcome {
  std::string name;
  bool passed = false;
  nlohmann::json detail = nlohmann::json::object();
  /// First failing instance, as an InputDocument.
  std::optional<nlohmann::json> counterexample;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyOutcome> properties;

  bool passed() const;
  /// Deterministic for a fixed seed: no timings, no addresses.
  nlohmann::json to_json() const;
};

/// roundtrip, parseval, f2bound, lemma2, solver-xcheck.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name or bad options.
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace pauligeo::cli
