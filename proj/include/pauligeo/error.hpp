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

#include <stdexcept>
#include <string>
#include <string_view>

namespace pauligeo {

enum class ErrorKind {
  NonUnitModulus,
  InvalidSpec,
  DimensionMismatch,
  TooLarge,
  DomainError,
  WeightTooLow,
  BadDimension,
  EpsilonTooLarge,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every library failure; `kind()` carries the
/// classification the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnitModulus:
      return "NonUnitModulus";
    case ErrorKind::InvalidSpec:
      return "InvalidSpec";
    case ErrorKind::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorKind::TooLarge:
      return "TooLarge";
    case ErrorKind::DomainError:
      return "DomainError";
    case ErrorKind::WeightTooLow:
      return "WeightTooLow";
    case ErrorKind::BadDimension:
      return "BadDimension";
    case ErrorKind::EpsilonTooLarge:
      return "EpsilonTooLarge";
  }
  return "Unknown";
}

}  // namespace pauligeo
