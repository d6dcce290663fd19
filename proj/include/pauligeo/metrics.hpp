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

#include <string>
#include <vector>

#include "pauligeo/pauli_transform.hpp"

namespace pauligeo {

/// Strings with at least this many Z factors are penalised by q.
inline constexpr unsigned kHighWeightThreshold = 3;

constexpr bool is_high_weight(PauliMask mask) noexcept {
  return pauli_weight(mask) >= kHighWeightThreshold;
}

enum class MetricKind { Fq, F2, F1 };

/// F1 as printed takes a square root of the l1 sum; PlainL1 drops it.
enum class F1Variant { LiteralSqrt, PlainL1 };

struct MetricSpec {
  MetricKind kind = MetricKind::F2;
  double q = 1.0;  // only meaningful for Fq
  F1Variant f1_variant = F1Variant::LiteralSqrt;  // only meaningful for F1

  static MetricSpec fq(double q) { return {MetricKind::Fq, q, {}}; }
  static MetricSpec f2() { return {MetricKind::F2, 1.0, {}}; }
  static MetricSpec f1(F1Variant variant = F1Variant::LiteralSqrt) {
    return {MetricKind::F1, 1.0, variant};
  }

  /// Throws InvalidSpec for Fq with q <= 0 or non-finite q.
  void validate() const;

  /// Factor applied to weight >= 3 coefficients in the quadratic metrics:
  /// q for Fq, 1 for F2. Not defined for F1.
  double high_weight_factor() const;

  std::string name() const;
};

/// Pauli-metric length of a diagonal Hamiltonian given by its coefficients.
///   Fq: sqrt(sum_{pw<=2} c^2 + q^2 sum_{pw>=3} c^2)
///   F2: Fq at q = 1
///   F1: sqrt(sum |c|), or sum |c| for the PlainL1 variant
/// The identity coefficient belongs to the unweighted sum.
double metric_value(const CoeffVector& c, const MetricSpec& spec);

struct WeightPartition {
  std::vector<PauliMask> low;   // pauli_weight <= 2, ascending
  std::vector<PauliMask> high;  // pauli_weight >= 3, ascending
};

WeightPartition weight_partition(unsigned n);

}  // namespace pauligeo
