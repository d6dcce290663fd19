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

#include "pauligeo/metrics.hpp"

#include <cmath>
#include <sstream>

#include "pauligeo/error.hpp"

namespace pauligeo {

void MetricSpec::validate() const {
  if (kind == MetricKind::Fq && !(std::isfinite(q) && q > 0.0)) {
    std::ostringstream msg;
    msg << "Fq requires finite q > 0, got " << q;
    throw Error(ErrorKind::InvalidSpec, msg.str());
  }
}

double MetricSpec::high_weight_factor() const {
  switch (kind) {
    case MetricKind::Fq:
      return q;
    case MetricKind::F2:
      return 1.0;
    case MetricKind::F1:
      break;
  }
  throw Error(ErrorKind::InvalidSpec, "F1 has no quadratic weight factor");
}

std::string MetricSpec::name() const {
  switch (kind) {
    case MetricKind::Fq:
      return "fq";
    case MetricKind::F2:
      return "f2";
    case MetricKind::F1:
      return f1_variant == F1Variant::LiteralSqrt ? "f1" : "f1-l1";
  }
  return "?";
}

double metric_value(const CoeffVector& c, const MetricSpec& spec) {
  spec.validate();
  const auto values = c.values();

  if (spec.kind == MetricKind::F1) {
    double l1 = 0.0;
    for (double v : values) l1 += std::abs(v);
    return spec.f1_variant == F1Variant::LiteralSqrt ? std::sqrt(l1) : l1;
  }

  double low = 0.0;
  double high = 0.0;
  for (std::size_t m = 0; m < values.size(); ++m) {
    const double sq = values[m] * values[m];
    if (is_high_weight(PauliMask{static_cast<std::uint32_t>(m)})) {
      high += sq;
    } else {
      low += sq;
    }
  }
  const double w = spec.high_weight_factor();
  return std::sqrt(low + w * w * high);
}

WeightPartition weight_partition(unsigned n) {
  const std::size_t size = dimension(n);
  WeightPartition out;
  for (std::size_t m = 0; m < size; ++m) {
    const PauliMask mask{static_cast<std::uint32_t>(m)};
    (is_high_weight(mask) ? out.high : out.low).push_back(mask);
  }
  return out;
}

}  // namespace pauligeo
