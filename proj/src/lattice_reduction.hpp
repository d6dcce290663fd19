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

#include <Eigen/Dense>

namespace pauligeo::detail {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct ReducedBasis {
  Eigen::MatrixXd basis;  // columns; equals input * transform
  IntMatrix transform;    // unimodular
  IntMatrix inverse;      // transform^{-1}
};

/// Floating-point LLL on the columns of `basis` with Lovasz parameter
/// `delta`. The Gram-Schmidt row of the current index is recomputed from
/// scratch on every visit. Stops early after `max_iterations` without
/// losing validity; only the reduction quality suffers.
ReducedBasis lll_reduce(const Eigen::MatrixXd& basis, double delta = 0.99,
                        long max_iterations = 10'000'000);

}  // namespace pauligeo::detail
