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

#include "lattice_reduction.hpp"

#include <cmath>
#include <cstdlib>

namespace pauligeo::detail {

ReducedBasis lll_reduce(const Eigen::MatrixXd& basis, double delta,
                        long max_iterations) {
  const Eigen::Index dim = basis.cols();
  Eigen::MatrixXd b = basis;
  IntMatrix u = IntMatrix::Identity(dim, dim);
  IntMatrix u_inv = IntMatrix::Identity(dim, dim);

  Eigen::MatrixXd mu = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(dim, dim);  // <b_k, b*_j>
  Eigen::VectorXd bstar_sq = Eigen::VectorXd::Zero(dim);

  auto gso_row = [&](Eigen::Index k) {
    for (Eigen::Index j = 0; j < k; ++j) {
      double v = b.col(k).dot(b.col(j));
      for (Eigen::Index i = 0; i < j; ++i) v -= mu(j, i) * r(k, i);
      r(k, j) = v;
      mu(k, j) = v / bstar_sq(j);
    }
    double norm = b.col(k).squaredNorm();
    for (Eigen::Index j = 0; j < k; ++j) norm -= mu(k, j) * r(k, j);
    bstar_sq(k) = norm;
  };

  auto size_reduce = [&](Eigen::Index k) {
    for (int pass = 0; pass < 8; ++pass) {
      bool changed = false;
      for (Eigen::Index l = k - 1; l >= 0; --l) {
        if (std::abs(mu(k, l)) <= 0.5) continue;
        const double rounded = std::round(mu(k, l));
        const auto c = static_cast<std::int64_t>(rounded);
        b.col(k) -= rounded * b.col(l);
        u.col(k) -= c * u.col(l);
        u_inv.row(l) += c * u_inv.row(k);
        for (Eigen::Index i = 0; i < l; ++i) mu(k, i) -= rounded * mu(l, i);
        mu(k, l) -= rounded;
        changed = true;
      }
      if (!changed) return;
      gso_row(k);
      bool clean = true;
      for (Eigen::Index l = 0; l < k; ++l) {
        if (std::abs(mu(k, l)) > 0.51) clean = false;
      }
      if (clean) return;
    }
  };

  Eigen::Index valid = 0;  // rows [0, valid) of the GSO are current
  Eigen::Index k = 1;
  long iterations = 0;
  while (k < dim && iterations++ < max_iterations) {
    while (valid <= k) gso_row(valid++);
    size_reduce(k);
    if (bstar_sq(k) < (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar_sq(k - 1)) {
      b.col(k).swap(b.col(k - 1));
      u.col(k).swap(u.col(k - 1));
      u_inv.row(k).swap(u_inv.row(k - 1));
      valid = k - 1;
      k = k > 1 ? k - 1 : 1;
    } else {
      ++k;
    }
  }

  // Rebuild from the integer transform so accumulated drift is discarded.
  ReducedBasis out;
  out.basis = basis * u.cast<double>();
  out.transform = std::move(u);
  out.inverse = std::move(u_inv);
  return out;
}

}  // namespace pauligeo::detail
