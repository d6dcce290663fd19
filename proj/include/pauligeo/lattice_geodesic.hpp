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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pauligeo/metrics.hpp"
#include "pauligeo/pauli_transform.hpp"

namespace pauligeo {

/// Absolute tolerance for comparing geodesic lengths.
inline constexpr double kLengthTolerance = 1e-9;

inline constexpr unsigned kBruteMaxQubits = 3;
inline constexpr unsigned kBnbMaxQubits = 8;

/// Integer offset j with J = 2pi diag(j). Every offset reaches the same
/// endpoint exp(-iH). Ordered lexicographically.
class LatticeOffset {
 public:
  LatticeOffset() = default;
  explicit LatticeOffset(std::vector<std::int64_t> j) : j_(std::move(j)) {}

  static LatticeOffset zeros(std::size_t size) {
    return LatticeOffset(std::vector<std::int64_t>(size, 0));
  }

  std::size_t size() const noexcept { return j_.size(); }
  std::int64_t operator[](std::size_t k) const { return j_[k]; }
  const std::vector<std::int64_t>& values() const noexcept { return j_; }

  auto operator<=>(const LatticeOffset&) const = default;

 private:
  std::vector<std::int64_t> j_;
};

enum class SolverId { Rounding, Brute, Bnb };

std::string_view to_string(SolverId solver);

struct GeodesicResult {
  LatticeOffset offset;
  double length = 0.0;
  CoeffVector coeffs;  // expansion of H - J at the optimum
  SolverId solver = SolverId::Rounding;
  /// True when the solver certifies that no offset is strictly shorter.
  bool optimal = false;
};

/// H - 2pi diag(j).
PhaseVector shifted_hamiltonian(const PhaseVector& h, const LatticeOffset& j);

/// Length of the constant geodesic exp(-i(H - J)t), t in [0, 1].
double geodesic_length(const PhaseVector& h, const LatticeOffset& j,
                       const MetricSpec& spec);

/// Exact F2 minimiser. F2 is isotropic in the phase coordinates, so each
/// phase is reduced independently into [-pi, pi); exact half-way ties go
/// to the smaller offset.
GeodesicResult minimize_f2_closed_form(const PhaseVector& h);

struct BruteOptions {
  /// Each j_k is searched within round(h_k / 2pi) +- max_radius,
  /// intersected with the interval the metric sandwich F2 <= Fq admits.
  int max_radius = 2;
};

/// Exhaustive search over a box of offsets, n <= 3, Fq or F2.
///
/// `optimal` is set when the box covers the whole admissible interval or
/// when the best length meets `projection_lower_bound`.
GeodesicResult minimize_brute(const PhaseVector& h, const MetricSpec& spec,
                              const BruteOptions& options = {});

struct BnbOptions {
  unsigned workers = 1;
};

/// Exact weighted closest-vector search: LLL-reduced basis, Cholesky of the
/// Gram matrix, Schnorr-Euchner depth-first enumeration pruned by the
/// incumbent (seeded with the F2 optimum). n <= 8, Fq with q >= 1 or F2.
/// The result does not depend on the worker count.
GeodesicResult minimize_bnb(const PhaseVector& h, const MetricSpec& spec,
                            const BnbOptions& options = {});

/// Spacing 2pi/N of the lattice projected onto any single coefficient.
double projection_gap(unsigned n);

/// sqrt(sum_m w_m^2 dist(lambda_m(H), gap Z)^2): a lower bound on the
/// length of every constant geodesic, since each coefficient of H - J lies
/// in lambda_m(H) + gap Z. Fq and F2 only.
double projection_lower_bound(const PhaseVector& h, const MetricSpec& spec);

/// V(t) = exp(-i(H - J)t), diagonal entries. Throws DomainError unless
/// 0 <= t <= 1.
std::vector<std::complex<double>> evaluate_curve(const PhaseVector& h,
                                                 const LatticeOffset& j,
                                                 double t);

}  // namespace pauligeo
