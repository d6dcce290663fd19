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

#include <bit>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace pauligeo {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Largest qubit count accepted by the dense vector types (2^24 doubles).
inline constexpr unsigned kMaxQubits = 24;

/// N = 2^n. Throws BadDimension outside 1 <= n <= kMaxQubits.
std::size_t dimension(unsigned n);

/// Inverse of `dimension`; throws DimensionMismatch unless `size` is 2^n
/// with n >= 1.
unsigned qubits_for_size(std::size_t size);

/// An n-fold tensor product of I and Z. Bit i set means factor i is Z.
struct PauliMask {
  std::uint32_t bits = 0;

  constexpr auto operator<=>(const PauliMask&) const = default;
};

constexpr unsigned pauli_weight(PauliMask mask) noexcept {
  return static_cast<unsigned>(std::popcount(mask.bits));
}

/// Reduce an angle into [0, 2pi).
double canonical_phase(double phase) noexcept;

/// Eigenphases h_k of a diagonal Hamiltonian, U = diag(exp(-i h_k)).
///
/// Values are stored verbatim; `canonicalized()` maps every phase into
/// [0, 2pi), which leaves exp(-i H) unchanged.
class PhaseVector {
 public:
  PhaseVector(unsigned n, std::vector<double> phases);
  /// Infers n from the length, which must be a power of two >= 2.
  explicit PhaseVector(std::vector<double> phases);

  static PhaseVector zeros(unsigned n);

  unsigned qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return phases_.size(); }
  double operator[](std::size_t k) const { return phases_[k]; }
  std::span<const double> values() const noexcept { return phases_; }

  bool is_canonical() const noexcept;
  PhaseVector canonicalized() const;

 private:
  unsigned n_;
  std::vector<double> phases_;
};

/// Coefficients lambda_m of a diagonal Hamiltonian in the {I,Z}^n basis,
/// indexed by mask.
class CoeffVector {
 public:
  CoeffVector(unsigned n, std::vector<double> coeffs);
  explicit CoeffVector(std::vector<double> coeffs);

  static CoeffVector zeros(unsigned n);

  unsigned qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  double operator[](std::size_t m) const { return coeffs_[m]; }
  double operator[](PauliMask m) const { return coeffs_[m.bits]; }
  std::span<const double> values() const noexcept { return coeffs_; }

 private:
  unsigned n_;
  std::vector<double> coeffs_;
};

/// Unnormalised in-place Walsh-Hadamard butterflies:
/// data[j] <- sum_i (-1)^{popcount(i & j)} data[i]. Length must be 2^n.
void walsh_hadamard_inplace(std::span<double> data);

/// lambda = (1/N) M^{(x)n} h, with M_ij = (-1)^{popcount(i & j)}.
CoeffVector expand(const PhaseVector& h);

/// h = M^{(x)n} lambda. The result is not canonicalised.
PhaseVector unexpand(const CoeffVector& c);

/// Eigenphases of diag(entries) with every h_k in [0, 2pi) and
/// exp(-i h_k) = entries[k]. Throws NonUnitModulus when some |entry|
/// differs from 1 by more than `tolerance`.
PhaseVector eigenphases_from_unitary(
    std::span<const std::complex<double>> entries, double tolerance = 1e-9);

}  // namespace pauligeo
