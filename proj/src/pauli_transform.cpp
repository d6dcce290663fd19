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

#include "pauligeo/pauli_transform.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pauligeo/error.hpp"

namespace pauligeo {

std::size_t dimension(unsigned n) {
  if (n < 1 || n > kMaxQubits) {
    throw Error(ErrorKind::BadDimension,
                "qubit count " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
  return std::size_t{1} << n;
}

unsigned qubits_for_size(std::size_t size) {
  if (size < 2 || !std::has_single_bit(size) ||
      size > (std::size_t{1} << kMaxQubits)) {
    throw Error(ErrorKind::DimensionMismatch,
                "length " + std::to_string(size) +
                    " is not 2^n for a supported n >= 1");
  }
  return static_cast<unsigned>(std::countr_zero(size));
}

double canonical_phase(double phase) noexcept {
  double r = std::fmod(phase, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative number plus 2pi can round up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

namespace {

void check_length(unsigned n, std::size_t size, const char* what) {
  if (size != dimension(n)) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(size) +
                    ", expected 2^" + std::to_string(n));
  }
}

}  // namespace

PhaseVector::PhaseVector(unsigned n, std::vector<double> phases)
    : n_(n), phases_(std::move(phases)) {
  check_length(n_, phases_.size(), "phase vector");
}

PhaseVector::PhaseVector(std::vector<double> phases)
    : n_(qubits_for_size(phases.size())), phases_(std::move(phases)) {}

PhaseVector PhaseVector::zeros(unsigned n) {
  return PhaseVector(n, std::vector<double>(dimension(n), 0.0));
}

bool PhaseVector::is_canonical() const noexcept {
  for (double h : phases_) {
    if (!(h >= 0.0 && h < kTwoPi)) return false;
  }
  return true;
}

PhaseVector PhaseVector::canonicalized() const {
  std::vector<double> out(phases_.size());
  for (std::size_t k = 0; k < phases_.size(); ++k) {
    out[k] = canonical_phase(phases_[k]);
  }
  return PhaseVector(n_, std::move(out));
}

CoeffVector::CoeffVector(unsigned n, std::vector<double> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  check_length(n_, coeffs_.size(), "coefficient vector");
}

CoeffVector::CoeffVector(std::vector<double> coeffs)
    : n_(qubits_for_size(coeffs.size())), coeffs_(std::move(coeffs)) {}

CoeffVector CoeffVector::zeros(unsigned n) {
  return CoeffVector(n, std::vector<double>(dimension(n), 0.0));
}

void walsh_hadamard_inplace(std::span<double> data) {
  const std::size_t size = data.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const double a = data[i];
        const double b = data[i + half];
        data[i] = a + b;
        data[i + half] = a - b;
      }
    }
  }
}

CoeffVector expand(const PhaseVector& h) {
  std::vector<double> coeffs(h.values().begin(), h.values().end());
  walsh_hadamard_inplace(coeffs);
  const double inv_n = 1.0 / static_cast<double>(coeffs.size());
  for (double& c : coeffs) c *= inv_n;
  return CoeffVector(h.qubits(), std::move(coeffs));
}

PhaseVector unexpand(const CoeffVector& c) {
  std::vector<double> phases(c.values().begin(), c.values().end());
  walsh_hadamard_inplace(phases);
  return PhaseVector(c.qubits(), std::move(phases));
}

PhaseVector eigenphases_from_unitary(
    std::span<const std::complex<double>> entries, double tolerance) {
  const unsigned n = qubits_for_size(entries.size());
  std::vector<double> phases(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const double modulus = std::abs(entries[k]);
    if (!(std::abs(modulus - 1.0) <= tolerance)) {
      throw Error(ErrorKind::NonUnitModulus,
                  "entry " + std::to_string(k) + " has modulus " +
                      std::to_string(modulus));
    }
    phases[k] = canonical_phase(-std::arg(entries[k]));
  }
  return PhaseVector(n, std::move(phases));
}

}  // namespace pauligeo
