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

#include <functional>
#include <span>
#include <vector>

#include "pauligeo/lattice_geodesic.hpp"
#include "pauligeo/metrics.hpp"
#include "pauligeo/pauli_transform.hpp"

namespace pauligeo {

/// U = exp(-i H0), H0 = (pi/N) sigma with pauli_weight(sigma) >= 3,
/// optionally split by the deterministic perturbation h_k + eps (k+1)/N.
struct FamilyInstance {
  unsigned n = 3;
  PauliMask sigma{0b111};
  double epsilon = 0.0;

  /// Throws BadDimension (n < 3 or sigma outside n qubits), WeightTooLow,
  /// or EpsilonTooLarge (epsilon outside [0, pi/N)).
  void validate() const;
};

/// Lowest three qubits set: Z (x) Z (x) Z (x) I ...
constexpr PauliMask default_sigma() noexcept { return PauliMask{0b111}; }

/// h_k = (pi/N) (-1)^{popcount(k & sigma)}; not canonicalised.
PhaseVector make_h0(unsigned n, PauliMask sigma);

/// Canonicalised perturbed phases. Pairwise distinct for epsilon in
/// (0, pi/N), and each moves by at most epsilon.
PhaseVector perturb(const FamilyInstance& instance);

enum class FamilySolver { Auto, Brute, Bnb };

struct Lemma2Row {
  double q = 0.0;
  double minimum = 0.0;
  double bound = 0.0;  // q pi / N
  SolverId solver = SolverId::Bnb;
  bool optimal = false;
  bool passed = false;  // minimum >= bound - tol and |minimum - bound| <= tol
};

struct Lemma2Report {
  unsigned n = 0;
  PauliMask sigma;
  std::vector<Lemma2Row> rows;
  bool passed = false;
};

/// Minimises Fq over the lattice for H0 at every q (each q >= 1). Auto
/// picks brute force for n <= 3 and branch-and-bound otherwise.
Lemma2Report verify_lemma2(unsigned n, PauliMask sigma,
                           std::span<const double> q_list,
                           FamilySolver solver = FamilySolver::Auto,
                           unsigned workers = 1);

struct ScalingRow {
  unsigned n = 0;
  std::size_t dim = 0;
  double q = 0.0;
  double length = 0.0;
  double expected = 0.0;  // q pi / N
  bool passed = false;    // |length - expected| <= 1e-9 q
};

using QRule = std::function<double(unsigned)>;

/// q = 4^n.
double default_q_rule(unsigned n);

/// Minimal constant-geodesic length of H0 (default sigma) for each n in
/// [3, 8] with q from `q_rule`, using branch-and-bound.
std::vector<ScalingRow> exponential_scaling_table(
    std::span<const unsigned> n_list, const QRule& q_rule = default_q_rule,
    unsigned workers = 1);

struct PerturbationRow {
  double q = 0.0;
  double unperturbed = 0.0;
  double perturbed = 0.0;
  double deviation = 0.0;        // |perturbed - unperturbed|
  double stability_bound = 0.0;  // q epsilon
  bool distinct = false;         // all perturbed phases pairwise distinct
  bool passed = false;           // deviation <= q epsilon + 1e-9
};

/// Compares the minimal lengths of H0 and its perturbation under Fq; both
/// minimised with branch-and-bound.
PerturbationRow perturbation_check(const FamilyInstance& instance, double q,
                                   unsigned workers = 1);

/// Sorted adjacent differences all positive.
bool phases_pairwise_distinct(const PhaseVector& h);

}  // namespace pauligeo
