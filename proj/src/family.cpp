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

#include "pauligeo/family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "pauligeo/error.hpp"

namespace pauligeo {

void FamilyInstance::validate() const {
  if (n < 3 || n > kMaxQubits) {
    throw Error(ErrorKind::BadDimension,
                "family needs 3 <= n, got n = " + std::to_string(n));
  }
  if (sigma.bits >= (std::uint32_t{1} << n)) {
    throw Error(ErrorKind::BadDimension,
                "sigma = " + std::to_string(sigma.bits) + " has bits beyond " +
                    std::to_string(n) + " qubits");
  }
  if (pauli_weight(sigma) < kHighWeightThreshold) {
    throw Error(ErrorKind::WeightTooLow,
                "sigma = " + std::to_string(sigma.bits) + " has Pauli weight " +
                    std::to_string(pauli_weight(sigma)) + " < 3");
  }
  const double limit = std::numbers::pi / static_cast<double>(dimension(n));
  if (!(epsilon >= 0.0 && epsilon < limit)) {
    std::ostringstream msg;
    msg << "epsilon = " << epsilon << " outside [0, pi/N) = [0, " << limit
        << ")";
    throw Error(ErrorKind::EpsilonTooLarge, msg.str());
  }
}

PhaseVector make_h0(unsigned n, PauliMask sigma) {
  FamilyInstance{n, sigma, 0.0}.validate();
  const std::size_t size = dimension(n);
  const double amplitude = std::numbers::pi / static_cast<double>(size);
  std::vector<double> phases(size);
  for (std::size_t k = 0; k < size; ++k) {
    const bool odd =
        std::popcount(static_cast<std::uint32_t>(k) & sigma.bits) & 1;
    phases[k] = odd ? -amplitude : amplitude;
  }
  return PhaseVector(n, std::move(phases));
}

PhaseVector perturb(const FamilyInstance& instance) {
  instance.validate();
  const PhaseVector h0 = make_h0(instance.n, instance.sigma);
  const auto size = static_cast<double>(h0.size());
  std::vector<double> phases(h0.size());
  for (std::size_t k = 0; k < h0.size(); ++k) {
    phases[k] = canonical_phase(
        h0[k] + instance.epsilon * static_cast<double>(k + 1) / size);
  }
  return PhaseVector(instance.n, std::move(phases));
}

bool phases_pairwise_distinct(const PhaseVector& h) {
  std::vector<double> sorted(h.values().begin(), h.values().end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (!(sorted[k] - sorted[k - 1] > 0.0)) return false;
  }
  return true;
}

namespace {

GeodesicResult solve(const PhaseVector& h, const MetricSpec& spec,
                     FamilySolver solver, unsigned workers) {
  if (solver == FamilySolver::Auto) {
    solver = h.qubits() <= kBruteMaxQubits ? FamilySolver::Brute
                                           : FamilySolver::Bnb;
  }
  if (solver == FamilySolver::Brute) return minimize_brute(h, spec);
  return minimize_bnb(h, spec, BnbOptions{workers});
}

void require_q_at_least_one(double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) {
    std::ostringstream msg;
    msg << "family verification needs finite q >= 1, got " << q;
    throw Error(ErrorKind::InvalidSpec, msg.str());
  }
}

}  // namespace

Lemma2Report verify_lemma2(unsigned n, PauliMask sigma,
                           std::span<const double> q_list,
                           FamilySolver solver, unsigned workers) {
  const PhaseVector h0 = make_h0(n, sigma);
  const double base = std::numbers::pi / static_cast<double>(h0.size());

  Lemma2Report report;
  report.n = n;
  report.sigma = sigma;
  report.passed = true;
  for (double q : q_list) {
    require_q_at_least_one(q);
    const GeodesicResult best = solve(h0, MetricSpec::fq(q), solver, workers);
    Lemma2Row row;
    row.q = q;
    row.minimum = best.length;
    row.bound = q * base;
    row.solver = best.solver;
    row.optimal = best.optimal;
    row.passed = best.length >= row.bound - kLengthTolerance &&
                 std::abs(best.length - row.bound) <= kLengthTolerance;
    report.passed = report.passed && row.passed;
    report.rows.push_back(row);
  }
  return report;
}

double default_q_rule(unsigned n) {
  return std::ldexp(1.0, 2 * static_cast<int>(n));
}

std::vector<ScalingRow> exponential_scaling_table(
    std::span<const unsigned> n_list, const QRule& q_rule, unsigned workers) {
  std::vector<ScalingRow> rows;
  for (unsigned n : n_list) {
    if (n < 3 || n > kBnbMaxQubits) {
      throw Error(ErrorKind::BadDimension,
                  "scaling table needs 3 <= n <= " +
                      std::to_string(kBnbMaxQubits) + ", got " +
                      std::to_string(n));
    }
    const double q = q_rule(n);
    require_q_at_least_one(q);
    const PhaseVector h0 = make_h0(n, default_sigma());
    const GeodesicResult best =
        minimize_bnb(h0, MetricSpec::fq(q), BnbOptions{workers});
    ScalingRow row;
    row.n = n;
    row.dim = h0.size();
    row.q = q;
    row.length = best.length;
    row.expected = q * std::numbers::pi / static_cast<double>(h0.size());
    row.passed = std::abs(row.length - row.expected) <= 1e-9 * q;
    rows.push_back(row);
  }
  return rows;
}

PerturbationRow perturbation_check(const FamilyInstance& instance, double q,
                                   unsigned workers) {
  instance.validate();
  require_q_at_least_one(q);
  const MetricSpec spec = MetricSpec::fq(q);
  const PhaseVector h0 = make_h0(instance.n, instance.sigma);
  const PhaseVector perturbed = perturb(instance);

  PerturbationRow row;
  row.q = q;
  row.unperturbed = minimize_bnb(h0, spec, BnbOptions{workers}).length;
  row.perturbed = minimize_bnb(perturbed, spec, BnbOptions{workers}).length;
  row.deviation = std::abs(row.perturbed - row.unperturbed);
  row.stability_bound = q * instance.epsilon;
  row.distinct = phases_pairwise_distinct(perturbed);
  row.passed = row.deviation <= row.stability_bound + kLengthTolerance;
  return row;
}

}  // namespace pauligeo
