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

#include "pauligeo/cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pauligeo/cli/documents.hpp"
#include "pauligeo/family.hpp"
#include "pauligeo/lattice_geodesic.hpp"
#include "pauligeo/metrics.hpp"
#include "pauligeo/pauli_transform.hpp"

namespace pauligeo::cli {

using nlohmann::json;

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyOutcome& p) { return p.passed; });
}

json SuiteReport::to_json() const {
  json props = json::array();
  for (const auto& p : properties) {
    json entry = {{"name", p.name}, {"pass", p.passed}, {"detail", p.detail}};
    if (p.counterexample) entry["counterexample"] = *p.counterexample;
    props.push_back(std::move(entry));
  }
  return {{"suite", suite}, {"seed", seed}, {"pass", passed()},
          {"properties", std::move(props)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "roundtrip", "parseval", "f2bound", "lemma2", "solver-xcheck"};
  return names;
}

namespace {

/// One generator per (seed, stream) so suites sharing a corpus draw the
/// same instances regardless of what else they sample.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

PhaseVector random_phases(unsigned n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<double> phases(dimension(n));
  for (double& h : phases) h = angle(rng);
  return PhaseVector(n, std::move(phases));
}

/// Corpus shared by the roundtrip and parseval suites.
std::vector<PhaseVector> phase_corpus(std::uint64_t seed, unsigned n,
                                      int trials) {
  auto rng = make_rng(seed, n);
  std::vector<PhaseVector> out;
  out.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) out.push_back(random_phases(n, rng));
  return out;
}

json counterexample(const PhaseVector& h) {
  return InputDocument::from_phases(h).to_json();
}

/// Running maximum of an error measure with a pass threshold; remembers the
/// first instance that crossed it.
class Tracker {
 public:
  Tracker(std::string name, double threshold)
      : name_(std::move(name)), threshold_(threshold) {}

  void observe(double error, const PhaseVector& h) {
    max_ = std::max(max_, error);
    if (!(error <= threshold_) && !counterexample_) {
      counterexample_ = counterexample(h);
    }
    ++count_;
  }

  PropertyOutcome finish(json extra = json::object()) const {
    PropertyOutcome out;
    out.name = name_;
    out.passed = !counterexample_.has_value();
    out.detail = std::move(extra);
    out.detail["instances"] = count_;
    out.detail["max_error"] = max_;
    out.detail["threshold"] = threshold_;
    out.counterexample = counterexample_;
    return out;
  }

 private:
  std::string name_;
  double threshold_;
  double max_ = 0.0;
  long count_ = 0;
  std::optional<json> counterexample_;
};

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    m = std::max(m, std::abs(a[k] - b[k]));
  }
  return m;
}

SuiteReport roundtrip_suite(const SuiteOptions& opt) {
  const int trials = opt.trials.value_or(100);
  const unsigned n_max = opt.n_max.value_or(10);
  Tracker roundtrip("roundtrip", 1e-12);
  Tracker linearity("linearity", 1e-12);
  Tracker purity("single-mask-purity", 1e-12);

  for (unsigned n = 1; n <= n_max; ++n) {
    const auto corpus = phase_corpus(opt.seed, n, trials);
    auto rng = make_rng(opt.seed, 1000 + n);
    std::uniform_real_distribution<double> scalar(-2.0, 2.0);
    std::uniform_int_distribution<std::uint32_t> mask_dist(
        0, static_cast<std::uint32_t>(dimension(n) - 1));

    for (std::size_t t = 0; t < corpus.size(); ++t) {
      const PhaseVector& h = corpus[t];
      const PhaseVector back = unexpand(expand(h));
      roundtrip.observe(max_abs_diff(back.values(), h.values()) /
                            max_abs(h.values()),
                        h);

      const PhaseVector& other = corpus[(t + 1) % corpus.size()];
      const double a = scalar(rng);
      const double b = scalar(rng);
      std::vector<double> mix(h.size());
      for (std::size_t k = 0; k < h.size(); ++k) {
        mix[k] = a * h[k] + b * other[k];
      }
      const CoeffVector lhs = expand(PhaseVector(n, mix));
      const CoeffVector e1 = expand(h);
      const CoeffVector e2 = expand(other);
      std::vector<double> rhs(h.size());
      for (std::size_t m = 0; m < h.size(); ++m) rhs[m] = a * e1[m] + b * e2[m];
      linearity.observe(max_abs_diff(lhs.values(), rhs), h);

      const PauliMask mask{mask_dist(rng)};
      const double c = scalar(rng);
      std::vector<double> pure(h.size());
      for (std::size_t k = 0; k < h.size(); ++k) {
        const bool odd =
            std::popcount(static_cast<std::uint32_t>(k) & mask.bits) & 1;
        pure[k] = odd ? -c : c;
      }
      const PhaseVector pure_h(n, std::move(pure));
      const CoeffVector coeffs = expand(pure_h);
      double err = 0.0;
      for (std::size_t m = 0; m < coeffs.size(); ++m) {
        const double expected = m == mask.bits ? c : 0.0;
        err = std::max(err, std::abs(coeffs[m] - expected));
      }
      purity.observe(err, pure_h);
    }
  }

  SuiteReport report;
  report.properties.push_back(roundtrip.finish({{"n_max", n_max}}));
  report.properties.push_back(linearity.finish());
  report.properties.push_back(purity.finish());
  return report;
}

SuiteReport parseval_suite(const SuiteOptions& opt) {
  const int trials = opt.trials.value_or(100);
  const unsigned n_max = opt.n_max.value_or(10);
  Tracker parseval("parseval", 1e-9);
  for (unsigned n = 1; n <= n_max; ++n) {
    for (const PhaseVector& h : phase_corpus(opt.seed, n, trials)) {
      const CoeffVector c = expand(h);
      double coeff_sq = 0.0;
      for (double v : c.values()) coeff_sq += v * v;
      double phase_sq = 0.0;
      for (double v : h.values()) phase_sq += v * v;
      phase_sq /= static_cast<double>(h.size());
      parseval.observe(std::abs(coeff_sq - phase_sq) / phase_sq, h);
    }
  }
  SuiteReport report;
  report.properties.push_back(parseval.finish({{"n_max", n_max}}));
  return report;
}

SuiteReport f2bound_suite(const SuiteOptions& opt) {
  const int trials = opt.trials.value_or(1000);
  const unsigned n_max = opt.n_max.value_or(6);
  auto rng = make_rng(opt.seed, 2000);
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);

  double max_length = 0.0;
  bool within_pi = true;
  std::optional<json> failure;
  for (int t = 0; t < trials; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(t) % n_max;
    std::vector<std::complex<double>> diag(dimension(n));
    for (auto& z : diag) z = std::polar(1.0, angle(rng));
    const PhaseVector h = eigenphases_from_unitary(diag);
    const double length = minimize_f2_closed_form(h).length;
    max_length = std::max(max_length, length);
    within_pi = within_pi && length <= std::numbers::pi + kLengthTolerance;
    if (!(length <= kTwoPi) && !failure) failure = counterexample(h);
  }

  PropertyOutcome bound;
  bound.name = "f2-minimum-at-most-2pi";
  bound.passed = !failure.has_value();
  bound.counterexample = failure;
  bound.detail = {{"instances", trials},
                  {"n_max", n_max},
                  {"max_length", max_length},
                  {"bound", kTwoPi},
                  {"closed_form_at_most_pi", within_pi}};
  SuiteReport report;
  report.properties.push_back(std::move(bound));
  return report;
}

SuiteReport lemma2_suite(const SuiteOptions& opt) {
  const std::vector<double> q_list = {1.0, 8.0, 64.0, 512.0};
  const Lemma2Report lemma =
      verify_lemma2(3, default_sigma(), q_list, FamilySolver::Brute);

  json rows = json::array();
  for (const auto& row : lemma.rows) {
    rows.push_back({{"q", row.q},
                    {"minimum", row.minimum},
                    {"bound", row.bound},
                    {"optimal", row.optimal},
                    {"pass", row.passed}});
  }
  PropertyOutcome equality;
  equality.name = "lemma2-equality";
  equality.passed = lemma.passed;
  equality.detail = {{"n", 3}, {"sigma", 7}, {"rows", rows}};
  if (!lemma.passed) {
    equality.counterexample = counterexample(make_h0(3, default_sigma()));
  }

  PropertyOutcome linear;
  linear.name = "linear-in-q";
  const double ratio0 = lemma.rows.front().minimum / lemma.rows.front().q;
  double worst = 0.0;
  for (const auto& row : lemma.rows) {
    worst = std::max(worst, std::abs(row.minimum / row.q - ratio0) / ratio0);
  }
  linear.passed = worst <= 1e-9;
  linear.detail = {{"ratio", ratio0}, {"max_relative_spread", worst}};

  // Project expand(2pi j) onto the sigma coordinate for j in {-1,0,1}^8.
  PropertyOutcome gap;
  gap.name = "projection-gap";
  std::vector<double> projections;
  std::vector<std::int64_t> j(8, -1);
  for (;;) {
    std::vector<double> phases(8);
    for (std::size_t k = 0; k < 8; ++k) {
      phases[k] = kTwoPi * static_cast<double>(j[k]);
    }
    projections.push_back(expand(PhaseVector(3, phases))[default_sigma()]);
    std::size_t k = 0;
    while (k < 8 && j[k] == 1) j[k++] = -1;
    if (k == 8) break;
    ++j[k];
  }
  std::sort(projections.begin(), projections.end());
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < projections.size(); ++i) {
    const double d = projections[i] - projections[i - 1];
    if (d > 1e-9) min_gap = std::min(min_gap, d);
  }
  gap.passed = std::abs(min_gap - projection_gap(3)) <= 1e-12;
  gap.detail = {{"measured", min_gap}, {"expected", projection_gap(3)}};

  (void)opt;
  SuiteReport report;
  report.properties.push_back(std::move(equality));
  report.properties.push_back(std::move(linear));
  report.properties.push_back(std::move(gap));
  return report;
}

SuiteReport solver_xcheck_suite(const SuiteOptions& opt) {
  const int trials = opt.trials.value_or(50);
  const unsigned n_max = std::min(opt.n_max.value_or(3), kBruteMaxQubits);
  if (n_max < 2) throw std::invalid_argument("solver-xcheck needs n-max >= 2");
  auto rng = make_rng(opt.seed, 3000);

  Tracker bnb_vs_brute("bnb-equals-brute", kLengthTolerance);
  Tracker vs_closed_form("q1-equals-closed-form", kLengthTolerance);
  Tracker workers("worker-count-invariance", 0.0);
  Tracker endpoint("endpoint-invariance", 1e-9);
  Tracker lower_bound("projection-lower-bound", 0.0);

  for (int t = 0; t < trials; ++t) {
    const unsigned n = 2 + static_cast<unsigned>(t) % (n_max - 1);
    const PhaseVector h = random_phases(n, rng);
    for (double q : {1.0, 10.0}) {
      const MetricSpec spec = MetricSpec::fq(q);
      const GeodesicResult brute = minimize_brute(h, spec);
      const GeodesicResult bnb = minimize_bnb(h, spec, BnbOptions{1});
      bnb_vs_brute.observe(std::abs(bnb.length - brute.length), h);
      if (q == 1.0) {
        vs_closed_form.observe(
            std::max(std::abs(bnb.length - minimize_f2_closed_form(h).length),
                     std::abs(brute.length -
                              minimize_f2_closed_form(h).length)),
            h);
      }
      const GeodesicResult parallel =
          minimize_bnb(h, spec, BnbOptions{std::max(2u, opt.workers)});
      workers.observe(parallel.offset == bnb.offset &&
                              parallel.length == bnb.length
                          ? 0.0
                          : 1.0,
                      h);
      const auto at_optimum = evaluate_curve(h, bnb.offset, 1.0);
      const auto at_zero = evaluate_curve(h, LatticeOffset::zeros(h.size()), 1.0);
      double err = 0.0;
      for (std::size_t k = 0; k < h.size(); ++k) {
        err = std::max(err, std::abs(at_optimum[k] - at_zero[k]));
      }
      endpoint.observe(err, h);
      const double bound = projection_lower_bound(h, spec);
      lower_bound.observe(
          std::max(0.0, bound - bnb.length - kLengthTolerance), h);
    }
  }

  SuiteReport report;
  report.properties.push_back(bnb_vs_brute.finish({{"q", {1.0, 10.0}}}));
  report.properties.push_back(vs_closed_form.finish());
  report.properties.push_back(workers.finish());
  report.properties.push_back(endpoint.finish());
  report.properties.push_back(lower_bound.finish());
  return report;
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  static const std::map<std::string,
                        std::function<SuiteReport(const SuiteOptions&)>>
      suites = {{"roundtrip", roundtrip_suite},
                {"parseval", parseval_suite},
                {"f2bound", f2bound_suite},
                {"lemma2", lemma2_suite},
                {"solver-xcheck", solver_xcheck_suite}};
  const auto it = suites.find(options.suite);
  if (it == suites.end()) {
    throw std::invalid_argument("unknown suite '" + options.suite + "'");
  }
  if (options.trials && *options.trials <= 0) {
    throw std::invalid_argument("--trials must be positive");
  }
  if (options.n_max && (*options.n_max < 1 || *options.n_max > kMaxQubits)) {
    throw std::invalid_argument("--n-max out of range");
  }
  SuiteReport report = it->second(options);
  report.suite = options.suite;
  report.seed = options.seed;
  return report;
}

}  // namespace pauligeo::cli
