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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pauligeo/error.hpp"
#include "pauligeo/lattice_geodesic.hpp"

namespace pauligeo {
namespace {

using std::numbers::pi;

PhaseVector h0_phases() {
  std::vector<double> h(8);
  for (std::size_t k = 0; k < 8; ++k) {
    h[k] = pi / 8 * testing::hadamard_sign(k, 7);
  }
  return PhaseVector(3, h);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected pauligeo::Error");
  return ErrorKind::DomainError;
}

TEST_CASE("geodesic_length examples") {
  CHECK(geodesic_length(PhaseVector::zeros(2), LatticeOffset::zeros(4),
                        MetricSpec::fq(7)) == 0.0);
  const PhaseVector lattice_point(2, std::vector<double>(4, kTwoPi));
  CHECK(geodesic_length(lattice_point, LatticeOffset({1, 1, 1, 1}),
                        MetricSpec::f2()) == 0.0);
  CHECK(geodesic_length(h0_phases(), LatticeOffset::zeros(8),
                        MetricSpec::fq(100)) ==
        doctest::Approx(100 * pi / 8).epsilon(1e-14));
  CHECK(kind_of([] {
          geodesic_length(PhaseVector::zeros(2), LatticeOffset::zeros(8),
                          MetricSpec::f2());
        }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("closed-form F2 minimiser") {
  SUBCASE("all phases pi: tie goes to the zero offset") {
    const PhaseVector h(3, std::vector<double>(8, pi));
    const GeodesicResult r = minimize_f2_closed_form(h);
    CHECK(r.length == doctest::Approx(pi));
    CHECK(r.offset == LatticeOffset::zeros(8));
    CHECK(r.optimal);
    CHECK(r.solver == SolverId::Rounding);
  }
  SUBCASE("zero") {
    CHECK(minimize_f2_closed_form(PhaseVector::zeros(3)).length == 0.0);
  }
  SUBCASE("random canonical inputs stay below pi, hence below 2pi") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
      const unsigned n = 1 + t % 6;
      const PhaseVector h(n, testing::random_phases(std::size_t{1} << n, rng));
      const GeodesicResult r = minimize_f2_closed_form(h);
      CHECK(r.length <= pi + kLengthTolerance);
      CHECK(r.length <= 2 * pi);
      CHECK(std::abs(r.length - metric_value(r.coeffs, MetricSpec::f2())) <=
            1e-12);
    }
  }
  SUBCASE("matches the dense box oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
      const auto h = testing::random_phases(4, rng, -8, 8);
      const auto oracle = testing::box_minimum(h, 1.0, 3);
      const GeodesicResult r = minimize_f2_closed_form(PhaseVector(2, h));
      CHECK(r.length == doctest::Approx(oracle.length).epsilon(1e-12));
      CHECK(r.offset.values() == oracle.j);
    }
  }
}

TEST_CASE("brute-force search") {
  SUBCASE("H0 at q = 100") {
    const GeodesicResult r = minimize_brute(h0_phases(), MetricSpec::fq(100));
    CHECK(std::abs(r.length - 100 * pi / 8) <= 1e-9);
    CHECK(r.offset == LatticeOffset::zeros(8));
    CHECK(r.optimal);  // meets the projection lower bound
  }
  SUBCASE("exact lattice point") {
    const PhaseVector h(2, {kTwoPi * 3, kTwoPi * 1, kTwoPi * 4, kTwoPi * 1});
    const GeodesicResult r = minimize_brute(h, MetricSpec::fq(5));
    CHECK(r.length <= 1e-12);
    CHECK(r.offset == LatticeOffset({3, 1, 4, 1}));
  }
  SUBCASE("q = 1 agrees with the closed form") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
      const PhaseVector h(2, testing::random_phases(4, rng));
      const GeodesicResult brute = minimize_brute(h, MetricSpec::fq(1));
      CHECK(std::abs(brute.length - minimize_f2_closed_form(h).length) <= 1e-9);
      CHECK(brute.optimal);
    }
  }
  SUBCASE("agrees with the dense box oracle") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
      const auto h = testing::random_phases(4, rng);
      for (double q : {1.0, 10.0, 100.0}) {
        const auto oracle = testing::box_minimum(h, q, 3);
        const GeodesicResult r = minimize_brute(PhaseVector(2, h), MetricSpec::fq(q));
        CHECK(std::abs(r.length - oracle.length) <= 1e-9);
      }
    }
    for (int t = 0; t < 3; ++t) {
      const auto h = testing::random_phases(8, rng, -1, 1);
      const auto oracle = testing::box_minimum(h, 10.0, 1);
      const GeodesicResult r = minimize_brute(PhaseVector(3, h), MetricSpec::fq(10));
      CHECK(r.length <= oracle.length + 1e-9);
    }
  }
  SUBCASE("ties resolve lexicographically") {
    const PhaseVector h(2, std::vector<double>(4, pi));
    const GeodesicResult r = minimize_brute(h, MetricSpec::f2());
    CHECK(r.offset == LatticeOffset::zeros(4));
    CHECK(r.length == doctest::Approx(pi));
  }
  SUBCASE("q below one is searched with the widened interval") {
    std::mt19937_64 rng(3);
    const PhaseVector h(2, testing::random_phases(4, rng));
    const GeodesicResult r = minimize_brute(h, MetricSpec::fq(0.5));
    CHECK(r.length <= geodesic_length(h, minimize_f2_closed_form(h).offset,
                                      MetricSpec::fq(0.5)) + 1e-12);
  }
  SUBCASE("errors") {
    CHECK(kind_of([] {
            minimize_brute(PhaseVector::zeros(4), MetricSpec::f2());
          }) == ErrorKind::TooLarge);
    CHECK(kind_of([] {
            minimize_brute(PhaseVector::zeros(2), MetricSpec::f1());
          }) == ErrorKind::InvalidSpec);
    CHECK(kind_of([] {
            minimize_brute(PhaseVector::zeros(2), MetricSpec::fq(-1));
          }) == ErrorKind::InvalidSpec);
  }
}

TEST_CASE("branch-and-bound") {
  SUBCASE("H0 family at n = 3") {
    for (double q : {1.0, 8.0, 64.0, 512.0}) {
      const GeodesicResult r = minimize_bnb(h0_phases(), MetricSpec::fq(q));
      CHECK(std::abs(r.length - q * pi / 8) <= 1e-9);
      CHECK(r.optimal);
      CHECK(r.solver == SolverId::Bnb);
    }
  }
  SUBCASE("zero phases") {
    const GeodesicResult r = minimize_bnb(PhaseVector::zeros(3), MetricSpec::fq(10));
    CHECK(r.length == 0.0);
    CHECK(r.offset == LatticeOffset::zeros(8));
  }
  SUBCASE("agrees with brute force on random instances") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
      const unsigned n = 2 + t % 2;
      const PhaseVector h(n, testing::random_phases(std::size_t{1} << n, rng));
      for (double q : {1.0, 10.0}) {
        const GeodesicResult bnb = minimize_bnb(h, MetricSpec::fq(q));
        const GeodesicResult brute = minimize_brute(h, MetricSpec::fq(q));
        CHECK(std::abs(bnb.length - brute.length) <= 1e-9);
        if (q == 1.0) {
          CHECK(std::abs(bnb.length - minimize_f2_closed_form(h).length) <= 1e-9);
        }
      }
    }
  }
  SUBCASE("never worse than brute force at large q") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 10; ++t) {
      const PhaseVector h(3, testing::random_phases(8, rng));
      for (double q : {100.0, 1000.0}) {
        const GeodesicResult bnb = minimize_bnb(h, MetricSpec::fq(q));
        const GeodesicResult brute = minimize_brute(h, MetricSpec::fq(q));
        CHECK(bnb.length <= brute.length + 1e-9);
        if (brute.optimal) CHECK(std::abs(bnb.length - brute.length) <= 1e-9);
      }
    }
  }
  SUBCASE("bounds and local optimality at larger n") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 12; ++t) {
      const unsigned n = 4 + t % 3;
      const PhaseVector h(n, testing::random_phases(std::size_t{1} << n, rng));
      const MetricSpec spec = MetricSpec::fq(t % 2 ? 10.0 : 100.0);
      const GeodesicResult r = minimize_bnb(h, spec);
      CHECK(r.length >= projection_lower_bound(h, spec) - 1e-9);
      CHECK(r.length <= geodesic_length(h, minimize_f2_closed_form(h).offset,
                                        spec) + 1e-9);
      CHECK(std::abs(r.length - testing::dense_fq_length(
                                    {h.values().begin(), h.values().end()},
                                    r.offset.values(), spec.q)) <= 1e-9);
      // No single +-1 move improves the optimum.
      for (std::size_t k = 0; k < h.size(); ++k) {
        for (int d : {-1, 1}) {
          auto j = r.offset.values();
          j[k] += d;
          CHECK(geodesic_length(h, LatticeOffset(j), spec) >= r.length - 1e-9);
        }
      }
    }
  }
  SUBCASE("ties resolve lexicographically") {
    const PhaseVector h(2, std::vector<double>(4, pi));
    const GeodesicResult r = minimize_bnb(h, MetricSpec::f2());
    CHECK(r.offset == LatticeOffset::zeros(4));
  }
  SUBCASE("worker count does not change the result") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
      const unsigned n = 2 + t % 4;
      const PhaseVector h(n, testing::random_phases(std::size_t{1} << n, rng));
      const MetricSpec spec = MetricSpec::fq(1.0 + t);
      const GeodesicResult one = minimize_bnb(h, spec, BnbOptions{1});
      const GeodesicResult many = minimize_bnb(h, spec, BnbOptions{4});
      const GeodesicResult again = minimize_bnb(h, spec, BnbOptions{1});
      CHECK(one.offset == many.offset);
      CHECK(one.length == many.length);
      CHECK(one.offset == again.offset);
    }
  }
  SUBCASE("errors") {
    CHECK(kind_of([] {
            minimize_bnb(PhaseVector::zeros(9), MetricSpec::f2());
          }) == ErrorKind::TooLarge);
    CHECK(kind_of([] {
            minimize_bnb(PhaseVector::zeros(2), MetricSpec::fq(0.5));
          }) == ErrorKind::InvalidSpec);
    CHECK(kind_of([] {
            minimize_bnb(PhaseVector::zeros(2), MetricSpec::f1());
          }) == ErrorKind::InvalidSpec);
  }
}

TEST_CASE("projection gap") {
  CHECK(projection_gap(3) == doctest::Approx(pi / 4));
  CHECK(projection_gap(1) == doctest::Approx(pi));
  CHECK(projection_gap(2) == doctest::Approx(pi / 2));

  // Empirical: project expand(2pi j), j in {-1,0,1}^N, onto the top mask.
  for (unsigned n = 1; n <= 3; ++n) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<double> projections;
    std::vector<std::int64_t> j(size, -1);
    for (;;) {
      std::vector<double> phases(size);
      for (std::size_t k = 0; k < size; ++k) phases[k] = kTwoPi * j[k];
      projections.push_back(testing::dense_expand(phases)[size - 1]);
      std::size_t k = 0;
      while (k < size && j[k] == 1) j[k++] = -1;
      if (k == size) break;
      ++j[k];
    }
    std::sort(projections.begin(), projections.end());
    double gap = INFINITY;
    for (std::size_t i = 1; i < projections.size(); ++i) {
      const double d = projections[i] - projections[i - 1];
      if (d > 1e-9) gap = std::min(gap, d);
    }
    CHECK(gap == doctest::Approx(projection_gap(n)).epsilon(1e-12));
  }
}

TEST_CASE("projection lower bound") {
  CHECK(projection_lower_bound(h0_phases(), MetricSpec::fq(100)) ==
        doctest::Approx(100 * pi / 8));
  std::mt19937_64 rng(47);
  for (int t = 0; t < 30; ++t) {
    const PhaseVector h(3, testing::random_phases(8, rng));
    const MetricSpec spec = MetricSpec::fq(1.0 + t);
    const GeodesicResult r = minimize_bnb(h, spec);
    CHECK(r.length >= projection_lower_bound(h, spec) - 1e-9);
    // Single high-weight coordinate of the optimum.
    CHECK(r.length >= spec.q * std::abs(r.coeffs[7]) - 1e-9);
  }
}

TEST_CASE("evaluate_curve") {
  const PhaseVector h(1, {pi, 0.0});
  SUBCASE("t = 0 is the identity") {
    for (auto z : evaluate_curve(h, LatticeOffset({3, -2}), 0.0)) {
      CHECK(z == std::complex<double>(1.0, 0.0));
    }
  }
  SUBCASE("t = 1 reaches U for any offset") {
    for (const LatticeOffset& j : {LatticeOffset({0, 0}), LatticeOffset({1, 0})}) {
      const auto v = evaluate_curve(h, j, 1.0);
      CHECK(std::abs(v[0] - std::complex<double>(-1, 0)) <= 1e-12);
      CHECK(std::abs(v[1] - std::complex<double>(1, 0)) <= 1e-12);
    }
  }
  SUBCASE("property: endpoint invariance") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<std::int64_t> offset(-5, 5);
    for (int t = 0; t < 100; ++t) {
      const PhaseVector g(2, testing::random_phases(4, rng));
      std::vector<std::int64_t> j(4);
      for (auto& v : j) v = offset(rng);
      const auto a = evaluate_curve(g, LatticeOffset(j), 1.0);
      const auto b = evaluate_curve(g, LatticeOffset::zeros(4), 1.0);
      for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-9);
    }
  }
  SUBCASE("t outside [0, 1]") {
    for (double t : {-0.1, 1.5, std::nan("")}) {
      CHECK(kind_of([&] { evaluate_curve(h, LatticeOffset::zeros(2), t); }) ==
            ErrorKind::DomainError);
    }
  }
}

}  // namespace
}  // namespace pauligeo
