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
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pauligeo/error.hpp"
#include "pauligeo/family.hpp"

namespace pauligeo {
namespace {

using std::numbers::pi;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected pauligeo::Error");
  return ErrorKind::DomainError;
}

TEST_CASE("make_h0") {
  const PhaseVector h = make_h0(3, default_sigma());
  const double a = pi / 8;
  const std::vector<double> expected{a, -a, -a, a, -a, a, a, -a};
  for (std::size_t k = 0; k < 8; ++k) CHECK(h[k] == doctest::Approx(expected[k]));

  const CoeffVector c = expand(h);
  for (std::uint32_t m = 0; m < 8; ++m) {
    CHECK(c[PauliMask{m}] == doctest::Approx(m == 7 ? a : 0.0).epsilon(1e-15));
  }

  SUBCASE("weight-three sigma at n = 4") {
    const CoeffVector c4 = expand(make_h0(4, PauliMask{0b1110}));
    for (std::uint32_t m = 0; m < 16; ++m) {
      CHECK(std::abs(c4[PauliMask{m}] - (m == 0b1110 ? pi / 16 : 0.0)) <= 1e-15);
    }
  }
  SUBCASE("agrees with the dense transform for every admissible sigma") {
    for (unsigned n = 3; n <= 5; ++n) {
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (testing::count_bits(s) < 3) continue;
        const PhaseVector hs = make_h0(n, PauliMask{s});
        const auto dense =
            testing::dense_expand({hs.values().begin(), hs.values().end()});
        for (std::size_t m = 0; m < dense.size(); ++m) {
          CHECK(std::abs(dense[m] - (m == s ? pi / (1 << n) : 0.0)) <= 1e-14);
        }
      }
    }
  }
}

TEST_CASE("instance validation") {
  CHECK(kind_of([] {
          FamilyInstance{3, PauliMask{0b011}, 0.0}.validate();
        }) == ErrorKind::WeightTooLow);
  CHECK(kind_of([] { FamilyInstance{2, PauliMask{0b11}, 0.0}.validate(); }) ==
        ErrorKind::BadDimension);
  CHECK(kind_of([] {
          FamilyInstance{3, PauliMask{0b1111}, 0.0}.validate();
        }) == ErrorKind::BadDimension);
  CHECK(kind_of([] { FamilyInstance{3, default_sigma(), pi / 8}.validate(); }) ==
        ErrorKind::EpsilonTooLarge);
  CHECK(kind_of([] { FamilyInstance{3, default_sigma(), -1e-3}.validate(); }) ==
        ErrorKind::EpsilonTooLarge);
  CHECK_NOTHROW(FamilyInstance{3, default_sigma(), pi / 8 - 1e-9}.validate());
  CHECK(kind_of([] { make_h0(3, PauliMask{0b101}); }) == ErrorKind::WeightTooLow);
}

TEST_CASE("perturb") {
  SUBCASE("epsilon = 0 reproduces H0") {
    const PhaseVector p = perturb(FamilyInstance{});
    const PhaseVector h0 = make_h0(3, default_sigma()).canonicalized();
    for (std::size_t k = 0; k < 8; ++k) CHECK(p[k] == h0[k]);
    CHECK_FALSE(phases_pairwise_distinct(p));
  }
  SUBCASE("small epsilon splits every eigenphase") {
    const PhaseVector p = perturb(FamilyInstance{3, default_sigma(), 1e-6});
    CHECK(p.is_canonical());
    CHECK(phases_pairwise_distinct(p));
    const PhaseVector h0 = make_h0(3, default_sigma()).canonicalized();
    for (std::size_t k = 0; k < 8; ++k) {
      CHECK(std::abs(p[k] - h0[k]) <= 1e-6 + 1e-15);
    }
  }
  SUBCASE("property: distinct and close across n and epsilon") {
    for (unsigned n = 3; n <= 6; ++n) {
      const double limit = pi / (1 << n);
      for (double frac : {1e-9, 1e-3, 0.25, 0.9}) {
        const FamilyInstance inst{n, default_sigma(), frac * limit};
        const PhaseVector p = perturb(inst);
        const PhaseVector h0 = make_h0(n, default_sigma()).canonicalized();
        CHECK(phases_pairwise_distinct(p));
        for (std::size_t k = 0; k < p.size(); ++k) {
          CHECK(std::abs(p[k] - h0[k]) <= inst.epsilon + 1e-12);
        }
      }
    }
  }
  SUBCASE("epsilon out of range") {
    CHECK(kind_of([] { perturb(FamilyInstance{3, default_sigma(), 1.0}); }) ==
          ErrorKind::EpsilonTooLarge);
  }
}

TEST_CASE("phases_pairwise_distinct") {
  CHECK(phases_pairwise_distinct(PhaseVector(1, {0.0, 1.0})));
  CHECK_FALSE(phases_pairwise_distinct(PhaseVector(1, {1.0, 1.0})));
}

TEST_CASE("verify_lemma2") {
  const std::vector<double> q_list{1, 8, 64, 512};
  SUBCASE("brute force at n = 3") {
    const Lemma2Report report =
        verify_lemma2(3, default_sigma(), q_list, FamilySolver::Brute);
    REQUIRE(report.rows.size() == 4);
    CHECK(report.passed);
    CHECK(report.rows[0].minimum == doctest::Approx(pi / 8));
    CHECK(report.rows[2].minimum == doctest::Approx(64 * pi / 8));
    CHECK(report.rows[3].minimum == doctest::Approx(64 * pi));
    for (const Lemma2Row& row : report.rows) {
      CHECK(row.solver == SolverId::Brute);
      CHECK(row.optimal);
      CHECK(std::abs(row.minimum - row.bound) <= 1e-9);
    }
  }
  SUBCASE("auto picks branch-and-bound at n = 4") {
    const Lemma2Report report = verify_lemma2(4, PauliMask{0b1011}, q_list);
    CHECK(report.passed);
    for (const Lemma2Row& row : report.rows) {
      CHECK(row.solver == SolverId::Bnb);
      CHECK(row.minimum == doctest::Approx(row.q * pi / 16));
    }
  }
  SUBCASE("n = 8 with pi/N = pi/256") {
    const std::vector<double> qs{256};
    const Lemma2Report report = verify_lemma2(8, default_sigma(), qs);
    CHECK(report.passed);
    CHECK(report.rows[0].minimum == doctest::Approx(pi));
  }
  SUBCASE("q below one is rejected") {
    const std::vector<double> qs{0.5};
    CHECK(kind_of([&] { verify_lemma2(3, default_sigma(), qs); }) ==
          ErrorKind::InvalidSpec);
  }
}

TEST_CASE("exponential scaling") {
  const std::vector<unsigned> ns{3, 4, 5};
  const auto rows = exponential_scaling_table(ns);
  REQUIRE(rows.size() == 3);
  for (const ScalingRow& row : rows) {
    CHECK(row.q == std::pow(4.0, row.n));
    CHECK(row.dim == (std::size_t{1} << row.n));
    CHECK(std::abs(row.length - pi * std::pow(2.0, row.n)) <= 1e-9 * row.q);
    CHECK(row.passed);
  }
  CHECK(rows[0].length == doctest::Approx(8 * pi));
  CHECK(rows[1].length == doctest::Approx(16 * pi));
  CHECK(rows[2].length == doctest::Approx(32 * pi));

  SUBCASE("custom rule") {
    const std::vector<unsigned> n3{3};
    const auto custom = exponential_scaling_table(n3, [](unsigned) { return 2.0; });
    CHECK(custom[0].length == doctest::Approx(2 * pi / 8));
  }
  SUBCASE("n out of range") {
    const std::vector<unsigned> bad{9};
    CHECK_THROWS_AS(exponential_scaling_table(bad), Error);
  }
}

TEST_CASE("perturbation stability") {
  const FamilyInstance inst{3, default_sigma(), 1e-6};
  const PerturbationRow row = perturbation_check(inst, 1e6);
  CHECK(row.distinct);
  CHECK(row.passed);
  CHECK(std::abs(row.unperturbed - 1e6 * pi / 8) <= 1e-9 * 1e6);
  CHECK(std::abs(row.perturbed - 1e6 * pi / 8) <= 1.0);
  CHECK(row.deviation <= row.stability_bound + 1e-9);

  for (double q : {1.0, 64.0, 4096.0}) {
    const PerturbationRow r =
        perturbation_check(FamilyInstance{4, PauliMask{0b1101}, 1e-4}, q);
    CHECK(r.passed);
    CHECK(r.deviation <= q * 1e-4 + 1e-9);
  }
}

}  // namespace
}  // namespace pauligeo
