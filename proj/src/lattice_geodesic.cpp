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

#include "pauligeo/lattice_geodesic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "lattice_reduction.hpp"
#include "pauligeo/error.hpp"

namespace pauligeo {

std::string_view to_string(SolverId solver) {
  switch (solver) {
    case SolverId::Rounding:
      return "rounding";
    case SolverId::Brute:
      return "brute";
    case SolverId::Bnb:
      return "bnb";
  }
  return "?";
}

PhaseVector shifted_hamiltonian(const PhaseVector& h, const LatticeOffset& j) {
  if (j.size() != h.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "offset length " + std::to_string(j.size()) +
                    " does not match phase length " + std::to_string(h.size()));
  }
  std::vector<double> out(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    out[k] = h[k] - kTwoPi * static_cast<double>(j[k]);
  }
  return PhaseVector(h.qubits(), std::move(out));
}

double geodesic_length(const PhaseVector& h, const LatticeOffset& j,
                       const MetricSpec& spec) {
  return metric_value(expand(shifted_hamiltonian(h, j)), spec);
}

namespace {

GeodesicResult make_result(const PhaseVector& h, LatticeOffset j,
                           const MetricSpec& spec, SolverId solver,
                           bool optimal) {
  CoeffVector coeffs = expand(shifted_hamiltonian(h, j));
  const double length = metric_value(coeffs, spec);
  return GeodesicResult{std::move(j), length, std::move(coeffs), solver,
                        optimal};
}

void require_quadratic(const MetricSpec& spec, const char* solver) {
  spec.validate();
  if (spec.kind == MetricKind::F1) {
    throw Error(ErrorKind::InvalidSpec,
                std::string(solver) + " supports only the fq and f2 metrics");
  }
}

/// Offsets whose length is within kLengthTolerance of the best seen so far.
/// The final choice is the lexicographically smallest of those within
/// tolerance of the overall best, so it is independent of visit order.
class CandidatePool {
 public:
  double best() const noexcept { return best_; }

  void offer(double length, const std::vector<std::int64_t>& j) {
    if (length > best_ + kLengthTolerance) return;
    if (length < best_) {
      best_ = length;
      if (items_.size() > 64) prune();
    }
    items_.emplace_back(length, j);
  }

  void merge(CandidatePool&& other) {
    best_ = std::min(best_, other.best_);
    for (auto& item : other.items_) items_.push_back(std::move(item));
    prune();
  }

  /// Lexicographically smallest offset within tolerance of the best.
  LatticeOffset pick() const {
    const std::vector<std::int64_t>* chosen = nullptr;
    for (const auto& [length, j] : items_) {
      if (length > best_ + kLengthTolerance) continue;
      if (chosen == nullptr || j < *chosen) chosen = &j;
    }
    return LatticeOffset(*chosen);
  }

 private:
  void prune() {
    std::erase_if(items_, [&](const auto& item) {
      return item.first > best_ + kLengthTolerance;
    });
  }

  double best_ = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, std::vector<std::int64_t>>> items_;
};

/// Round half down, so exact ties pick the smaller offset.
std::int64_t nearest_offset(double phase) {
  return static_cast<std::int64_t>(std::ceil(phase / kTwoPi - 0.5));
}

}  // namespace

GeodesicResult minimize_f2_closed_form(const PhaseVector& h) {
  std::vector<std::int64_t> j(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) j[k] = nearest_offset(h[k]);
  return make_result(h, LatticeOffset(std::move(j)), MetricSpec::f2(),
                     SolverId::Rounding, true);
}

double projection_gap(unsigned n) {
  return kTwoPi / static_cast<double>(dimension(n));
}

double projection_lower_bound(const PhaseVector& h, const MetricSpec& spec) {
  require_quadratic(spec, "projection_lower_bound");
  const double gap = projection_gap(h.qubits());
  const double w = spec.high_weight_factor();
  const CoeffVector coeffs = expand(h);
  double total = 0.0;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const double d = coeffs[m] - gap * std::round(coeffs[m] / gap);
    const double weight =
        is_high_weight(PauliMask{static_cast<std::uint32_t>(m)}) ? w : 1.0;
    total += weight * weight * d * d;
  }
  return std::sqrt(total);
}

GeodesicResult minimize_brute(const PhaseVector& h, const MetricSpec& spec,
                              const BruteOptions& options) {
  require_quadratic(spec, "brute-force search");
  if (h.qubits() > kBruteMaxQubits) {
    throw Error(ErrorKind::TooLarge,
                "brute-force search needs n <= " +
                    std::to_string(kBruteMaxQubits) + ", got n = " +
                    std::to_string(h.qubits()));
  }
  if (options.max_radius < 0) {
    throw Error(ErrorKind::DomainError, "max_radius must be non-negative");
  }

  const std::size_t size = h.size();
  const GeodesicResult seed = minimize_f2_closed_form(h);
  const double seed_length = geodesic_length(h, seed.offset, spec);

  // F2 >= |h_k - 2pi j_k| / sqrt(N) and Fq >= min(1, q) F2, so any offset
  // no longer than the seed has |h_k - 2pi j_k| <= reach.
  const double reach = std::sqrt(static_cast<double>(size)) * seed_length /
                           std::min(1.0, spec.high_weight_factor()) +
                       kLengthTolerance;

  std::vector<std::int64_t> lo(size), hi(size);
  bool covers_admissible = true;
  double box_count = 1.0;
  for (std::size_t k = 0; k < size; ++k) {
    const auto admissible_lo =
        static_cast<std::int64_t>(std::ceil((h[k] - reach) / kTwoPi));
    const auto admissible_hi =
        static_cast<std::int64_t>(std::floor((h[k] + reach) / kTwoPi));
    const std::int64_t centre = seed.offset[k];
    lo[k] = std::max(admissible_lo, centre - options.max_radius);
    hi[k] = std::min(admissible_hi, centre + options.max_radius);
    if (lo[k] != admissible_lo || hi[k] != admissible_hi) {
      covers_admissible = false;
    }
    box_count *= static_cast<double>(hi[k] - lo[k] + 1);
  }
  if (box_count > 5e8) {
    throw Error(ErrorKind::TooLarge, "brute-force box holds " +
                                         std::to_string(box_count) +
                                         " offsets");
  }

  // Odometer with the last coordinate fastest: lexicographic order.
  CandidatePool pool;
  std::vector<std::int64_t> j = lo;
  for (;;) {
    pool.offer(geodesic_length(h, LatticeOffset(j), spec), j);
    std::size_t k = size;
    while (k > 0) {
      --k;
      if (j[k] < hi[k]) {
        ++j[k];
        break;
      }
      j[k] = lo[k];
      if (k == 0) {
        k = size + 1;  // wrapped the most significant digit
        break;
      }
    }
    if (k == size + 1) break;
  }

  GeodesicResult result =
      make_result(h, pool.pick(), spec, SolverId::Brute, false);
  result.optimal =
      covers_admissible ||
      result.length <= projection_lower_bound(h, spec) + kLengthTolerance;
  return result;
}

namespace {

/// Depth-first Schnorr-Euchner enumeration of
///   min_y || R (z - y) ||^2,  y integer,
/// with R upper triangular. Leaves are mapped back to lattice offsets
/// j = U y and scored exactly.
class Enumerator {
 public:
  static constexpr double kRelativeSlack = 1e-11;

  Enumerator(const PhaseVector& h, const MetricSpec& spec,
             const Eigen::MatrixXd& r, const Eigen::VectorXd& z,
             const detail::IntMatrix& transform, double scale,
             std::atomic<double>& shared_best)
      : h_(h),
        spec_(spec),
        transform_(transform),
        z_(z),
        dim_(z.size()),
        scale_(scale),
        shared_best_(shared_best),
        rr_(dim_),
        mu_(dim_, dim_),
        y_(dim_),
        centre_(dim_),
        partial_(dim_ + 1),
        step_(dim_),
        sign_(dim_) {
    for (Eigen::Index k = 0; k < dim_; ++k) {
      rr_(k) = r(k, k) * r(k, k);
      for (Eigen::Index l = k + 1; l < dim_; ++l) mu_(k, l) = r(k, l) / r(k, k);
    }
  }

  /// Squared enumeration radius implied by the shared incumbent. The
  /// relative slack covers rounding in R and the centres (a few ulps times
  /// the dimension); leaves are rescored exactly.
  double radius_sq() const {
    const double len =
        shared_best_.load(std::memory_order_relaxed) + kLengthTolerance;
    const double scaled = len / scale_;
    return scaled * scaled * (1.0 + kRelativeSlack) + 1e-12;
  }

  double centre(Eigen::Index k) const {
    double c = z_(k);
    for (Eigen::Index l = k + 1; l < dim_; ++l) c += mu_(k, l) * (z_(l) - y_(l));
    return c;
  }

  /// Candidate values for the top coordinate in zigzag order.
  std::vector<std::int64_t> top_values() {
    const Eigen::Index top = dim_ - 1;
    const double c = z_(top);
    std::vector<std::int64_t> out;
    const double bound = radius_sq();
    start_level(top, c);
    for (;;) {
      const double d = rr_(top) * sq(c - static_cast<double>(y_(top)));
      if (d > bound) break;
      out.push_back(y_(top));
      advance(top);
    }
    return out;
  }

  void run_branch(std::int64_t top_value, CandidatePool& pool) {
    const Eigen::Index top = dim_ - 1;
    y_(top) = top_value;
    partial_(top) = rr_(top) * sq(z_(top) - static_cast<double>(top_value));
    if (partial_(top) > radius_sq()) return;
    if (dim_ == 1) {
      leaf(pool);
      return;
    }
    Eigen::Index k = top - 1;
    start_level(k, centre(k));
    for (;;) {
      const double d =
          partial_(k + 1) + rr_(k) * sq(centre_(k) - static_cast<double>(y_(k)));
      if (d <= radius_sq()) {
        if (k == 0) {
          leaf(pool);
          advance(0);
          continue;
        }
        partial_(k) = d;
        --k;
        start_level(k, centre(k));
        continue;
      }
      ++k;
      if (k == top) return;
      advance(k);
    }
  }

 private:
  static double sq(double v) { return v * v; }

  void start_level(Eigen::Index k, double c) {
    centre_(k) = c;
    y_(k) = static_cast<std::int64_t>(std::round(c));
    sign_(k) = c >= static_cast<double>(y_(k)) ? 1 : -1;
    step_(k) = 0;
  }

  // Next value by increasing distance from the centre: y0, y0+s, y0-s, ...
  void advance(Eigen::Index k) {
    const std::int64_t t = ++step_(k);
    const std::int64_t base = static_cast<std::int64_t>(std::round(centre_(k)));
    const std::int64_t magnitude = (t + 1) / 2;
    y_(k) = base + ((t % 2 == 1) ? sign_(k) * magnitude : -sign_(k) * magnitude);
  }

  void leaf(CandidatePool& pool) {
    const detail::IntMatrix j = transform_ * y_;
    std::vector<std::int64_t> offset(j.data(), j.data() + j.size());
    const double length = geodesic_length(h_, LatticeOffset(offset), spec_);
    double current = shared_best_.load(std::memory_order_relaxed);
    while (length < current &&
           !shared_best_.compare_exchange_weak(current, length,
                                               std::memory_order_relaxed)) {
    }
    pool.offer(length, offset);
  }

  const PhaseVector& h_;
  const MetricSpec& spec_;
  const detail::IntMatrix& transform_;
  const Eigen::VectorXd& z_;
  Eigen::Index dim_;
  double scale_;
  std::atomic<double>& shared_best_;

  Eigen::VectorXd rr_;
  Eigen::MatrixXd mu_;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> y_;
  Eigen::VectorXd centre_;
  Eigen::VectorXd partial_;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> step_;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> sign_;
};

}  // namespace

GeodesicResult minimize_bnb(const PhaseVector& h, const MetricSpec& spec,
                            const BnbOptions& options) {
  require_quadratic(spec, "branch-and-bound");
  if (spec.high_weight_factor() < 1.0) {
    throw Error(ErrorKind::InvalidSpec, "branch-and-bound needs q >= 1");
  }
  if (h.qubits() > kBnbMaxQubits) {
    throw Error(ErrorKind::TooLarge,
                "branch-and-bound needs n <= " + std::to_string(kBnbMaxQubits) +
                    ", got n = " + std::to_string(h.qubits()));
  }

  const auto dim = static_cast<Eigen::Index>(h.size());
  const double w = spec.high_weight_factor();

  // Basis column k is D M e_k; the coefficient vector of H - 2pi diag(j)
  // weighted by D is (2pi/N) D M (h/2pi - j).
  Eigen::MatrixXd basis(dim, dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    const PauliMask mask{static_cast<std::uint32_t>(m)};
    const double wm = is_high_weight(mask) ? w : 1.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
      const bool odd = std::popcount(static_cast<std::uint32_t>(m & k)) & 1;
      basis(m, k) = odd ? -wm : wm;
    }
  }
  const double scale = kTwoPi / static_cast<double>(dim);

  const detail::ReducedBasis reduced = detail::lll_reduce(basis);

  Eigen::VectorXd x(dim);
  for (Eigen::Index k = 0; k < dim; ++k) x(k) = h[k] / kTwoPi;
  const Eigen::VectorXd z = reduced.inverse.cast<double>() * x;

  const Eigen::MatrixXd gram = reduced.basis.transpose() * reduced.basis;
  const Eigen::LLT<Eigen::MatrixXd> cholesky(gram);
  if (cholesky.info() != Eigen::Success) {
    throw Error(ErrorKind::DomainError,
                "Gram matrix of the weighted lattice is not positive definite");
  }
  const Eigen::MatrixXd r = cholesky.matrixU();

  CandidatePool seed_pool;
  const GeodesicResult seed = minimize_f2_closed_form(h);
  const double seed_length = geodesic_length(h, seed.offset, spec);
  seed_pool.offer(seed_length, seed.offset.values());
  std::atomic<double> shared_best{seed_length};

  Enumerator root(h, spec, r, z, reduced.transform, scale, shared_best);
  const std::vector<std::int64_t> tops = root.top_values();

  const unsigned workers = std::max(
      1u, std::min<unsigned>(options.workers, static_cast<unsigned>(tops.size())));
  std::vector<CandidatePool> pools(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned id) {
    Enumerator local(h, spec, r, z, reduced.transform, scale, shared_best);
    for (std::size_t i = next++; i < tops.size(); i = next++) {
      local.run_branch(tops[i], pools[id]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(work, id);
  }

  for (auto& pool : pools) seed_pool.merge(std::move(pool));
  return make_result(h, seed_pool.pick(), spec, SolverId::Bnb, true);
}

std::vector<std::complex<double>> evaluate_curve(const PhaseVector& h,
                                                 const LatticeOffset& j,
                                                 double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorKind::DomainError,
                "curve parameter t = " + std::to_string(t) +
                    " outside [0, 1]");
  }
  const PhaseVector shifted = shifted_hamiltonian(h, j);
  std::vector<std::complex<double>> out(shifted.size());
  for (std::size_t k = 0; k < shifted.size(); ++k) {
    out[k] = std::polar(1.0, -shifted[k] * t);
  }
  return out;
}

}  // namespace pauligeo
