#include "qcdist/distortion_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "qcdist/counter_rng.hpp"
#include "qcdist/errors.hpp"
#include "qcdist/scalar_search.hpp"
#include "qcdist/special_fn.hpp"

namespace qcdist {

namespace {

constexpr double kDegenerate = 1e-12;

void require_dilatation(double K) {
  if (!(K >= 1) || !std::isfinite(K)) {
    throw DomainError("maximal dilatation K must be finite and >= 1");
  }
}

void require_pair(const DiskPoint& x, const DiskPoint& y) {
  if (x.norm() == 0 || y.norm() == 0) {
    throw DegeneratePairError("points must differ from the origin");
  }
  if (x == y) throw DegeneratePairError("points must be distinct");
}

// 3 + 1/phi_{1/K}(1/t), exactly 4 at t = 1.
double endpoint_factor(double t, double K) {
  if (t == 1) return 4;
  const Modulus inv_t{1 / t, std::sqrt((t - 1) * (t + 1)) / t};
  return 3 + 1 / phi_k(1 / K, inv_t).value;
}

}  // namespace

DiskPoint::DiskPoint(double x, double y) : x_(x), y_(y) {
  if (!(x * x + y * y < 1)) {
    throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") is not inside the unit disk");
  }
}

double DiskPoint::norm() const { return std::hypot(x_, y_); }

double distance(const DiskPoint& a, const DiskPoint& b) {
  return std::hypot(a.x() - b.x(), a.y() - b.y());
}

double d_aux(double t, const DiskPoint& x, const DiskPoint& y) {
  if (!(t > 0)) throw DomainError("d_aux: t must be positive");
  const double ny = y.norm();
  if (ny == 0) return std::hypot(x.x() + 1, x.y());
  return std::hypot(x.x() + t * y.x() / ny, x.y() + t * y.y() / ny);
}

double s1_quantity(double t, const DiskPoint& x, const DiskPoint& y) {
  if (!(t >= 1)) throw DomainError("s1_quantity: t must be >= 1");
  if (x.norm() == 0 || y.norm() == 0) {
    throw DomainError(
        "s1_quantity: x and y must be non-zero (use the Schwarz estimate at the "
        "origin)");
  }
  const double a = t + x.norm() + d_aux(t, y, x);
  const double b = t + y.norm() + d_aux(t, x, y);
  return std::max(a, b);
}

double u_quotient(double t, const DiskPoint& x, const DiskPoint& y, double K) {
  require_dilatation(K);
  require_pair(x, y);
  if (!(t >= 1) || !std::isfinite(t)) throw DomainError("u_quotient: t must be >= 1");
  const double d = distance(x, y);
  const double s1 = s1_quantity(t, x, y);
  const Modulus arg{std::sqrt(2 * d / (s1 + d)), std::sqrt((s1 - d) / (s1 + d))};
  const double phi = phi_k(K, arg).value;
  return endpoint_factor(t, K) * phi * phi / std::pow(d, 1 / K);
}

double u_quotient_relaxed(double t, const DiskPoint& x, const DiskPoint& y,
                          double K) {
  require_dilatation(K);
  require_pair(x, y);
  if (!(t >= 1)) throw DomainError("u_quotient_relaxed: t must be >= 1");
  const double alpha = 1 / K;
  const double d = distance(x, y);
  const double s1 = s1_quantity(t, x, y);
  return (3 + std::pow(4.0, K - 1) * std::pow(t, K)) *
         std::pow(4.0, 2 * (1 - alpha)) * std::pow(2 * d / (s1 + d), alpha) /
         std::pow(d, alpha);
}

CorollaryBounds corollary_bounds(double t, const DiskPoint& x,
                                 const DiskPoint& y, double K) {
  require_dilatation(K);
  require_pair(x, y);
  if (!(t >= 1)) throw DomainError("corollary_bounds: t must be >= 1");
  const double alpha = 1 / K;
  const double d = distance(x, y);
  const double nx = x.norm(), ny = y.norm();
  const double scale =
      (3 + std::pow(4.0, K - 1) * std::pow(t, K)) * std::pow(4.0, 2 * (1 - alpha));
  const double s1 = s1_quantity(t, x, y);
  return {
      scale * std::pow(2 * d / (s1 + d), alpha),
      scale * std::pow(2 * d / (2 * t + std::abs(nx - ny) + d), alpha),
      scale * std::pow(d / std::max(t + nx, t + ny), alpha),
  };
}

void EstimatorConfig::validate() const {
  if (samples == 0) throw DomainError("EstimatorConfig: samples must be >= 1");
  if (!(t_lo >= 1 && t_lo < t_hi) || !std::isfinite(t_hi)) {
    throw DomainError("EstimatorConfig: need 1 <= t_lo < t_hi");
  }
  if (!(t_tol > 0)) throw DomainError("EstimatorConfig: t_tol must be > 0");
  if (workers == 0) throw DomainError("EstimatorConfig: workers must be >= 1");
}

PairMinimum minimize_u_over_t(const DiskPoint& x, const DiskPoint& y, double K,
                              const EstimatorConfig& cfg) {
  cfg.validate();
  const auto u = [&](double t) { return u_quotient(t, x, y, K); };
  const MinimumResult m = golden_section_minimize(u, cfg.t_lo, cfg.t_hi, cfg.t_tol);
  return {m.value, m.x};
}

double pairwise_bound(const DiskPoint& x, const DiskPoint& y, double K,
                      const EstimatorConfig& cfg) {
  return std::pow(distance(x, y), 1 / K) * minimize_u_over_t(x, y, K, cfg).value;
}

SampledPair sample_pair(std::uint64_t seed, std::uint64_t index,
                        DiskSampling sampling) {
  const Philox4x32 rng(seed);
  const auto draw = [sampling](std::array<double, 2> u, double& px, double& py) {
    const double radius = sampling == DiskSampling::kAreaUniform ? std::sqrt(u[0]) : u[0];
    const double angle = 2 * std::numbers::pi * u[1];
    px = radius * std::cos(angle);
    py = radius * std::sin(angle);
  };
  for (std::uint32_t attempt = 0;; ++attempt) {
    double x0, x1, y0, y1;
    draw(rng.uniform_pair(index, attempt, 0), x0, x1);
    draw(rng.uniform_pair(index, attempt, 1), y0, y1);
    if (!(x0 * x0 + x1 * x1 < 1) || !(y0 * y0 + y1 * y1 < 1)) continue;
    const DiskPoint x(x0, x1), y(y0, y1);
    if (x.norm() < kDegenerate || y.norm() < kDegenerate ||
        distance(x, y) < kDegenerate) {
      continue;
    }
    return {x, y};
  }
}

HqEstimate hq_estimate(double K, const EstimatorConfig& cfg) {
  require_dilatation(K);
  cfg.validate();

  const std::size_t workers = std::min<std::size_t>(cfg.workers, cfg.samples);
  std::vector<HqEstimate> partial(workers);
  std::vector<std::exception_ptr> failures(workers);
  const auto scan = [&](std::size_t w) {
    const std::size_t begin = cfg.samples * w / workers;
    const std::size_t end = cfg.samples * (w + 1) / workers;
    HqEstimate best{-1, {}, {}, 0, begin};
    for (std::size_t i = begin; i < end; ++i) {
      const SampledPair p = sample_pair(cfg.seed, i, cfg.sampling);
      const PairMinimum m = minimize_u_over_t(p.x, p.y, K, cfg);
      if (m.value > best.value) best = {m.value, p.x, p.y, m.t, i};
    }
    partial[w] = best;
  };

  const auto run = [&](std::size_t w) noexcept {
    try {
      scan(w);
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  // Chunks are in index order, so a strict comparison keeps the lowest index
  // among equal maxima.
  HqEstimate result = partial.front();
  for (const HqEstimate& e : partial) {
    if (e.value > result.value) result = e;
  }
  return result;
}

}  // namespace qcdist
