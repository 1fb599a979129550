#pragma once

// Planar (n = 2) distortion geometry: the auxiliary distance D(t, x, y), the
// quantity s1, the Hölder quotient U(t, x, y) built from the exact
// Hersch-Pfluger function, and the Monte Carlo estimate of
// HQ(K) = sup_{x,y} inf_{t>=1} U(t, x, y).

#include <cstddef>
#include <cstdint>

namespace qcdist {

/// A point of the open unit disk.
class DiskPoint {
 public:
  /// Throws DomainError unless x^2 + y^2 < 1.
  DiskPoint(double x, double y);
  DiskPoint() = default;

  double x() const { return x_; }
  double y() const { return y_; }
  double norm() const;

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  double x_ = 0;
  double y_ = 0;
};

double distance(const DiskPoint& a, const DiskPoint& b);

/// D(t, x, y) = |x + t y/|y|| for y != 0 and |x + e1| for y = 0.
double d_aux(double t, const DiskPoint& x, const DiskPoint& y);

/// s1 = max{t + |x| + D(t, y, x), t + |y| + D(t, x, y)}; x, y != 0, t >= 1.
double s1_quantity(double t, const DiskPoint& x, const DiskPoint& y);

/// U(t, x, y) = (3 + 1/phi_{1/K}(1/t)) phi_K(sqrt(2d/(s1 + d)))^2 / d^{1/K}
/// with d = |x - y|. At t = 1 the first factor is exactly 4.
double u_quotient(double t, const DiskPoint& x, const DiskPoint& y, double K);

/// The lambda-relaxed majorant of U (lambda_2 = 4):
/// (3 + 4^{K-1} t^K) 4^{2(1-1/K)} (2d/(s1 + d))^{1/K} / d^{1/K}.
double u_quotient_relaxed(double t, const DiskPoint& x, const DiskPoint& y,
                          double K);

/// Right-hand sides of the corollary forms of the distortion bound (n = 2,
/// lambda = 4), each without the 1/d^alpha normalisation:
///   s1 form:  (3 + 4^{K-1} t^K) 16^{1-1/K} (2d / (s1 + d))^{1/K}
///   sum form: same with s1 replaced by 2t + ||x| - |y||
///   max form: (3 + 4^{K-1} t^K) 16^{1-1/K} (d / max{t + |x|, t + |y|})^{1/K}
struct CorollaryBounds {
  double s1_form;
  double sum_form;
  double max_form;
};
CorollaryBounds corollary_bounds(double t, const DiskPoint& x,
                                 const DiskPoint& y, double K);

/// How random disk points are drawn.
enum class DiskSampling {
  /// radius uniform in [0, 1), angle uniform: denser near the origin.
  kPolarRadius,
  /// radius = sqrt(uniform): uniform with respect to area.
  kAreaUniform,
};

struct EstimatorConfig {
  std::uint64_t seed = 20090406;
  std::size_t samples = 100000;
  double t_lo = 1;
  double t_hi = 50;
  double t_tol = 1e-8;
  unsigned workers = 1;
  DiskSampling sampling = DiskSampling::kPolarRadius;

  /// Throws DomainError on samples == 0, unordered bracket, t_lo < 1,
  /// t_tol <= 0 or workers == 0.
  void validate() const;
};

struct PairMinimum {
  double value;  ///< inf over the t bracket of U
  double t;      ///< minimizing t
};

/// inf of U(., x, y) over [cfg.t_lo, cfg.t_hi] by golden-section search; the
/// better bracket endpoint wins when U is monotone on the bracket.
PairMinimum minimize_u_over_t(const DiskPoint& x, const DiskPoint& y, double K,
                              const EstimatorConfig& cfg);

/// |x - y|^{1/K} inf_t U(t, x, y): the best distortion bound for the pair.
double pairwise_bound(const DiskPoint& x, const DiskPoint& y, double K,
                      const EstimatorConfig& cfg);

/// The `index`-th sampled pair of the stream defined by (seed, sampling).
/// Pairs with |x|, |y| or |x - y| below 1e-12 are redrawn.
struct SampledPair {
  DiskPoint x;
  DiskPoint y;
};
SampledPair sample_pair(std::uint64_t seed, std::uint64_t index,
                        DiskSampling sampling);

struct HqEstimate {
  double value;
  DiskPoint x;
  DiskPoint y;
  double t;             ///< minimizing t for the arg-max pair
  std::size_t index;    ///< sample index of the arg-max pair
};

/// Sampled estimate of HQ(K): the maximum over cfg.samples pairs of
/// inf_t U. Pair i depends only on (seed, i), and ties resolve to the lowest
/// index, so the result is bit-identical for every worker count.
HqEstimate hq_estimate(double K, const EstimatorConfig& cfg);

}  // namespace qcdist
