#pragma once

// Schwarz lemma for K-quasiregular self-maps of the unit disk in terms of the
// hyperbolic metric: rho(f(x), f(y)) <= c(K) max{rho, rho^{1/K}} with the
// explicit constant c(K) = -log phi_{1/K}(1/e), plus its elementary bounds.

#include <optional>

#include "qcdist/distortion_geometry.hpp"
#include "qcdist/mori_bounds.hpp"

namespace qcdist {

/// Non-negative hyperbolic length.
class HyperbolicDistance {
 public:
  /// Throws DomainError for negative or NaN values.
  explicit HyperbolicDistance(double value);

  double value() const { return value_; }

 private:
  double value_;
};

struct SchwarzConstants {
  double u;  ///< arch(e) th(arch(e)), the lower slope
  double v;  ///< log(2 (1 + sqrt(1 - 1/e^2))), the upper slope
};

SchwarzConstants schwarz_constants();

/// rho(x, y) = 2 arsinh(|x - y| / sqrt((1 - |x|^2)(1 - |y|^2))), equivalent
/// to th^2(rho/2) = |x-y|^2 / (|x-y|^2 + (1-|x|^2)(1-|y|^2)).
HyperbolicDistance hyperbolic_distance(const DiskPoint& x, const DiskPoint& y);

/// c(K) = -log phi_{1/K}(1/e), K >= 1.
double c_of_k(double K);

/// c(K) by both formulas; `consistent` when they agree to 1e-10.
struct CofKCheck {
  double log_route;   ///< -log phi_{1/K}(1/e)
  double arth_route;  ///< 2 arth(phi_K(th 1/2))
  bool consistent;
};
CofKCheck c_of_k_checked(double K);

/// u (K - 1) + 1.
double c_lower_linear(double K);
/// log(ch(K arch(e))), evaluated without overflow for large K.
double c_lower_cosh(double K);
/// v (K - 1) + K.
double c_upper_linear(double K);

/// 2 arth(phi_K(th(t/2))) / max{t, t^{1/K}}, K > 1, t > 0. Increasing on
/// (0, 1), decreasing on (1, inf), equal to c(K) at t = 1.
double schwarz_quotient(double K, double t);

/// c(K) max{rho, rho^{1/K}}.
double schwarz_rho_bound(HyperbolicDistance rho, double K);

struct VuobookBounds {
  /// 2 arth(phi_K(th(rho/2))); available for n = 2 only.
  std::optional<double> phi_form;
  /// 2 arth(lambda^{1-alpha} th(rho/2)^alpha); +inf once the argument
  /// reaches 1.
  double relaxed_form;
  /// K (rho + log 4).
  double linear_form;
};
VuobookBounds theorem_vuobook_bounds(HyperbolicDistance rho, double K, int n,
                                     const GrotzschPolicy& lambda);

/// Boundary values of the explicit radial K-quasiconformal maps:
///   g(r) = 2 r^alpha / ((1 + r')^alpha + (1 - r')^alpha)
///   h(r) = 2 r^beta  / ((1 + r')^beta  + (1 - r')^beta)
/// with alpha = K^{1/(1-n)} = 1/beta; K > 1, 0 < r < 1.
double radial_map_g(double K, int n, double r);
double radial_map_h(double K, int n, double r);

}  // namespace qcdist
