#pragma once

// Planar special functions: the complete elliptic integral K(r), the
// Grötzsch ring modulus mu(r), its inverse, the Hersch-Pfluger distortion
// function phi_K and the planar Grötzsch/Teichmüller capacities.
//
// Every function is pure and thread-safe.

#include <numbers>

namespace qcdist {

/// Tolerance and iteration budget for the iterative routines below.
struct Accuracy {
  double abs_tol = 1e-14;
  int max_iter = 64;

  /// Throws DomainError unless abs_tol > 0 and max_iter >= 1.
  void validate() const;
};

inline constexpr Accuracy kAgmAccuracy{1e-14, 64};
inline constexpr Accuracy kBisectionAccuracy{1e-14, 200};

/// A modulus r in [0, 1] together with its complement r' = sqrt(1 - r^2).
///
/// Carrying r' explicitly keeps full relative precision near r = 1, where
/// 1 - r is not representable.
struct Modulus {
  double value;
  double complement;

  /// Builds the pair from r, computing r' = sqrt((1 - r)(1 + r)).
  static Modulus from_value(double r);
  /// Builds the pair from r', computing r = sqrt((1 - r')(1 + r')).
  static Modulus from_complement(double rc);

  Modulus swapped() const { return {complement, value}; }
};

/// Arithmetic-geometric mean of a, b > 0.
double agm(double a, double b, const Accuracy& acc = kAgmAccuracy);

/// Complete elliptic integral of the first kind, K(r) = pi / (2 agm(1, r')),
/// for 0 <= r < 1.
double ellip_k(double r);

/// mu(r) = (pi/2) K(r') / K(r) for r in (0, 1).
double mu(double r);
/// mu evaluated from an explicit (r, r') pair; both must lie in (0, 1).
double mu(const Modulus& m);

/// Inverse of mu on (0, inf), via the nome q = exp(-2y) and Jacobi theta
/// series. `acc.max_iter` bounds the number of series terms.
double mu_inv(double y, const Accuracy& acc = kAgmAccuracy);
/// As mu_inv, returning the complement alongside the value.
Modulus mu_inv_modulus(double y, const Accuracy& acc = kAgmAccuracy);

/// Inverse of mu by bracketed bisection on (eps, 1 - eps) followed by a
/// secant polish. Slower than mu_inv; kept as an independent route.
double mu_inv_bracketed(double y, const Accuracy& acc = kBisectionAccuracy);

/// Hersch-Pfluger distortion phi_K(r) = mu^{-1}(mu(r) / K), K > 0, r in (0, 1).
double phi_k(double K, double r);
/// phi_K on a (r, r') pair. Accepts the closed endpoints: phi_K(0) = 0 and
/// phi_K(1) = 1.
Modulus phi_k(double K, const Modulus& r);

/// gamma_2(s) = 2 pi / mu(1/s), the Grötzsch ring capacity, s > 1.
double gamma2(double s);

/// tau_2(t) = gamma_2(sqrt(t + 1)) / 2, the Teichmüller ring capacity, t > 0.
double tau2(double t);

/// Inverse hyperbolic tangent of m.value, computed as log((1 + r) / r').
double arth(const Modulus& m);

}  // namespace qcdist
