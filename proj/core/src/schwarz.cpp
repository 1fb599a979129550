#include "qcdist/schwarz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qcdist/errors.hpp"
#include "qcdist/special_fn.hpp"

namespace qcdist {

namespace {

constexpr double kDualRouteTolerance = 1e-10;

void require_dilatation(double K) {
  if (!(K >= 1) || !std::isfinite(K)) {
    throw DomainError("maximal dilatation K must be finite and >= 1, got " +
                      std::to_string(K));
  }
}

// th(s) with its complement 1/ch(s), s >= 0.
Modulus tanh_modulus(double s) { return {std::tanh(s), 1 / std::cosh(s)}; }

double arch_e() {
  const double e = std::numbers::e;
  return std::log(e + std::sqrt((e - 1) * (e + 1)));
}

double radial_map(double exponent, double r) {
  if (!(r > 0 && r < 1)) throw DomainError("radial map: r outside (0, 1)");
  const double rc = std::sqrt((1 - r) * (1 + r));
  return 2 * std::pow(r, exponent) /
         (std::pow(1 + rc, exponent) + std::pow(1 - rc, exponent));
}

}  // namespace

HyperbolicDistance::HyperbolicDistance(double value) : value_(value) {
  if (!(value >= 0)) throw DomainError("hyperbolic distance must be >= 0");
}

SchwarzConstants schwarz_constants() {
  const double a = arch_e();
  const double e = std::numbers::e;
  return {a * std::tanh(a), std::log(2 * (1 + std::sqrt(1 - 1 / (e * e))))};
}

HyperbolicDistance hyperbolic_distance(const DiskPoint& x, const DiskPoint& y) {
  const double nx = x.norm(), ny = y.norm();
  const double t = std::sqrt(((1 - nx) * (1 + nx)) * ((1 - ny) * (1 + ny)));
  return HyperbolicDistance(2 * std::asinh(distance(x, y) / t));
}

double c_of_k(double K) {
  require_dilatation(K);
  return -std::log(phi_k(1 / K, Modulus::from_value(std::exp(-1.0))).value);
}

CofKCheck c_of_k_checked(double K) {
  const double log_route = c_of_k(K);
  const double arth_route = 2 * arth(phi_k(K, tanh_modulus(0.5)));
  return {log_route, arth_route,
          std::abs(log_route - arth_route) <= kDualRouteTolerance};
}

double c_lower_linear(double K) {
  require_dilatation(K);
  return schwarz_constants().u * (K - 1) + 1;
}

double c_lower_cosh(double K) {
  require_dilatation(K);
  const double z = K * arch_e();
  return z + std::log1p(std::exp(-2 * z)) - std::numbers::ln2;
}

double c_upper_linear(double K) {
  require_dilatation(K);
  return schwarz_constants().v * (K - 1) + K;
}

double schwarz_quotient(double K, double t) {
  require_dilatation(K);
  if (K == 1) throw DomainError("schwarz_quotient: K must exceed 1");
  if (!(t > 0) || !std::isfinite(t)) {
    throw DomainError("schwarz_quotient: t must be positive");
  }
  const double numerator = 2 * arth(phi_k(K, tanh_modulus(t / 2)));
  return numerator / std::max(t, std::pow(t, 1 / K));
}

double schwarz_rho_bound(HyperbolicDistance rho, double K) {
  const double r = rho.value();
  return c_of_k(K) * std::max(r, std::pow(r, 1 / K));
}

VuobookBounds theorem_vuobook_bounds(HyperbolicDistance rho, double K, int n,
                                     const GrotzschPolicy& lambda) {
  const double alpha = alpha_exponent(n, K);
  const double lam = lambda.resolve(n);
  const Modulus th = tanh_modulus(rho.value() / 2);

  VuobookBounds out{std::nullopt, 0, K * (rho.value() + std::log(4.0))};
  if (n == 2) out.phi_form = 2 * arth(phi_k(K, th));
  const double relaxed_arg = std::pow(lam, 1 - alpha) * std::pow(th.value, alpha);
  out.relaxed_form = relaxed_arg >= 1
                         ? std::numeric_limits<double>::infinity()
                         : 2 * arth(Modulus::from_value(relaxed_arg));
  return out;
}

double radial_map_g(double K, int n, double r) {
  if (!(K > 1)) throw DomainError("radial_map_g: K must exceed 1");
  return radial_map(alpha_exponent(n, K), r);
}

double radial_map_h(double K, int n, double r) {
  if (!(K > 1)) throw DomainError("radial_map_h: K must exceed 1");
  return radial_map(beta_exponent(n, K), r);
}

}  // namespace qcdist
