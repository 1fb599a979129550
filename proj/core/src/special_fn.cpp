#include "qcdist/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "qcdist/errors.hpp"

namespace qcdist {

namespace {

using std::numbers::pi;

constexpr double kEndpointCutoff = 1e-8;
constexpr double kPiSquaredOver4 = pi * pi / 4;

bool is_open_unit(double r) { return r > 0 && r < 1; }

// A pair is usable by mu when both members are positive. One of them may
// round to exactly 1 while the other still carries the information.
bool is_interior_pair(const Modulus& m) {
  return m.value > 0 && m.complement > 0 && m.value <= 1 && m.complement <= 1;
}

std::string str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Nome inversion for y >= pi/2, i.e. q = exp(-2y) <= exp(-pi).
//   r  = theta2(q)^2 / theta3(q)^2 = 4 exp(-y) S2^2 / S3^2
//   r' = theta4(q)^2 / theta3(q)^2
// with S2 = sum_{n>=0} q^{n(n+1)}, S3 = 1 + 2 sum q^{n^2},
// S4 = 1 + 2 sum (-1)^n q^{n^2}.
Modulus nome_inverse(double y, const Accuracy& acc) {
  const double q = std::exp(-2 * y);
  double s2 = 1, s3 = 1, s4 = 1;
  double q_n = 1, q_n2 = 1;  // q^n and q^(n^2), advanced incrementally
  bool converged = false;
  for (int n = 1; n <= acc.max_iter; ++n) {
    q_n2 *= q_n * q_n * q;
    q_n *= q;
    const double t2 = q_n2 * q_n;
    const double t3 = q_n2;
    s2 += t2;
    s3 += 2 * t3;
    s4 += (n % 2 == 0 ? 2 : -2) * t3;
    if (t3 <= std::numeric_limits<double>::epsilon() * 1e-3) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw IterationLimitError("mu_inv: theta series did not converge for y = " +
                              str(y));
  }
  const double ratio2 = s2 / s3;
  const double ratio4 = s4 / s3;
  return {4 * std::exp(-y) * ratio2 * ratio2, ratio4 * ratio4};
}

}  // namespace

void Accuracy::validate() const {
  if (!(abs_tol > 0)) throw DomainError("Accuracy: abs_tol must be > 0");
  if (max_iter < 1) throw DomainError("Accuracy: max_iter must be >= 1");
}

Modulus Modulus::from_value(double r) {
  if (!(r >= 0 && r <= 1)) throw DomainError("modulus outside [0, 1]: " + str(r));
  return {r, std::sqrt((1 - r) * (1 + r))};
}

Modulus Modulus::from_complement(double rc) {
  return from_value(rc).swapped();
}

double agm(double a, double b, const Accuracy& acc) {
  acc.validate();
  if (!(a > 0 && b > 0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("agm: arguments must be positive and finite");
  }
  for (int i = 0; i < acc.max_iter; ++i) {
    if (std::abs(a - b) <= acc.abs_tol * std::max(a, b)) return 0.5 * (a + b);
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  if (std::abs(a - b) <= acc.abs_tol * std::max(a, b)) return 0.5 * (a + b);
  throw IterationLimitError("agm: no convergence within " +
                            std::to_string(acc.max_iter) + " iterations");
}

double ellip_k(double r) {
  if (!(r >= 0 && r < 1)) throw DomainError("ellip_k: r outside [0, 1): " + str(r));
  return pi / (2 * agm(1, std::sqrt((1 - r) * (1 + r))));
}

double mu(const Modulus& m) {
  if (!is_interior_pair(m)) {
    throw DomainError("mu: modulus outside (0, 1): " + str(m.value));
  }
  if (m.value < kEndpointCutoff) return std::log(4 / m.value);
  if (m.complement < kEndpointCutoff) {
    return kPiSquaredOver4 / std::log(4 / m.complement);
  }
  return (pi / 2) * agm(1, m.complement) / agm(1, m.value);
}

double mu(double r) {
  if (!is_open_unit(r)) throw DomainError("mu: r outside (0, 1): " + str(r));
  return mu(Modulus::from_value(r));
}

Modulus mu_inv_modulus(double y, const Accuracy& acc) {
  acc.validate();
  if (!(y > 0) || !std::isfinite(y)) {
    throw DomainError("mu_inv: argument must be positive and finite: " + str(y));
  }
  if (y >= pi / 2) return nome_inverse(y, acc);
  return nome_inverse(kPiSquaredOver4 / y, acc).swapped();
}

double mu_inv(double y, const Accuracy& acc) {
  return mu_inv_modulus(y, acc).value;
}

double mu_inv_bracketed(double y, const Accuracy& acc) {
  acc.validate();
  if (!(y > 0) || !std::isfinite(y)) {
    throw DomainError("mu_inv_bracketed: argument must be positive and finite");
  }
  // Below pi/2 the root sits near r = 1; solve for r' instead.
  if (y < pi / 2) {
    const double rc = mu_inv_bracketed(kPiSquaredOver4 / y, acc);
    return std::sqrt((1 - rc) * (1 + rc));
  }
  // Bisect on log r over [DBL_MIN, 1/sqrt(2)], where mu spans
  // [pi/2, ~708]; mu is decreasing so mu(lo) > y > mu(hi).
  double lo = std::log(std::numeric_limits<double>::min());
  double hi = std::log(std::numbers::sqrt2 / 2);
  const auto g = [y](double log_r) { return mu(std::exp(log_r)) - y; };
  if (g(lo) < 0) throw DomainError("mu_inv_bracketed: result underflows");
  int iter = 0;
  for (; iter < acc.max_iter && std::expm1(hi - lo) > acc.abs_tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (std::expm1(hi - lo) > acc.abs_tol) {
    throw IterationLimitError("mu_inv_bracketed: bisection budget exhausted");
  }
  // Secant polish inside the final bracket.
  double x0 = lo, x1 = hi, g0 = g(x0), g1 = g(x1);
  for (int i = 0; i < 3 && g1 != g0; ++i) {
    const double x2 = x1 - g1 * (x1 - x0) / (g1 - g0);
    if (!(x2 >= lo && x2 <= hi)) break;
    x0 = x1;
    g0 = g1;
    x1 = x2;
    g1 = g(x1);
  }
  return std::exp(x1);
}

Modulus phi_k(double K, const Modulus& r) {
  if (!(K > 0) || !std::isfinite(K)) {
    throw DomainError("phi_k: K must be positive and finite: " + str(K));
  }
  if (!(r.value >= 0 && r.complement >= 0)) {
    throw DomainError("phi_k: invalid modulus pair");
  }
  if (K == 1) return r;
  if (r.value == 0) return {0, 1};
  if (r.complement == 0) return {1, 0};
  return mu_inv_modulus(mu(r) / K);
}

double phi_k(double K, double r) {
  if (!is_open_unit(r)) throw DomainError("phi_k: r outside (0, 1): " + str(r));
  return phi_k(K, Modulus::from_value(r)).value;
}

double gamma2(double s) {
  if (!(s > 1) || !std::isfinite(s)) {
    throw DomainError("gamma2: s must exceed 1: " + str(s));
  }
  return 2 * pi / mu(Modulus{1 / s, std::sqrt((s - 1) * (s + 1)) / s});
}

double tau2(double t) {
  if (!(t > 0) || !std::isfinite(t)) {
    throw DomainError("tau2: t must be positive: " + str(t));
  }
  // gamma2(sqrt(t + 1)) / 2 with the complement sqrt(t / (1 + t)) formed
  // directly, so small t keeps its precision.
  return pi / mu(Modulus{1 / std::sqrt(1 + t), std::sqrt(t / (1 + t))});
}

double arth(const Modulus& m) {
  if (m.value < 0.5) return 0.5 * std::log1p(2 * m.value / (1 - m.value));
  return std::log((1 + m.value) / m.complement);
}

}  // namespace qcdist
