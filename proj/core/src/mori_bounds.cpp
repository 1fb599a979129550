#include "qcdist/mori_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qcdist/errors.hpp"
#include "qcdist/scalar_search.hpp"
#include "qcdist/special_fn.hpp"

namespace qcdist {

namespace {

void require_dimension(int n) {
  if (n < 2) throw DomainError("dimension n must be >= 2, got " + std::to_string(n));
}

void require_dilatation(double K) {
  if (!(K >= 1) || !std::isfinite(K)) {
    throw DomainError("maximal dilatation K must be finite and >= 1, got " +
                      std::to_string(K));
  }
}

void require_strict_dilatation(double K) {
  require_dilatation(K);
  if (K == 1) throw DomainError("K must exceed 1 (beta - alpha vanishes at K = 1)");
}

double envelope_value(int n) { return 2 * std::exp(static_cast<double>(n - 1)); }

}  // namespace

double GrotzschPolicy::resolve(int n) const {
  require_dimension(n);
  switch (mode_) {
    case GrotzschMode::kExactPlanar:
      if (n != 2) {
        throw PolicyError("exact-planar lambda is only known for n = 2; supply "
                          "a value or use the upper envelope for n = " +
                          std::to_string(n));
      }
      return 4;
    case GrotzschMode::kSupplied: {
      const double v = supplied_.value_or(0);
      if (!(v >= 4 && v < envelope_value(n))) {
        throw PolicyError("supplied lambda " + std::to_string(v) +
                          " outside [4, 2e^{n-1}) for n = " + std::to_string(n));
      }
      return v;
    }
    case GrotzschMode::kUpperEnvelope:
      return envelope_value(n);
  }
  throw PolicyError("unknown Grötzsch policy");
}

std::string_view name(BoundFamily family) {
  switch (family) {
    case BoundFamily::kMoriConjecture: return "conjecture";
    case BoundFamily::kAV: return "av";
    case BoundFamily::kBVInf: return "bvinf";
    case BoundFamily::kBVClosed: return "bv";
    case BoundFamily::kUPH: return "uph";
    case BoundFamily::kFV: return "fv";
  }
  return "?";
}

double alpha_exponent(int n, double K) {
  require_dimension(n);
  require_dilatation(K);
  return std::pow(K, 1.0 / (1 - n));
}

double beta_exponent(int n, double K) {
  require_dimension(n);
  require_dilatation(K);
  return std::pow(K, 1.0 / (n - 1));
}

double mori_conjecture_bound(double K) {
  require_dilatation(K);
  return std::exp((1 - 1 / K) * std::log(16.0));
}

double av_bound(int n, double K, const GrotzschPolicy& lambda) {
  const double alpha = alpha_exponent(n, K);
  return 4 * std::pow(lambda.resolve(n), 2 * (1 - alpha));
}

double h_of_t(int n, double K, const GrotzschPolicy& lambda, double t) {
  const double alpha = alpha_exponent(n, K);
  const double beta = beta_exponent(n, K);
  const double lam = lambda.resolve(n);
  if (!(t >= 1) || !std::isfinite(t)) {
    throw DomainError("h_of_t: t must be >= 1, got " + std::to_string(t));
  }
  return (3 + std::pow(lam, beta - 1) * std::pow(t, beta)) * std::pow(t, -alpha) *
         std::pow(lam, 2 * (1 - alpha));
}

double t1_point(int n, double K, const GrotzschPolicy& lambda) {
  require_strict_dilatation(K);
  const double alpha = alpha_exponent(n, K);
  const double beta = beta_exponent(n, K);
  const double lam = lambda.resolve(n);
  return std::pow(3 * alpha, alpha) * std::pow(lam, alpha - 1) *
         std::pow(beta - alpha, -alpha);
}

double h_at_t1(int n, double K, const GrotzschPolicy& lambda) {
  require_dilatation(K);
  const double lam = lambda.resolve(n);
  if (K == 1) return 1;
  const double alpha = alpha_exponent(n, K);
  const double beta = beta_exponent(n, K);
  const double a2 = alpha * alpha;
  const double gap = beta - alpha;
  const double first = std::pow(3.0, 1 - a2) * std::pow(gap, a2) /
                       std::pow(alpha, a2) * std::pow(lam, alpha - a2);
  const double inner =
      std::pow(3 * alpha, alpha) * std::pow(lam, alpha - 1) / std::pow(gap, alpha);
  const double second = std::pow(lam, beta - 1) * std::pow(inner, gap);
  return (first + second) * std::pow(lam, 2 * (1 - alpha));
}

double bv_closed_bound(int n, double K, const GrotzschPolicy& lambda) {
  const double t1 = t1_point(n, K, lambda);
  if (t1 < 1) {
    throw ValidityError("bv_closed_bound: t1 = " + std::to_string(t1) +
                        " < 1 at K = " + std::to_string(K) +
                        "; the closed form is not the infimum over t >= 1, "
                        "use bv_inf_bound");
  }
  return h_at_t1(n, K, lambda);
}

double bv_inf_bound(int n, double K, const GrotzschPolicy& lambda,
                    std::optional<double> t_max) {
  require_dimension(n);
  require_dilatation(K);
  lambda.resolve(n);
  if (K == 1) return 1;
  const double t1 = t1_point(n, K, lambda);
  const double hi = t_max.value_or(std::max(10 * t1, 100.0));
  if (!(hi > 1)) throw DomainError("bv_inf_bound: t_max must exceed 1");
  const auto h = [&](double t) { return h_of_t(n, K, lambda, t); };
  const double tol = 1e-10 * std::max(1.0, std::min(t1, hi));
  double best = golden_section_minimize(h, 1, hi, tol).value;
  if (t1 >= 1 && t1 <= hi) best = std::min(best, h(t1));
  return best;
}

double uph_bound(int n, double K) {
  const double alpha = alpha_exponent(n, K);
  const double beta = beta_exponent(n, K);
  if (!(beta > 1 && beta < 2)) {
    throw ValidityError("uph_bound: requires beta in (1, 2), got beta = " +
                        std::to_string(beta));
  }
  return std::pow(3.0, 1 - alpha * alpha) * std::pow(2.0, 5 * (1 - alpha)) *
         std::pow(K, 5) *
         (1.5 * std::pow(beta - alpha, 0.25) + std::exp(std::sqrt(beta * beta - 1)));
}

double log_fv_bound(double K) {
  require_dilatation(K);
  const double k2p1 = K * K + 1;
  const double k2m1 = (K - 1) * (K + 1);
  // phi_K at (K^2-1)/(K^2+1), whose complement is 2K/(K^2+1).
  const Modulus arg{k2m1 / k2p1, 2 * K / k2p1};
  const double phi = phi_k(K, arg).value;
  double log_value = std::log1p(phi) + (2 * K - 3 / K) * std::numbers::ln2 +
                     0.5 * (K + 1 / K) * std::log(k2p1);
  if (K > 1) log_value -= 0.5 * (K - 1 / K) * std::log(k2m1);
  return log_value;
}

double fv_bound(double K) { return std::exp(log_fv_bound(K)); }

BoundEvaluation evaluate_bound(BoundFamily family, int n, double K,
                               const GrotzschPolicy& lambda) {
  const auto planar_only = [n, family] {
    if (n != 2) {
      throw ValidityError(std::string(name(family)) +
                          " bound is only defined for n = 2");
    }
  };
  switch (family) {
    case BoundFamily::kMoriConjecture:
      planar_only();
      return {mori_conjecture_bound(K), true};
    case BoundFamily::kAV:
      return {av_bound(n, K, lambda), true};
    case BoundFamily::kBVInf:
      return {bv_inf_bound(n, K, lambda), true};
    case BoundFamily::kBVClosed: {
      const double value = h_at_t1(n, K, lambda);
      const bool valid = K == 1 || t1_point(n, K, lambda) >= 1;
      return {value, valid};
    }
    case BoundFamily::kUPH:
      return {uph_bound(n, K), true};
    case BoundFamily::kFV:
      planar_only();
      return {fv_bound(K), true};
  }
  throw DomainError("unknown bound family");
}

}  // namespace qcdist
