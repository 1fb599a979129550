#pragma once

// Upper bounds for Mori's constant M(n, K), the least constant in
// |f(x) - f(y)| <= M |x - y|^alpha over K-quasiconformal self-maps of the
// unit ball fixing the origin, alpha = K^{1/(1-n)}.

#include <optional>
#include <string_view>

namespace qcdist {

enum class GrotzschMode { kExactPlanar, kSupplied, kUpperEnvelope };

/// How the Grötzsch ring constant lambda_n is chosen. lambda_2 = 4 is known;
/// for n >= 3 only lambda_n in [4, 2 e^{n-1}) is known, so the caller picks a
/// value or the upper envelope.
class GrotzschPolicy {
 public:
  static GrotzschPolicy exact_planar() { return {GrotzschMode::kExactPlanar, {}}; }
  static GrotzschPolicy supplied(double lambda) {
    return {GrotzschMode::kSupplied, lambda};
  }
  static GrotzschPolicy upper_envelope() {
    return {GrotzschMode::kUpperEnvelope, {}};
  }

  GrotzschMode mode() const { return mode_; }
  std::optional<double> supplied_value() const { return supplied_; }

  /// lambda_n for dimension n; throws PolicyError when the policy does not
  /// apply (exact-planar with n != 2, supplied value outside [4, 2e^{n-1})).
  double resolve(int n) const;

 private:
  GrotzschPolicy(GrotzschMode mode, std::optional<double> supplied)
      : mode_(mode), supplied_(supplied) {}

  GrotzschMode mode_;
  std::optional<double> supplied_;
};

enum class BoundFamily { kMoriConjecture, kAV, kBVInf, kBVClosed, kUPH, kFV };

std::string_view name(BoundFamily family);

/// alpha = K^{1/(1-n)}, n >= 2, K >= 1.
double alpha_exponent(int n, double K);
/// beta = 1 / alpha = K^{1/(n-1)}.
double beta_exponent(int n, double K);

/// 16^{1 - 1/K}: the conjectured value of M(2, K).
double mori_conjecture_bound(double K);

/// Anderson-Vamanamurthy: 4 lambda^{2(1 - alpha)}.
double av_bound(int n, double K, const GrotzschPolicy& lambda);

/// h(t) = (3 + lambda^{beta-1} t^beta) t^{-alpha} lambda^{2(1-alpha)}, t >= 1.
double h_of_t(int n, double K, const GrotzschPolicy& lambda, double t);

/// Critical point of h: t1 = (3 alpha)^alpha lambda^{alpha-1} (beta-alpha)^{-alpha}.
/// Requires K > 1.
double t1_point(int n, double K, const GrotzschPolicy& lambda);

/// The closed form h(t1) evaluated without checking t1 >= 1. For K = 1
/// returns the limit value 1. This is the quantity tabulated for every K,
/// including those where t1 < 1 and the closed form undercuts inf_{t>=1} h.
double h_at_t1(int n, double K, const GrotzschPolicy& lambda);

/// h(t1) where it is the infimum of h over t >= 1. Throws ValidityError when
/// t1 < 1; use bv_inf_bound there.
double bv_closed_bound(int n, double K, const GrotzschPolicy& lambda);

/// inf { h(t) : 1 <= t <= t_max } by golden-section search seeded with t1.
/// Defaults t_max to max(10 t1, 100). K = 1 returns the limit value 1.
double bv_inf_bound(int n, double K, const GrotzschPolicy& lambda,
                    std::optional<double> t_max = std::nullopt);

/// 3^{1-alpha^2} 2^{5(1-alpha)} K^5 ((3/2)(beta-alpha)^{1/4} + exp(sqrt(beta^2-1))),
/// valid for beta in (1, 2); ValidityError otherwise.
double uph_bound(int n, double K);

/// The planar FV bound, evaluated in log space. K = 1 gives the
/// limit value 1.
double fv_bound(double K);
double log_fv_bound(double K);

struct BoundEvaluation {
  double value;
  /// False only for kBVClosed when t1 < 1.
  bool within_validity;
};

/// Evaluates one family at (n, K). kBVClosed yields h_at_t1 and flags t1 < 1
/// instead of throwing. Families restricted to n = 2 or to beta in (1, 2)
/// throw ValidityError outside their region.
BoundEvaluation evaluate_bound(BoundFamily family, int n, double K,
                               const GrotzschPolicy& lambda);

}  // namespace qcdist
