#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "qcdist/errors.hpp"

namespace qcdist {

struct MinimumResult {
  double x;
  double value;
  int evaluations;
};

/// Golden-section minimization of a unimodal function on [lo, hi].
///
/// Iterates until the bracket is narrower than `tol` (absolute, in x). The
/// returned point is the best of the final interior probe and the two
/// original endpoints, so a minimum pinned at a boundary is reported exactly
/// at that boundary.
template <typename F>
MinimumResult golden_section_minimize(F&& f, double lo, double hi, double tol,
                                      int max_iter = 500) {
  if (!(lo < hi)) throw DomainError("golden_section_minimize: empty bracket");
  if (!(tol > 0)) throw DomainError("golden_section_minimize: tol must be > 0");
  constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

  const double f_lo = f(lo);
  const double f_hi = f(hi);
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  int evals = 4;
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  MinimumResult best = fc <= fd ? MinimumResult{c, fc, evals}
                                 : MinimumResult{d, fd, evals};
  if (f_lo <= best.value) best = {lo, f_lo, evals};
  if (f_hi < best.value) best = {hi, f_hi, evals};
  return best;
}

/// Plain bisection for a sign change of `f` on [lo, hi].
///
/// Stops when the bracket is narrower than `tol` or after `max_iter`
/// halvings, whichever comes first, and returns the bracket midpoint.
template <typename F>
double bisect_root(F&& f, double lo, double hi, double tol, int max_iter = 50) {
  if (!(lo < hi)) throw BracketError("bisect_root: empty bracket");
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0) return lo;
  if (f_hi == 0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) ||
      std::isnan(f_hi)) {
    throw BracketError("bisect_root: no sign change on [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qcdist
