#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "qcdist/errors.hpp"
#include "qcdist/special_fn.hpp"

using namespace qcdist;
using std::numbers::pi;

namespace {

const double kInvSqrt2 = 1 / std::numbers::sqrt2;

std::vector<double> open_grid(std::size_t n) {
  std::vector<double> g;
  for (std::size_t i = 1; i <= n; ++i) g.push_back(static_cast<double>(i) / (n + 1));
  return g;
}

}  // namespace

TEST_SUITE("special_fn") {
  TEST_CASE("agm fixed point, homogeneity and symmetry") {
    CHECK(agm(1, 1) == 1);
    CHECK(agm(2, 8) == doctest::Approx(2 * agm(1, 4)).epsilon(1e-15));
    CHECK(agm(0.3, 7) == doctest::Approx(agm(7, 0.3)).epsilon(1e-15));
    const double m = agm(1, 0.5);
    CHECK(m > 0.5);
    CHECK(m < 1);
  }

  TEST_CASE("agm against an extended-precision recurrence") {
    for (const auto& [a, b] : std::vector<std::pair<double, double>>{
             {1, 0.5}, {1, 1e-6}, {3, 4}, {1, 0.999999}}) {
      const double want = static_cast<double>(oracle::agm(a, b));
      CHECK(oracle::relative_error(agm(a, b), want) < 1e-15);
    }
    CHECK(agm(1, 0.5) == doctest::Approx(0.72839551).epsilon(1e-8));
  }

  TEST_CASE("agm rejects bad input and reports non-convergence") {
    CHECK_THROWS_AS(agm(0, 1), DomainError);
    CHECK_THROWS_AS(agm(1, -1), DomainError);
    CHECK_THROWS_AS(agm(1, 1e-10, Accuracy{1e-16, 1}), IterationLimitError);
    CHECK_THROWS_AS(agm(1, 0.5, Accuracy{0, 10}), DomainError);
  }

  TEST_CASE("ellip_k against quadrature of the defining integral") {
    CHECK(ellip_k(0) == doctest::Approx(pi / 2).epsilon(1e-15));
    for (int i = 1; i <= 9; ++i) {
      const double r = i / 10.0;
      const double want = static_cast<double>(oracle::ellip_k(r));
      CHECK(std::abs(ellip_k(r) - want) < 1e-10);
    }
    CHECK(ellip_k(kInvSqrt2) == doctest::Approx(1.85407467).epsilon(1e-8));
    CHECK(ellip_k(0.9) == doctest::Approx(2.28054914).epsilon(1e-8));
  }

  TEST_CASE("ellip_k is increasing and defined on [0, 1)") {
    double prev = 0;
    for (double r : open_grid(200)) {
      const double k = ellip_k(r);
      CHECK(k > prev);
      prev = k;
    }
    CHECK_THROWS_AS(ellip_k(1), DomainError);
    CHECK_THROWS_AS(ellip_k(-0.1), DomainError);
  }

  TEST_CASE("mu at the symmetry point and against quadrature") {
    CHECK(std::abs(mu(kInvSqrt2) - pi / 2) < 1e-14);
    // 1.68575035... is K(0.5); mu(0.5) = (pi/2) K(sqrt 3/2) / K(1/2).
    CHECK(ellip_k(0.5) == doctest::Approx(1.68575035).epsilon(1e-8));
    CHECK(mu(0.5) == doctest::Approx(2.0094594).epsilon(1e-7));
    for (double r : {0.01, 0.2, 0.5, 0.8, 0.99}) {
      const double want = static_cast<double>(oracle::mu(r));
      CHECK(oracle::relative_error(mu(r), want) < 1e-12);
    }
  }

  TEST_CASE("mu(r) mu(r') = pi^2/4 on a 1000-point grid") {
    for (double r : open_grid(1000)) {
      const Modulus m = Modulus::from_value(r);
      const double prod = mu(m) * mu(m.swapped());
      CHECK(oracle::relative_error(prod, pi * pi / 4) < 1e-12);
    }
  }

  TEST_CASE("mu is strictly decreasing and rejects the endpoints") {
    double prev = INFINITY;
    for (double r : open_grid(500)) {
      const double v = mu(r);
      CHECK(v < prev);
      prev = v;
    }
    CHECK_THROWS_AS(mu(0.0), DomainError);
    CHECK_THROWS_AS(mu(1.0), DomainError);
    CHECK_THROWS_AS(mu(1.5), DomainError);
  }

  TEST_CASE("mu endpoint expansions") {
    CHECK(oracle::relative_error(mu(1e-10), std::log(4e10)) < 1e-12);
    const Modulus near_one = Modulus::from_complement(1e-12);
    CHECK(oracle::relative_error(mu(near_one), pi * pi / (4 * std::log(4e12))) < 1e-12);
    // Both sides of the switch to the expansion agree with log(4/r).
    CHECK(oracle::relative_error(mu(1.01e-8), std::log(4 / 1.01e-8)) < 1e-12);
    CHECK(oracle::relative_error(mu(0.99e-8), std::log(4 / 0.99e-8)) < 1e-12);
  }

  TEST_CASE("mu_inv inverts mu") {
    CHECK(std::abs(mu_inv(pi / 2) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(mu_inv(mu(0.123)) - 0.123) < 1e-12);
    const double y05 = static_cast<double>(oracle::mu(0.5L));
    CHECK(std::abs(mu_inv(y05) - 0.5) < 1e-8);
    CHECK(std::abs(mu_inv(2.00945938) - 0.5) < 1e-8);
    for (double r = 1e-6; r < 1; r += 0.0137) {
      CHECK(std::abs(mu_inv(mu(r)) - r) < 1e-12);
    }
    CHECK(std::abs(mu_inv(mu(1 - 1e-6)) - (1 - 1e-6)) < 1e-12);
  }

  TEST_CASE("theta route and bracketed route agree") {
    for (double y : {0.05, 0.3, 1.0, 1.5707, 1.5709, 2.0, 5.0, 15.0}) {
      CHECK(std::abs(mu_inv(y) - mu_inv_bracketed(y)) < 1e-13);
    }
  }

  TEST_CASE("mu_inv_modulus keeps the complement accurate near 1") {
    const Modulus m = mu_inv_modulus(mu(Modulus::from_complement(1e-10)));
    CHECK(oracle::relative_error(m.complement, 1e-10) < 1e-9);
    CHECK_THROWS_AS(mu_inv(0), DomainError);
    CHECK_THROWS_AS(mu_inv(-1), DomainError);
  }

  TEST_CASE("phi_k identities") {
    CHECK(phi_k(1, 0.37) == 0.37);
    CHECK(std::abs(phi_k(2, phi_k(0.5, 0.6)) - 0.6) < 1e-10);
    for (double K : {1.1, 1.5, 2.0, 5.0}) {
      for (double r : open_grid(99)) {
        CHECK(std::abs(phi_k(K, phi_k(1 / K, r)) - r) < 1e-10);
      }
    }
  }

  TEST_CASE("phi_k(2, 1/sqrt 2) solves mu(x) = pi/4") {
    const double want = static_cast<double>(
        oracle::bisect_decreasing([](oracle::Real r) { return oracle::mu(r); },
                                  oracle::kPi / 4, 0.5L, 1 - 1e-12L));
    CHECK(std::abs(phi_k(2, kInvSqrt2) - want) < 1e-12);
  }

  TEST_CASE("phi_k against the quadrature oracle") {
    for (double K : {0.5, 1.3, 2.0, 3.0}) {
      for (double r : {0.2, 0.5, 0.7}) {
        const double want = static_cast<double>(oracle::phi(K, r));
        CHECK(std::abs(phi_k(K, r) - want) < 1e-11);
      }
    }
  }

  TEST_CASE("phi_k is increasing and bounded by the explicit estimates") {
    for (int i = 0; i < 50; ++i) {
      const double K = 1 + 4.0 * i / 49;
      double prev = 0;
      for (double r : open_grid(50)) {
        const double p = phi_k(K, r);
        CHECK(p > prev);
        prev = p;
        // phi_K(r) <= 4^{1-1/K} r^{1/K}
        CHECK(p <= std::pow(4.0, 1 - 1 / K) * std::pow(r, 1 / K) * (1 + 1e-14));
        // phi_{1/K}(r) >= 4^{1-K} r^K
        CHECK(phi_k(1 / K, r) >= std::pow(4.0, 1 - K) * std::pow(r, K) * (1 - 1e-14));
      }
    }
  }

  TEST_CASE("phi_k on modulus pairs handles the closed endpoints") {
    CHECK(phi_k(2, Modulus{0, 1}).value == 0);
    CHECK(phi_k(2, Modulus{1, 0}).value == 1);
    const Modulus near_one = Modulus::from_complement(1e-13);
    const Modulus p = phi_k(0.5, near_one);
    CHECK(p.value < 1);
    CHECK(p.complement > 1e-13);
    CHECK_THROWS_AS(phi_k(0, 0.5), DomainError);
    CHECK_THROWS_AS(phi_k(2, 1.0), DomainError);
  }

  TEST_CASE("gamma2 and tau2") {
    CHECK(gamma2(std::numbers::sqrt2) == doctest::Approx(4).epsilon(1e-14));
    const double g2 = 2 * pi / static_cast<double>(oracle::mu(0.5L));
    CHECK(oracle::relative_error(gamma2(2), g2) < 1e-12);
    CHECK(gamma2(2) == doctest::Approx(3.12680).epsilon(1e-5));
    CHECK(gamma2(1.5) > gamma2(2.5));
    CHECK_THROWS_AS(gamma2(1), DomainError);

    CHECK(tau2(1) == doctest::Approx(2).epsilon(1e-14));
    CHECK(oracle::relative_error(tau2(3), g2 / 2) < 1e-12);
    CHECK(tau2(3) == doctest::Approx(1.56340).epsilon(1e-5));
    const double s = 1.7;
    CHECK(std::abs(2 * tau2(s * s - 1) - gamma2(s)) < 1e-13);
    CHECK(tau2(0.5) > tau2(5));
    CHECK_THROWS_AS(tau2(0), DomainError);
  }

  TEST_CASE("arth") {
    for (double r : {1e-12, 0.1, 0.49, 0.5, 0.9, 0.999999}) {
      CHECK(oracle::relative_error(arth(Modulus::from_value(r)), std::atanh(r)) < 1e-14);
    }
    const Modulus near_one = Modulus::from_complement(1e-15);
    CHECK(oracle::relative_error(arth(near_one), std::log(2 / 1e-15)) < 1e-14);
  }
}
