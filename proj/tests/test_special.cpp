#include "ipclab/special.hpp"

#include <cmath>

#include "doctest.h"
#include "ipclab/errors.hpp"

using namespace ipclab;

namespace {

// Reference values below come from tools/reference_values.py (mpmath, 30
// digits), independent of this implementation.

void check_rel(double got, double want, double tol) {
  CHECK(got == doctest::Approx(want).epsilon(tol).scale(0.0));
}

}  // namespace

TEST_CASE("upper incomplete gamma across sign and branch boundaries") {
  check_rel(igamma_upper(-0.5, 1.0), 0.178147711781560690193, 1e-13);
  check_rel(igamma_upper(0.5, 1.0), 0.278805585280661976499, 1e-13);
  check_rel(igamma_upper(-0.3, 0.2), 1.52008775860799354957, 1e-13);
  check_rel(igamma_upper(0.7, 3.0), 0.0331687046378589528489, 1e-13);
  check_rel(igamma_upper(-2.3, 0.5), 0.991321025005983889678, 1e-12);
  check_rel(igamma_upper(1.7, 0.01), 0.908406021269993213724, 1e-13);
  check_rel(igamma_upper(-1.3, 4.0), 0.000503805005104680867417, 1e-12);
  check_rel(igamma_upper(-0.5, 1e-4), 196.47509196486230116, 1e-12);
}

TEST_CASE("upper incomplete gamma through non-positive integer a") {
  check_rel(igamma_upper(0.0, 0.5), 0.559773594776160811747, 1e-13);
  check_rel(igamma_upper(-1.0, 0.5), 0.653287724649106035461, 1e-13);
  check_rel(igamma_upper(-2.0, 1.0), 0.109691967197760136839, 1e-12);
  check_rel(igamma_upper(0.0, 0.001), 6.331539364136149332, 1e-13);
  check_rel(igamma_upper(-0.9999999, 0.3), 1.56371731240267525752, 1e-12);
  check_rel(igamma_upper(-2.0000001, 0.7), 0.338900332752413867131, 1e-11);
  check_rel(igamma_upper(-3.0, 0.9), 0.134173287228141418786, 1e-11);
  CHECK_THROWS_AS(igamma_upper(-0.5, 0.0), DivergenceError);
  CHECK(igamma_upper(0.5, 0.0) == doctest::Approx(std::sqrt(M_PI)));
}

TEST_CASE("regularized gamma pair sums to one") {
  for (double a : {0.3, 1.0, 2.7, 25.0, 80.0}) {
    for (double x : {0.01, 0.5, 1.0, 5.0, 40.0, 120.0}) {
      CHECK(gamma_p(a, x) + gamma_q(a, x) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("chi-squared survival matches closed forms") {
  // df = 2 is Exp(1/2): sf(x) = exp(-x/2).
  check_rel(chi2_sf(7.0, 2.0), std::exp(-3.5), 1e-13);
  check_rel(chi2_sf(0.2, 2.0), std::exp(-0.1), 1e-13);
  // 95% quantile of chi2 with one degree of freedom.
  check_rel(chi2_sf(3.841458820694124, 1.0), 0.05, 1e-10);
  CHECK(chi2_sf(0.0, 5.0) == 1.0);
}

TEST_CASE("gamma cdf basics") {
  CHECK(gamma_cdf(-1.0, 2.0, 1.0) == 0.0);
  CHECK(gamma_cdf(0.0, 2.0, 1.0) == 0.0);
  // Exp(rate): shape 1.
  check_rel(gamma_cdf(2.0, 1.0, 1.5), 1.0 - std::exp(-3.0), 1e-13);
  CHECK(gamma_cdf(1e9, 3.0, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("hurwitz and riemann zeta") {
  check_rel(hurwitz_zeta(2.3, 17.0), 0.0200968985461078994191, 1e-13);
  check_rel(hurwitz_zeta(1.5, 3.25), 1.20121731137037173974, 1e-13);
  check_rel(hurwitz_zeta(4.3, 2.0), 0.0642809643258400100568, 1e-13);
  check_rel(hurwitz_zeta(2.5, 1000001.0), 6.66666166666875e-10, 1e-12);
  check_rel(riemann_zeta(1.3), 3.93194921180954422697, 1e-13);
  check_rel(riemann_zeta(1.5), 2.61237534868548834335, 1e-13);
  check_rel(riemann_zeta(2.3), 1.43241779931532371592, 1e-13);
  check_rel(riemann_zeta(2.5), 1.34148725725091717976, 1e-13);
  check_rel(riemann_zeta(3.3), 1.15194479472077368855, 1e-13);
  CHECK_THROWS_AS(riemann_zeta(1.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), DomainError);
}

TEST_CASE("power tail sum agrees with direct summation") {
  for (double c : {-1.3, 0.7, 1.5}) {
    for (double beta : {-0.5, -0.02}) {
      double m = 50.0;
      long double brute = 0.0L;
      for (int l = 51; l < 20000; ++l) {
        long double term =
            std::pow(static_cast<long double>(l), static_cast<long double>(c) - 1.0L) *
            std::exp(static_cast<long double>(beta) * l);
        brute += term;
        if (term < 1e-25L * brute) break;
      }
      check_rel(power_tail_exp_sum(c, beta, m),
                static_cast<double>(brute), 1e-9);
    }
  }
}

TEST_CASE("one-minus-exp tail sum across branch and pole cases") {
  check_rel(power_tail_one_minus_exp_sum(-0.5, -1e-6, 10000.0),
            0.00334523539462507309141, 1e-10);
  check_rel(power_tail_one_minus_exp_sum(-1.3, -1e-4, 10000.0),
            4.00434011388862486332e-6, 1e-10);
  check_rel(power_tail_one_minus_exp_sum(-0.5, -0.03, 50.0),
            0.269761310538660528847, 1e-11);
  check_rel(power_tail_one_minus_exp_sum(-2.0, -1e-5, 10000.0),
            8.37037841251263731356e-10, 1e-9);
  check_rel(power_tail_one_minus_exp_sum(-3.0, -2e-5, 10000.0),
            8.38770401204270158446e-14, 1e-9);
  check_rel(power_tail_one_minus_exp_sum(-0.7, -1e-8, 10000.0),
            1.02066740823981176222e-5, 1e-10);
  CHECK(power_tail_one_minus_exp_sum(-0.5, 0.0, 100.0) == 0.0);
  CHECK_THROWS_AS(power_tail_one_minus_exp_sum(0.5, -0.1, 100.0), DomainError);
}

TEST_CASE("power tail sum at beta zero reduces to hurwitz zeta") {
  check_rel(power_tail_exp_sum(-1.3, 0.0, 100.0), hurwitz_zeta(2.3, 101.0),
            1e-14);
  CHECK_THROWS_AS(power_tail_exp_sum(0.5, 0.0, 100.0), DivergenceError);
  CHECK(power_tail_exp_sum(1.5, -2.0, 400.0) == 0.0);
}

TEST_CASE("adaptive quadrature on analytic integrals") {
  check_rel(integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                               M_PI, 1e-12),
            2.0, 1e-11);
  check_rel(integrate_adaptive([](double x) { return std::exp(-x * x); }, 0.0,
                               10.0, 1e-12),
            0.5 * std::sqrt(M_PI), 1e-11);
  check_rel(integrate_adaptive([](double x) { return 1.0 / (1.0 + x * x); },
                               0.0, 1.0, 1e-12),
            0.25 * M_PI, 1e-11);
  CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0, 1e-12) ==
        0.0);
}

TEST_CASE("decaying quadrature reaches infinite upper limits") {
  check_rel(integrate_decaying([](double x) { return std::exp(-x); }, 0.0,
                               1e-11),
            1.0, 1e-9);
  check_rel(integrate_decaying(
                [](double x) { return x * std::exp(-0.5 * x * x); }, 0.0,
                1e-11),
            1.0, 1e-9);
  check_rel(integrate_decaying([](double x) { return std::pow(x, -2.5); },
                               1.0, 1e-11),
            2.0 / 3.0, 1e-8);
}
