#pragma once

#include <functional>

namespace ipclab {

// Upper incomplete gamma Gamma(a, x), not regularized. Supports negative
// non-integer a (needed for power-tail integrals with exponent a in (-4, 0)).
double igamma_upper(double a, double x);

// Regularized lower/upper incomplete gamma, a > 0.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// CDF of Gamma(shape, rate), mean shape/rate.
double gamma_cdf(double x, double shape, double rate);

// Survival function of a chi-squared statistic with df degrees of freedom.
double chi2_sf(double stat, double df);

// Hurwitz zeta, s > 1, a > 0; riemann_zeta(s) = hurwitz_zeta(s, 1).
double hurwitz_zeta(double s, double a);
double riemann_zeta(double s);

// sum_{l=m+1}^inf l^{c-1} exp(beta*l) for beta <= 0 (beta == 0 needs c < 0),
// via midpoint Euler-Maclaurin against the incomplete-gamma integral.
double power_tail_exp_sum(double c, double beta, double m);

// sum_{l=m+1}^inf l^{c-1} (1 - exp(beta*l)) for c < 0, beta <= 0. Stable when
// beta*m is small, where the direct difference of the two sums above cancels.
double power_tail_one_minus_exp_sum(double c, double beta, double m);

// Adaptive 15-point Gauss-Legendre on [a, b] to relative tolerance rel_tol.
// Throws QuadratureError when the subdivision budget is exhausted.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol);

// Integral over [a, inf) of a decaying integrand: widening panels, each
// integrated adaptively, stopped once successive panels are negligible.
double integrate_decaying(const std::function<double(double)>& f, double a,
                          double rel_tol, double first_width = 1.0);

}  // namespace ipclab
