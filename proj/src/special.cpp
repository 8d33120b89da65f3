#include "ipclab/special.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "ipclab/errors.hpp"

namespace ipclab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Regularized lower gamma P(a, x) by power series, for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) {
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw ConvergenceError("gamma_p series failed at a=" + std::to_string(a) +
                         " x=" + std::to_string(x));
}

// Regularized upper gamma Q(a, x) by Lentz continued fraction, for x >= a + 1.
double gamma_q_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) {
      return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw ConvergenceError("gamma_q continued fraction failed at a=" +
                         std::to_string(a) + " x=" + std::to_string(x));
}

// log Gamma(1 + d) for |d| <= 1/2 with full relative accuracy near d = 0
// (std::lgamma only promises absolute accuracy near its zero).
double lgamma1p(double d) {
  static const auto zeta_m1 = [] {
    std::array<double, 31> z{};
    for (int k = 2; k <= 30; ++k) z[k] = riemann_zeta(k) - 1.0;
    return z;
  }();
  constexpr double kEulerGamma = 0.57721566490153286061;
  double sum = d * (1.0 - kEulerGamma) - std::log1p(d);
  double dk = -d;
  for (int k = 2; k <= 30; ++k) {
    dk *= -d;
    double term = zeta_m1[k] / static_cast<double>(k) * dk;
    sum += term;
    if (std::fabs(term) < 1e-20 * (std::fabs(sum) + 1e-300)) break;
  }
  return sum;
}

// Gamma(a, x) for a <= 0.5, x in (0, 1.5): Gamma(a) - x^a sum (-x)^n/(n!(a+n))
// with the pole pair at a near -n0 combined analytically through expm1, so the
// value stays accurate through every non-positive integer a.
double igamma_upper_smallx(double a, double x) {
  int n0 = a < 0.0 ? static_cast<int>(std::lround(-a)) : 0;
  double d = a + static_cast<double>(n0);  // |d| <= 1/2
  double lx = std::log(x);
  // bracket = Gamma(a) - x^a (-x)^{n0} / (n0! (a + n0)), poles cancelled:
  // (-1)^{n0}/(n0! d) * [expm1(lgamma(1+d) - sum log1p(-d/j)) - expm1(d lx)]
  double lead = 1.0;  // (-1)^{n0} / n0!
  double logsum = lgamma1p(d);
  for (int j = 1; j <= n0; ++j) {
    lead /= -static_cast<double>(j);
    logsum -= std::log1p(-d / static_cast<double>(j));
  }
  double bracket;
  if (std::fabs(d) < 1e-14) {
    // digamma(1) = -euler_gamma; the j-sum is the harmonic number H_{n0}
    double hn = 0.0;
    for (int j = 1; j <= n0; ++j) hn += 1.0 / static_cast<double>(j);
    bracket = lead * (hn - 0.57721566490153286061 - lx);
  } else {
    bracket = lead / d * (std::expm1(logsum) - std::expm1(d * lx));
  }
  double xa = std::pow(x, a);
  double series = 0.0;
  double pw = 1.0;  // (-x)^n / n!
  for (int n = 0; n < 200; ++n) {
    if (n != n0) {
      double term = pw / (a + static_cast<double>(n));
      series += term;
      if (n > x && std::fabs(term) < 1e-18 * (std::fabs(series) + 1e-300)) {
        break;
      }
    }
    pw *= -x / static_cast<double>(n + 1);
  }
  return bracket - xa * series;
}

// Continued fraction for unregularized Gamma(a, x), any a, x >= 1.5.
double igamma_upper_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) {
      return h * std::exp(-x + a * std::log(x));
    }
  }
  throw ConvergenceError("igamma continued fraction failed at a=" +
                         std::to_string(a) + " x=" + std::to_string(x));
}

}  // namespace

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw DomainError("gamma_q needs a > 0, x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw DomainError("gamma_p needs a > 0, x >= 0");
  }
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double gamma_cdf(double x, double shape, double rate) {
  if (x <= 0.0) return 0.0;
  return gamma_p(shape, rate * x);
}

double chi2_sf(double stat, double df) {
  if (stat <= 0.0) return 1.0;
  return gamma_q(0.5 * df, 0.5 * stat);
}

double igamma_upper(double a, double x) {
  if (x < 0.0) throw DomainError("igamma_upper needs x >= 0");
  if (x == 0.0) {
    if (a > 0.0) return std::tgamma(a);
    throw DivergenceError("igamma_upper(a<=0, 0) diverges");
  }
  if (a > 0.5) return gamma_q(a, x) * std::tgamma(a);
  if (x >= 1.5) return igamma_upper_cf(a, x);
  return igamma_upper_smallx(a, x);
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0)) {
    throw DomainError("hurwitz_zeta needs s > 1, a > 0");
  }
  // Euler-Maclaurin: explicit head, integral tail, Bernoulli corrections.
  constexpr int kHead = 12;
  constexpr double kBern[6] = {1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0,
                               -1.0 / 30.0, 5.0 / 66.0,  -691.0 / 2730.0};
  double sum = 0.0;
  for (int n = 0; n < kHead; ++n) {
    sum += std::pow(a + static_cast<double>(n), -s);
  }
  double m = a + static_cast<double>(kHead);
  double mp = std::pow(m, -s);
  sum += mp * m / (s - 1.0);  // integral from m of x^{-s}
  sum += 0.5 * mp;
  // sum_{j>=1} B_{2j}/(2j)! * (s)_{2j-1} * m^{-s-2j+1}
  double poch = s;          // rising factorial (s)_{2j-1}
  double fact = 2.0;        // (2j)!
  double mpow = mp / m;     // m^{-s-2j+1}
  for (int j = 1; j <= 6; ++j) {
    sum += kBern[j - 1] / fact * poch * mpow;
    double tj = 2.0 * static_cast<double>(j);
    poch *= (s + tj - 1.0) * (s + tj);
    fact *= (tj + 1.0) * (tj + 2.0);
    mpow /= m * m;
  }
  return sum;
}

double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

double power_tail_exp_sum(double c, double beta, double m) {
  if (beta > 0.0) throw DomainError("power_tail_exp_sum needs beta <= 0");
  if (!(m >= 1.0)) throw DomainError("power_tail_exp_sum needs m >= 1");
  if (beta == 0.0) {
    if (!(c < 0.0)) {
      throw DivergenceError("power tail sum diverges at beta=0, c>=0");
    }
    return hurwitz_zeta(1.0 - c, m + 1.0);
  }
  double t = -beta;
  double x0 = t * (m + 0.5);
  if (x0 > 745.0) return 0.0;  // exp underflow, tail below denormal range
  if (45.0 / t <= 3000.0) {
    // Decay span is short: sum directly, it is exact and cheap.
    double sum = 0.0;
    double ex = std::exp(beta * (m + 1.0));
    double eb = std::exp(beta);
    for (double l = m + 1.0; l < m + 1e5; l += 1.0) {
      double term = std::pow(l, c - 1.0) * ex;
      sum += term;
      if (term < kEps * sum) return sum;
      ex *= eb;
    }
    throw ConvergenceError("power tail direct sum did not converge");
  }
  // Midpoint Euler-Maclaurin: integral plus f'/24 - 7 f'''/5760 at m + 1/2.
  double integral = std::pow(t, -c) * igamma_upper(c, x0);
  double xm = m + 0.5;
  double f = std::pow(xm, c - 1.0) * std::exp(beta * xm);
  double g1 = beta + (c - 1.0) / xm;
  double g2 = -(c - 1.0) / (xm * xm);
  double g3 = 2.0 * (c - 1.0) / (xm * xm * xm);
  double fp = f * g1;
  double fppp = f * (g1 * g1 * g1 + 3.0 * g1 * g2 + g3);
  return integral + fp / 24.0 - 7.0 * fppp / 5760.0;
}

double power_tail_one_minus_exp_sum(double c, double beta, double m) {
  if (!(c < 0.0)) throw DomainError("one-minus tail sum needs c < 0");
  if (beta > 0.0) throw DomainError("one-minus tail sum needs beta <= 0");
  if (!(m >= 1.0)) throw DomainError("one-minus tail sum needs m >= 1");
  if (beta == 0.0) return 0.0;
  double t = -beta;
  if (t * (m + 1.0) >= 0.2) {
    // 1 - e^{beta*l} is bounded away from 0 over the whole range: the direct
    // difference loses at most a few bits.
    return hurwitz_zeta(1.0 - c, m + 1.0) - power_tail_exp_sum(c, beta, m);
  }
  double xm = m + 0.5;
  double y = t * xm;
  double mc = std::pow(xm, c);
  double f1 = mc / (xm * xm) * (c - 1.0) * (-std::expm1(beta * xm)) -
              beta * mc / xm * std::exp(beta * xm);
  if (std::fabs(c - std::round(c)) < 1e-6) {
    // Near a gamma pole the closed form below degrades; integrate directly.
    double integral = integrate_decaying(
        [c, beta](double x) {
          return std::pow(x, c - 1.0) * (-std::expm1(beta * x));
        },
        xm, 1e-13, xm);
    return integral + f1 / 24.0;
  }
  // Small beta*m: integral of x^{c-1}(1 - e^{beta x}) from m + 1/2, written so
  // the near-cancelling incomplete-gamma pieces combine through expm1 and a
  // fast series, plus the f'/24 midpoint correction.
  double ey = std::exp(-y);
  // sum_{n>=1} y^n / (c (c+1) ... (c+n))
  double series = 0.0;
  double term = 1.0 / c;
  for (int n = 1; n < 200; ++n) {
    term *= y / (c + static_cast<double>(n));
    series += term;
    if (std::fabs(term) < 1e-18 * std::fabs(series) + 1e-300) break;
  }
  double integral = mc * std::expm1(-y) / c + mc * ey * series -
                    std::pow(t, -c) * std::tgamma(c);
  return integral + f1 / 24.0;
}

namespace {

// 15-point Gauss-Legendre nodes (positive half) and weights on [-1, 1].
constexpr double kGlx[8] = {0.0,
                            0.2011940939974345,
                            0.3941513470775634,
                            0.5709721726085388,
                            0.7244177313601701,
                            0.8482065834104272,
                            0.9372733924007060,
                            0.9879925180204854};
constexpr double kGlw[8] = {0.2025782419255613,
                            0.1984314853271116,
                            0.1861610000155622,
                            0.1662692058169939,
                            0.1395706779261543,
                            0.1071592204671719,
                            0.0703660474881081,
                            0.0307532419961173};

double gl15(const std::function<double(double)>& f, double a, double b,
            double* abs_estimate) {
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  double sum = kGlw[0] * f(mid);
  double asum = std::fabs(sum);
  for (int i = 1; i < 8; ++i) {
    double fa = f(mid - half * kGlx[i]);
    double fb = f(mid + half * kGlx[i]);
    sum += kGlw[i] * (fa + fb);
    asum += kGlw[i] * (std::fabs(fa) + std::fabs(fb));
  }
  if (abs_estimate != nullptr) *abs_estimate = asum * half;
  return sum * half;
}

double adapt_rec(const std::function<double(double)>& f, double a, double b,
                 double whole, double tol, int depth) {
  double mid = 0.5 * (a + b);
  double left = gl15(f, a, mid, nullptr);
  double right = gl15(f, mid, b, nullptr);
  double err = std::fabs(left + right - whole);
  if (err <= tol || err <= std::fabs(left + right) * 4.0 * kEps) {
    return left + right;
  }
  if (depth >= 30) {
    throw QuadratureError("adaptive quadrature depth exhausted on [" +
                          std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  return adapt_rec(f, a, mid, left, 0.5 * tol, depth + 1) +
         adapt_rec(f, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

namespace {

double integrate_with_floor(const std::function<double(double)>& f, double a,
                            double b, double rel_tol, double abs_floor) {
  if (a == b) return 0.0;
  if (!(b > a)) throw DomainError("integrate_adaptive needs b >= a");
  double abs_est = 0.0;
  double whole = gl15(f, a, b, &abs_est);
  double scale = std::max(std::fabs(whole), 1e-3 * abs_est);
  double tol = std::max({rel_tol * scale, abs_floor, 1e-305});
  return adapt_rec(f, a, b, whole, tol, 0);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol) {
  return integrate_with_floor(f, a, b, rel_tol, 0.0);
}

double integrate_decaying(const std::function<double(double)>& f, double a,
                          double rel_tol, double first_width) {
  if (!(first_width > 0.0)) {
    throw DomainError("integrate_decaying needs first_width > 0");
  }
  double acc = 0.0;
  double lo = a;
  double width = first_width;
  int quiet = 0;
  for (int panel = 0; panel < 200; ++panel) {
    double hi = lo + width;
    double abs_est = 0.0;
    double coarse = gl15(f, lo, hi, &abs_est);
    double negligible = 0.125 * rel_tol * std::fabs(acc);
    double piece;
    if (abs_est <= negligible) {
      piece = coarse;  // not worth refining against the accumulated total
    } else {
      piece = integrate_with_floor(f, lo, hi, 0.25 * rel_tol,
                                   0.025 * negligible);
    }
    acc += piece;
    if (std::fabs(piece) <= negligible) {
      if (++quiet >= 3) return acc;
    } else {
      quiet = 0;
    }
    lo = hi;
    width *= 2.0;
  }
  throw QuadratureError("integrate_decaying did not settle from a=" +
                        std::to_string(a));
}

}  // namespace ipclab
