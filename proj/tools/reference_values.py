#!/usr/bin/env python3
"""Regenerates the reference constants frozen into the C++ test suite.

Everything here is computed independently of the C++ implementation:
polylog/zeta closed forms and root solves via mpmath at 30+ digits, a
brute-force float128 cross-check for the tilted-moment series, scipy's
levy_stable for the stable-density double integrals, and quadosc for
high-precision stable spot values.

Run:  python3 tools/reference_values.py
"""

import mpmath as mp
import numpy as np
from scipy.stats import levy_stable
from scipy import integrate

mp.mp.dps = 30


def header(title):
    print()
    print(f"== {title} ==")


def show(name, value, digits=21):
    try:
        print(f"{name:46s} {mp.nstr(mp.mpf(value), digits)}")
    except TypeError:
        print(f"{name:46s} {value!r}")


# ---------------------------------------------------------------- zeta family

header("Riemann zeta values")
for s in ("1.3", "1.5", "2.3", "2.5", "3.3"):
    show(f"zeta({s})", mp.zeta(mp.mpf(s)))

header("Hurwitz zeta spot values")
for s, a in (("2.3", "17"), ("1.5", "3.25"), ("4.3", "2"), ("2.5", "1000001")):
    show(f"hurwitz({s}, {a})", mp.zeta(mp.mpf(s), mp.mpf(a)))

# ---------------------------------------------------------- offspring moments

header("Zeta(alpha) offspring: pmf l^-(alpha+1)/zeta(alpha+1)")
for alpha in ("1.5", "2.3"):
    a = mp.mpf(alpha)
    z1 = mp.zeta(a + 1)
    mu = mp.zeta(a) / z1
    show(f"zeta_dist({alpha}) mu", mu)
    show(f"zeta_dist({alpha}) p_c", 1 / mu)
    show(f"zeta_dist({alpha}) c_X", 1 / (a * z1))
    if a > 2:
        show(f"zeta_dist({alpha}) m2", mp.zeta(a - 1) / z1)
    show(f"zeta_dist({alpha}) pmf(1)", 1 / z1)
    show(f"zeta_dist({alpha}) pmf(7)", mp.mpf(7) ** (-(a + 1)) / z1)
    show(f"zeta_dist({alpha}) tail(50)", mp.zeta(a + 1, 51) / z1)

header("Sibuya(alpha): P(X>l) = Gamma(l+1-a)/(Gamma(1-a) l!)")
for alpha in ("0.3", "0.5", "0.7"):
    a = mp.mpf(alpha)
    show(f"sibuya({alpha}) c_X", 1 / mp.gamma(1 - a))
    show(f"sibuya({alpha}) pmf(10)",
         a * mp.gamma(10 - a) / (mp.gamma(1 - a) * mp.factorial(10)))
    show(f"sibuya({alpha}) tail(10)",
         mp.gamma(11 - a) / (mp.gamma(1 - a) * mp.factorial(10)))
show("sibuya(0.5) tail(10^6)",
     mp.gamma(mp.mpf(10) ** 6 + mp.mpf("0.5")) /
     (mp.gamma(mp.mpf("0.5")) * mp.gamma(mp.mpf(10) ** 6 + 1)))

# ---------------------------------------------------------------- tilted moments
# E[(1-s)^X] = Li_{a+1}(1-s)/zeta(a+1), E[X(1-s)^{X-1}] = Li_a(1-s)/((1-s)zeta(a+1)),
# E[X^2(1-s)^{X-1}] = Li_{a-1}(1-s)/((1-s)zeta(a+1)).

header("Zeta offspring tilted moments (polylog closed form)")


def zeta_tilted(alpha, s, order):
    a = mp.mpf(alpha)
    z = 1 - mp.mpmathify(s)
    z1 = mp.zeta(a + 1)
    li = mp.polylog(a + 1 - order, z)
    return li / z1 if order == 0 else li / (z * z1)


for alpha in ("2.3", "1.5"):
    for s in ("0.2", "0.01", "1e-6"):
        orders = (0, 1, 2) if alpha == "2.3" else (0, 1)
        for order in orders:
            show(f"zeta({alpha}) tilted s={s} order={order}",
                 zeta_tilted(alpha, s, order))

# brute-force float128 cross-check of the s=1e-6 order-1 value for zeta(2.3)
z1_23 = float(mp.zeta(mp.mpf("3.3")))
s = 1e-6
beta = np.log1p(np.longdouble(-s))
total = np.longdouble(0)
for lo in range(1, 60_000_001, 1_000_000):
    l = np.arange(lo, lo + 1_000_000, dtype=np.longdouble)
    total += np.sum(l ** np.longdouble(-2.3) * np.exp(beta * (l - 1)))
print(f"{'  cross-check (float128 brute, 6e7 terms)':46s} {total / np.longdouble(z1_23)}")

# ---------------------------------------------------------------------- survival

header("Survival fixed points theta(p): 1-theta = E[(1-p*theta)^X]")


def theta_zeta(alpha, p):
    p = mp.mpf(p)
    return mp.findroot(lambda th: 1 - th - zeta_tilted(alpha, p * th, 0),
                       (mp.mpf("1e-8"), mp.mpf("0.999999")), solver="anderson")


for alpha, p in (("2.3", "0.7"), ("2.3", "0.9"), ("1.5", "0.6"), ("1.5", "0.9")):
    show(f"theta zeta({alpha}) p={p}", theta_zeta(alpha, p))

show("theta constant(3) p=0.5",
     mp.findroot(lambda th: 1 - th - (1 - th / 2) ** 3, mp.mpf("0.6")))
show("theta shifted_geom(0.5) p=0.55 (exact 2/11)",
     mp.mpf("0.05") / (mp.mpf("0.5") * mp.mpf("0.55")))

header("Survival asymptotic constants, zeta(1.5)")
a15 = mp.mpf("1.5")
z25 = mp.zeta(a15 + 1)
mu15 = mp.zeta(a15) / z25
cx15 = 1 / (a15 * z25)
pc15 = 1 / mu15
c_theta15 = (mu15 ** (a15 + 1) / (cx15 * (-mp.gamma(1 - a15)))) ** (1 / (a15 - 1))
show("zeta(1.5) C_theta", c_theta15)
for eps in ("1e-3", "1e-5"):
    p = pc15 * (1 + mp.mpf(eps))
    guess = c_theta15 * (p - pc15) ** 2
    th = mp.findroot(lambda t: 1 - t - zeta_tilted("1.5", p * t, 0),
                     (guess / 10, guess * 10), solver="anderson")
    show(f"  theta/(p-pc)^2 at p-pc={eps}*pc", th / (p - pc15) ** 2)

# ------------------------------------------------------------ incomplete gamma

header("Upper incomplete gamma Gamma(a, x)")
for a_, x_ in (("-0.5", "1"), ("0.5", "1"), ("-0.3", "0.2"), ("0.7", "3"),
               ("-2.3", "0.5"), ("1.7", "0.01"), ("-1.3", "4"), ("-0.5", "1e-4"),
               ("0", "0.5"), ("-1", "0.5"), ("-2", "1"), ("0", "0.001"),
               ("-0.9999999", "0.3"), ("-2.0000001", "0.7"), ("-3", "0.9")):
    show(f"igamma_upper({a_}, {x_})", mp.gammainc(mp.mpf(a_), mp.mpf(x_), mp.inf))

# ------------------------------------------------- power tails with 1 - e^(bl)
# sum_{l>m} l^(c-1) (1 - e^(beta l)) = zeta(1-c, m+1)
#                                      - e^(beta(m+1)) Phi(e^beta, 1-c, m+1)

header("sum_{l>m} l^(c-1)(1 - exp(beta l))")
for c_, b_, m_ in (("-0.5", "-1e-6", 10000), ("-1.3", "-1e-4", 10000),
                   ("-0.5", "-0.03", 50), ("-2", "-1e-5", 10000),
                   ("-3", "-2e-5", 10000), ("-0.7", "-1e-8", 10000)):
    c, b = mp.mpf(c_), mp.mpf(b_)
    v = mp.zeta(1 - c, m_ + 1) - mp.e ** (b * (m_ + 1)) * mp.lerchphi(
        mp.e ** b, 1 - c, m_ + 1)
    show(f"c={c_} beta={b_} m={m_}", v)

# -------------------------------------------------------------- stable density

header("Symmetric stable density psi_alpha(x), scale 1 (quadosc)")


def stable_psi_mp(alpha, x):
    a = mp.mpf(alpha)
    x = mp.mpf(x)
    if x == 0:
        return mp.gamma(1 + 1 / a) / mp.pi
    return mp.quadosc(lambda t: mp.cos(t * x) * mp.exp(-(t ** a)),
                      [0, mp.inf], period=2 * mp.pi / x) / mp.pi


for alpha in ("0.5", "1.3", "1.7", "2.0"):
    for x in ("0", "0.5", "2", "10"):
        show(f"psi_{alpha}({x})", stable_psi_mp(alpha, x))
show("psi_1(x) Cauchy check: 1/(pi(1+4))", 1 / (mp.pi * 5))
show("psi_2(0) = 1/(2 sqrt(pi))", 1 / (2 * mp.sqrt(mp.pi)))

# ------------------------------------------------------------- forest density
# Scales below use psi with scale c_alpha = 1 so the C++ test can configure
# the same value. scipy levy_stable(alpha, 0) has cf exp(-|t|^alpha).

header("Forest-size density h, Constant(2): h(x,a) = x^-1.5 exp(-a^2 x)/sqrt(pi)")
for x in ("0.5", "1"):
    x_ = mp.mpf(x)
    show(f"h(x={x}, a=1)", x_ ** mp.mpf("-1.5") * mp.exp(-x_) / mp.sqrt(mp.pi))
    show(f"int_x^inf h(y,1) dy, x={x}",
         mp.quad(lambda y: y ** mp.mpf("-1.5") * mp.exp(-y) / mp.sqrt(mp.pi),
                 [x_, mp.inf]))

header("Forest-size density h, zeta(1.5) regime (c_alpha = 1)")
al, cx_f, pc_f = 1.5, float(cx15), float(pc15)


def psi_np(alpha, x):
    return levy_stable.pdf(x, alpha, 0)


def h_12(x, aa):
    shift = aa * x ** ((al - 1) / al)
    inner, _ = integrate.quad(
        lambda z: psi_np(al, z / pc_f + shift) * z ** (1 - al), 0, np.inf,
        limit=400)
    return al * cx_f * pc_f ** (al - 1) * x ** ((1 - 2 * al) / al) * inner


show("h_zeta1.5(x=1, a=1)", mp.mpf(h_12(1.0, 1.0)))
show("h_zeta1.5(x=2, a=0.5)", mp.mpf(h_12(2.0, 0.5)))

header("Forest-size density h, sibuya(0.5) regime")
cx05 = float(1 / mp.gamma(mp.mpf("0.5")))


def h_01(x, c=1.0):
    a = 0.5

    def inner(u):
        arg = (1 - u) * x ** (1 - 1 / a)
        return levy_stable.pdf(arg / c, a, 0) / c * u ** (1 - a)

    val, _ = integrate.quad(inner, 0, 1, limit=200)
    return cx05 * x ** (1 - a - 1 / a) * val


for x in ("0.5", "1", "4"):
    show(f"h_sibuya0.5(x={x}, c=1)", mp.mpf(h_01(float(mp.mpf(x)))))
for c in (1.0, 2.0):
    norm, _ = integrate.quad(lambda x: h_01(x, c), 0, np.inf, limit=800)
    show(f"int_0^inf h_sibuya0.5 dx, c={c}", mp.mpf(norm))

# ---------------------------------------------------------------------- EPDP

header("EPDP Laplace transform values, k=100 t=1")
for alpha, eta, s in (("0.5", "0", "1"), ("0.5", "0.05", "2"), ("0.3", "0", "0.7")):
    a_, e_, s_ = mp.mpf(alpha), mp.mpf(eta), mp.mpf(s)
    u = (1 - a_) * s_ / 100
    show(f"a={alpha} eta={eta} s={s}",
         mp.exp(-(1 - a_ - e_) * 100 * u / (u + a_ * (1 + e_))))

# -------------------------------------------------------------- quotient law

header("Quotient law moments")
for alpha in ("0.3", "0.5", "0.7"):
    a_ = mp.mpf(alpha)
    show(f"E[log P] alpha={alpha}", -(1 - a_) ** 2 / a_)
    show(f"E[P^(a/(1-a))] alpha={alpha}", (1 + a_) / 2)

# ------------------------------------------------- dual offspring, tiny progeny
# Constant(2), w=0.6: q_l ∝ P(Binom(2,w)=l) eta^l with eta = 4/9.

header("Dual offspring and progeny, Constant(2) w=0.6")
w = mp.mpf("0.6")
eta = mp.mpf(4) / 9
t0, t1, t2 = (1 - w) ** 2, 2 * w * (1 - w), w ** 2
Z = t0 + t1 * eta + t2 * eta ** 2
q0, q1, q2 = t0 / Z, t1 * eta / Z, t2 * eta ** 2 / Z
for name, v in (("q0", q0), ("q1", q1), ("q2", q2)):
    show(name, v)
show("E[dual]", q1 + 2 * q2)
show("P(T=1) = q0", q0)
show("P(T=2) = q1 q0", q1 * q0)
show("P(T=3) = q1^2 q0 + q2 q0^2", q1 ** 2 * q0 + q2 * q0 ** 2)
