#!/usr/bin/env python3
"""Regenerates the high-precision reference values frozen into the C++ tests.

All reference values are computed with mpmath at >= 50 significant digits,
directly from the defining formulas:

  E_a(z)      = sum_{k>=0} z^k / Gamma(a k + 1)
  b_k         = ((k+1)^a - k^a) / Gamma(a+1)
  a_0         = 1 / Gamma(a+2)
  a_k         = ((k+1)^(a+1) - 2 k^(a+1) + (k-1)^(a+1)) / Gamma(a+2), k >= 1
  a~(n)       = (n^(a+1) - (n-a)(n+1)^a) / Gamma(a+2)

For strongly negative arguments, where the power series needs thousands of
digits of working precision, E_a(z) is cross-checked against the spectral
integral representation (valid for 0 < a < 1, z < 0):

  E_a(z) = integral_0^inf K(r) dr,
  K(r)   = (1/(pi a)) exp(-r^(1/a)) * (-z) sin(pi a) / (r^2 - 2 r z cos(pi a) + z^2)

Inputs that the C++ code receives as IEEE doubles (alpha = 0.8, step sizes,
z values) are converted with mpf(float(...)) so the reference is computed at
the exact binary argument, not at the decimal one.

Usage: python3 scripts/gen_fixtures.py
"""
import mpmath as mp


def ml_series(z, alpha, dps):
    with mp.workdps(dps):
        z = mp.mpf(z)
        alpha = mp.mpf(alpha)
        s = mp.mpf(0)
        zk = mp.mpf(1)
        small = 0
        k = 0
        while k < 200000:
            t = zk / mp.gamma(alpha * k + 1)
            s += t
            if abs(t) < mp.mpf(10) ** (-(dps - 10)) * max(1, abs(s)):
                small += 1
                if small > 4:
                    break
            else:
                small = 0
            zk *= z
            k += 1
        return +s


def ml_integral(z, alpha, dps=40):
    # spectral representation, z < 0, 0 < alpha < 1
    with mp.workdps(dps):
        z = mp.mpf(z)
        a = mp.mpf(alpha)

        def K(r):
            num = -z * mp.sin(mp.pi * a)
            den = r * r - 2 * r * z * mp.cos(mp.pi * a) + z * z
            return mp.exp(-r ** (1 / a)) * num / den / (mp.pi * a)

        return mp.quad(K, [0, 1, 10, mp.inf])


def series_dps(z, alpha):
    # enough working digits to absorb the cancellation of the largest term
    x = abs(float(z))
    if x <= 1:
        return 50
    big = mp.mpf(x) ** (1 / mp.mpf(alpha))
    digits = float(big * (mp.log(big) - 1) / mp.log(10)) if big > 3 else 10
    return max(50, int(digits) + 30)


def fmt(v, digits=22):
    return mp.nstr(mp.mpf(v), digits)


def main():
    mp.mp.dps = 50

    alpha = mp.mpf(float(0.8))      # exact binary double 0.8
    h = mp.mpf(1) / 16

    print("// ---- Mittag-Leffler, series regime (alpha as binary double) ----")
    for zf, af in [(-2.0, 0.8), (-1.0, 0.8), (-9.5, 0.8), (2.5, 0.8), (10.0, 0.8), (-6.0, 0.6)]:
        d = series_dps(zf, mp.mpf(float(af)))
        v = ml_series(mp.mpf(float(zf)), mp.mpf(float(af)), d)
        print(f"// E_{af}({zf}) = {fmt(v)}")

    print("// ---- Mittag-Leffler, asymptotic regime ----")
    cases = [(-10.0, 0.8), (-12.0, 0.8), (-20.0, 0.8), (-40.0, 0.8), (-50.0, 0.8),
             (-12.0, 0.5), (-30.0, 0.5), (-11.0, 0.9), (-40.0, 0.2), (-10.5, 0.95),
             (-15.0, 0.3)]
    for zf, af in cases:
        zb = mp.mpf(float(zf)); ab = mp.mpf(float(af))
        d = series_dps(zf, ab)
        if d <= 3000:
            v = ml_series(zb, ab, d)
            tag = f"series@{d}dps"
        else:
            v = ml_integral(zb, ab)
            tag = "integral"
        print(f"// E_{af}({zf}) = {fmt(v)}   [{tag}]")

    print("// ---- cross-check: integral representation vs series ----")
    for zf, af in [(-12.0, 0.5), (-20.0, 0.8)]:
        zb = mp.mpf(float(zf)); ab = mp.mpf(float(af))
        vs = ml_series(zb, ab, series_dps(zf, ab))
        vi = ml_integral(zb, ab)
        print(f"// alpha={af} z={zf}: |series-integral| = {fmt(abs(vs - vi), 3)}")

    print("// ---- rectangular weights b_k, alpha=0.8 ----")
    for k in range(5):
        bk = ((k + 1) ** alpha - mp.mpf(k) ** alpha) / mp.gamma(alpha + 1)
        print(f"// b_{k} = {fmt(bk)}")
    print(f"// b_0(alpha=0.5) = {fmt(1 / mp.gamma(mp.mpf(1.5)))}")

    print("// ---- trapezoidal weights a_k and a~(n), alpha=0.8 ----")
    for k in range(5):
        if k == 0:
            ak = 1 / mp.gamma(alpha + 2)
        else:
            ak = ((k + 1) ** (alpha + 1) - 2 * mp.mpf(k) ** (alpha + 1)
                  + mp.mpf(k - 1) ** (alpha + 1)) / mp.gamma(alpha + 2)
        print(f"// a_{k} = {fmt(ak)}")
    for n in range(4):
        atil = (mp.mpf(n) ** (alpha + 1) - (n - alpha) * mp.mpf(n + 1) ** alpha) / mp.gamma(alpha + 2)
        print(f"// a_tilde(n={n}) = {fmt(atil)}")

    print("// ---- two-point local step, alpha=0.8, h=2^-4, n=1, exact-history inputs ----")
    yex1 = 2 * ml_series(-2 * h ** alpha, alpha, 50)
    y1d = float(yex1)
    f1d = float(mp.mpf(-2) * mp.mpf(y1d))
    print(f"// input y_1  = {y1d!r}")
    print(f"// input f_1  = {f1d!r}")
    print(f"// input f_0  = -4.0")
    yn = mp.mpf(y1d); fn = mp.mpf(f1d); fnm1 = mp.mpf(-4)
    n = 1
    tn = n * h; tnp1 = (n + 1) * h; tnm1 = (n - 1) * h
    g = mp.gamma(alpha)
    b1 = (2 * h * tnp1 ** alpha / (alpha * (alpha + 1)) - tnm1 * tnp1 ** alpha / (alpha + 1)
          - h * tn ** alpha / alpha + tn ** (alpha + 1) / (alpha + 1))
    b2 = (tnp1 ** (alpha + 1) / (alpha + 1) - h * tnp1 ** alpha / alpha
          - tn ** (alpha + 1) / (alpha + 1))
    y2 = yn + fn / (h * g) * b1 + fnm1 / (h * g) * b2
    print(f"// output y_2 = {fmt(y2)}")

    print("// ---- error-bound values, alpha=0.8, h=2^-4, M=4 ----")
    for n in (0, 1):
        cb = h ** (3 + alpha) * 4 * (mp.mpf(n + 1) ** alpha + mp.mpf(n) ** alpha) / (12 * mp.gamma(alpha + 1))
        print(f"// bound({n}) = {fmt(cb)}")

    print("// ---- exact solution value, alpha=0.8, lambda=-2, y0=2, t=1 ----")
    print(f"// y(1) = 2 E_0.8(-2) = {fmt(2 * ml_series(mp.mpf(-2), alpha, 50))}")

    print("// ---- gamma spot values ----")
    print(f"// Gamma(0.5)  = {fmt(mp.sqrt(mp.pi))}")
    print(f"// Gamma(1.8)  = {fmt(mp.gamma(mp.mpf(float(1.8))))}")
    print(f"// Gamma(0.8)  = {fmt(mp.gamma(alpha))}")


if __name__ == "__main__":
    main()
