"""
Real-root extraction for low-degree polynomials.

Coefficients are always given highest degree first, as in ``numpy.polyval``.
"""

import cmath
import math

import numpy as np


def trim(coeffs):
    """Drop leading zeros and factor out roots at the origin.

    Returns the reduced coefficient list and the multiplicity of the zero root.
    """
    c = [float(a) for a in coeffs]
    while c and c[0] == 0.0:
        c.pop(0)
    zeros = 0
    while len(c) > 1 and c[-1] == 0.0:
        c.pop()
        zeros += 1
    return c, zeros


def horner(coeffs, x):
    """Value and derivative of the polynomial at ``x``."""
    p = 0.0
    dp = 0.0
    for a in coeffs:
        dp = dp * x + p
        p = p * x + a
    return p, dp


def newton_polish(coeffs, x, steps=1):
    """Newton steps, each kept only if it lowers |P| (near-double roots overshoot)."""
    p, dp = horner(coeffs, x)
    for _ in range(steps):
        if dp == 0.0 or not math.isfinite(dp):
            break
        x_new = x - p / dp
        if not math.isfinite(x_new):
            break
        p_new, dp_new = horner(coeffs, x_new)
        if abs(p_new) > abs(p):
            break
        x, p, dp = x_new, p_new, dp_new
    return x


def companion_roots(coeffs):
    """All complex roots via the eigenvalues of the companion matrix.

    ``coeffs`` must already be trimmed (nonzero leading coefficient).
    """
    c = np.asarray(coeffs, dtype=float)
    n = c.size - 1
    if n < 1:
        return np.empty(0, dtype=complex)
    monic = c[1:] / c[0]
    companion = np.zeros((n, n))
    companion[0, :] = -monic
    if n > 1:
        companion[np.arange(1, n), np.arange(n - 1)] = 1.0
    return np.linalg.eigvals(companion)


def real_roots(coeffs, imag_tol=1e-7, polish_steps=1):
    """Sorted real roots of a polynomial, each refined by Newton steps."""
    c, zeros = trim(coeffs)
    if not c:
        raise ValueError("the zero polynomial has no isolated roots")
    out = [0.0] * zeros
    for z in companion_roots(c):
        if abs(z.imag) <= imag_tol * max(1.0, abs(z)):
            out.append(newton_polish(c, float(z.real), polish_steps))
    return sorted(out)


def descartes_positive_bound(coeffs):
    """Number of sign changes in the nonzero coefficients (Descartes' rule)."""
    signs = [a > 0 for a in coeffs if a != 0.0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def unique_positive_root(coeffs, guess, rtol=1e-15, max_iter=100):
    """The single positive root of a polynomial with one coefficient sign change.

    Safeguarded Newton iteration (bisection whenever a Newton step leaves the
    bracket).  The caller guarantees P(0) <= 0 < P(inf) via Descartes' rule.
    """
    lo, hi = 0.0, guess
    p, _ = horner(coeffs, hi)
    while p <= 0.0:
        lo, hi = hi, 2.0 * hi
        p, _ = horner(coeffs, hi)
    if lo == 0.0:
        x = 0.5 * hi
        p, _ = horner(coeffs, x)
        while p > 0.0:
            hi, x = x, 0.5 * x
            p, _ = horner(coeffs, x)
        lo = x
    x = guess if lo < guess < hi else 0.5 * (lo + hi)
    for _ in range(max_iter):
        p, dp = horner(coeffs, x)
        if p == 0.0:
            return x
        if p < 0.0:
            lo = x
        else:
            hi = x
        x_new = x - p / dp if dp > 0.0 else 0.5 * (lo + hi)
        if not lo < x_new < hi:
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= rtol * x_new:
            return x_new
        x = x_new
    return x


def cauchy_bound(coeffs):
    """Every root z satisfies |z| < this bound."""
    c, _ = trim(coeffs)
    return 1.0 + max(abs(a / c[0]) for a in c[1:]) if len(c) > 1 else 0.0


def solve_cubic(a, b, c, d):
    """Real roots of a x^3 + b x^2 + c x + d = 0 in closed form (a != 0)."""
    b, c, d = b / a, c / a, d / a
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    # a repeated root leaves disc at rounding level; send it to the trig branch
    scale = max((q / 2.0) ** 2, abs(p / 3.0) ** 3, shift**6)
    if disc > 1e-12 * scale:
        s = math.sqrt(disc)
        u = math.copysign(abs(-q / 2.0 + s) ** (1.0 / 3.0), -q / 2.0 + s)
        w = math.copysign(abs(-q / 2.0 - s) ** (1.0 / 3.0), -q / 2.0 - s)
        return [u + w - shift]
    r = 2.0 * math.sqrt(-p / 3.0) if p < 0.0 else 0.0
    if p * r == 0.0:
        return [-shift] * 3
    # three real roots: trigonometric form
    arg = max(-1.0, min(1.0, 3.0 * q / (p * r)))
    phi = math.acos(arg) / 3.0
    return sorted(r * math.cos(phi - 2.0 * math.pi * k / 3.0) - shift for k in range(3))


def solve_quartic(a, b, c, d, e, imag_tol=1e-6):
    """Real roots of a x^4 + b x^3 + c x^2 + d x + e = 0 by Ferrari's method.

    The depressed quartic y^4 + p y^2 + q y + r is split into two quadratics
    using a positive root m of the resolvent 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2.
    """
    if a == 0.0:
        raise ValueError("leading coefficient must be nonzero")
    b, c, d, e = b / a, c / a, d / a, e / a
    shift = b / 4.0
    p = c - 3.0 * b * b / 8.0
    q = d - b * c / 2.0 + b**3 / 8.0
    r = e - b * d / 4.0 + b * b * c / 16.0 - 3.0 * b**4 / 256.0

    m = 0.0
    if abs(q) > 1e-14 * max(1.0, abs(p), abs(r)):
        m = max(solve_cubic(8.0, 8.0 * p, 2.0 * p * p - 8.0 * r, -q * q))
    if m <= 1e-10 * max(1.0, abs(p)):
        # q is at rounding level: biquadratic in y^2
        disc = cmath.sqrt(p * p - 4.0 * r)
        ys = []
        for z in ((-p + disc) / 2.0, (-p - disc) / 2.0):
            s = cmath.sqrt(z)
            ys.extend((s, -s))
    else:
        s2m = math.sqrt(2.0 * m)
        ys = []
        for s1 in (1.0, -1.0):
            inner = cmath.sqrt(-(2.0 * p + 2.0 * m + s1 * math.sqrt(2.0) * q / math.sqrt(m)))
            for s2 in (1.0, -1.0):
                ys.append(0.5 * (s1 * s2m + s2 * inner))
    coeffs = [1.0, b, c, d, e]
    out = []
    for y in ys:
        x = y - shift
        if abs(x.imag) <= imag_tol * max(1.0, abs(x)):
            out.append(newton_polish(coeffs, x.real, 2))
    return sorted(out)
