"""Minimal double-double arithmetic for the Gamma identity checks.

The subset-sum Gamma identity is checked as an absolute residual while its
two sides grow like the product of the Gamma values, so plain doubles leave
the residual at magnitude * 1e-15.  Evaluating both sides with ~31-digit
intermediates pushes the evaluation error well below the 1e-9 target; the
remaining residual reflects the identity itself on the dyadic inputs.

Numbers are (hi, lo) pairs with |lo| <= ulp(hi)/2.  Algorithms follow the
standard error-free transformations (Dekker/Knuth) and the QD library's
exp/log/Taylor recipes.  Accuracy target is ~1e-30 relative, far more than
needed.  Only positive real arguments in the ranges the identities use are
supported.
"""

from __future__ import annotations

import math

_SPLIT = 134217729.0  # 2^27 + 1

PI = (3.141592653589793, 1.2246467991473532e-16)
LN2 = (0.6931471805599453, 2.3190468138462996e-17)
SQRT2PI = (2.5066282746310002, -1.8328579980459167e-16)


def two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def two_prod(a, b):
    p = a * b
    ta = _SPLIT * a
    ah = ta - (ta - a)
    al = a - ah
    tb = _SPLIT * b
    bh = tb - (tb - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def add(x, y):
    s, e = two_sum(x[0], y[0])
    e += x[1] + y[1]
    return quick_two_sum(s, e)


def sub(x, y):
    return add(x, (-y[0], -y[1]))


def neg(x):
    return (-x[0], -x[1])


def mul(x, y):
    p, e = two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    return quick_two_sum(p, e)


def div(x, y):
    q1 = x[0] / y[0]
    r = sub(x, mul((q1, 0.0), y))
    q2 = r[0] / y[0]
    r = sub(r, mul((q2, 0.0), y))
    q3 = r[0] / y[0]
    s, e = quick_two_sum(q1, q2)
    return add((s, e), (q3, 0.0))


def ldexp(x, k):
    return (math.ldexp(x[0], k), math.ldexp(x[1], k))


def _exp_taylor(r):
    # exp(r) - 1 for |r| <= ~7e-4
    term = r
    total = r
    for n in range(2, 10):
        term = mul(term, r)
        term = (term[0] / n, term[1] / n)
        total = add(total, term)
    return total


def exp(x):
    if x[0] > 700.0 or x[0] < -700.0:
        raise OverflowError("dd exp range")
    k = int(round(x[0] / LN2[0]))
    r = sub(x, mul((float(k), 0.0), LN2))
    r = ldexp(r, -9)
    s = _exp_taylor(r)
    for _ in range(9):  # (1+s)^2 - 1 = s^2 + 2s
        s = add(mul(s, s), ldexp(s, 1))
    return ldexp(add(s, (1.0, 0.0)), k)


def log(x):
    if x[0] <= 0.0:
        raise ValueError("dd log domain")
    y = (math.log(x[0]), 0.0)
    # one Newton step: y += x * exp(-y) - 1
    corr = sub(mul(x, exp(neg(y))), (1.0, 0.0))
    return add(y, corr)


def power(x, e):
    return exp(mul(e, log(x)))


def _sin_taylor(t):
    t2 = mul(t, t)
    term = t
    total = t
    for n in range(1, 15):
        term = mul(term, t2)
        term = (-term[0] / ((2 * n) * (2 * n + 1)), -term[1] / ((2 * n) * (2 * n + 1)))
        total = add(total, term)
    return total


def _cos_taylor(t):
    t2 = mul(t, t)
    term = (1.0, 0.0)
    total = (1.0, 0.0)
    for n in range(1, 15):
        term = mul(term, t2)
        term = (-term[0] / ((2 * n - 1) * (2 * n)), -term[1] / ((2 * n - 1) * (2 * n)))
        total = add(total, term)
    return total


def sinpi(x):
    """sin(pi*x) for a dd x with 0 <= x <= 1."""
    if x[0] < 0.0 or x[0] > 1.0 or (x[0] == 1.0 and x[1] > 0.0):
        raise ValueError("sinpi domain is [0, 1]")
    r = x if x[0] <= 0.5 else sub((1.0, 0.0), x)
    if r[0] == 0.0 and r[1] == 0.0:
        return (0.0, 0.0)
    if r[0] <= 0.25:
        return _sin_taylor(mul(PI, r))
    return _cos_taylor(mul(PI, sub((0.5, 0.0), r)))


_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(x):
    """Gamma for a dd argument with 0 < x < 2.5 (identity-check range)."""
    if x[0] <= 0.0 or x[0] >= 2.5:
        raise ValueError("dd gamma supports 0 < x < 2.5")
    if x[0] < 0.5:
        return div(PI, mul(sinpi(x), gamma(sub((1.0, 0.0), x))))
    zz = sub(x, (1.0, 0.0))
    acc = (_LANCZOS_C[0], 0.0)
    for i, c in enumerate(_LANCZOS_C[1:], start=1):
        acc = add(acc, div((c, 0.0), add(zz, (float(i), 0.0))))
    t = add(zz, (7.5, 0.0))
    out = mul(SQRT2PI, power(t, add(zz, (0.5, 0.0))))
    out = mul(out, exp(neg(t)))
    return mul(out, acc)


def rgamma(x):
    """1/Gamma with exact zero at x == 0 (used for empty/full subset terms)."""
    if x[0] == 0.0 and x[1] == 0.0:
        return (0.0, 0.0)
    return div((1.0, 0.0), gamma(x))


def to_float(x) -> float:
    return x[0] + x[1]
