"""Truncated series values and certified tail estimates.

Every series evaluation in this package reports a TruncatedValue: the
partial sum together with an upper bound on the discarded tail.  The
bounds here are elementary and fully explicit; they rest on

    sum_{n<=x} tau_j(n) <= x * (ln x + 1)^(j-1)        (tau_j = j-fold divisor)
    d(n)^2 <= tau_4(n),   d(n) <= 2 sqrt(n)

and Abel summation.  They are conservative by design: a reported bound may
exceed the true tail by a sizeable factor but never undershoots it.

For multi-variable correlation sums at exponents below the elementary
certification range, the enumerators instead use a dyadic-shell
extrapolation (see series.py); the assumptions backing it are documented
there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class TruncatedValue:
    """A partial sum plus a bound on what was cut off.

    value differs from the full series by at most tail_bound (under the
    documented assumptions of the producing operation).
    """

    value: complex
    tail_bound: float
    cutoff: int
    terms_used: int

    def __post_init__(self):
        if not math.isfinite(self.tail_bound) or self.tail_bound < 0:
            raise DomainError("tail_bound must be finite and non-negative")
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise DomainError("value must be finite")


def divisor_partial_upper(x: float, j: int = 2) -> float:
    """Upper bound for sum_{n<=x} tau_j(n): x * (ln x + 1)^(j-1)."""
    if x < 1:
        return 0.0
    return x * (math.log(x) + 1.0) ** (j - 1)


def divisor_tail(T: float, sigma: float, j: int = 2) -> float:
    """Certified bound for sum_{n>T} tau_j(n) / n^sigma, sigma > 1.

    Abel summation against A(x) <= x L(x)^m, m = j-1, L = ln + 1, gives

        tail <= sigma * T^(1-sigma)/(sigma-1)
                      * sum_{i=0..m} m!/(m-i)! * L(T)^(m-i) / (sigma-1)^i.
    """
    if sigma <= 1:
        return math.inf
    if T < 1:
        T = 1.0
    m = j - 1
    L = math.log(T) + 1.0
    s1 = sigma - 1.0
    total = 0.0
    coeff = 1.0  # m!/(m-i)! accumulated
    for i in range(m + 1):
        total += coeff * L ** (m - i) / s1**i
        coeff *= m - i
    return sigma * T ** (-s1) / s1 * total


def divisor_square_tail(T: float, sigma: float) -> float:
    """Certified bound for sum_{n>T} d(n)^2 / n^sigma via d^2 <= tau_4."""
    return divisor_tail(T, sigma, j=4)


def divisor_weighted_partial(x: float, sigma: float) -> float:
    """Upper bound for sum_{n<=x} d(n) / n^sigma, any sigma in [0, 1).

    Abel summation against A(x) <= x (ln x + 1).
    """
    if x < 1:
        return 0.0
    if sigma >= 1:
        raise DomainError("use divisor_tail-style bounds for sigma >= 1")
    L = math.log(x) + 1.0
    s1 = 1.0 - sigma
    # integral of t^-sigma (ln t + 1) dt from 1 to x, evaluated exactly
    integral = x**s1 * (L / s1 - 1.0 / s1**2) - (1.0 / s1 - 1.0 / s1**2)
    return x**s1 * L + sigma * max(integral, 0.0)


def power_tail(z: float, w: float) -> float:
    """Certified bound for sum_{t>z} t^-w, w > 1: integral comparison."""
    if w <= 1:
        return math.inf
    z = max(z, 1.0)
    return z ** (1.0 - w) / (w - 1.0)
