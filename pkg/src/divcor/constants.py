"""Explicit arithmetic constants of the correlation problem.

For an integer vector a = (a_1, ..., a_k) with mixed signs this module
computes

  * rho(a): the finite Euler-product correction over primes dividing
    a_1...a_k, in exact rational arithmetic (the local tails are geometric
    and are summed in closed form, so there is no truncation error);
  * kappa(a): product of p^(second-smallest p-valuation) for gcd-1 vectors,
    and the bracketing check it provides for rho;
  * the leading polar coefficient c(a) of the correlation series, and
  * the singular series S(a), both as a truncated l-sum with a certified
    tail and as the rho-based closed form, so the two routes can be
    compared against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .config import DEFAULT, Config
from .errors import BudgetError, DomainError
from .special import gamma, zeta
from .tails import TruncatedValue
from . import arith

__all__ = [
    "CoefficientVector",
    "rho",
    "kappa",
    "rho_bounds_check",
    "leading_constant",
    "singular_series",
    "SingularSeriesResult",
]


@dataclass(frozen=True)
class CoefficientVector:
    """The problem instance: k non-zero integer coefficients.

    Derived metadata: r_plus counts positive entries, g is the gcd of the
    absolute values, product_abs their product.  mixed_signs is False
    exactly when the correlation series is empty (all entries of one sign).
    """

    a: tuple

    def __post_init__(self):
        a = tuple(int(v) for v in self.a)
        object.__setattr__(self, "a", a)
        if len(a) < 2:
            raise DomainError("need at least two coefficients")
        if any(v == 0 for v in a):
            raise DomainError("coefficients must be non-zero")

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def r_plus(self) -> int:
        return sum(1 for v in self.a if v > 0)

    @property
    def g(self) -> int:
        return math.gcd(*[abs(v) for v in self.a])

    @property
    def product_abs(self) -> int:
        out = 1
        for v in self.a:
            out *= abs(v)
        return out

    @property
    def mixed_signs(self) -> bool:
        return 0 < self.r_plus < self.k


def _check_digits(q: Fraction, config: Config):
    digits = len(str(abs(q.numerator))) + len(str(q.denominator))
    if digits > config.max_rational_digits:
        raise BudgetError(f"rational intermediate exceeds {config.max_rational_digits} digits")


def rho(a: CoefficientVector, config: Config = DEFAULT) -> Fraction:
    """Exact local-density product over primes dividing a_1...a_k.

    Per prime p the local factor is

        N_p / D_p,
        N_p = 1 + sum_{m>=1} (1 - 1/p) p^m prod_i p^(-max(0, m - v_p(a_i))),
        D_p = 1 + (p-1)/(p^k - p),

    and for m >= max_i v_p(a_i) the summand is (1-1/p) p^(sum v) p^(m(1-k)),
    so the tail collapses to one geometric term.  Empty product gives 1.
    """
    k = a.k
    if a.product_abs == 1:
        return Fraction(1)
    primes = sorted({p for v in a.a for p, _ in arith.factorize(abs(v)).factors})
    out = Fraction(1)
    for p in primes:
        nu = []
        for v in a.a:
            av, e = abs(v), 0
            while av % p == 0:
                av //= p
                e += 1
            nu.append(e)
        M = max(nu)
        num = Fraction(1)
        one_less = Fraction(p - 1, p)
        for m in range(1, M):
            term = one_less * Fraction(p) ** m
            for e in nu:
                term *= Fraction(1, p ** max(0, m - e))
            num += term
        x = Fraction(1, p ** (k - 1))
        num += one_less * Fraction(p) ** sum(nu) * x**M / (1 - x)
        den = 1 + Fraction(p - 1, p**k - p)
        out *= num / den
        _check_digits(out, config)
    return out


def kappa(a: CoefficientVector) -> int:
    """Product of p^(second-smallest valuation) over primes dividing a_1...a_k.

    Defined for gcd-1 vectors (their smallest valuation is 0 at each prime).
    """
    if a.g != 1:
        raise DomainError("kappa requires gcd(a_1,...,a_k) = 1")
    primes = sorted({p for v in a.a for p, _ in arith.factorize(abs(v)).factors})
    out = 1
    for p in primes:
        nu = []
        for v in a.a:
            av, e = abs(v), 0
            while av % p == 0:
                av //= p
                e += 1
            nu.append(e)
        out *= p ** sorted(nu)[1]
    return out


def rho_bounds_check(a: CoefficientVector, config: Config = DEFAULT) -> bool:
    """Bracketing of rho by the kappa bounds:

        zeta(k)/zeta(k-1) * phi(kappa)/kappa * d(kappa)
            <= rho <= d(kappa) * prod_{p | a_1...a_k, p not | kappa} u_p,
        u_p = (1 + 1/p) / (1 + (p-1)/(p^k - p)).

    The local bracket is (n_p+1)(1-1/p) <= N_p <= 1 + n_p(1-1/p) + 1/p with
    n_p the second-smallest valuation; the upper side collapses to n_p + 1
    only when n_p >= 1.  Primes dividing the product to the first power in a
    single entry have n_p = 0 but still contribute a factor above 1 (for
    (-1,1,2) the local factor at 2 is 8/7 > d(kappa) = 1), hence the u_p
    correction on the upper side.  The comparison with the exact rational
    rho is exact on the upper side and uses a 1e-12 allowance against the
    zeta-based lower side.
    """
    if a.k < 3:
        raise DomainError("bounds involve zeta(k-1); require k >= 3")
    k = a.k
    kap = kappa(a)
    f = arith.factorize(kap)
    d_kap = arith.divisor_count(f)
    phi_kap = arith.totient(kap)
    r = rho(a, config)
    upper = Fraction(d_kap)
    for p in sorted({p for v in a.a for p, _ in arith.factorize(abs(v)).factors}):
        if kap % p != 0:
            upper *= (1 + Fraction(1, p)) / (1 + Fraction(p - 1, p**k - p))
    upper_ok = r <= upper
    lower = zeta(k).real / zeta(k - 1).real * phi_kap / kap * d_kap
    lower_ok = float(r) >= lower - 1e-12 * max(1.0, lower)
    return upper_ok and lower_ok


def leading_constant(a: CoefficientVector, config: Config = DEFAULT) -> float:
    """Leading polar coefficient of the correlation series for k >= 3:

        rho(a) / |a_1...a_k|^(1/k) * k!/k^(k+1) * zeta(k-1)/zeta(k)
               * Gamma(1/k)^k / (Gamma(r/k) Gamma(1 - r/k)),

    r the number of positive entries; zero when all signs agree.
    """
    k = a.k
    if k < 3:
        raise DomainError("leading constant defined for k >= 3")
    if not a.mixed_signs:
        return 0.0
    r = a.r_plus
    value = float(rho(a, config)) / a.product_abs ** (1.0 / k)
    value *= math.factorial(k) / k ** (k + 1)
    value *= zeta(k - 1).real / zeta(k).real
    value *= gamma(1.0 / k).real ** k / (gamma(r / k).real * gamma(1.0 - r / k).real)
    return value


@dataclass(frozen=True)
class SingularSeriesResult:
    truncated: TruncatedValue
    closed_form: float


def singular_series(a: CoefficientVector, L: int, config: Config = DEFAULT) -> SingularSeriesResult:
    """Singular series of the point-count asymptotic, two ways.

    Truncated route: (1/2) sum_{l<=L} prod_i (a_i, l) * phi(l) / l^k divided
    by zeta(k)^2, with the certified tail
    prod|a_i| * L^(2-k) / (2 zeta(k)^2 (k-2)) from (a_i,l) <= |a_i| and
    phi(l) <= l.  Closed route: rho(a) zeta(k-1) / (2 zeta(k)^3).
    """
    k = a.k
    if k < 3:
        raise DomainError("singular series defined for k >= 3")
    if L < 1:
        raise DomainError("need L >= 1")
    table = arith.build_sieve(L, config)
    ell = np.arange(1, L + 1, dtype=np.int64)
    prod_gcd = np.ones(L, dtype=np.float64)
    for v in a.a:
        prod_gcd *= np.gcd(ell, abs(v))
    weights = prod_gcd * table.phi[1:].astype(np.float64) / ell.astype(np.float64) ** k
    zk = zeta(k).real
    value = 0.5 * float(np.sum(weights)) / zk**2
    tail = a.product_abs * L ** (2.0 - k) / (2.0 * zk**2 * (k - 2))
    truncated = TruncatedValue(value=value, tail_bound=tail, cutoff=L, terms_used=L)
    closed = float(rho(a, config)) * zeta(k - 1).real / (2.0 * zk**3)
    return SingularSeriesResult(truncated=truncated, closed_form=closed)
