"""Exact integer arithmetic: sieves, factorization, divisor sums, Ramanujan sums.

Everything here is exact.  Sieve tables are numpy arrays built with
vectorised passes; single-value functions (factorize, ramanujan_sum, ...)
use Python integers throughout.  Ramanujan sums are evaluated by the
Moebius divisor form

    c_l(m) = sum_{d | gcd(l, |m|)} mu(l/d) * d,        c_l(0) = phi(l),

never by floating exponential sums; the exponential sum appears only as a
test oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .config import DEFAULT, Config
from .errors import BudgetError, DomainError, InvariantError

__all__ = [
    "FactoredInteger",
    "SieveTable",
    "build_sieve",
    "factorize",
    "divisors",
    "mobius",
    "totient",
    "divisor_count",
    "tau_shifted",
    "sigma_power",
    "ramanujan_sum",
    "ramanujan_formula_residual",
    "divisor_count_table",
    "sigma_power_table",
]


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer with its prime factorization.

    factors is a tuple of (prime, exponent) pairs with strictly increasing
    primes and exponents >= 1; their product equals value.
    """

    value: int
    factors: tuple

    def __post_init__(self):
        if self.value < 1:
            raise DomainError("FactoredInteger requires value >= 1")
        prod = 1
        last_p = 1
        for p, e in self.factors:
            if p <= last_p or e < 1:
                raise InvariantError("factors must have increasing primes, exponents >= 1")
            prod *= p**e
            last_p = p
        if prod != self.value:
            raise InvariantError(f"factorization product {prod} != value {self.value}")


@dataclass(frozen=True)
class SieveTable:
    """Multiplicative-function tables for 1 <= n <= limit.

    Arrays are index-aligned (entry 0 unused).  Treated as immutable after
    construction; safe to share across threads.
    """

    limit: int
    d: np.ndarray  # divisor counts, int32
    mu: np.ndarray  # Moebius, int8
    phi: np.ndarray  # totient, int64
    spf: np.ndarray  # smallest prime factor, int32


def build_sieve(N: int, config: Config = DEFAULT) -> SieveTable:
    """Build divisor-count, Moebius, totient and smallest-prime-factor tables."""
    if N < 1:
        raise DomainError("sieve limit must be >= 1")
    if N > config.max_sieve_n:
        raise BudgetError(f"sieve limit {N} exceeds configured cap {config.max_sieve_n}")

    root = math.isqrt(N)

    d = np.zeros(N + 1, dtype=np.int32)
    for a in range(1, root + 1):
        d[a * a] += 1
        d[a * (a + 1) :: a] += 2

    spf = np.zeros(N + 1, dtype=np.int32)
    for i in range(2, root + 1):
        if spf[i] == 0:
            block = spf[i * i :: i]
            block[block == 0] = i
    untouched = np.nonzero(spf[2:] == 0)[0] + 2
    spf[untouched] = untouched  # primes (including those > sqrt(N))

    mu = np.ones(N + 1, dtype=np.int8)
    phi = np.arange(N + 1, dtype=np.int64)
    rem = np.arange(N + 1, dtype=np.int64)
    small_primes = [p for p in range(2, root + 1) if spf[p] == p]
    for p in small_primes:
        phi[p::p] = phi[p::p] // p * (p - 1)
        mu[p::p] *= -1
        sq = p * p
        if sq <= N:
            mu[sq::sq] = 0
        pe = p
        while pe <= N:
            rem[pe::pe] //= p
            pe *= p
    # leftover prime factor > sqrt(N) appears to the first power only
    big = np.nonzero(rem[2:] > 1)[0] + 2
    q = rem[big]
    mu[big] *= -1
    phi[big] = phi[big] // q * (q - 1)
    if N >= 1:
        mu[1] = 1
        phi[1] = 1

    return SieveTable(limit=N, d=d, mu=mu, phi=phi, spf=spf)


@lru_cache(maxsize=1)
def _trial_primes(limit: int = 100_000) -> tuple:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return tuple(int(p) for p in np.nonzero(sieve)[0])


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the base set covers all n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    r, m = 0, n - 1
    while m % 2 == 0:
        r += 1
        m //= 2
    for a in _MR_BASES:
        x = pow(a, m, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, config: Config) -> int:
    """Brent-cycle Pollard rho with the deterministic increments from config."""
    if n % 2 == 0:
        return 2
    for c in config.rho_increments:
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise InvariantError(f"pollard rho failed on {n} with configured increments")


def factorize(n: int, config: Config = DEFAULT) -> FactoredInteger:
    """Factor n >= 1 into prime powers (trial division, then Pollard rho)."""
    if n < 1:
        raise DomainError("factorize requires n >= 1")
    value = n
    fac = {}
    for p in _trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            fac[p] = fac.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if _is_prime(m):
                fac[m] = fac.get(m, 0) + 1
                continue
            g = _pollard_brent(m, config)
            stack.extend((g, m // g))
    return FactoredInteger(value=value, factors=tuple(sorted(fac.items())))


def divisors(f: FactoredInteger) -> list:
    """All positive divisors, ascending."""
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**j for d in divs for j in range(e + 1)]
    return sorted(divs)


def divisor_count(f: FactoredInteger) -> int:
    out = 1
    for _, e in f.factors:
        out *= e + 1
    return out


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def totient(n: int) -> int:
    out = n
    for p, _ in factorize(n).factors:
        out = out // p * (p - 1)
    return out


def tau_shifted(n: int, alpha: complex, beta: complex) -> complex:
    """Shifted divisor function: sum over d1*d2 = n of d1^-alpha * d2^-beta.

    Equals d(n) at alpha = beta = 0.  Computed from the factorization, one
    geometric block per prime power.
    """
    if n < 1:
        raise DomainError("tau_shifted requires n >= 1")
    out = 1.0 + 0.0j
    for p, e in factorize(n).factors:
        pa = p ** (-complex(alpha))
        pb = p ** (-complex(beta))
        out *= sum(pa**j * pb ** (e - j) for j in range(e + 1))
    return out


def sigma_power(n: int, gamma: complex) -> complex:
    """Divisor power sum: sum over d | n of d^gamma; sigma_0 = d(n)."""
    if n < 1:
        raise DomainError("sigma_power requires n >= 1")
    out = 1.0 + 0.0j
    for p, e in factorize(n).factors:
        pg = p ** complex(gamma)
        out *= sum(pg**j for j in range(e + 1))
    return out


def ramanujan_sum(l: int, m: int) -> int:
    """Ramanujan sum c_l(m), exact, via the Moebius divisor form."""
    if l < 1:
        raise DomainError("ramanujan_sum requires l >= 1")
    if m == 0:
        return totient(l)
    g = math.gcd(l, abs(m))
    total = 0
    for d in divisors(factorize(g)):
        total += mobius(l // d) * d
    return total


def divisor_count_table(T: int, config: Config = DEFAULT) -> np.ndarray:
    """d(n) for 0 <= n <= T as int32 (entry 0 is 0)."""
    if T < 1:
        raise DomainError("table cutoff must be >= 1")
    if T > config.max_sieve_n:
        raise BudgetError(f"table cutoff {T} exceeds configured cap {config.max_sieve_n}")
    d = np.zeros(T + 1, dtype=np.int32)
    for a in range(1, math.isqrt(T) + 1):
        d[a * a] += 1
        d[a * (a + 1) :: a] += 2
    return d


def sigma_power_table(T: int, gamma: float, config: Config = DEFAULT) -> np.ndarray:
    """sigma_gamma(n) for 0 <= n <= T, real gamma, as float64."""
    if T < 1:
        raise DomainError("table cutoff must be >= 1")
    if T > config.max_sieve_n:
        raise BudgetError(f"table cutoff {T} exceeds configured cap {config.max_sieve_n}")
    out = np.zeros(T + 1, dtype=np.float64)
    for e in range(1, math.isqrt(T) + 1):
        pe = float(e) ** gamma
        out[e * e] += pe
        hi = T // e
        if hi > e:
            q = np.arange(e + 1, hi + 1, dtype=np.float64)
            out[e * (e + 1) :: e] += pe + q**gamma
    return out


def ramanujan_formula_residual(s: float, m: int, L: int, zeta_value: float) -> tuple:
    """Check zeta(s) * sum_{l<=L} c_l(m)/l^s against sigma_{1-s}(m).

    Returns (residual, certified_tail_bound).  The l-sum is assembled from
    the divisor decomposition c_l(m) = sum_{d | (l,m)} mu(l/d) d, so each
    divisor d of m contributes d * mu(t) at l = d*t.  The tail uses
    |c_l(m)| <= sigma_1(|m|).
    """
    if s <= 1:
        raise DomainError("Ramanujan's formula requires s > 1")
    if m == 0 or L < 1:
        raise DomainError("require m != 0 and L >= 1")
    m = abs(m)
    mu_tab = build_sieve(L).mu
    lsum = 0.0
    for d in divisors(factorize(m)):
        if d > L:
            break
        tmax = L // d
        t = np.arange(1, tmax + 1, dtype=np.float64)
        lsum += float(d) * float(np.sum(mu_tab[1 : tmax + 1] * (float(d) * t) ** (-s)))
    sigma1 = float(abs(sigma_power(m, 1.0)))
    tail = zeta_value * sigma1 * (L ** (1.0 - s) / (s - 1.0))
    residual = abs(zeta_value * lsum - float(sigma_power(m, 1.0 - s).real))
    return residual, tail
