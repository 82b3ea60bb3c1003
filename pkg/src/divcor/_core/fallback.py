"""Pure numpy implementations of the hot enumeration loops.

Selected automatically when the compiled extension is unavailable (or when
DIVCOR_FORCE_PYTHON is set).  Semantics match divcor._core._kernels exactly;
integer outputs are bit-identical, float outputs agree to ~1e-12 relative
(different but fixed summation orders).

All three kernels share the same solution parametrisation: two free
positive variables (nu, nv) with positive coefficients (bu, bv) and a
solved variable ns = (bu*nu + bv*nv)/bs, enumerated over the arithmetic
progression where bs divides the combination.
"""

from __future__ import annotations

import math

import numpy as np


def _first_in_class(residue: int, modulus: int, lo: int) -> int:
    """Smallest value >= lo congruent to residue mod modulus."""
    return lo + (residue - lo) % modulus


def corr_sum_k3(W: np.ndarray, T: int, bu: int, bv: int, bs: int):
    """sum of W[nu] W[nv] W[ns] over nu, nv, ns in [1, T], bs*ns = bu*nu + bv*nv.

    Returns (value, solutions).
    """
    W = np.asarray(W, dtype=np.float64)
    g = math.gcd(bv, bs)
    bsg = bs // g
    inv = pow((bv // g) % bsg, -1, bsg) if bsg > 1 else 0
    total = 0.0
    solutions = 0
    for nu in range(1, T + 1):
        c = bu * nu
        if c + bv > T * bs:  # even nv = 1 pushes ns past T
            break
        if c % g:
            continue
        if bsg > 1:
            nv0 = (-(c // g) * inv) % bsg
            first = nv0 if nv0 >= 1 else bsg
        else:
            first = 1
        hi = min(T, (T * bs - c) // bv)
        if first > hi:
            continue
        nv = np.arange(first, hi + 1, bsg, dtype=np.int64)
        ns = (c + bv * nv) // bs
        total += W[nu] * float(np.dot(W[nv], W[ns]))
        solutions += nv.size
    return total, solutions


def smooth_sum_k3(D: np.ndarray, bu: int, bv: int, bs: int, Xk: float, norm: float):
    """sum of D[nu] D[nv] D[ns] * bump(nu*nv*ns / Xk) over nu*nv*ns < Xk.

    bump(t) = norm * exp(1 - 1/(1 - t^2)) on (0, 1).  Returns
    (value, solutions).  D must cover indices up to the largest variable,
    which the caller guarantees.
    """
    D = np.asarray(D, dtype=np.float64)
    g = math.gcd(bv, bs)
    bsg = bs // g
    inv = pow((bv // g) % bsg, -1, bsg) if bsg > 1 else 0
    total = 0.0
    solutions = 0
    nu = 0
    while True:
        nu += 1
        c = bu * nu
        # nv = 1 already exceeds the product cap: nu * 1 * ceil((c+bv)/bs)
        if nu * ((c + bv + bs - 1) // bs) >= Xk:
            break
        if c % g:
            continue
        if bsg > 1:
            nv0 = (-(c // g) * inv) % bsg
            first = nv0 if nv0 >= 1 else bsg
        else:
            first = 1
        # product nu*nv*ns is increasing in nv; find the last admissible nv
        # by solving nu * nv * (c + bv nv)/bs < Xk conservatively, then trim.
        disc = c * c + 4.0 * bv * Xk * bs / nu
        hi = int((math.sqrt(disc) - c) / (2.0 * bv)) + 2
        nv = np.arange(first, hi + 1, bsg, dtype=np.int64)
        if nv.size == 0:
            continue
        ns = (c + bv * nv) // bs
        prod = nu * nv * ns
        keep = prod < Xk
        nv, ns, prod = nv[keep], ns[keep], prod[keep]
        if nv.size == 0:
            continue
        t = prod.astype(np.float64) / Xk
        with np.errstate(over="ignore", under="ignore", divide="ignore"):
            w = np.exp(1.0 - 1.0 / (1.0 - t * t))
        w[t >= 1.0] = 0.0
        total += float(D[nu] * np.dot(D[nv] * D[ns], w))
        solutions += int(nv.size)
    return norm * total, solutions


def _x_shell(m: int):
    """Primitive x = (x1, x2, x3), x1 >= 1, coords non-zero, max |x_i| = m."""
    r = np.arange(1, m + 1, dtype=np.int64)
    pm = np.concatenate([-r[::-1], r])
    x1, x2, x3 = np.meshgrid(r, pm, pm, indexing="ij")
    x1, x2, x3 = x1.ravel(), x2.ravel(), x3.ravel()
    amax = np.maximum(x1, np.maximum(np.abs(x2), np.abs(x3)))
    keep = amax == m
    x1, x2, x3 = x1[keep], x2[keep], x3[keep]
    keep = np.gcd(np.gcd(x1, np.abs(x2)), np.abs(x3)) == 1
    return x1[keep], x2[keep], x3[keep]


def count_heights_k3(a1: int, a2: int, a3: int, hmax: int):
    """Histogram over h = Mx*My of ordered primitive pairs on the variety.

    Pairs (x, y) satisfy sum a_i x_i y_i = 0, all coordinates non-zero,
    gcd(x) = gcd(y) = 1, first coordinates positive (one representative per
    projective pair), Mx <= My and Mx*My <= hmax.  A pair with Mx < My is
    recorded with weight 2 (its swap is not enumerated); Mx = My pairs have
    weight 1.  Returns (hist, candidates_examined).
    """
    hist = np.zeros(hmax + 1, dtype=np.int64)
    examined = 0
    coeffs = (a1, a2, a3)
    for m in range(1, math.isqrt(hmax) + 1):
        ymax = hmax // m
        x1s, x2s, x3s = _x_shell(m)
        for xi in range(x1s.size):
            x = (int(x1s[xi]), int(x2s[xi]), int(x3s[xi]))
            c = [coeffs[i] * x[i] for i in range(3)]
            j0 = max(range(3), key=lambda i: abs(c[i]))
            u, v = [i for i in range(3) if i != j0]
            M = abs(c[j0])
            gv = math.gcd(abs(c[v]), M)
            Mv = M // gv
            inv = pow((c[v] // gv) % Mv, -1, Mv) if Mv > 1 else 0
            # free ranges: y1 positive when free, others full +-
            if u == 0:
                yu = np.arange(1, ymax + 1, dtype=np.int64)
            else:
                r = np.arange(1, ymax + 1, dtype=np.int64)
                yu = np.concatenate([-r[::-1], r])
            rhs = -c[u] * yu
            ok = rhs % gv == 0
            yu = yu[ok]
            rhs = rhs[ok] // gv
            if yu.size == 0:
                continue
            res = (rhs * inv) % Mv if Mv > 1 else np.zeros(yu.size, dtype=np.int64)
            # nonzero y_v in [lo, ymax] congruent to res mod Mv, where
            # lo = 1 if v == 0 else -ymax (v == 0 cannot happen: u < v)
            lo = -ymax
            first = lo + (res - lo) % Mv
            cnt = (ymax - first) // Mv + 1
            good = cnt > 0
            yu, first, cnt = yu[good], first[good], cnt[good]
            if yu.size == 0:
                continue
            offs = np.repeat(np.cumsum(cnt) - cnt, cnt)
            flat = np.arange(offs.size, dtype=np.int64) - offs
            yv = np.repeat(first, cnt) + flat * Mv
            yue = np.repeat(yu, cnt)
            examined += int(yv.size)
            num = c[u] * yue + c[v] * yv
            ys = -num // c[j0]
            my = np.maximum(np.abs(yue), np.maximum(np.abs(yv), np.abs(ys)))
            keep = (yv != 0) & (ys != 0) & (np.abs(ys) <= ymax) & (my >= m)
            if j0 == 0:
                keep &= ys >= 1
            yue, yv, ys, my = yue[keep], yv[keep], ys[keep], my[keep]
            if yue.size == 0:
                continue
            ycols = {u: yue, v: yv, j0: ys}
            prim = np.gcd(np.gcd(np.abs(ycols[0]), np.abs(ycols[1])), np.abs(ycols[2])) == 1
            my = my[prim]
            if my.size == 0:
                continue
            w = np.where(my > m, 2, 1).astype(np.int64)
            np.add.at(hist, m * my, w)
    return hist, examined
