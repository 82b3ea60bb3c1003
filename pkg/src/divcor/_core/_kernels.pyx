# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled enumeration kernels.

Hot loops behind divcor.series and divcor.counting: correlation partial
sums, smoothed divisor sums and point-count height histograms for k = 3.
Semantics mirror divcor._core.fallback; see that module for the shared
solution parametrisation.
"""

from libc.math cimport exp, sqrt

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline long long c_gcd(long long a, long long b) nogil:
    while b:
        a, b = b, a % b
    return a


cdef inline long long c_abs(long long a) nogil:
    return -a if a < 0 else a


cdef inline long long mod_inv(long long a, long long m) nogil:
    # extended Euclid; gcd(a, m) == 1, m >= 1
    cdef long long t = 0, newt = 1, r = m, newr = a % m, q, tmp
    if m == 1:
        return 0
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += m
    return t


def corr_sum_k3(cnp.ndarray[cnp.float64_t, ndim=1] W, long long T,
                long long bu, long long bv, long long bs):
    """sum of W[nu] W[nv] W[ns] over bs*ns = bu*nu + bv*nv, all in [1, T]."""
    cdef double total = 0.0, row
    cdef long long solutions = 0
    cdef long long g = c_gcd(bv, bs)
    cdef long long bsg = bs / g
    cdef long long inv = mod_inv((bv / g) % bsg, bsg) if bsg > 1 else 0
    cdef long long nu, c, nv0, first, hi, nv, ns
    cdef double wnu
    cdef double* w = <double*> W.data
    for nu in range(1, T + 1):
        c = bu * nu
        if c + bv > T * bs:
            break
        if c % g:
            continue
        if bsg > 1:
            nv0 = (-(c / g) * inv) % bsg
            if nv0 < 0:
                nv0 += bsg
            first = nv0 if nv0 >= 1 else bsg
        else:
            first = 1
        hi = (T * bs - c) / bv
        if hi > T:
            hi = T
        if first > hi:
            continue
        wnu = w[nu]
        row = 0.0
        nv = first
        while nv <= hi:
            ns = (c + bv * nv) / bs
            row += w[nv] * w[ns]
            solutions += 1
            nv += bsg
        total += wnu * row
    return total, solutions


def smooth_sum_k3(cnp.ndarray[cnp.float64_t, ndim=1] D,
                  long long bu, long long bv, long long bs,
                  double Xk, double norm):
    """sum of D[nu] D[nv] D[ns] * bump(product / Xk) over nu*nv*ns < Xk."""
    cdef double total = 0.0, row, t, wgt
    cdef long long solutions = 0
    cdef long long g = c_gcd(bv, bs)
    cdef long long bsg = bs / g
    cdef long long inv = mod_inv((bv / g) % bsg, bsg) if bsg > 1 else 0
    cdef long long nu = 0, c, nv0, first, nv, ns, prod
    cdef double* dd = <double*> D.data
    while True:
        nu += 1
        c = bu * nu
        if nu * ((c + bv + bs - 1) / bs) >= Xk:
            break
        if c % g:
            continue
        if bsg > 1:
            nv0 = (-(c / g) * inv) % bsg
            if nv0 < 0:
                nv0 += bsg
            first = nv0 if nv0 >= 1 else bsg
        else:
            first = 1
        row = 0.0
        nv = first
        while True:
            ns = (c + bv * nv) / bs
            prod = nu * nv * ns
            if prod >= Xk:
                break
            t = prod / Xk
            if t < 1.0:
                wgt = exp(1.0 - 1.0 / (1.0 - t * t))
                row += dd[nv] * dd[ns] * wgt
            solutions += 1
            nv += bsg
        total += dd[nu] * row
    return norm * total, solutions


def count_heights_k3(long long a1, long long a2, long long a3, long long hmax):
    """Height histogram of ordered primitive pairs; see fallback docstring."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] hist = np.zeros(hmax + 1, dtype=np.int64)
    cdef long long* h = <long long*> hist.data
    cdef long long examined = 0
    cdef long long m, ymax, mmax
    cdef long long x1, x2, x3, ax2, ax3
    cdef long long c0, c1, c2, j0, M, cu, cv, cj
    cdef long long gv, Mv, inv, yu, rhs, res, first, yv, ys, num, my, w
    cdef long long yu_abs, lo
    cdef long long u, v
    cdef long long a_[3]
    cdef long long c_[3]
    cdef long long y_[3]
    a_[0] = a1
    a_[1] = a2
    a_[2] = a3
    mmax = <long long> sqrt(<double> hmax)
    while (mmax + 1) * (mmax + 1) <= hmax:
        mmax += 1
    while mmax * mmax > hmax:
        mmax -= 1
    for m in range(1, mmax + 1):
        ymax = hmax / m
        for x1 in range(1, m + 1):
            for x2 in range(-m, m + 1):
                if x2 == 0:
                    continue
                ax2 = c_abs(x2)
                for x3 in range(-m, m + 1):
                    if x3 == 0:
                        continue
                    ax3 = c_abs(x3)
                    if x1 != m and ax2 != m and ax3 != m:
                        continue
                    if c_gcd(c_gcd(x1, ax2), ax3) != 1:
                        continue
                    c_[0] = a_[0] * x1
                    c_[1] = a_[1] * x2
                    c_[2] = a_[2] * x3
                    j0 = 0
                    if c_abs(c_[1]) > c_abs(c_[j0]):
                        j0 = 1
                    if c_abs(c_[2]) > c_abs(c_[j0]):
                        j0 = 2
                    if j0 == 0:
                        u = 1
                        v = 2
                    elif j0 == 1:
                        u = 0
                        v = 2
                    else:
                        u = 0
                        v = 1
                    M = c_abs(c_[j0])
                    cu = c_[u]
                    cv = c_[v]
                    cj = c_[j0]
                    gv = c_gcd(c_abs(cv), M)
                    Mv = M / gv
                    inv = mod_inv(((cv / gv) % Mv + Mv) % Mv, Mv) if Mv > 1 else 0
                    lo = 1 if u == 0 else -ymax
                    for yu in range(lo, ymax + 1):
                        if yu == 0:
                            continue
                        rhs = -cu * yu
                        if rhs % gv:
                            continue
                        if Mv > 1:
                            res = ((rhs / gv) % Mv * inv) % Mv
                            if res < 0:
                                res += Mv
                            first = -ymax + (res - (-ymax)) % Mv
                        else:
                            first = -ymax
                        yv = first
                        while yv <= ymax:
                            examined += 1
                            if yv != 0:
                                num = cu * yu + cv * yv
                                ys = -num / cj
                                if ys != 0 and (j0 != 0 or ys >= 1):
                                    my = c_abs(ys)
                                    if my <= ymax:
                                        yu_abs = c_abs(yu)
                                        if yu_abs > my:
                                            my = yu_abs
                                        if c_abs(yv) > my:
                                            my = c_abs(yv)
                                        if my >= m:
                                            y_[u] = yu
                                            y_[v] = yv
                                            y_[j0] = ys
                                            if c_gcd(c_gcd(c_abs(y_[0]), c_abs(y_[1])), c_abs(y_[2])) == 1:
                                                w = 2 if my > m else 1
                                                h[m * my] += w
                            yv += Mv
    return hist, examined
