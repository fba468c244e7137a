# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel. Coefficients stay arbitrary-precision Python ints;
the win over the fallback is loop and indexing overhead only."""


def convolve(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef list out = [0] * (la + lb - 1)
    cdef object ai, bj
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            bj = b[j]
            if bj != 0:
                out[i + j] = out[i + j] + ai * bj
    return out


def monic_rem(list c, list f):
    cdef Py_ssize_t deg_f = len(f) - 1, k, i, base
    cdef list r = list(c)
    cdef object t, fi
    for k in range(len(r) - 1, deg_f - 1, -1):
        t = r[k]
        if t != 0:
            r[k] = 0
            base = k - deg_f
            for i in range(deg_f):
                fi = f[i]
                if fi != 0:
                    r[base + i] = r[base + i] - t * fi
    del r[deg_f:]
    while len(r) < deg_f:
        r.append(0)
    return r
