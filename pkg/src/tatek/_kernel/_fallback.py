"""Pure-Python kernel, reference implementation for the compiled one."""


def convolve(a, b):
    """Convolution of two integer coefficient lists (dense, ascending degree)."""
    la, lb = len(a), len(b)
    out = [0] * (la + lb - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def monic_rem(c, f):
    """Remainder of the polynomial ``c`` modulo the monic polynomial ``f``.

    Both are integer coefficient lists, ascending degree, ``f[-1] == 1``.
    Returns a list of length ``len(f) - 1`` (zero-padded).
    """
    deg_f = len(f) - 1
    r = list(c)
    for k in range(len(r) - 1, deg_f - 1, -1):
        t = r[k]
        if t:
            r[k] = 0
            base = k - deg_f
            for i in range(deg_f):
                fi = f[i]
                if fi:
                    r[base + i] -= t * fi
    del r[deg_f:]
    r.extend([0] * (deg_f - len(r)))
    return r
