# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled polynomial kernels; see _kernels_py.py for the reference semantics.

Univariate Z[x] routines keep Python ints (coefficients are arbitrary
precision) but run the loop structure in C.  Modular routines run entirely on
C uint64 buffers with 128-bit intermediate products.
"""

from cpython.list cimport PyList_GET_ITEM, PyList_GET_SIZE
from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #include <stdint.h>
    static inline uint64_t ct_mulmod(uint64_t a, uint64_t b, uint64_t p) {
        return (uint64_t)(((__uint128_t)a * b) % p);
    }
    """
    unsigned long long ct_mulmod(unsigned long long a, unsigned long long b,
                                 unsigned long long p) nogil

ctypedef unsigned long long u64
ctypedef long long i64


cdef u64 _invmod(u64 a, u64 p) nogil:
    # extended Euclid; a != 0 mod p, p prime
    cdef i64 t = 0, newt = 1, q, tmp
    cdef u64 r = p, newr = a
    while newr != 0:
        q = <i64>(r / newr)
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = <i64>(r - <u64>q * newr)
        r = newr
        newr = <u64>tmp
    if t < 0:
        t += <i64>p
    return <u64>t


def zx_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def zx_add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    cdef Py_ssize_t i
    for i in range(len(g)):
        out[i] = out[i] + g[i]
    return zx_trim(out)


def zx_sub(f, g):
    out = list(f) + [0] * (len(g) - len(f))
    cdef Py_ssize_t i
    for i in range(len(g)):
        out[i] = out[i] - g[i]
    return zx_trim(out)


def zx_neg(f):
    return [-c for c in f]


def zx_mul(list f, list g):
    cdef Py_ssize_t nf = PyList_GET_SIZE(f), ng = PyList_GET_SIZE(g)
    if nf == 0 or ng == 0:
        return []
    cdef list out = [0] * (nf + ng - 1)
    cdef Py_ssize_t i, j
    cdef object a
    for i in range(nf):
        a = f[i]
        if a == 0:
            continue
        for j in range(ng):
            out[i + j] = out[i + j] + a * g[j]
    return zx_trim(out)


def zx_mul_scalar(f, c):
    if c == 0:
        return []
    return [a * c for a in f]


def zx_divexact(list f, list g):
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return []
    cdef Py_ssize_t df = PyList_GET_SIZE(f) - 1, dg = PyList_GET_SIZE(g) - 1
    if df < dg:
        raise ValueError("not an exact division")
    cdef object lg = g[dg]
    cdef list rem = list(f)
    cdef list q = [0] * (df - dg + 1)
    cdef Py_ssize_t k, i
    cdef object c
    for k in range(df - dg, -1, -1):
        c = rem[k + dg]
        if c == 0:
            continue
        if c % lg:
            raise ValueError("not an exact division")
        c = c // lg
        q[k] = c
        for i in range(dg + 1):
            rem[k + i] = rem[k + i] - c * g[i]
    for k in range(df + 1):
        if rem[k] != 0:
            raise ValueError("not an exact division")
    return q


def zx_shift1(list f):
    cdef list c = list(f)
    cdef Py_ssize_t n = PyList_GET_SIZE(c)
    cdef Py_ssize_t i, j
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] = c[j] + c[j + 1]
    return c


def zx_eval_int(f, a):
    acc = 0
    for c in reversed(f):
        acc = acc * a + c
    return acc


def zx_eval_num_at_fraction(list f, num, den):
    if not f:
        return 0
    cdef Py_ssize_t i
    acc = f[len(f) - 1]
    dpow = 1
    for i in range(len(f) - 2, -1, -1):
        dpow = dpow * den
        acc = acc * num + f[i] * dpow
    return acc


def zx_sign_variations(f):
    cdef int count = 0, last = 0, s
    for c in f:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if last != 0 and s != last:
            count += 1
        last = s
    return count


# ---------------------------------------------------------------------------
# Modular arithmetic on C buffers
# ---------------------------------------------------------------------------


cdef Py_ssize_t _load(list f, u64 *buf, u64 p) except -1:
    cdef Py_ssize_t n = PyList_GET_SIZE(f), i
    for i in range(n):
        buf[i] = <u64>(f[i] % p)
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return n


cdef Py_ssize_t _nm_rem_inplace(u64 *r, Py_ssize_t nr, u64 *g, Py_ssize_t ng,
                                u64 p) nogil:
    # r <- r mod g (monic-ized on the fly); returns new length of r
    cdef u64 lg = g[ng - 1]
    cdef u64 linv = _invmod(lg, p)
    cdef u64 c
    cdef Py_ssize_t k, off
    while nr >= ng:
        c = ct_mulmod(r[nr - 1], linv, p)
        if c != 0:
            off = nr - ng
            for k in range(ng - 1):
                r[off + k] = (r[off + k] + p - ct_mulmod(c, g[k], p)) % p
        nr -= 1
        while nr > 0 and r[nr - 1] == 0:
            nr -= 1
    return nr


def nm_eval(f, x, p):
    cdef u64 cp = <u64>p, cx = <u64>(x % p), acc = 0
    for c in reversed(f):
        acc = (ct_mulmod(acc, cx, cp) + <u64>(c % p)) % cp
    return acc


def nm_gcd(f, g, p):
    cdef u64 cp = <u64>p
    cdef Py_ssize_t cap = len(f) + len(g) + 2
    cdef u64 *a = <u64 *>malloc(cap * sizeof(u64))
    cdef u64 *b = <u64 *>malloc(cap * sizeof(u64))
    if a == NULL or b == NULL:
        free(a)
        free(b)
        raise MemoryError()
    cdef Py_ssize_t na, nb, i
    cdef u64 *t
    cdef u64 inv
    try:
        na = _load(f, a, cp)
        nb = _load(g, b, cp)
        while nb > 0:
            na = _nm_rem_inplace(a, na, b, nb, cp)
            t = a
            a = b
            b = t
            i = na
            na = nb
            nb = i
        out = []
        if na > 0:
            inv = _invmod(a[na - 1], cp)
            for i in range(na):
                out.append(ct_mulmod(a[i], inv, cp))
        return out
    finally:
        free(a)
        free(b)


cdef u64 _nm_resultant_bufs(u64 *a, Py_ssize_t na, u64 *b, Py_ssize_t nb,
                            u64 p) nogil:
    cdef u64 res = 1, lg, linv, c
    cdef Py_ssize_t k, off, nr, df, dg
    cdef u64 *t
    if na == 0 or nb == 0:
        return 0
    while True:
        df = na - 1
        dg = nb - 1
        if dg == 0:
            # res * b[0]**df
            lg = b[0]
            c = 1
            while df > 0:
                if df & 1:
                    c = ct_mulmod(c, lg, p)
                lg = ct_mulmod(lg, lg, p)
                df >>= 1
            return ct_mulmod(res, c, p)
        lg = b[nb - 1]
        linv = _invmod(lg, p)
        nr = na
        while nr >= nb:
            c = ct_mulmod(a[nr - 1], linv, p)
            if c != 0:
                off = nr - nb
                for k in range(nb - 1):
                    a[off + k] = (a[off + k] + p - ct_mulmod(c, b[k], p)) % p
            nr -= 1
            while nr > 0 and a[nr - 1] == 0:
                nr -= 1
        if nr == 0:
            return 0
        # res *= lg**(df - (nr-1)), sign flip when both degrees odd
        c = 1
        k = df - (nr - 1)
        while k > 0:
            if k & 1:
                c = ct_mulmod(c, lg, p)
            lg = ct_mulmod(lg, lg, p)
            k >>= 1
        res = ct_mulmod(res, c, p)
        if (df & 1) and (dg & 1):
            if res:
                res = p - res
        t = a
        a = b
        b = t
        k = na
        na = nb
        nb = nr
    return 0  # unreachable


def nm_resultant(f, g, p):
    cdef u64 cp = <u64>p
    cdef Py_ssize_t cap = len(f) + len(g) + 2
    cdef u64 *a = <u64 *>malloc(cap * sizeof(u64))
    cdef u64 *b = <u64 *>malloc(cap * sizeof(u64))
    if a == NULL or b == NULL:
        free(a)
        free(b)
        raise MemoryError()
    try:
        na = _load(f, a, cp)
        nb = _load(g, b, cp)
        return _nm_resultant_bufs(a, na, b, nb, cp)
    finally:
        free(a)
        free(b)


def nm_interp(xs, ys, p):
    cdef u64 cp = <u64>p
    cdef Py_ssize_t n = len(xs), i, j, k
    if n == 0:
        return []
    cdef u64 *x = <u64 *>malloc(n * sizeof(u64))
    cdef u64 *c = <u64 *>malloc(n * sizeof(u64))
    cdef u64 *poly = <u64 *>malloc(n * sizeof(u64))
    if x == NULL or c == NULL or poly == NULL:
        free(x)
        free(c)
        free(poly)
        raise MemoryError()
    cdef u64 denom, xi
    cdef Py_ssize_t deg
    try:
        for i in range(n):
            x[i] = <u64>(xs[i] % p)
            c[i] = <u64>(ys[i] % p)
        with nogil:
            for j in range(1, n):
                for i in range(n - 1, j - 1, -1):
                    denom = (x[i] + cp - x[i - j]) % cp
                    c[i] = ct_mulmod((c[i] + cp - c[i - 1]) % cp,
                                     _invmod(denom, cp), cp)
            deg = -1
            for i in range(n - 1, -1, -1):
                xi = x[i]
                for k in range(deg, -1, -1):
                    poly[k + 1] = poly[k]
                poly[0] = 0
                deg += 1
                for k in range(deg):
                    poly[k] = (poly[k] + cp -
                               ct_mulmod(xi, poly[k + 1], cp)) % cp
                poly[0] = (poly[0] + c[i]) % cp
        out = []
        while deg >= 0 and poly[deg] == 0:
            deg -= 1
        for i in range(deg + 1):
            out.append(poly[i])
        return out
    finally:
        free(x)
        free(c)
        free(poly)


def nm_bivar_eval_outer(flat, nrows, ncols, t, p):
    cdef u64 cp = <u64>p, ct = <u64>(t % p), acc
    cdef Py_ssize_t nr = nrows, nc = ncols, i, j
    cdef u64 *buf = <u64 *>malloc(nr * nc * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(nr * nc):
            buf[i] = <u64>(flat[i] % p)
        out = []
        for j in range(nc):
            acc = 0
            for i in range(nr - 1, -1, -1):
                acc = (ct_mulmod(acc, ct, cp) + buf[i * nc + j]) % cp
            out.append(acc)
        while out and out[-1] == 0:
            out.pop()
        return out
    finally:
        free(buf)


def nm_bivar_resultant_points(fflat, fr, fc, gflat, gr, gc, points, p):
    """Inner-variable resultants of two bivariate polys at many outer points.

    Degenerate points (either leading inner column vanishing at t) yield the
    sentinel value p.
    """
    cdef u64 cp = <u64>p, acc, tv
    cdef Py_ssize_t frr = fr, fcc = fc, grr = gr, gcc = gc
    cdef Py_ssize_t npts = len(points), i, j, m, na, nb
    cdef u64 *fb = <u64 *>malloc(frr * fcc * sizeof(u64))
    cdef u64 *gb = <u64 *>malloc(grr * gcc * sizeof(u64))
    cdef u64 *pt = <u64 *>malloc(npts * sizeof(u64))
    cdef u64 *rs = <u64 *>malloc(npts * sizeof(u64))
    cdef u64 *a = <u64 *>malloc((fcc + gcc + 2) * sizeof(u64))
    cdef u64 *b = <u64 *>malloc((fcc + gcc + 2) * sizeof(u64))
    if fb == NULL or gb == NULL or pt == NULL or rs == NULL or a == NULL or b == NULL:
        free(fb); free(gb); free(pt); free(rs); free(a); free(b)
        raise MemoryError()
    try:
        for i in range(frr * fcc):
            fb[i] = <u64>(fflat[i] % p)
        for i in range(grr * gcc):
            gb[i] = <u64>(gflat[i] % p)
        for i in range(npts):
            pt[i] = <u64>(points[i] % p)
        with nogil:
            for m in range(npts):
                tv = pt[m]
                for j in range(fcc):
                    acc = 0
                    for i in range(frr - 1, -1, -1):
                        acc = (ct_mulmod(acc, tv, cp) + fb[i * fcc + j]) % cp
                    a[j] = acc
                na = fcc
                while na > 0 and a[na - 1] == 0:
                    na -= 1
                for j in range(gcc):
                    acc = 0
                    for i in range(grr - 1, -1, -1):
                        acc = (ct_mulmod(acc, tv, cp) + gb[i * gcc + j]) % cp
                    b[j] = acc
                nb = gcc
                while nb > 0 and b[nb - 1] == 0:
                    nb -= 1
                if na != fcc or nb != gcc:
                    rs[m] = cp
                else:
                    rs[m] = _nm_resultant_bufs(a, na, b, nb, cp)
        return [rs[i] for i in range(npts)]
    finally:
        free(fb); free(gb); free(pt); free(rs); free(a); free(b)


BACKEND = "cython"
