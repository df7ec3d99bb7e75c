"""Pure-Python twins of the compiled polynomial kernels.

``curvetop._kernels`` (Cython) implements the same functions with the same
semantics; ``curvetop.kernels`` picks whichever is available.  Everything here
is deliberately dependency-free so the package still works without a C
compiler, just slower.

Conventions
-----------
* A univariate integer polynomial is a list of Python ints in ascending
  degree with no trailing zeros; the zero polynomial is ``[]``.
* Modular routines take an odd prime ``p < 2**62`` and coefficient lists
  whose entries already lie in ``[0, p)``.
* A bivariate polynomial passed to a modular routine is flattened row-major:
  entry ``(i, j)`` (degree i in the outer variable, j in the inner one) sits
  at index ``i * ncols + j``.
"""

from __future__ import annotations


def zx_trim(f):
    """Strip trailing zero coefficients in place and return the list."""
    while f and f[-1] == 0:
        f.pop()
    return f


def zx_add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = f[:]
    for i, c in enumerate(g):
        out[i] += c
    return zx_trim(out)


def zx_sub(f, g):
    out = f[:] + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] -= c
    return zx_trim(out)


def zx_neg(f):
    return [-c for c in f]


def zx_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return zx_trim(out)


def zx_mul_scalar(f, c):
    if c == 0:
        return []
    return [a * c for a in f]


def zx_divexact(f, g):
    """Quotient of an exact division in Z[x]; raises ValueError otherwise."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return []
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        raise ValueError("not an exact division")
    lg = g[-1]
    rem = f[:]
    q = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        c = rem[k + dg]
        if c == 0:
            continue
        if c % lg:
            raise ValueError("not an exact division")
        c //= lg
        q[k] = c
        for i in range(dg + 1):
            rem[k + i] -= c * g[i]
    if any(rem):
        raise ValueError("not an exact division")
    return q


def zx_shift1(f):
    """Taylor shift: coefficients of f(x+1)."""
    c = f[:]
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += c[j + 1]
    return c


def zx_eval_int(f, a):
    """f(a) for integer a, by Horner."""
    acc = 0
    for c in reversed(f):
        acc = acc * a + c
    return acc


def zx_eval_num_at_fraction(f, num, den):
    """den**deg(f) * f(num/den) as an exact integer (den > 0 assumed)."""
    if not f:
        return 0
    acc = f[-1]
    dpow = 1
    for i in range(len(f) - 2, -1, -1):
        dpow *= den
        acc = acc * num + f[i] * dpow
    return acc


def zx_sign_variations(f):
    """Number of sign changes in the coefficient sequence, zeros skipped."""
    count = 0
    last = 0
    for c in f:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


# ---------------------------------------------------------------------------
# Modular arithmetic (odd prime p < 2**62)
# ---------------------------------------------------------------------------


def nm_eval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def nm_gcd(f, g, p):
    """Monic gcd of f, g mod p (lists reduced mod p, trailing zeros allowed)."""
    f = [c % p for c in f]
    g = [c % p for c in g]
    zx_trim(f)
    zx_trim(g)
    while g:
        dg = len(g) - 1
        lg = g[-1]
        linv = pow(lg, p - 2, p)
        r = f
        while len(r) - 1 >= dg:
            dr = len(r) - 1
            c = (r[-1] * linv) % p
            if c:
                off = dr - dg
                for k in range(dg):
                    r[off + k] = (r[off + k] - c * g[k]) % p
            r.pop()
            zx_trim(r)
            if not r:
                break
        f, g = g, r
    if f:
        inv = pow(f[-1], p - 2, p)
        f = [(c * inv) % p for c in f]
    return f


def nm_resultant(f, g, p):
    """Resultant of f and g mod p via the Euclidean remainder sequence."""
    f = list(f)
    g = list(g)
    zx_trim(f)
    zx_trim(g)
    if not f or not g:
        return 0
    res = 1
    while True:
        df = len(f) - 1
        dg = len(g) - 1
        if dg == 0:
            return (res * pow(g[0], df, p)) % p
        lg = g[-1]
        linv = pow(lg, p - 2, p)
        r = f[:]
        while len(r) - 1 >= dg:
            dr = len(r) - 1
            c = (r[-1] * linv) % p
            if c:
                off = dr - dg
                for k in range(dg):
                    r[off + k] = (r[off + k] - c * g[k]) % p
            r.pop()
            zx_trim(r)
            if not r:
                return 0
        dr = len(r) - 1
        res = (res * pow(lg, df - dr, p)) % p
        if (df & 1) and (dg & 1):
            res = p - res if res else 0
        f, g = g, r


def nm_interp(xs, ys, p):
    """Newton interpolation mod p; returns ascending coefficients."""
    n = len(xs)
    coef = [y % p for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            denom = (xs[i] - xs[i - j]) % p
            coef[i] = ((coef[i] - coef[i - 1]) * pow(denom, p - 2, p)) % p
    poly = [0] * n
    deg = -1
    for i in range(n - 1, -1, -1):
        # poly <- poly * (x - xs[i]) + coef[i]
        xi = xs[i] % p
        for k in range(deg, -1, -1):
            poly[k + 1] = poly[k]
        poly[0] = 0
        deg += 1
        for k in range(deg):
            poly[k] = (poly[k] - xi * poly[k + 1]) % p
        poly[0] = (poly[0] + coef[i]) % p
    return zx_trim(poly[: deg + 1] if deg >= 0 else [])


def nm_bivar_eval_outer(flat, nrows, ncols, t, p):
    """Specialize the outer variable of a flattened bivariate poly at t mod p.

    Returns the inner-variable coefficient list (trimmed).
    """
    out = []
    for j in range(ncols):
        acc = 0
        for i in range(nrows - 1, -1, -1):
            acc = (acc * t + flat[i * ncols + j]) % p
        out.append(acc)
    return zx_trim(out)


def nm_bivar_resultant_points(fflat, fr, fc, gflat, gr, gc, points, p):
    """Resultant in the inner variable at many outer-variable points mod p.

    For each t in ``points`` specializes both polynomials and computes the
    resultant of the specializations.  Entries where either specialization
    loses inner degree (leading column vanishes at t) are reported as the
    sentinel value ``p`` so the caller can discard those points.
    """
    out = []
    for t in points:
        f = nm_bivar_eval_outer(fflat, fr, fc, t, p)
        g = nm_bivar_eval_outer(gflat, gr, gc, t, p)
        if len(f) != fc or len(g) != gc:
            out.append(p)
            continue
        out.append(nm_resultant(f, g, p))
    return out


BACKEND = "python"
