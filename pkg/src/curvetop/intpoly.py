"""Exact polynomial arithmetic over the integers.

Univariate polynomials (:class:`IntPoly`), bivariate polynomials
(:class:`BivarIntPoly`), reduced rational functions (:class:`RatFunc`) and
the algorithms on them: GCDs, resultants, square-free decomposition,
derivatives and evaluation.

Two routes exist for GCDs and resultants: a subresultant polynomial remainder
sequence for small operands, and a CRT/evaluation-interpolation route on
machine-word primes for large ones.  Both are exact; the tests assert they
agree.
"""

from __future__ import annotations

import math
from fractions import Fraction

from curvetop import kernels as K

# ---------------------------------------------------------------------------
# Small integer utilities
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime_u64(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_POOL: list[int] = []


def nth_prime(i: int) -> int:
    """i-th prime of a fixed descending sequence just below 2**62."""
    n = _PRIME_POOL[-1] - 2 if _PRIME_POOL else (1 << 62) - 1
    while len(_PRIME_POOL) <= i:
        while not _is_prime_u64(n):
            n -= 2
        _PRIME_POOL.append(n)
        n -= 2
    return _PRIME_POOL[i]


def crt_combine(residues, primes):
    """Solve x = r_i mod p_i; returns (x mod M, M) with 0 <= x < M."""
    x, m = 0, 1
    for r, p in zip(residues, primes):
        # Garner step
        t = ((r - x) * pow(m, -1, p)) % p
        x += m * t
        m *= p
    return x, m


def symmetric_lift(v: int, m: int) -> int:
    return v - m if v > m // 2 else v


# ---------------------------------------------------------------------------
# Raw coefficient-list helpers (ascending lists of int)
# ---------------------------------------------------------------------------


def zz_content(f) -> int:
    c = 0
    for a in f:
        c = math.gcd(c, a)
        if c == 1:
            break
    return c


def zz_primitive(f):
    """(content, primitive part with positive leading coefficient)."""
    if not f:
        return 0, []
    c = zz_content(f)
    if f[-1] < 0:
        c = -c
    return c, [a // c for a in f]


def zz_diff(f):
    return [i * f[i] for i in range(1, len(f))]


def zz_prem(f, g):
    """Pseudo-remainder of f by g: lc(g)^(df-dg+1) * f mod g, over Z."""
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return list(f)
    lg = g[-1]
    r = list(f)
    k = df - dg + 1
    while r and len(r) - 1 >= dg:
        k -= 1
        c = r[-1]
        r = [lg * a for a in r[:-1]]
        for i in range(dg):
            r[len(r) - dg + i] -= c * g[i]
        K.zx_trim(r)
    if k > 0:
        m = lg**k
        r = [a * m for a in r]
    return r


def _zz_gcd_modular(f, g):
    """Primitive gcd by CRT of monic modular images, verified by division."""
    _, fp = zz_primitive(f)
    _, gp = zz_primitive(g)
    gamma = math.gcd(fp[-1], gp[-1])
    best_deg = min(len(fp), len(gp))  # exclusive upper bound on gcd length
    images = []  # (prime, coeffs of gamma * monic gcd mod p)
    idx = 0
    candidate = None
    while True:
        p = nth_prime(idx)
        idx += 1
        if fp[-1] % p == 0 or gp[-1] % p == 0:
            continue
        h = K.nm_gcd(fp, gp, p)
        if len(h) == 1:
            return [1]
        if len(h) > best_deg:
            continue
        if len(h) < best_deg:
            best_deg = len(h)
            images = []
            candidate = None
        images.append((p, [(gamma * c) % p for c in h]))
        coeffs = []
        primes = [q for q, _ in images]
        for i in range(best_deg):
            res = [img[i] for _, img in images]
            v, m = crt_combine(res, primes)
            coeffs.append(symmetric_lift(v, m))
        _, cand = zz_primitive(coeffs)
        if cand == candidate:
            try:
                K.zx_divexact(fp, cand)
                K.zx_divexact(gp, cand)
                return cand
            except ValueError:
                pass
        candidate = cand


def zz_gcd(f, g):
    """Primitive gcd with positive leading coefficient; gcd(0, 0) = [].

    Computed by CRT on modular images and certified by trial division, which
    also keeps coefficient growth in check on large operands.
    """
    if not f and not g:
        return []
    if not f:
        return zz_primitive(g)[1]
    if not g:
        return zz_primitive(f)[1]
    if len(f) == 1 or len(g) == 1:
        return [1]
    return _zz_gcd_modular(f, g)


def zz_gcd_full(f, g):
    """GCD in Z[x] including the integer content, positive leading coeff."""
    if not f and not g:
        return []
    if not f:
        c, pp = zz_primitive(g)
        return [abs(c) * a for a in pp]
    if not g:
        c, pp = zz_primitive(f)
        return [abs(c) * a for a in pp]
    cf, fp = zz_primitive(f)
    cg, gp = zz_primitive(g)
    c = math.gcd(cf, cg)
    return [c * a for a in zz_gcd(fp, gp)]


def zz_squarefree_part(f):
    """Square-free part, primitive, positive leading coefficient."""
    if not f:
        raise ValueError("square-free part of the zero polynomial")
    _, fp = zz_primitive(f)
    if len(fp) <= 2:
        return fp
    g = zz_gcd(fp, zz_diff(fp))
    if len(g) == 1:
        return fp
    out = K.zx_divexact(fp, g)
    _, out = zz_primitive(out)
    return out


def zz_yun(f):
    """Square-free decomposition: list of (factor, multiplicity).

    Factors are primitive with positive leading coefficient, pairwise coprime,
    and the primitive part of f is the product of factor**mult (up to sign).
    """
    _, fp = zz_primitive(f)
    if len(fp) <= 1:
        return []
    fd = zz_diff(fp)
    g = zz_gcd(fp, fd)
    if len(g) == 1:
        return [(fp, 1)]
    b = K.zx_divexact(fp, g)
    _, b = zz_primitive(b)
    c = K.zx_divexact(fd, g)
    d = K.zx_sub(c, zz_diff(b))
    out = []
    i = 1
    while len(b) > 1:
        a = zz_gcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = K.zx_divexact(b, a)
        _, b = zz_primitive(b)
        c = K.zx_divexact(d, a) if d else []
        d = K.zx_sub(c, zz_diff(b))
        i += 1
    return out


# ---------------------------------------------------------------------------
# IntPoly
# ---------------------------------------------------------------------------


class IntPoly:
    """Dense univariate polynomial over Z, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = c

    @classmethod
    def _raw(cls, trimmed_list):
        obj = cls.__new__(cls)
        obj.coeffs = trimmed_list
        return obj

    @classmethod
    def const(cls, a):
        return cls._raw([a] if a else [])

    @classmethod
    def x(cls):
        return cls._raw([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ([other] if other else [])
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        return IntPoly._raw(K.zx_add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        return IntPoly._raw(K.zx_sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return IntPoly._raw(K.zx_neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly._raw(K.zx_mul_scalar(self.coeffs, other))
        other = self._coerce(other)
        return IntPoly._raw(K.zx_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, n: int):
        out = IntPoly._raw([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        raise TypeError(f"cannot coerce {type(other)!r} to IntPoly")

    def divexact(self, other) -> "IntPoly":
        other = self._coerce(other)
        return IntPoly._raw(K.zx_divexact(self.coeffs, other.coeffs))

    def derivative(self) -> "IntPoly":
        return IntPoly._raw(zz_diff(self.coeffs))

    @property
    def content(self) -> int:
        return zz_content(self.coeffs)

    def primitive_part(self) -> "IntPoly":
        return IntPoly._raw(zz_primitive(self.coeffs)[1])

    def eval(self, x):
        """Horner evaluation in whatever arithmetic ``x`` supports."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_fraction(self, q: Fraction) -> Fraction:
        num = K.zx_eval_num_at_fraction(
            self.coeffs, q.numerator, q.denominator
        )
        return Fraction(num, q.denominator ** max(self.degree, 0))

    def sign_at(self, q: Fraction) -> int:
        """Exact sign of the value at a rational point."""
        v = K.zx_eval_num_at_fraction(self.coeffs, q.numerator, q.denominator)
        return (v > 0) - (v < 0)

    def shift(self, a: int) -> "IntPoly":
        """p(x + a) for integer a."""
        if a == 1:
            return IntPoly._raw(K.zx_shift1(self.coeffs))
        c = list(self.coeffs)
        n = len(c)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                c[j] += a * c[j + 1]
        return IntPoly._raw(c)

    def compose_linear(self, a: int, b: int) -> "IntPoly":
        """p(a*x + b) for integers a, b."""
        out = [self.coeffs[-1]] if self.coeffs else []
        for c in reversed(self.coeffs[:-1]):
            # out <- out * (a x + b) + c
            nxt = [0] * (len(out) + 1)
            for i, v in enumerate(out):
                nxt[i] += v * b
                nxt[i + 1] += v * a
            nxt[0] += c
            out = nxt
        return IntPoly(out)

    def height(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def one_norm(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{i}")
        return "IntPoly(" + " + ".join(terms).replace("+ -", "- ") + ")"


def gcd_uni(a: IntPoly, b: IntPoly) -> IntPoly:
    """GCD in Z[t], primitive with positive leading coefficient."""
    return IntPoly._raw(zz_gcd(a.coeffs, b.coeffs))


def squarefree_part(a: IntPoly) -> IntPoly:
    if a.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    return IntPoly._raw(zz_squarefree_part(a.coeffs))


def lcm_uni(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.is_zero() or b.is_zero():
        return IntPoly()
    g = gcd_uni(a, b)
    out = (a * b).divexact(g)
    _, pp = zz_primitive(out.coeffs)
    return IntPoly._raw(pp)


# ---------------------------------------------------------------------------
# BivarIntPoly
# ---------------------------------------------------------------------------


class BivarIntPoly:
    """Dense bivariate polynomial over Z.

    ``rows[i][j]`` is the coefficient of t^i s^j; trailing all-zero rows and
    columns are trimmed.
    """

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        r = [list(row) for row in rows]
        # trim columns
        ncols = max((len(row) for row in r), default=0)
        for row in r:
            row.extend([0] * (ncols - len(row)))
        while ncols and all(row[ncols - 1] == 0 for row in r):
            ncols -= 1
        r = [row[:ncols] for row in r]
        while r and all(c == 0 for c in r[-1]):
            r.pop()
        if not r or ncols == 0:
            r = []
        self.rows = r

    @classmethod
    def from_coeff_dict(cls, d):
        if not d:
            return cls()
        nr = max(i for i, _ in d) + 1
        nc = max(j for _, j in d) + 1
        rows = [[0] * nc for _ in range(nr)]
        for (i, j), c in d.items():
            rows[i][j] = c
        return cls(rows)

    @property
    def deg_t(self) -> int:
        return len(self.rows) - 1

    @property
    def deg_s(self) -> int:
        return (len(self.rows[0]) - 1) if self.rows else -1

    def is_zero(self) -> bool:
        return not self.rows

    def __bool__(self):
        return bool(self.rows)

    def __eq__(self, other):
        if isinstance(other, BivarIntPoly):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __add__(self, other):
        d = {}
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if c:
                    d[(i, j)] = d.get((i, j), 0) + c
        for i, row in enumerate(other.rows):
            for j, c in enumerate(row):
                if c:
                    d[(i, j)] = d.get((i, j), 0) + c
        return BivarIntPoly.from_coeff_dict(d)

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return BivarIntPoly([[c * other for c in row] for row in self.rows])
        d = {}
        for i1, row1 in enumerate(self.rows):
            for j1, c1 in enumerate(row1):
                if not c1:
                    continue
                for i2, row2 in enumerate(other.rows):
                    for j2, c2 in enumerate(row2):
                        if c2:
                            key = (i1 + i2, j1 + j2)
                            d[key] = d.get(key, 0) + c1 * c2
        return BivarIntPoly.from_coeff_dict(d)

    __rmul__ = __mul__

    def swap_vars(self) -> "BivarIntPoly":
        if not self.rows:
            return BivarIntPoly()
        nr, nc = len(self.rows), len(self.rows[0])
        return BivarIntPoly(
            [[self.rows[i][j] for i in range(nr)] for j in range(nc)]
        )

    def s_coeffs(self) -> list[IntPoly]:
        """Coefficients of powers of s, each an IntPoly in t."""
        if not self.rows:
            return []
        nc = len(self.rows[0])
        return [
            IntPoly([row[j] for row in self.rows]) for j in range(nc)
        ]

    @classmethod
    def from_s_coeffs(cls, polys) -> "BivarIntPoly":
        d = {}
        for j, p in enumerate(polys):
            for i, c in enumerate(p.coeffs):
                if c:
                    d[(i, j)] = c
        return cls.from_coeff_dict(d)

    def eval_ts(self, tv, sv):
        acc = tv * 0
        for row in reversed(self.rows):
            racc = tv * 0
            for c in reversed(row):
                racc = racc * sv + c
            acc = acc * tv + racc
        return acc

    def eval_t_int(self, a: int) -> IntPoly:
        """Specialize t at an integer, leaving a polynomial in s."""
        if not self.rows:
            return IntPoly()
        nc = len(self.rows[0])
        out = []
        for j in range(nc):
            acc = 0
            for i in range(len(self.rows) - 1, -1, -1):
                acc = acc * a + self.rows[i][j]
            out.append(acc)
        return IntPoly(out)

    def eval_s_int(self, a: int) -> IntPoly:
        return self.swap_vars().eval_t_int(a)

    def one_norm(self) -> int:
        return sum(abs(c) for row in self.rows for c in row)

    def flat(self):
        """(flat row-major list, nrows, ncols) for the modular kernels."""
        if not self.rows:
            return [], 0, 0
        nr, nc = len(self.rows), len(self.rows[0])
        out = []
        for row in self.rows:
            out.extend(row)
        return out, nr, nc

    def normalize_sign(self) -> "BivarIntPoly":
        """Primitive over Z with a positive leading (t-major lex) coefficient."""
        if not self.rows:
            return self
        c = 0
        for row in self.rows:
            for a in row:
                c = math.gcd(c, a)
        lead = 0
        for a in reversed(self.rows[-1]):
            if a:
                lead = a
                break
        if lead < 0:
            c = -c
        return BivarIntPoly([[a // c for a in row] for row in self.rows])

    def __repr__(self):
        return f"BivarIntPoly(deg_t={self.deg_t}, deg_s={self.deg_s})"


def t_minus_s() -> BivarIntPoly:
    return BivarIntPoly([[0, -1], [1]])


# ---------------------------------------------------------------------------
# Bivariate gcd (content + primitive PRS over Z[t])
# ---------------------------------------------------------------------------


def _poly_list_prem(A, B):
    """Pseudo-remainder in (Z[t])[s]; A, B lists of IntPoly, B nonzero."""
    da, db = len(A) - 1, len(B) - 1
    if da < db:
        return list(A)
    lb = B[-1]
    r = list(A)
    k = da - db + 1
    while r and len(r) - 1 >= db:
        k -= 1
        c = r[-1]
        r = [lb * a for a in r[:-1]]
        for i in range(db):
            r[len(r) - db + i] = r[len(r) - db + i] - c * B[i]
        while r and r[-1].is_zero():
            r.pop()
    if k > 0:
        m = lb**k
        r = [a * m for a in r]
    return r


def _poly_list_content(A) -> IntPoly:
    """Full gcd (including integer content) of a list of IntPoly."""
    g: list[int] = []
    for a in A:
        g = zz_gcd_full(g, a.coeffs)
        if g == [1]:
            break
    return IntPoly._raw(g)


def _gcd_bivar_pair(F: BivarIntPoly, G: BivarIntPoly) -> BivarIntPoly:
    if F.is_zero():
        return G.normalize_sign()
    if G.is_zero():
        return F.normalize_sign()
    A = F.s_coeffs()
    B = G.s_coeffs()
    if len(A) - 1 < len(B) - 1:
        A, B = B, A
    ca = _poly_list_content(A)
    cb = _poly_list_content(B)
    cont = gcd_uni(ca, cb)
    A = [a.divexact(ca) for a in A]
    B = [b.divexact(cb) for b in B]
    # primitive Euclidean PRS in s over Z[t]
    while True:
        if len(B) == 1:
            # nonzero s-constant remainder, primitive: the s-part is trivial
            A = [IntPoly.const(1)]
            break
        R = _poly_list_prem(A, B)
        if not R:
            A = B
            break
        cr = _poly_list_content(R)
        R = [r.divexact(cr) for r in R]
        A, B = B, R
    out = BivarIntPoly.from_s_coeffs(A)
    contbi = BivarIntPoly.from_s_coeffs([cont])
    return (out * contbi).normalize_sign()


def gcd_bivar(*polys: BivarIntPoly) -> BivarIntPoly:
    """GCD in Z[t, s], primitive with deterministic sign, variadic."""
    if len(polys) < 2:
        raise ValueError("gcd_bivar needs at least two arguments")
    g = polys[0]
    for h in polys[1:]:
        g = _gcd_bivar_pair(g, h)
        if not g.is_zero() and g.deg_t == 0 and g.deg_s == 0:
            return BivarIntPoly([[1]])
    return g.normalize_sign() if not g.is_zero() else g


# ---------------------------------------------------------------------------
# Resultants (modular evaluation/interpolation with CRT)
# ---------------------------------------------------------------------------


def _resultant_rows_modular(frows, grows) -> list[int]:
    """Resultant eliminating the inner (column) variable of two row-major
    integer coefficient matrices; returns ascending coefficients in the outer
    variable."""
    F = BivarIntPoly(frows)
    G = BivarIntPoly(grows)
    dsf, dsg = F.deg_s, G.deg_s
    dtf, dtg = max(F.deg_t, 0), max(G.deg_t, 0)
    dbound = dtf * dsg + dtg * dsf
    nf, ng = F.one_norm(), G.one_norm()
    hbound = max(nf, 1) ** dsg * max(ng, 1) ** dsf
    fflat, fr, fc = F.flat()
    gflat, gr, gc = G.flat()
    need = 2 * hbound + 1
    residues: list[list[int]] = []
    primes: list[int] = []
    prod = 1
    idx = 0
    while prod < need:
        p = nth_prime(idx)
        idx += 1
        # leading inner columns must survive reduction mod p
        if all(row[-1] % p == 0 for row in F.rows) or all(
            row[-1] % p == 0 for row in G.rows
        ):
            continue
        xs: list[int] = []
        ys: list[int] = []
        base = 0
        while len(xs) < dbound + 1:
            pts = list(range(base, base + (dbound + 1 - len(xs)) + 8))
            base = pts[-1] + 1
            vals = K.nm_bivar_resultant_points(
                fflat, fr, fc, gflat, gr, gc, pts, p
            )
            for t, v in zip(pts, vals):
                if v == p:
                    continue
                xs.append(t)
                ys.append(v)
                if len(xs) == dbound + 1:
                    break
        residues.append(K.nm_interp(xs, ys, p))
        primes.append(p)
        prod *= p
    ncoef = max(len(r) for r in residues)
    out = []
    for i in range(ncoef):
        rs = [r[i] if i < len(r) else 0 for r in residues]
        v, m = crt_combine(rs, primes)
        out.append(symmetric_lift(v, m))
    return K.zx_trim(out)


def resultant_s(a: BivarIntPoly, b: BivarIntPoly) -> IntPoly:
    """Resultant with respect to s, an element of Z[t].

    Res_s(c, b) = c**deg_s(b) when c is constant in s; an error when both
    arguments are identically zero.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("undefined resultant")
    if a.is_zero() or b.is_zero():
        return IntPoly()
    dsa, dsb = a.deg_s, b.deg_s
    if dsa == 0 and dsb == 0:
        return IntPoly.const(1)
    if dsa == 0:
        u = IntPoly([row[0] for row in a.rows])
        return u**dsb
    if dsb == 0:
        u = IntPoly([row[0] for row in b.rows])
        return u**dsa
    return IntPoly._raw(_resultant_rows_modular(a.rows, b.rows))


def resultant_sylvester(a: BivarIntPoly, b: BivarIntPoly) -> IntPoly:
    """Resultant w.r.t. s as a Bareiss determinant of the Sylvester matrix.

    Reference route for small operands; exact but O((deg_s a + deg_s b)^3)
    polynomial multiplications.
    """
    A = a.s_coeffs()
    B = b.s_coeffs()
    da, db = len(A) - 1, len(B) - 1
    if da < 0 and db < 0:
        raise ValueError("undefined resultant")
    if da < 0 or db < 0:
        return IntPoly()
    if da == 0 and db == 0:
        return IntPoly.const(1)
    if da == 0:
        return A[0] ** db
    if db == 0:
        return B[0] ** da
    n = da + db
    zero = IntPoly()
    m = []
    for i in range(db):
        row = [zero] * i + list(reversed(A)) + [zero] * (db - 1 - i)
        m.append(row)
    for i in range(da):
        row = [zero] * i + list(reversed(B)) + [zero] * (da - 1 - i)
        m.append(row)
    sign = 1
    prev = IntPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return IntPoly()
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * piv - m[i][k] * m[k][j]).divexact(prev)
            m[i][k] = zero
        prev = piv
    return m[n - 1][n - 1] * sign
