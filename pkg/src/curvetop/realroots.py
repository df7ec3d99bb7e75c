"""Certified real root isolation and counting for integer polynomials.

Isolation runs bisection with Descartes' rule of signs on the square-free
factors (exact dyadic arithmetic throughout); Sturm sequences give interval
counts; Hermite's signature method provides an independent certified count of
distinct real roots.  :class:`IsolatingInterval` doubles as the real algebraic
number representation used everywhere above this module: it knows how to
refine itself, determine signs of integer polynomials at the root, and decide
equality/order against other roots.
"""

from __future__ import annotations

import math
from fractions import Fraction

from curvetop import kernels as K
from curvetop.intpoly import IntPoly, gcd_uni, zz_yun
from curvetop.numeric import Interval


class IsolatingInterval:
    """One real root of a square-free integer polynomial.

    ``lo == hi`` marks an exactly known rational root.  Refinement shrinks the
    interval in place and never loses the root.
    """

    __slots__ = ("poly", "lo", "hi", "multiplicity", "_sign_lo")

    def __init__(self, poly: IntPoly, lo, hi, multiplicity=1, _sign_lo=None):
        self.poly = poly
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self.multiplicity = multiplicity
        self._sign_lo = _sign_lo

    # -- construction ------------------------------------------------------

    @classmethod
    def exact(cls, r, poly=None, multiplicity=1):
        r = Fraction(r)
        if poly is None:
            poly = IntPoly([-r.numerator, r.denominator])
        return cls(poly, r, r, multiplicity)

    # -- basic queries -----------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def interval(self) -> Interval:
        return Interval(self.lo, self.hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __repr__(self):
        if self.is_exact:
            return f"Root({self.lo})"
        return f"Root({self.lo}..{self.hi})"

    def float_approx(self) -> float:
        return float(self.mid)

    # -- refinement --------------------------------------------------------

    def _ensure_sign_lo(self):
        if self._sign_lo is None:
            self._sign_lo = self.poly.sign_at(self.lo)

    def bisect_step(self):
        """One bisection step; collapses to exact when the midpoint is a root."""
        if self.is_exact:
            return
        mid = self.mid
        sm = self.poly.sign_at(mid)
        if sm == 0:
            self.lo = self.hi = mid
            return
        self._ensure_sign_lo()
        if sm == self._sign_lo:
            self.lo = mid
        else:
            self.hi = mid

    def refine_to(self, width) -> "IsolatingInterval":
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        while self.width > width:
            self.bisect_step()
        return self

    # -- certified predicates -----------------------------------------------

    def sign_of(self, q: IntPoly) -> int:
        """Exact sign of q at this root."""
        if q.is_zero():
            return 0
        if self.is_exact:
            return q.sign_at(self.lo)
        for _ in range(8):
            s = q.eval(Interval(self.lo, self.hi)).sign()
            if s:
                return s
            self.bisect_step()
            if self.is_exact:
                return q.sign_at(self.lo)
        g = gcd_uni(self.poly, q)
        if g.degree >= 1 and g.sign_at(self.lo) * g.sign_at(self.hi) < 0:
            # the root is a common root of poly and q
            return 0
        while True:
            s = q.eval(Interval(self.lo, self.hi)).sign()
            if s:
                return s
            self.bisect_step()
            if self.is_exact:
                return q.sign_at(self.lo)

    def separate_from_point(self, r: Fraction) -> None:
        """Refine until the rational r lies strictly outside the interval."""
        while self.lo <= r <= self.hi:
            if self.is_exact:
                if self.lo == r:
                    raise ValueError("point equals the root")
                return
            self.bisect_step()

    def is_root_of(self, q: IntPoly) -> bool:
        return self.sign_of(q) == 0

    def equals(self, other: "IsolatingInterval") -> bool:
        return self.cmp(other) == 0

    def cmp(self, other: "IsolatingInterval") -> int:
        """Certified order against another root: -1, 0 or 1."""
        if self is other:
            return 0
        if self.is_exact and other.is_exact:
            return (self.lo > other.lo) - (self.lo < other.lo)
        if self.is_exact:
            return -other.cmp(self)
        if other.is_exact:
            r = other.lo
            return self.sign_of(IntPoly([-r.numerator, r.denominator]))
        if not self.interval.intersects(other.interval):
            return -1 if self.hi < other.lo else 1
        g = gcd_uni(self.poly, other.poly)
        if (
            g.degree >= 1
            and g.sign_at(self.lo) * g.sign_at(self.hi) < 0
            and g.sign_at(other.lo) * g.sign_at(other.hi) < 0
        ):
            # both roots are roots of the square-free g; identical iff they
            # pin the same root of g
            g_roots = isolate_real_roots(g)
            i = _locate_among(self, g_roots)
            j = _locate_among(other, g_roots)
            if i == j:
                return 0
            return -1 if i < j else 1
        while self.interval.intersects(other.interval):
            self.bisect_step()
            other.bisect_step()
        return -1 if self.hi < other.lo else 1


def _locate_among(root: IsolatingInterval, candidates) -> int:
    """Index of the candidate this root equals; the value must be among the
    candidates and their intervals must be pairwise disjoint.

    Only ``root`` is refined: once its interval meets exactly one candidate
    interval, that candidate is the match (the true value lies in both).
    """
    if root.is_exact:
        for k, c in enumerate(candidates):
            if (c.is_exact and c.lo == root.lo) or (
                not c.is_exact and c.lo < root.lo < c.hi
            ):
                return k
        raise AssertionError("root not among candidates")
    while True:
        hits = [
            k
            for k, c in enumerate(candidates)
            if root.interval.intersects(Interval(c.lo, c.hi))
        ]
        if len(hits) == 1:
            return hits[0]
        root.bisect_step()
        if root.is_exact:
            return _locate_among(root, candidates)


# ---------------------------------------------------------------------------
# Descartes bisection isolation
# ---------------------------------------------------------------------------


def cauchy_bound(f: IntPoly) -> Fraction:
    """Strict bound B with every real root of f inside (-B, B)."""
    if f.degree < 1:
        return Fraction(1)
    lc = abs(f.lc)
    h = max(abs(c) for c in f.coeffs[:-1]) if f.degree >= 1 else 0
    return 1 + Fraction(h, lc)


def _pow2_at_least(q: Fraction) -> int:
    """Smallest k with 2**k >= q."""
    k = 0
    v = Fraction(1)
    while v < q:
        v *= 2
        k += 1
    return k


def _descartes_test(poly):
    """Sign variations of (x+1)^d * poly(1/(x+1)): Descartes bound on (0,1)."""
    rev = list(reversed(poly))
    return K.zx_sign_variations(K.zx_shift1(rev))


def _deflate_at_one(poly):
    """Exact quotient poly / (x - 1) given poly(1) == 0."""
    # synthetic division by (x - 1), ascending coefficients
    n = len(poly)
    out = [0] * (n - 1)
    acc = 0
    for i in range(n - 1, 0, -1):
        acc += poly[i]
        out[i - 1] = acc
    return out


def _isolate_01(poly):
    """Roots of poly in the open unit interval.

    Returns (dyadic_roots, intervals) where intervals are (c, k) pairs for
    (c/2^k, (c+1)/2^k) each isolating exactly one root of the current
    (deflation-reduced) polynomial; dyadic_roots are exact Fractions.
    poly(0) != 0 and poly(1) != 0 are required.
    """
    exact: list[Fraction] = []
    out = []
    stack = [(list(poly), 0, 0)]
    while stack:
        q, c, k = stack.pop()
        v = _descartes_test(q)
        if v == 0:
            continue
        if v == 1:
            out.append((c, k))
            continue
        # split at the midpoint (2c+1)/2^(k+1)
        d = len(q) - 1
        q0 = [q[i] << (d - i) for i in range(len(q))]  # 2^d q(x/2)
        mid_val = sum(q0)
        if mid_val == 0:
            exact.append(Fraction(2 * c + 1, 1 << (k + 1)))
            q0 = _deflate_at_one(q0)
        q1 = K.zx_shift1(list(q0))
        stack.append((q1, 2 * c + 1, k + 1))
        stack.append((q0, 2 * c, k + 1))
    return exact, out


def _isolate_squarefree(fp: IntPoly):
    """All real roots of a square-free primitive polynomial.

    Returns a list of IsolatingInterval (exact rationals included), unsorted.
    """
    coeffs = list(fp.coeffs)
    roots: list[IsolatingInterval] = []
    # strip the root at zero
    shift = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.append(IsolatingInterval.exact(0, fp))
    if len(coeffs) <= 1:
        return roots
    if len(coeffs) == 2:
        r = Fraction(-coeffs[0], coeffs[1])
        if r != 0:
            roots.append(IsolatingInterval.exact(r, fp))
        return roots
    b = 1 << _pow2_at_least(cauchy_bound(IntPoly(coeffs)))

    def emit(side, exact_list, intervals):
        for r in exact_list:
            roots.append(IsolatingInterval.exact(side * r * b, fp))
        for c, kk in intervals:
            lo = Fraction(c, 1 << kk) * b
            hi = Fraction(c + 1, 1 << kk) * b
            if side < 0:
                lo, hi = -hi, -lo
            roots.append(IsolatingInterval(fp, lo, hi))

    pos = [c * (b**i) for i, c in enumerate(coeffs)]
    emit(1, *_isolate_01(pos))
    neg = [c * ((-b) ** i) for i, c in enumerate(coeffs)]
    emit(-1, *_isolate_01(neg))
    return roots


def isolate_real_roots(a: IntPoly) -> list[IsolatingInterval]:
    """Disjoint isolating intervals for the distinct real roots of a, sorted
    ascending, with multiplicities from the square-free decomposition."""
    if a.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    roots: list[IsolatingInterval] = []
    for factor, mult in zz_yun(a.coeffs):
        fp = IntPoly(factor)
        for r in _isolate_squarefree(fp):
            r.multiplicity = mult
            roots.append(r)
    _separate_all(roots)
    roots.sort(key=lambda r: (r.lo, r.hi))
    return roots


def _separate_all(roots: list[IsolatingInterval]) -> None:
    """Refine pairwise until all intervals are disjoint (roots distinct)."""
    changed = True
    while changed:
        changed = False
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                a, b = roots[i], roots[j]
                while a.interval.intersects(b.interval):
                    if a.is_exact and b.is_exact:
                        if a.lo == b.lo:
                            raise AssertionError(
                                "duplicate roots in separation"
                            )
                        break
                    if a.is_exact:
                        b.separate_from_point(a.lo)
                    elif b.is_exact:
                        a.separate_from_point(b.lo)
                    else:
                        a.bisect_step()
                        b.bisect_step()
                    changed = True


def refine(r: IsolatingInterval, width) -> IsolatingInterval:
    """Shrink the isolating interval to at most the given width."""
    return r.refine_to(width)


# ---------------------------------------------------------------------------
# Sturm counting
# ---------------------------------------------------------------------------


def _qq_rem(f, g):
    """Remainder of f by g over Q (lists of Fraction, trimmed)."""
    r = list(f)
    dg = len(g) - 1
    while r and len(r) - 1 >= dg:
        c = r[-1] / g[-1]
        off = len(r) - 1 - dg
        for i in range(dg):
            r[off + i] -= c * g[i]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _to_primitive_int(fr):
    """Scale a Fraction list by a positive rational to primitive Z[x]."""
    if not fr:
        return []
    mult = 1
    for x in fr:
        mult = mult * x.denominator // math.gcd(mult, x.denominator)
    ints = [int(x * mult) for x in fr]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints]


def sturm_chain(a: IntPoly) -> list[IntPoly]:
    """Sturm sequence of the square-free part, primitive integer entries
    (each scaled by a positive rational, so signs match the classic chain)."""
    from curvetop.intpoly import squarefree_part

    f = squarefree_part(a)
    chain = [f]
    if f.degree >= 1:
        chain.append(f.derivative())
    while chain[-1].degree >= 1:
        f1 = [Fraction(c) for c in chain[-2].coeffs]
        f2 = [Fraction(c) for c in chain[-1].coeffs]
        r = _qq_rem(f1, f2)
        if not r:
            break
        chain.append(IntPoly(_to_primitive_int([-x for x in r])))
    return chain


def _sturm_variations(chain, x: Fraction) -> int:
    signs = [p.sign_at(x) for p in chain]
    count = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def count_real_roots_in(a: IntPoly, iv: Interval) -> int:
    """Distinct real roots of a in the closed interval, by Sturm's theorem."""
    if a.is_zero():
        raise ValueError("zero polynomial")
    chain = sturm_chain(a)
    f = chain[0]
    n = _sturm_variations(chain, iv.lo) - _sturm_variations(chain, iv.hi)
    if f.sign_at(iv.lo) == 0:
        n += 1
    return n


def count_real_roots(a: IntPoly) -> int:
    if a.is_zero():
        raise ValueError("zero polynomial")
    b = cauchy_bound(a)
    return count_real_roots_in(a, Interval(-b, b))


# ---------------------------------------------------------------------------
# Hermite's method (Hankel signature of Newton power sums)
# ---------------------------------------------------------------------------


def newton_power_sums(a: IntPoly, upto: int) -> list[Fraction]:
    """Power sums s_0..s_upto of the roots of a, by Newton's identities."""
    d = a.degree
    if d < 1:
        raise ValueError("degree must be at least 1")
    lead = a.lc
    # e_k = (-1)^k a_{d-k} / a_d
    e = [
        Fraction((-1) ** k * (a.coeffs[d - k] if k <= d else 0), lead)
        for k in range(upto + 1)
    ]
    s = [Fraction(d)]
    for k in range(1, upto + 1):
        acc = Fraction((-1) ** (k - 1) * k) * e[k] if k <= d else Fraction(0)
        for i in range(1, k):
            if i > d:
                break
            acc += Fraction((-1) ** (i - 1)) * e[i] * s[k - i]
        s.append(acc)
    return s


def hankel_signature(h) -> int:
    """Signature of a symmetric rational matrix by congruence (LDL-style)
    reduction with exact arithmetic."""
    m = [[Fraction(x) for x in row] for row in h]
    n = len(m)
    sig = 0
    i = 0
    while i < n:
        if m[i][i] == 0:
            j = next((jj for jj in range(i + 1, n) if m[jj][i] != 0), None)
            if j is None:
                # row i (hence column i) is zero on the remaining block
                i += 1
                continue
            if m[j][j] != 0:
                # symmetric swap of basis vectors i and j
                m[i], m[j] = m[j], m[i]
                for row in m:
                    row[i], row[j] = row[j], row[i]
            else:
                # congruence e_i <- e_i + e_j turns the pivot into 2*m[i][j]
                for k in range(n):
                    m[i][k] = m[i][k] + m[j][k]
                for k in range(n):
                    m[k][i] = m[k][i] + m[k][j]
        piv = m[i][i]
        sig += 1 if piv > 0 else -1
        # Schur complement on the trailing block (stays symmetric)
        for j in range(i + 1, n):
            cj = m[j][i]
            if cj:
                for k in range(i + 1, n):
                    m[j][k] -= cj * m[i][k] / piv
        for j in range(i + 1, n):
            m[j][i] = Fraction(0)
            m[i][j] = Fraction(0)
        i += 1
    return sig


def hermite_count_univariate(a: IntPoly) -> int:
    """Number of distinct real roots of a, as the signature of the Hankel
    matrix of Newton power sums."""
    if a.is_zero() or a.degree < 1:
        raise ValueError("degree must be at least 1")
    d = a.degree
    s = newton_power_sums(a, 2 * d - 2)
    h = [[s[i + j] for j in range(d)] for i in range(d)]
    return hankel_signature(h)
