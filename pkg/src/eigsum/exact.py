"""Exact integer characteristic polynomials and Sturm-sequence root isolation.

Everything here runs over arbitrary-precision integers and rationals so that
equality and strict-inequality claims about eigenvalue sums can be decided
without trusting floating point.  The characteristic polynomial convention is
P(M, x) = det(xI - M), monic of degree n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class ExactError(ValueError):
    """Invalid input to an exact-arithmetic routine."""


# ---------------------------------------------------------------------------
# Integer polynomials (coefficients ascending by degree)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial c0 + c1 x + ... with a nonzero leading coefficient."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def lead(self):
        if not self.coeffs:
            raise ExactError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        """Exact Horner evaluation; integer input gives an integer result."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(x, Fraction) and not isinstance(acc, Fraction):
            acc = Fraction(acc)
        return acc

    def sign_at(self, x):
        """Sign of p(x) at a Fraction or int, using integer arithmetic only."""
        if isinstance(x, int):
            v = self(x)
            return (v > 0) - (v < 0)
        a, b = x.numerator, x.denominator
        acc = 0
        power = 1
        for i in range(self.degree, -1, -1):
            acc = acc * a + self.coeffs[i] * power
            power *= b
        return (acc > 0) - (acc < 0)

    def derivative(self):
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __sub__(self, other):
        return self + IntPoly(tuple(-c for c in other.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(other * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def shift_x(self, c):
        """Compose with x -> x + c for integer c (exact)."""
        result = IntPoly((0,))
        step = IntPoly((c, 1))
        for coeff in reversed(self.coeffs):
            result = result * step + IntPoly((coeff,))
        return result

    def content(self):
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self):
        """Divide by the positive content (leading-coefficient sign preserved)."""
        if self.is_zero():
            return self
        c = self.content()
        return IntPoly(tuple(x // c for x in self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = f"{mag}"
            elif i == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{i}" if mag == 1 else f"{mag}*x^{i}"
            terms.append(("-" if c < 0 else "+", body))
        sign0, body0 = terms[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_from_roots(roots):
    """Monic integer polynomial with the given integer roots."""
    p = IntPoly((1,))
    for r in roots:
        p = p * IntPoly((-r, 1))
    return p


def _frac_divmod(num, den):
    """Euclidean division of coefficient lists over Q."""
    if not any(den):
        raise ExactError("division by the zero polynomial")
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    r = [Fraction(c) for c in num]
    dlead = Fraction(den[-1])
    dd = len(den) - 1
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dd or not r:
            break
        f = r[-1] / dlead
        shift = len(r) - 1 - dd
        q[shift] = f
        for i, c in enumerate(den):
            r[shift + i] -= f * c
        r.pop()
    return q, r


def poly_divmod_exact(p, d):
    """Quotient and remainder, valid only when both are integral."""
    q, r = _frac_divmod(list(p.coeffs), list(d.coeffs))
    if any(c.denominator != 1 for c in q) or any(c.denominator != 1 for c in r):
        raise ExactError("division is not exact over the integers")
    return IntPoly(tuple(int(c) for c in q)), IntPoly(tuple(int(c) for c in r))


def poly_divides(d, p):
    """True iff d divides p over Q."""
    if d.is_zero():
        return p.is_zero()
    _, r = _frac_divmod(list(p.coeffs), list(d.coeffs))
    return all(c == 0 for c in r)


def _prim_remainder(a, b):
    """Primitive part of the euclidean remainder a mod b, sign preserved."""
    _, r = _frac_divmod(list(a.coeffs), list(b.coeffs))
    while r and r[-1] == 0:
        r.pop()
    if not r:
        return IntPoly(())
    lcm = 1
    for c in r:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in r]
    g = math.gcd(*ints)
    return IntPoly(tuple(c // g for c in ints))


def poly_gcd(a, b):
    """Primitive gcd over Z, normalized to a positive leading coefficient."""
    a = a if a.is_zero() else a.primitive()
    b = b if b.is_zero() else b.primitive()
    while not b.is_zero():
        a, b = b, _prim_remainder(a, b)
    if a.is_zero():
        return a
    return a if a.lead > 0 else a * -1


def _exact_quotient(p, d):
    q, r = poly_divmod_exact(p, d)
    if not r.is_zero():
        raise ExactError("expected exact polynomial division")
    return q


def squarefree_part(p):
    """p with every root multiplicity flattened to one."""
    if p.degree < 1:
        raise ExactError("squarefree part needs degree >= 1")
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return _exact_quotient(p.primitive(), g).primitive()


def squarefree_decomposition(p):
    """Yun decomposition: [(f_i, i)] with pairwise-coprime squarefree f_i of
    multiplicity i, whose product of powers equals p up to a constant."""
    if p.degree < 1:
        raise ExactError("decomposition needs degree >= 1")
    p = p.primitive()
    dp = p.derivative()
    g = poly_gcd(p, dp)
    if g.degree == 0:
        return [(p, 1)]
    out = []
    c = _exact_quotient(p, g)
    d = _exact_quotient(dp, g) - c.derivative()
    i = 1
    while c.degree >= 1:
        f = poly_gcd(c, d)
        if f.degree >= 1:
            out.append((f, i))
            c = _exact_quotient(c, f)
            d = _exact_quotient(d, f) - c.derivative()
        else:
            d = d - c.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# Exact integer linear algebra
# ---------------------------------------------------------------------------

def _int_matrix(a):
    """Copy input into a list of lists of Python ints, rejecting non-integers."""
    from .linalg import SymMatrix

    arr = a.data if isinstance(a, SymMatrix) else a
    rows = []
    for row in arr:
        out = []
        for x in row:
            xi = int(x)
            if xi != x:
                raise ExactError(f"non-integer entry {x!r}")
            out.append(xi)
        rows.append(out)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ExactError("matrix is not square")
    return rows


def charpoly_exact(a):
    """det(xI - M) by the Faddeev-LeVerrier recurrence over exact integers."""
    m = _int_matrix(a)
    n = len(m)
    if n == 0:
        return IntPoly((1,))
    aux = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    coeffs = [1]  # x^n, then x^{n-1}, ...
    for k in range(1, n + 1):
        am = [
            [sum(m[i][t] * aux[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(am[i][i] for i in range(n))
        ck, rem = divmod(-tr, k)
        if rem:
            raise ExactError("Faddeev-LeVerrier division failed")
        coeffs.append(ck)
        aux = [[am[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    return IntPoly(tuple(reversed(coeffs)))


def bareiss_det(a):
    """Exact determinant via fraction-free Gaussian elimination."""
    m = _int_matrix(a)
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


_DET_PRIMES = (2147483647, 2147483629)


def det_is_zero(a):
    """Exact zero test for an integer determinant.

    A nonzero residue modulo a fixed prime already certifies det != 0; only
    matrices vanishing modulo both primes fall through to the big-integer
    Bareiss determinant.
    """
    m = _int_matrix(a)
    for p in _DET_PRIMES:
        if _det_mod(m, p) != 0:
            return False
    return bareiss_det(m) == 0


def _det_mod(rows, p):
    n = len(rows)
    if n == 0:
        return 1 % p
    a = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
    det = 1
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i, k]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            det = -det
        det = det * int(a[k, k]) % p
        if k + 1 < n:
            inv = pow(int(a[k, k]), -1, p)
            factors = (a[k + 1 :, k] * inv) % p
            a[k + 1 :, k:] = (a[k + 1 :, k:] - factors[:, None] * a[k, k:]) % p
    return det % p


# ---------------------------------------------------------------------------
# Rational intervals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalInterval:
    """Closed interval with exact rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise ExactError(f"interval endpoints out of order: {lo} > {hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self):
        return self.hi - self.lo

    def contains(self, x):
        return self.lo <= x <= self.hi

    def overlaps(self, other):
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other):
        if isinstance(other, RationalInterval):
            return RationalInterval(self.lo + other.lo, self.hi + other.hi)
        return RationalInterval(self.lo + other, self.hi + other)

    def reflect(self, c):
        """Image under x -> c - x."""
        return RationalInterval(c - self.hi, c - self.lo)

    def scale(self, k):
        k = Fraction(k)
        if k < 0:
            return RationalInterval(k * self.hi, k * self.lo)
        return RationalInterval(k * self.lo, k * self.hi)

    def midpoint_float(self):
        return float((self.lo + self.hi) / 2)

    def to_json(self):
        return {
            "lo": f"{self.lo.numerator}/{self.lo.denominator}",
            "hi": f"{self.hi.numerator}/{self.hi.denominator}",
            "approx": self.midpoint_float(),
        }


# ---------------------------------------------------------------------------
# Sturm sequences and root isolation
# ---------------------------------------------------------------------------

def sturm_chain(p):
    """Canonical Sturm chain of a squarefree polynomial, each remainder reduced
    to its sign-preserving primitive part."""
    chain = [p.primitive(), p.derivative().primitive()]
    while chain[-1].degree >= 1:
        r = _prim_remainder(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(r * -1)
    return chain


def _variations(chain, x):
    signs = [q.sign_at(x) for q in chain]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _variations_at_inf(chain, positive):
    signs = []
    for q in chain:
        if q.is_zero():
            continue
        s = q.lead if positive else q.lead * (-1) ** (q.degree % 2)
        signs.append((s > 0) - (s < 0))
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def cauchy_root_bound(p):
    """Rational B with every real root of p strictly inside (-B, B)."""
    if p.degree < 1:
        raise ExactError("root bound needs degree >= 1")
    lead = abs(p.lead)
    rest = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return Fraction(2) + Fraction(rest, lead)


def _strip_rational_root(p, r):
    """Divide out (x - r) for a rational root r; returns the primitive quotient."""
    factor = IntPoly((-r.numerator, r.denominator))
    q, rem = _frac_divmod(list(p.coeffs), list(factor.coeffs))
    assert all(c == 0 for c in rem)
    lcm = 1
    for c in q:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return IntPoly(tuple(int(c * lcm) for c in q)).primitive()


def count_roots(p, lo, hi, include_hi=True):
    """Distinct real roots of p in (lo, hi] (or the open interval when
    ``include_hi`` is false); multiplicities are not counted."""
    if p.is_zero():
        raise ExactError("cannot count roots of the zero polynomial")
    if p.degree < 1:
        return 0
    sf = squarefree_part(p)
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ExactError("empty interval")
    extra = 0
    if sf.degree >= 1 and sf.sign_at(hi) == 0:
        if include_hi:
            extra += 1
        sf = _strip_rational_root(sf, hi)
    if sf.degree >= 1 and sf.sign_at(lo) == 0:
        sf = _strip_rational_root(sf, lo)
    if sf.degree < 1 or lo == hi:
        return extra
    chain = sturm_chain(sf)
    return extra + _variations(chain, lo) - _variations(chain, hi)


def count_roots_above(p, x):
    """Distinct real roots of p strictly greater than the rational x."""
    if p.degree < 1:
        return 0
    sf = squarefree_part(p)
    x = Fraction(x)
    if sf.sign_at(x) == 0:
        sf = _strip_rational_root(sf, x)
    if sf.degree < 1:
        return 0
    chain = sturm_chain(sf)
    return _variations(chain, x) - _variations_at_inf(chain, positive=True)


def sturm_count(p, interval):
    """Distinct real roots in (interval.lo, interval.hi]."""
    return count_roots(p, interval.lo, interval.hi, include_hi=True)


@dataclass(frozen=True)
class RootBracket:
    """One distinct real root, bracketed exactly, with its multiplicity."""

    interval: RationalInterval
    multiplicity: int

    @property
    def is_exact(self):
        return self.interval.lo == self.interval.hi


def _fujiwara_int_bound(p):
    """Small integer B with every root of p inside [-B, B] (Fujiwara-style)."""
    lead = abs(p.lead)
    n = p.degree
    best = 1
    for i in range(1, n + 1):
        c = abs(p.coeffs[n - i])
        if c == 0:
            continue
        q = -(-c // lead)  # ceil
        best = max(best, 1 << ((q.bit_length() + i - 1) // i))
    return 2 * best + 1


def _integer_roots(p):
    """All integer roots of p, found by scanning a root bound when it is small.
    Monic integer polynomials have no other rational roots."""
    b = _fujiwara_int_bound(p)
    if b > 1 << 16:
        return []
    return [k for k in range(-b, b + 1) if p(k) == 0]


def _isolate_squarefree(p):
    """One (refinement polynomial, interval) pair per real root of a squarefree
    polynomial; integer roots come back as exact point intervals.  Bisection
    intervals are valid for the returned (integer-root-free) polynomial."""
    if p.degree < 1:
        return []
    out = []
    for r in _integer_roots(p):
        out.append((p, RationalInterval(Fraction(r), Fraction(r))))
        p = _strip_rational_root(p, Fraction(r))
    if p.degree < 1:
        return out
    bound = cauchy_root_bound(p)
    chain = sturm_chain(p)

    def count_open(a, b):
        return _variations(chain, a) - _variations(chain, b)

    stack = [(-bound, bound, count_open(-bound, bound))]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((p, RationalInterval(a, b)))
            continue
        mid = (a + b) / 2
        if p.sign_at(mid) == 0:
            out.append((p, RationalInterval(mid, mid)))
            # Shrink a root-free collar around mid so the flanks are clean.
            delta = (b - a) / 4
            while (
                p.sign_at(mid - delta) == 0
                or p.sign_at(mid + delta) == 0
                or count_open(mid - delta, mid + delta) != 1
            ):
                delta /= 2
            cl = count_open(a, mid - delta)
            cr = count_open(mid + delta, b)
            assert cl + cr + 1 == cnt
            stack.append((a, mid - delta, cl))
            stack.append((mid + delta, b, cr))
        else:
            cl = count_open(a, mid)
            stack.append((a, mid, cl))
            stack.append((mid, b, cnt - cl))
    return out


def _refine_bracket(p, iv, width):
    """Shrink a one-root bracket of a squarefree p by sign bisection."""
    lo, hi = iv.lo, iv.hi
    if lo == hi:
        return iv
    slo = p.sign_at(lo)
    assert slo != 0 and p.sign_at(hi) not in (0, slo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            return RationalInterval(mid, mid)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)


_COARSE_WIDTH = Fraction(1, 2**16)


def _root_brackets_factored(p):
    """All distinct real roots as (refinement polynomial, RootBracket) pairs,
    separated pairwise, descending by position."""
    found = []
    for factor, mult in squarefree_decomposition(p):
        for refp, iv in _isolate_squarefree(factor):
            found.append([refp, RootBracket(iv, mult)])
    w = _COARSE_WIDTH
    for _ in range(12):
        for item in found:
            item[1] = RootBracket(
                _refine_bracket(item[0], item[1].interval, w), item[1].multiplicity
            )
        ivs = [item[1].interval for item in found]
        if all(
            not ivs[i].overlaps(ivs[j])
            for i in range(len(ivs))
            for j in range(i + 1, len(ivs))
        ):
            break
        w /= 2**8
    else:  # pragma: no cover - needs pathologically close distinct roots
        raise ExactError("failed to separate root brackets")
    found.sort(key=lambda item: item[1].interval.lo, reverse=True)
    return found


def real_root_brackets(p, width=_COARSE_WIDTH):
    """Brackets of all distinct real roots with multiplicities, descending."""
    if p.is_zero():
        raise ExactError("zero polynomial")
    if p.degree < 1:
        return []
    width = Fraction(width)
    return [
        RootBracket(_refine_bracket(f, rb.interval, width), rb.multiplicity)
        for f, rb in _root_brackets_factored(p)
    ]


def isolate_top_roots(p, count, width=Fraction(1, 2**30)):
    """Brackets of the largest distinct real roots, descending, until their
    multiplicities cover ``count``; each refined to width <= ``width``."""
    if count < 1:
        raise ExactError("count must be >= 1")
    if p.is_zero() or p.degree < 1:
        raise ExactError("need a nonconstant polynomial")
    width = Fraction(width)
    if width <= 0:
        raise ExactError("width must be positive")
    factored = _root_brackets_factored(p)
    total_real = sum(rb.multiplicity for _, rb in factored)
    if total_real < count:
        raise ExactError(f"polynomial has {total_real} real roots, need {count}")
    out = []
    covered = 0
    for f, rb in factored:
        out.append(RootBracket(_refine_bracket(f, rb.interval, width), rb.multiplicity))
        covered += rb.multiplicity
        if covered >= count:
            break
    return out


# ---------------------------------------------------------------------------
# Certified eigenvalue sums for graphs
# ---------------------------------------------------------------------------

def _signless_matrix_int(g):
    n = g.n
    m = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        m[u][v] = m[v][u] = 1
        m[u][u] += 1
        m[v][v] += 1
    return m


def signless_charpoly(g):
    """Exact characteristic polynomial of the signless Laplacian of g."""
    return charpoly_exact(_signless_matrix_int(g))


def certify_s2(g, width=Fraction(1, 2**30)):
    """Exact rational bracket of width <= 2*width around the sum of the two
    largest signless Laplacian eigenvalues."""
    if g.n < 2:
        raise ExactError("certify_s2 needs at least 2 vertices")
    top = isolate_top_roots(signless_charpoly(g), 2, width=Fraction(width))
    if top[0].multiplicity >= 2:
        return top[0].interval + top[0].interval
    return top[0].interval + top[1].interval


def certify_f(g, width=Fraction(1, 2**30)):
    """Exact bracket of e(g) + 3 - S2(g), the reflection of :func:`certify_s2`."""
    return certify_s2(g, width).reflect(g.e + 3)
