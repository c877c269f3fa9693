"""Graph matrices, eigenvalue-sum functionals, and equitable-partition quotients.

The two graph matrices are L = D - A and Q = D + A.  The central functionals
are s_k (sum of the k largest eigenvalues) and f(g) = e(g) + 3 - S2(g), where
S2 is s_2 of the signless Laplacian.
"""

from __future__ import annotations

import enum
from fractions import Fraction

import numpy as np

from . import exact
from .exact import IntPoly, certify_s2
from .graphs import components
from .linalg import additive_compound, eig_sym


class MatrixKind(enum.Enum):
    LAPLACIAN = "L"
    SIGNLESS = "Q"


class PartitionError(ValueError):
    """Partition is invalid or not equitable for the given graph."""


def matrix_of(g, kind=MatrixKind.SIGNLESS):
    """Integer matrix D - A (Laplacian) or D + A (signless Laplacian)."""
    n = g.n
    m = np.zeros((n, n), dtype=np.int64)
    off = 1 if kind is MatrixKind.SIGNLESS else -1
    for u, v in g.edges:
        m[u, v] = m[v, u] = off
        m[u, u] += 1
        m[v, v] += 1
    return m


def spectrum_of(g, kind=MatrixKind.SIGNLESS):
    if g.n < 1:
        raise ValueError("spectrum needs at least one vertex")
    return eig_sym(matrix_of(g, kind))


def s_k(g, k, kind=MatrixKind.SIGNLESS):
    """Sum of the k largest eigenvalues of the chosen matrix."""
    return spectrum_of(g, kind).top_sum(k)


def s2(g):
    return s_k(g, 2, MatrixKind.SIGNLESS)


def f_value(g):
    """e(g) + 3 - S2(g); strictly positive for every graph (no Q-equality case)."""
    if g.n < 2:
        raise ValueError("f needs at least 2 vertices")
    return g.e + 3 - s2(g)


# ---------------------------------------------------------------------------
# Equitable partitions and quotient matrices (signless Laplacian convention)
# ---------------------------------------------------------------------------

def validate_partition(g, blocks):
    flat = [v for block in blocks for v in block]
    if sorted(flat) != list(range(g.n)):
        raise PartitionError("blocks must be disjoint and cover all vertices")


def quotient_matrix(g, blocks):
    """Quotient of Q under an equitable partition.

    Entry (i, j) is the common number of neighbors in block j of a vertex in
    block i, plus the vertex degree when i == j.  Its spectrum embeds into the
    spectrum of Q(g); a non-equitable partition is rejected with a violating
    vertex pair.
    """
    validate_partition(g, blocks)
    blocks = [tuple(b) for b in blocks]
    adj = g.adjacency_sets()
    degs = g.degree_sequence()
    where = {}
    for bi, block in enumerate(blocks):
        for v in block:
            where[v] = bi
    k = len(blocks)
    out = np.zeros((k, k), dtype=np.int64)
    for bi, block in enumerate(blocks):
        counts0 = None
        v0 = None
        for v in block:
            counts = [0] * k
            for u in adj[v]:
                counts[where[u]] += 1
            if counts0 is None:
                counts0, v0 = counts, v
            elif counts != counts0:
                raise PartitionError(
                    f"partition is not equitable: vertices {v0} and {v} in block "
                    f"{bi} have neighbor counts {counts0} vs {counts}"
                )
        for bj in range(k):
            out[bi, bj] = counts0[bj] + (degs[v0] if bi == bj else 0)
    return out


def star_plus_partition(a):
    """The three-block equitable partition of the star-plus graph on a+1
    vertices: the two degree-2 vertices, the center, the a-2 leaves."""
    return ((1, 2), (0,), tuple(range(3, a + 1)))


def q_a_pi(a):
    """Closed-form quotient matrix [[3,1,0],[2,a,a-2],[0,1,1]] of the star-plus
    graph under :func:`star_plus_partition`; valid for a >= 3."""
    if a < 3:
        raise ValueError(f"q_a_pi requires a >= 3, got {a}")
    return np.array([[3, 1, 0], [2, a, a - 2], [0, 1, 1]], dtype=np.int64)


def p_qapi(a):
    """Characteristic polynomial of q_a_pi(a): x^3 - (a+4)x^2 + 3(a+1)x - 4."""
    return exact.charpoly_exact(q_a_pi(a))


def p_a(a):
    """The shifted cubic x^3 + (a+4)x^2 + 3(a+1)x + 4, i.e. the characteristic
    polynomial of the second additive compound of q_a_pi(a) composed with
    x -> x + a + 4.  Its largest root lies in (-1, 0) and equals -f of the
    star-plus graph on a+1 vertices."""
    if a < 3:
        raise ValueError(f"p_a requires a >= 3, got {a}")
    return IntPoly((4, 3 * (a + 1), a + 4, 1))


def delta2_q_a_pi(a):
    """Second additive compound of q_a_pi(a); equals [[a+3,a-2,0],[1,4,1],[0,2,a+1]]."""
    return additive_compound(q_a_pi(a), 2)


def star_plus_s2_bracket(a, width=Fraction(1, 2**30)):
    """Exact bracket of S2 of the star-plus graph on a+1 vertices via the
    quotient cubic: the two largest cubic roots are the two largest
    Q-eigenvalues (checked by exact root counts)."""
    cubic = p_qapi(a)
    if exact.count_roots_above(cubic, 1) != 2 or exact.count_roots(cubic, -1, 1) != 1:
        raise exact.ExactError(f"unexpected root layout of the a={a} cubic")
    top = exact.isolate_top_roots(cubic, 2, width=width)
    return top[0].interval + top[1].interval


def star_plus_f_bracket(a, width=Fraction(1, 2**30)):
    """Exact bracket of f of the star-plus graph on a+1 vertices (e = a+1)."""
    return star_plus_s2_bracket(a, width).reflect(a + 4)


def star_plus_cubic_certificate(a):
    """Exact certificate that the star-plus Q-spectrum is the three roots of
    x^3 - (a+4)x^2 + 3(a+1)x - 4 together with eigenvalue 1 of multiplicity a-2.

    Checks (all in integer arithmetic): the a-2 explicit difference vectors are
    eigenvectors for eigenvalue 1, and the Newton power sums of the remaining
    three eigenvalues reproduce the cubic.  Works in O(n^2) so it scales to
    a ~ 100 where the generic exact charpoly would be too slow.
    """
    from .graphs import family_star_plus

    g = family_star_plus(a)
    n = g.n
    q = matrix_of(g, MatrixKind.SIGNLESS).astype(object)

    def is_unit_eigvec(vec):
        return all(sum(q[i][j] * vec[j] for j in range(n)) == vec[i] for i in range(n))

    vecs = []
    v = [0] * n
    v[1], v[2] = 1, -1
    vecs.append(v)
    for leaf in range(3, a):
        v = [0] * n
        v[leaf], v[leaf + 1] = 1, -1
        vecs.append(v)
    if len(vecs) != a - 2 or not all(is_unit_eigvec(v) for v in vecs):
        return False
    # Power sums of the full spectrum, exactly (int64 is safe for a <= ~300).
    qi = matrix_of(g, MatrixKind.SIGNLESS)
    q2 = qi @ qi
    q3 = q2 @ qi
    p1 = int(np.trace(qi)) - (a - 2)
    p2 = int(np.trace(q2)) - (a - 2)
    p3 = int(np.trace(q3)) - (a - 2)
    e1 = p1
    e2, r2 = divmod(e1 * p1 - p2, 2)
    e3, r3 = divmod(e2 * p1 - e1 * p2 + p3, 3)
    if r2 or r3:
        return False
    newton_cubic = IntPoly((-e3, e2, -e1, 1))
    return newton_cubic == p_qapi(a)


# ---------------------------------------------------------------------------
# Spectral bounds and diagnostics
# ---------------------------------------------------------------------------

def q1_upper_bound_check(g):
    """True iff the largest signless Laplacian eigenvalue is at most e(g) + 1.
    Decided in floating point, with an exact confirmation on near ties."""
    if g.e < 1:
        raise ValueError("q1 bound check needs at least one edge")
    q1 = spectrum_of(g, MatrixKind.SIGNLESS).values[0]
    bound = g.e + 1
    if abs(q1 - bound) >= 1e-9:
        return q1 < bound
    return exact.count_roots_above(exact.signless_charpoly(g), bound) == 0


def q1_exact_at_most(g, bound):
    """Exact check q1(g) <= bound for a rational bound."""
    return exact.count_roots_above(exact.signless_charpoly(g), Fraction(bound)) == 0


_TIE_TOL = 1e-9


def top2_component_split(g):
    """Diagnose where the two largest Q-eigenvalues live.

    Returns (components_of_top2, spans_two) where components_of_top2 are block
    indices of :func:`eigsum.graphs.components`.  Ties within 1e-9 are settled
    by exact per-component brackets; exactly equal top values from distinct
    components count as spanning two components (either attribution realizes
    S2 as a sum over two components).
    """
    comp = components(g)
    if comp.omega == 1:
        return (0, 0), False
    from .graphs import subgraph

    per = []
    for ci, block in enumerate(comp.blocks):
        sub = subgraph(g, vertices=block)
        per.extend((v, ci, sub, rank) for rank, v in enumerate(spectrum_of(sub).values))
    per.sort(key=lambda t: -t[0])
    (v1, c1, g1, r1), (v2, c2, g2, r2) = per[0], per[1]
    if c1 != c2:
        # Global runner-up sits in another component; near ties against the
        # runner-up inside c1 are settled exactly.
        inside = [t for t in per[1:] if t[1] == c1]
        if not inside or v2 - inside[0][0] > _TIE_TOL:
            return (c1, c2), True
        return _split_exact(g1, r1 + 1, g2, r2, c1, c2)
    outside = [t for t in per[1:] if t[1] != c1]
    if outside and v2 - outside[0][0] <= _TIE_TOL:
        v_o, c_o, g_o, r_o = outside[0]
        return _split_exact(g1, r1 + 1, g_o, r_o, c1, c_o)
    return (c1, c1), False


def _split_exact(ga, rank_a, gb, rank_b, ca, cb):
    """Exact comparison of eigenvalue rank_a of ga against rank_b of gb."""
    width = Fraction(1, 2**30)
    for _ in range(4):
        wa = _kth_eigenvalue_bracket(ga, rank_a, width)
        wb = _kth_eigenvalue_bracket(gb, rank_b, width)
        if wa.hi < wb.lo:
            return (ca, cb), True
        if wb.hi < wa.lo:
            return (ca, ca), False
        if wa.lo == wa.hi and wb.lo == wb.hi:
            break  # both exactly rational and equal
        width /= 100
    # Exactly equal values (e.g. isomorphic components): both attributions are
    # valid, and the two-component reading applies.
    return (ca, cb), True


def _kth_eigenvalue_bracket(g, rank, width=Fraction(1, 2**30)):
    """Bracket of the (rank+1)-th largest Q-eigenvalue, multiplicities unfolded."""
    brackets = exact.isolate_top_roots(
        exact.signless_charpoly(g), rank + 1, width=width
    )
    covered = 0
    for rb in brackets:
        covered += rb.multiplicity
        if covered >= rank + 1:
            return rb.interval
    raise exact.ExactError("rank exceeds matrix order")


def laplacian_equality_exact(g):
    """Exact decision of mu1(g) + mu2(g) == e(g) + 3.

    The second additive compound of the integer Laplacian has the pairwise
    eigenvalue sums as its spectrum, so the claim holds iff e + 3 is a root of
    its characteristic polynomial and no root lies above e + 3.  A fast
    modular determinant settles the generic (non-root) case.
    """
    if g.n < 2:
        raise ValueError("needs at least 2 vertices")
    lap = matrix_of(g, MatrixKind.LAPLACIAN)
    d2 = additive_compound(lap, 2)
    target = g.e + 3
    size = d2.shape[0]
    shifted = [
        [int(target) * (1 if i == j else 0) - int(d2[i, j]) for j in range(size)]
        for i in range(size)
    ]
    if not exact.det_is_zero(shifted):
        return False
    p = exact.charpoly_exact(d2)
    return exact.count_roots_above(p, target) == 0


def s2_exact_at_most(g, bound, width=Fraction(1, 2**20)):
    """Exact decision of S2(g) <= bound for a rational bound.

    Interval refinement settles the strict cases; an exact boundary hit falls
    through to root counting on the second additive compound of Q.
    """
    bound = Fraction(bound)
    w = Fraction(width)
    for _ in range(3):
        iv = certify_s2(g, w)
        if iv.hi <= bound:
            return True
        if iv.lo > bound:
            return False
        w /= 100
    d2 = additive_compound(matrix_of(g, MatrixKind.SIGNLESS), 2)
    return exact.count_roots_above(exact.charpoly_exact(d2), bound) == 0


def s2_exact_less(g, bound, width=Fraction(1, 2**20)):
    """Exact decision of S2(g) < bound (strict) for a rational bound."""
    bound = Fraction(bound)
    w = Fraction(width)
    for _ in range(3):
        iv = certify_s2(g, w)
        if iv.hi < bound:
            return True
        if iv.lo > bound:
            return False
        w /= 100
    d2 = additive_compound(matrix_of(g, MatrixKind.SIGNLESS), 2)
    p = exact.charpoly_exact(d2)
    return exact.count_roots_above(p, bound) == 0 and p(bound) != 0


def certified_f_positive(g, width=Fraction(1, 2**20)):
    """Exact certificate that f(g) > 0, i.e. S2(g) < e(g) + 3."""
    target = Fraction(g.e + 3)
    w = Fraction(width)
    for _ in range(4):
        iv = certify_s2(g, w)
        if iv.hi < target:
            return True
        if iv.lo > target:
            return False
        w /= 100
    return False
