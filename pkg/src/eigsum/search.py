"""Isomorphism-free enumeration of small graphs and certified extremal searches.

Canonical labeling uses refined backtracking: equitable color refinement,
individualization of the first non-singleton cell, prefix-free leaf codes
maximized over the search tree, and orbit pruning driven by automorphisms
discovered at equal-code leaves.  Exact for every graph, sized for n <= 20.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import multiprocessing

from . import exact, spectral
from .exact import RationalInterval
from .graphs import (
    Graph,
    components,
    cycle_space_dim,
    graph6_decode,
    graph6_encode,
    is_connected,
)

_CANON_MAX_N = 20


class SearchError(ValueError):
    """Infeasible enumeration or search request."""


# ---------------------------------------------------------------------------
# Canonical labeling
# ---------------------------------------------------------------------------

def _refine_colors(n, neigh, colors):
    """Equitable refinement; color ids are ranks of invariant signatures."""
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            cnt = {}
            for u in neigh[v]:
                c = colors[u]
                cnt[c] = cnt.get(c, 0) + 1
            sigs.append((colors[v], tuple(sorted(cnt.items()))))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _cells_of(n, colors):
    cells = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_relabeling(g):
    """Permutation old->new (as a list) giving the canonical labeling of g,
    plus the automorphism generators discovered along the way."""
    n = g.n
    if n > _CANON_MAX_N:
        raise SearchError(f"canonical labeling capped at n <= {_CANON_MAX_N}, got {n}")
    if n == 0:
        return [], []
    masks = g.adjacency_masks()
    neigh = [sorted(u for u in range(n) if masks[v] >> u & 1) for v in range(n)]
    degs = [len(neigh[v]) for v in range(n)]
    rank = {d: i for i, d in enumerate(sorted(set(degs)))}
    colors0 = _refine_colors(n, neigh, [rank[d] for d in degs])

    best = {"code": -1, "order": None}
    gens = []
    path = []

    def leaf(order):
        code = 0
        for i in range(n):
            mi = masks[order[i]]
            for j in range(i + 1, n):
                code = (code << 1) | (mi >> order[j] & 1)
        if code > best["code"]:
            best["code"] = code
            best["order"] = list(order)
        elif code == best["code"]:
            gamma = [0] * n
            for bo, no in zip(best["order"], order):
                gamma[bo] = no
            if any(gamma[v] != v for v in range(n)):
                gens.append(tuple(gamma))

    def same_orbit(v, tried):
        fixing = [gen for gen in gens if all(gen[p] == p for p in path)]
        if not fixing:
            return False
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in fixing:
            for a in range(n):
                ra, rb = find(a), find(gen[a])
                if ra != rb:
                    parent[ra] = rb
        rv = find(v)
        return any(find(u) == rv for u in tried)

    def rec(colors):
        cells = _cells_of(n, colors)
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            leaf([c[0] for c in cells])
            return
        tried = []
        for v in target:
            if tried and same_orbit(v, tried):
                continue
            tried.append(v)
            child = [2 * c for c in colors]
            child[v] -= 1
            path.append(v)
            rec(_refine_colors(n, neigh, child))
            path.pop()

    rec(colors0)
    order = best["order"]
    newlabel = [0] * n
    for pos, v in enumerate(order):
        newlabel[v] = pos
    return newlabel, gens


def canonical_graph(g):
    """Canonical representative of the isomorphism class of g."""
    perm, _ = canonical_relabeling(g)
    return g.relabel(perm)


def canonical_form(g):
    """Canonical graph6 string: equal iff graphs are isomorphic."""
    return graph6_encode(canonical_graph(g))


def are_isomorphic(g, h):
    return g.n == h.n and g.e == h.e and canonical_form(g) == canonical_form(h)


def automorphism_group_order(g):
    """|Aut(g)| by brute force over canonical-leaf counting (n <= 8 only);
    used as a test oracle, not in production paths."""
    import itertools

    if g.n > 8:
        raise SearchError("automorphism counting oracle limited to n <= 8")
    eset = set(g.edges)
    count = 0
    for perm in itertools.permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in eset for u, v in eset):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

_MAX_N = 10
_MAX_M = 9


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate: all classes by vertex count or by edge count, with
    optional structural filters.  Edge mode always excludes isolated vertices
    (the class would otherwise be infinite)."""

    mode: str  # "vertices" or "edges"
    value: int
    connected: bool = False
    no_isolated: bool = False
    trees_only: bool = False
    cycle_dim: int | None = None

    def __post_init__(self):
        if self.mode not in ("vertices", "edges"):
            raise SearchError(f"unknown enumeration mode {self.mode!r}")
        if self.mode == "vertices":
            if not 0 <= self.value <= _MAX_N:
                raise SearchError(f"vertex count must be in 0..{_MAX_N}")
        else:
            if not 0 <= self.value <= _MAX_M:
                raise SearchError(f"edge count must be in 0..{_MAX_M}")
            object.__setattr__(self, "no_isolated", True)


@lru_cache(maxsize=None)
def _classes_by_vertices(n):
    """All isomorphism classes on n vertices, ascending by canonical string.
    Built by adding one vertex (with every neighborhood) to the classes on
    n-1 vertices and deduplicating canonically."""
    if n == 0:
        return (Graph(0),)
    seen = set()
    for parent in _classes_by_vertices(n - 1):
        for mask in range(1 << (n - 1)):
            extra = tuple((i, n - 1) for i in range(n - 1) if mask >> i & 1)
            seen.add(canonical_form(Graph(n, parent.edges + extra)))
    return tuple(graph6_decode(s) for s in sorted(seen))


@lru_cache(maxsize=None)
def _trees_by_vertices(n):
    """All trees on n vertices via leaf augmentation."""
    if n == 0:
        return ()
    if n == 1:
        return (Graph(1),)
    seen = set()
    for parent in _trees_by_vertices(n - 1):
        for v in range(n - 1):
            seen.add(canonical_form(Graph(n, parent.edges + ((v, n - 1),))))
    return tuple(graph6_decode(s) for s in sorted(seen))


@lru_cache(maxsize=None)
def _classes_by_edges(m):
    """All isolated-vertex-free classes with m edges, ascending canonical.

    Every such graph arises from an (m-1)-edge one by adding an edge between
    existing vertices, hanging a new pendant vertex, or adding a disjoint
    edge; candidates are deduplicated canonically.
    """
    if m == 0:
        return (Graph(0),)
    seen = set()
    for parent in _classes_by_edges(m - 1):
        n = parent.n
        eset = set(parent.edges)
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) not in eset:
                    seen.add(canonical_form(Graph(n, parent.edges + ((u, v),))))
        for u in range(n):
            seen.add(canonical_form(Graph(n + 1, parent.edges + ((u, n),))))
        seen.add(canonical_form(Graph(n + 2, parent.edges + ((n, n + 1),))))
    return tuple(graph6_decode(s) for s in sorted(seen))


def enumerate_graphs(spec):
    """Deterministic tuple of canonical representatives matching the spec."""
    if spec.mode == "vertices":
        if spec.trees_only:
            pool = _trees_by_vertices(spec.value)
        else:
            pool = _classes_by_vertices(spec.value)
    else:
        pool = _classes_by_edges(spec.value)
        if spec.trees_only:
            pool = tuple(g for g in pool if g.n >= 1 and g.e == g.n - 1)
    out = []
    for g in pool:
        if spec.no_isolated and spec.mode == "vertices" and 0 in g.degree_sequence():
            continue
        if (spec.connected or spec.trees_only) and not (g.n >= 1 and is_connected(g)):
            continue
        if spec.cycle_dim is not None and cycle_space_dim(g) != spec.cycle_dim:
            continue
        out.append(g)
    return tuple(out)


def contains_subgraph(g, h):
    """Embedding of h into g as a subgraph (edges map to edges, vertices
    injectively), as a dict h-vertex -> g-vertex, or None.  Backtracking with
    degree pruning; sized for the small witness graphs used here."""
    if h.n > g.n or h.e > g.e:
        return None
    deg_g = g.degree_sequence()
    deg_h = h.degree_sequence()
    dg = sorted(deg_g, reverse=True)
    dh = sorted(deg_h, reverse=True)
    if any(dh[i] > dg[i] for i in range(h.n)):
        return None
    adj_g = g.adjacency_sets()
    adj_h = h.adjacency_sets()
    order = sorted(range(h.n), key=lambda v: -deg_h[v])
    mapping = {}
    used = set()

    def backtrack(i):
        if i == len(order):
            return True
        hv = order[i]
        for gv in range(g.n):
            if gv in used or deg_g[gv] < deg_h[hv]:
                continue
            if any(
                hu in mapping and mapping[hu] not in adj_g[gv] for hu in adj_h[hv]
            ):
                continue
            mapping[hv] = gv
            used.add(gv)
            if backtrack(i + 1):
                return True
            del mapping[hv]
            used.discard(gv)
        return False

    return dict(mapping) if backtrack(0) else None


def read_graph6_stream(text):
    """Graphs from external graph6 text, one per line; blank lines skipped."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            out.append(graph6_decode(line))
    return tuple(out)


# ---------------------------------------------------------------------------
# Extremal searches
# ---------------------------------------------------------------------------

_FLOAT_TOL = Fraction(1, 10**6)
_CERT_WIDTH = Fraction(1, 10**12)


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an extremal search with exact value brackets."""

    objective: str
    argext: tuple
    ext_value: RationalInterval
    examined: int
    tolerance: Fraction
    unique: bool

    def to_json(self):
        return {
            "objective": self.objective,
            "argext": list(self.argext),
            "ext_value": self.ext_value.to_json(),
            "examined": self.examined,
            "tolerance": f"{self.tolerance.numerator}/{self.tolerance.denominator}",
            "unique": self.unique,
        }


def _f_float(g):
    return spectral.f_value(g)


def _s2_float(g):
    return spectral.s2(g)


def _pmap(fn, items, workers=1):
    if workers <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with multiprocessing.Pool(workers) as pool:
        return pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers)))


def _assert_split_regime(g, fval):
    """Disconnected graphs whose top-two Q-eigenvalues straddle two components
    must satisfy f >= 1 (each component's q1 is at most its edge count + 1)."""
    if components(g).omega < 2:
        return
    _, split = spectral.top2_component_split(g)
    if split and fval < 1 - 1e-9:
        raise AssertionError(
            f"split-component graph {graph6_encode(g)} has f = {fval} < 1"
        )


def _certified_extremum(pool, values, minimize, certify, objective, tolerance):
    """Resolve the float extremum into exactly-certified argext / uniqueness."""
    if not pool:
        raise SearchError(f"empty search pool for {objective}")
    signed = [v if minimize else -v for v in values]
    best_float = min(signed)
    cand = [g for g, v in zip(pool, signed) if v <= best_float + float(tolerance)]
    rest = [(v, g) for g, v in zip(pool, signed) if v > best_float + float(tolerance)]

    width = _CERT_WIDTH
    argext = list(cand)
    brackets = {}
    for _ in range(4):
        brackets = {g: certify(g, width) for g in cand}
        if not minimize:
            brackets = {g: iv.scale(-1) for g, iv in brackets.items()}
        best_iv = min(brackets.values(), key=lambda iv: iv.hi)
        argext = [g for g in cand if brackets[g].overlaps(best_iv)]
        if len(argext) == 1:
            break
        width /= 10**4
    best_iv = min((brackets[g] for g in argext), key=lambda iv: iv.hi)

    unique = len(argext) == 1
    if unique and rest:
        runner = min(rest, key=lambda t: t[0])[1]
        riv = certify(runner, width)
        if not minimize:
            riv = riv.scale(-1)
        for _ in range(4):
            if riv.lo > best_iv.hi:
                break
            width /= 10**4
            riv = certify(runner, width)
            if not minimize:
                riv = riv.scale(-1)
            best_iv = certify(argext[0], width)
            if not minimize:
                best_iv = best_iv.scale(-1)
        else:
            unique = False

    value_iv = best_iv if minimize else best_iv.scale(-1)
    keys = sorted(graph6_encode(g) for g in argext)
    return SearchReport(
        objective=objective,
        argext=tuple(keys),
        ext_value=value_iv,
        examined=len(pool),
        tolerance=tolerance,
        unique=unique,
    )


def min_f_by_edges(m, graphs=None, workers=1):
    """Certified argmin of f over isolated-vertex-free graphs with m edges."""
    if graphs is None:
        if not 4 <= m <= 8:
            raise SearchError(f"min_f_by_edges supports 4 <= m <= 8, got {m}")
        pool = enumerate_graphs(EnumSpec("edges", m))
    else:
        pool = tuple(graphs)
    values = _pmap(_f_float, pool, workers)
    for g, v in zip(pool, values):
        _assert_split_regime(g, v)
    return _certified_extremum(
        pool, values, True, exact.certify_f, f"min-f-edges(m={m})", _FLOAT_TOL
    )


def min_f_by_vertices(n, graphs=None, workers=1):
    """Certified argmin of f over all graphs on n vertices."""
    if graphs is None:
        if not 4 <= n <= 8:
            raise SearchError(f"min_f_by_vertices supports 4 <= n <= 8, got {n}")
        pool = enumerate_graphs(EnumSpec("vertices", n))
    else:
        pool = tuple(graphs)
    pool = tuple(g for g in pool if g.n >= 2)
    values = _pmap(_f_float, pool, workers)
    return _certified_extremum(
        pool, values, True, exact.certify_f, f"min-f-vertices(n={n})", _FLOAT_TOL
    )


def max_s2_by_cycle_dim(n, c, graphs=None, workers=1):
    """Certified argmax of S2 over connected graphs with cycle-space dimension c."""
    if graphs is None:
        if not 4 <= n <= 8:
            raise SearchError(f"max_s2_by_cycle_dim supports 4 <= n <= 8, got {n}")
        if not 1 <= c <= n - 2:
            raise SearchError(f"cycle dimension must be in 1..{n - 2}, got {c}")
        pool = enumerate_graphs(EnumSpec("vertices", n, connected=True, cycle_dim=c))
    else:
        pool = tuple(graphs)
    values = _pmap(_s2_float, pool, workers)
    return _certified_extremum(
        pool,
        values,
        False,
        exact.certify_s2,
        f"max-s2-cycledim(n={n},c={c})",
        _FLOAT_TOL,
    )


def max_s2_over(graphs, objective, workers=1):
    """Certified argmax of S2 over an explicit pool of graphs."""
    pool = tuple(graphs)
    values = _pmap(_s2_float, pool, workers)
    return _certified_extremum(
        pool, values, False, exact.certify_s2, objective, _FLOAT_TOL
    )


def laplacian_equality_class(mode, value, connected=False, graphs=None):
    """All graphs in the pool with mu1 + mu2 = e + 3, decided exactly.

    The report's ext_value is the residual mu1 + mu2 - (e + 3), i.e. exactly
    zero for every member; members are sorted canonical strings.
    """
    if graphs is not None:
        pool = tuple(graphs)
    elif mode == "vertices":
        if not 2 <= value <= 8:
            raise SearchError("laplacian equality by vertices supports 2 <= n <= 8")
        pool = enumerate_graphs(EnumSpec("vertices", value, connected=connected))
    elif mode == "edges":
        if not 1 <= value <= 8:
            raise SearchError("laplacian equality by edges supports 1 <= m <= 8")
        pool = enumerate_graphs(EnumSpec("edges", value))
    else:
        raise SearchError(f"unknown mode {mode!r}")
    members = [g for g in pool if g.n >= 2 and spectral.laplacian_equality_exact(g)]
    return SearchReport(
        objective=f"laplacian-equality({mode}={value})",
        argext=tuple(sorted(graph6_encode(g) for g in members)),
        ext_value=RationalInterval(0, 0),
        examined=len(pool),
        tolerance=Fraction(0),
        unique=len(members) == 1,
    )
