"""Simple undirected graphs: construction, named families, graph6 I/O.

Vertices are the dense integers 0..n-1.  Graph values are immutable and
compare structurally (same vertex count, same edge set); isomorphism-aware
comparison lives in :mod:`eigsum.search`.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphError(ValueError):
    """Invalid graph construction input."""


class Graph6Error(GraphError):
    """Malformed graph6 text; ``offset`` is the offending byte position."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1 with a sorted, deduplicated edge tuple."""

    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        norm = set()
        for pair in self.edges:
            u, v = pair
            if u == v:
                raise GraphError(f"self-loop rejected: {pair!r}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"endpoint out of range 0..{self.n - 1}: {pair!r}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def e(self):
        return len(self.edges)

    def degree_sequence(self):
        degs = [0] * self.n
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return degs

    def adjacency_sets(self):
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_masks(self):
        """Per-vertex neighbor bitmasks (bit v set in masks[u] iff uv is an edge)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def has_edge(self, u, v):
        if u > v:
            u, v = v, u
        return (u, v) in set(self.edges)

    def relabel(self, perm):
        """Image under the vertex map v -> perm[v]."""
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components as disjoint vertex blocks covering 0..n-1."""

    blocks: tuple
    omega: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "omega", len(self.blocks))


def from_edge_list(n, pairs):
    """Build a Graph, rejecting self-loops and out-of-range endpoints."""
    return Graph(n, tuple(tuple(p) for p in pairs))


def components(g):
    """Connected components, each block sorted, blocks ordered by least vertex."""
    adj = g.adjacency_sets()
    seen = [False] * g.n
    blocks = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        block = []
        while stack:
            x = stack.pop()
            block.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        blocks.append(tuple(sorted(block)))
    return ComponentPartition(tuple(blocks))


def is_connected(g):
    return components(g).omega <= 1


def cycle_space_dim(g):
    """e - n + omega; zero exactly on forests."""
    return g.e - g.n + components(g).omega


def is_tree(g):
    return g.n >= 1 and is_connected(g) and g.e == g.n - 1


def is_bipartite(g):
    adj = g.adjacency_sets()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def subgraph(g, vertices=None, edges=None):
    """Subgraph on the given vertex subset (relabelled to 0..k-1) and/or edge subset."""
    if vertices is None:
        keep = list(range(g.n))
    else:
        keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    pool = g.edges if edges is None else tuple(edges)
    es = tuple(
        (index[u], index[v]) for u, v in pool if u in index and v in index
    )
    return Graph(len(keep), es)


def disjoint_union(g, h):
    shift = g.n
    return Graph(g.n + h.n, g.edges + tuple((u + shift, v + shift) for u, v in h.edges))


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

def family_G(s, t):
    """Two adjacent vertices u, v with t common neighbors, plus s pendants on u.

    n = s + t + 2 and e = s + 2t + 1.  Requires t >= 1; the t = 0 member is a
    degenerate star-with-pendants and is rejected.
    """
    if t < 1:
        raise GraphError(f"family_G requires t >= 1, got t={t}")
    if s < 0:
        raise GraphError(f"family_G requires s >= 0, got s={s}")
    n = s + t + 2
    edges = [(0, 1)]
    edges += [(0, w) for w in range(2, t + 2)]
    edges += [(1, w) for w in range(2, t + 2)]
    edges += [(0, w) for w in range(t + 2, n)]
    return Graph(n, tuple(edges))


def family_star_plus(m):
    """Star with center degree m plus one edge between two leaves.

    n = m + 1, e = m + 1, degree sequence (m, 2, 2, 1^{m-2}).  Requires m >= 3.
    """
    if m < 3:
        raise GraphError(f"family_star_plus requires m >= 3, got {m}")
    edges = [(0, i) for i in range(1, m + 1)] + [(1, 2)]
    return Graph(m + 1, tuple(edges))


def family_double_star(p, q):
    """Two adjacent centers carrying p and q pendant leaves (a tree on p+q+2 vertices)."""
    if p < 1 or q < 1:
        raise GraphError(f"family_double_star requires p, q >= 1, got ({p}, {q})")
    n = p + q + 2
    edges = [(0, 1)]
    edges += [(0, w) for w in range(2, 2 + p)]
    edges += [(1, w) for w in range(2 + p, n)]
    return Graph(n, tuple(edges))


def path_graph(n):
    if n < 1:
        raise GraphError("path_graph requires n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n):
    if n < 3:
        raise GraphError("cycle_graph requires n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n):
    if n < 1:
        raise GraphError("complete_graph requires n >= 1")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


# ---------------------------------------------------------------------------
# graph6 encoding (single-byte header, n <= 62)
# ---------------------------------------------------------------------------

def graph6_encode(g):
    """graph6 text: byte n+63, then upper-triangle bits x(0,1), x(0,2), x(1,2), ...
    packed big-endian into 6-bit groups, zero padded, each group offset by 63.
    """
    if g.n > 62:
        raise GraphError(f"graph6 encoding limited to n <= 62, got n={g.n}")
    eset = set(g.edges)
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in eset else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k : k + 6]:
            group = (group << 1) | b
        out.append(chr(group + 63))
    return "".join(out)


def graph6_decode(text):
    """Inverse of :func:`graph6_encode`; raises Graph6Error with a byte offset."""
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    for pos, ch in enumerate(text):
        code = ord(ch)
        if not (63 <= code <= 126):
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126", pos)
    n = ord(text[0]) - 63
    if n > 62:
        raise Graph6Error("multi-byte vertex counts not supported (n > 62)", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(text) != 1 + nbytes:
        raise Graph6Error(
            f"expected {1 + nbytes} bytes for n={n}, got {len(text)}", len(text) - 1
        )
    bits = []
    for pos in range(1, len(text)):
        group = ord(text[pos]) - 63
        bits.extend((group >> shift) & 1 for shift in range(5, -1, -1))
    for extra in range(nbits, len(bits)):
        if bits[extra]:
            raise Graph6Error("nonzero padding bits", 1 + extra // 6)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, tuple(edges))


# ---------------------------------------------------------------------------
# Plain edge-list text format: "n m" header, then one "u v" line per edge
# ---------------------------------------------------------------------------

def parse_edge_list(text):
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"edge-list header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphError(f"bad edge-list header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphError(f"header promises {m} edges, found {len(lines) - 1}")
    pairs = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphError(f"line {lineno}: non-integer endpoint in {ln!r}") from exc
    return from_edge_list(n, pairs)


def format_edge_list(g):
    lines = [f"{g.n} {g.e}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
