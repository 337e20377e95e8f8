"""Finite simple graphs, example families, products and subdivision.

Vertices are dense integer ids ``0..t-1``. Every list this module emits is
sorted canonically so results are reproducible and diffable.
"""

from __future__ import annotations

import hashlib
import io
from collections import deque
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exceptions import GraphError

__all__ = [
    "Graph",
    "GraphError",
    "generate",
    "path",
    "cycle",
    "star",
    "complete",
    "wedge_cycles",
    "klein_grid",
    "box_product",
    "box_power",
    "subdivide",
    "essential_vertices",
    "is_sufficiently_subdivided",
    "subdivide_for",
    "triangles",
    "chordless_4cycles",
    "simple_cycles",
    "parse_edgelist",
    "read_edgelist",
]


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable finite simple undirected graph.

    Parameters
    ----------
    n_vertices : int
        Number of vertices; ids are ``0..n_vertices-1``.
    edges : iterable of (int, int)
        Undirected edges. Loops and duplicates are rejected.
    labels : sequence of str, optional
        One display label per vertex.
    """

    __slots__ = ("_n", "_adj", "_edges", "_adjsets", "labels")

    def __init__(self, n_vertices: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence[str] | None = None):
        if n_vertices < 0:
            raise GraphError("negative vertex count")
        nbrs: list[set[int]] = [set() for _ in range(n_vertices)]
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise GraphError(f"edge ({u}, {v}) out of range")
            e = _edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._n = n_vertices
        self._adjsets = tuple(frozenset(s) for s in nbrs)
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._edges = tuple(sorted(seen))
        if labels is not None and len(labels) != n_vertices:
            raise GraphError("label count does not match vertex count")
        self.labels = tuple(labels) if labels is not None else None

    @property
    def n_vertices(self) -> int:
        return self._n

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return self._edges

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._adjsets[u]

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"{type(self).__name__}(n_vertices={self._n}, n_edges={self.n_edges})"

    def bfs_distances(self, source: int) -> list[int]:
        """Hop distances from ``source``; unreachable vertices get -1."""
        dist = [-1] * self._n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def shortest_path(self, source: int, target: int) -> list[int]:
        """A shortest vertex path; ties broken toward lower ids."""
        parent = {source: None}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if u == target:
                break
            for w in self._adj[u]:
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        if target not in parent:
            raise GraphError(f"no path from {source} to {target}")
        out = [target]
        while out[-1] != source:
            out.append(parent[out[-1]])
        return out[::-1]

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        return min(self.bfs_distances(0)) >= 0

    def spanning_tree(self, root: int = 0) -> dict[int, int | None]:
        """BFS spanning tree as a parent map (neighbors visited in id order)."""
        parent: dict[int, int | None] = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        return parent

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` (renumbered in sorted order)."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self._edges if u in pos and v in pos]
        return Graph(len(keep), edges), keep

    # -- serialization -----------------------------------------------------

    def to_edgelist(self) -> str:
        """Edge-list text; a ``# n_vertices`` directive keeps isolated vertices."""
        buf = io.StringIO()
        buf.write(f"# n_vertices {self._n}\n")
        for u, v in self._edges:
            buf.write(f"{u} {v}\n")
        return buf.getvalue()

    def to_dot(self, name: str = "G", labels: Sequence[str] | None = None) -> str:
        labels = labels if labels is not None else self.labels
        lines = [f"graph {name} {{"]
        for v in range(self._n):
            if labels is not None:
                lines.append(f'  {v} [label="{labels[v]}"];')
            else:
                lines.append(f"  {v};")
        for u, v in self._edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        """Stable short hash of the vertex count and edge list."""
        return hashlib.sha256(self.to_edgelist().encode()).hexdigest()[:16]


def parse_edgelist(text: str) -> Graph:
    """Parse the edge-list format: one ``u v`` per line, ``#`` comments.

    A comment of the form ``# n_vertices N`` fixes the vertex count;
    otherwise it is one more than the largest id seen.
    """
    edges = []
    declared = None
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "n_vertices":
                declared = int(parts[1])
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex id")
        edges.append((u, v))
        top = max(top, u, v)
    n = declared if declared is not None else top + 1
    if top >= n:
        raise GraphError(f"vertex id {top} exceeds declared count {n}")
    return Graph(n, edges)


def read_edgelist(path) -> Graph:
    with open(path) as fh:
        return parse_edgelist(fh.read())


# -- generators -------------------------------------------------------------


def path(m: int) -> Graph:
    """The path ``I_m`` on vertices ``0..m``."""
    if m < 0:
        raise GraphError("path length must be >= 0")
    return Graph(m + 1, [(i, i + 1) for i in range(m)])


def cycle(m: int) -> Graph:
    if m < 3:
        raise GraphError("a simple cycle needs m >= 3")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def star(m: int) -> Graph:
    """Star ``S_m``: center 0, leaves ``1..m``."""
    if m < 1:
        raise GraphError("star needs m >= 1")
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def complete(t: int) -> Graph:
    if t < 1:
        raise GraphError("complete graph needs t >= 1")
    return Graph(t, combinations(range(t), 2))


def wedge_cycles(k: int, m: int) -> Graph:
    """``k`` copies of the ``m``-cycle glued at vertex 0 (the hub).

    Cycle ``i`` runs ``0, 1+i(m-1), ..., (i+1)(m-1), 0``.
    """
    if k < 1 or m < 3:
        raise GraphError("wedge_cycles needs k >= 1 and m >= 3")
    edges = []
    for i in range(k):
        ring = [0] + list(range(1 + i * (m - 1), 1 + (i + 1) * (m - 1)))
        edges += [(ring[j], ring[(j + 1) % m]) for j in range(m)]
    return Graph(1 + k * (m - 1), edges)


def klein_grid(s: int) -> Graph:
    """1-skeleton of the ``s x s`` square grid glued into a Klein bottle.

    Vertex ``(x, y)`` with ``0 <= x, y < s`` has id ``y*s + x``. The left and
    right sides are glued preserving direction, ``(0, y) ~ (s, y)``; the top
    is glued to the bottom with a flip, ``(x, s) ~ (s - x, 0)``.
    """
    if s < 2:
        raise GraphError("klein_grid needs s >= 2")

    def vid(x, y):
        if y == s:
            x, y = s - x, 0
        return y * s + (x % s)

    edges = set()
    for y in range(s):
        for x in range(s):
            for u, v in ((vid(x, y), vid(x + 1, y)), (vid(x, y), vid(x, y + 1))):
                if u != v:
                    edges.add(_edge(u, v))
    return Graph(s * s, sorted(edges))


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete": (complete, 1),
    "wedge_cycles": (wedge_cycles, 2),
    "klein_grid": (klein_grid, 1),
}


def generate(family: str, *params: int) -> Graph:
    """Build a named example family, e.g. ``generate("wedge_cycles", 3, 5)``."""
    try:
        fn, arity = _FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}") from None
    if len(params) != arity:
        raise GraphError(f"{family} takes {arity} parameter(s)")
    return fn(*params)


# -- products and subdivision ----------------------------------------------


def box_product(G: Graph, H: Graph) -> Graph:
    """Cartesian product; vertex ``(u, v)`` gets id ``u * |H| + v``."""
    h = H.n_vertices
    edges = []
    for u in G.vertices():
        for a, b in H.edges:
            edges.append((u * h + a, u * h + b))
    for a, b in G.edges:
        for v in H.vertices():
            edges.append((a * h + v, b * h + v))
    return Graph(G.n_vertices * h, edges)


def box_power(G: Graph, n: int) -> Graph:
    """``G^n``; the tuple ``(v_1, ..., v_n)`` has the base-``t`` id with v_1 most significant."""
    if n < 1:
        raise GraphError("box_power needs n >= 1")
    out = G
    for _ in range(n - 1):
        out = box_product(out, G)
    return out


def subdivide(G: Graph, k_per_edge: Mapping[tuple[int, int], int] | int) -> Graph:
    """Replace each edge by a path with ``k_per_edge[e]`` interior vertices.

    Original vertices keep their ids. New ids are appended edge by edge in
    sorted edge order, from the lower endpoint toward the higher one. An int
    subdivides every edge uniformly; edges missing from a mapping get 0.
    """
    if isinstance(k_per_edge, int):
        counts = {e: k_per_edge for e in G.edges}
    else:
        counts = {}
        for e, k in k_per_edge.items():
            e = _edge(*e)
            if not G.has_edge(*e):
                raise GraphError(f"unknown edge {e}")
            counts[e] = k
    if any(k < 0 for k in counts.values()):
        raise GraphError("subdivision counts must be >= 0")
    nxt = G.n_vertices
    edges = []
    for u, v in G.edges:
        k = counts.get((u, v), 0)
        chain = [u] + list(range(nxt, nxt + k)) + [v]
        nxt += k
        edges += list(zip(chain, chain[1:]))
    return Graph(nxt, edges)


# -- cycles and subdivision predicates -------------------------------------


def essential_vertices(G: Graph) -> list[int]:
    return [v for v in G.vertices() if G.degree(v) != 2]


def simple_cycles(G: Graph, max_length: int) -> list[tuple[int, ...]]:
    """Simple cycles of length ``3..max_length``, each once.

    A cycle is reported starting at its least vertex and heading toward the
    lesser of that vertex's two cycle neighbors.
    """
    out = []
    adj = G.adjacency()
    for s in G.vertices():
        stack = [(s, [s])]
        while stack:
            v, walk = stack.pop()
            for w in adj[v]:
                if w == s and len(walk) >= 3 and walk[1] < walk[-1]:
                    out.append(tuple(walk))
                elif w > s and w not in walk and len(walk) < max_length:
                    stack.append((w, walk + [w]))
    out.sort(key=lambda c: (len(c), c))
    return out


def is_sufficiently_subdivided(G: Graph, n: int, max_cycle_length: int | None = None
                               ) -> tuple[bool, dict | None]:
    """Check both subdivision conditions for ``n`` tokens.

    Condition 1: distinct essential vertices lie at distance >= n - 1.
    Condition 2: for every essential ``v`` and simple cycle ``C``,
    ``len(C) + 2 * dist(v, C) >= n + 1``. Only cycles of length <= n can
    violate this, so enumeration stops at ``max_cycle_length`` (default n + 1).

    Returns ``(ok, witness)``; the witness describes the first violation.
    """
    if not G.is_connected():
        raise GraphError("is_sufficiently_subdivided requires a connected graph")
    ess = essential_vertices(G)
    dist = {v: G.bfs_distances(v) for v in ess}
    for a, b in combinations(ess, 2):
        if dist[a][b] < n - 1:
            return False, {"condition": 1, "pair": (a, b), "length": dist[a][b]}
    bound = n + 1 if max_cycle_length is None else max_cycle_length
    cycles = simple_cycles(G, bound)
    for v in ess:
        for c in cycles:
            length = len(c) + 2 * min(dist[v][w] for w in c)
            if length < n + 1:
                return False, {"condition": 2, "vertex": v, "cycle": c, "length": length}
    return True, None


def subdivide_for(G: Graph, n: int) -> Graph:
    """Smallest uniform subdivision of ``G`` that is sufficiently subdivided for ``n``."""
    if not G.is_connected():
        raise GraphError("subdivide_for requires a connected graph")
    k = 0
    while True:
        H = subdivide(G, k) if k else G
        if is_sufficiently_subdivided(H, n)[0]:
            return H
        k += 1


def triangles(G: Graph) -> list[tuple[int, int, int]]:
    out = []
    for a in G.vertices():
        up = [b for b in G.neighbors(a) if b > a]
        for i, b in enumerate(up):
            for c in up[i + 1:]:
                if G.has_edge(b, c):
                    out.append((a, b, c))
    return out


def chordless_4cycles(G: Graph) -> list[tuple[int, int, int, int]]:
    """Induced 4-cycles as ``(a, b, c, d)``: ``a`` least, ``b < d`` its neighbors."""
    out = []
    for a in G.vertices():
        up = [b for b in G.neighbors(a) if b > a]
        for i, b in enumerate(up):
            for d in up[i + 1:]:
                if G.has_edge(b, d):
                    continue
                for c in G.neighbors(b):
                    if c > a and c != d and G.has_edge(c, d) and not G.has_edge(a, c):
                        out.append((a, b, c, d))
    out.sort()
    return out
