"""2-complexes built from graphs.

``build_X`` attaches a 2-cell to every 3-cycle and chordless 4-cycle of a
graph. ``build_UD`` materializes cells of dimension <= 2 of the discrete
configuration space of ``n`` points in a graph (cells are sets of ``n``
vertices/edges with pairwise disjoint closures). Cells of dimension >= 3 do
not affect the fundamental group or ``H_1`` and are never built.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .exceptions import GraphError
from .graph import Graph, chordless_4cycles, triangles
from .powers import PowerGraph, cartesian_squares, rank_subset, token_graph


def canonical_face(walk: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a closed walk to start at its least vertex, stepping to the lesser neighbor."""
    k = len(walk)
    i = min(range(k), key=lambda j: walk[j])
    fwd = tuple(walk[(i + j) % k] for j in range(k))
    back = tuple(walk[(i - j) % k] for j in range(k))
    return fwd if fwd[1] < back[1] else back


@dataclass
class TwoComplex:
    """Vertices ``0..n_vertices-1``, edges ``(u, v)`` with ``u < v``, faces as closed walks."""

    n_vertices: int
    edges: list[tuple[int, int]]
    faces: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        for f in self.faces:
            for u, v in zip(f, f[1:] + f[:1]):
                if (min(u, v), max(u, v)) not in self.edge_index:
                    raise GraphError(f"face {f} uses missing edge ({u}, {v})")

    @property
    def graph(self) -> Graph:
        return Graph(self.n_vertices, self.edges)

    def is_connected(self) -> bool:
        return self.graph.is_connected()

    def boundary_1(self) -> list[dict[int, int]]:
        """Sparse rows: edge ``(u, v)`` -> ``v - u``."""
        return [{u: -1, v: 1} for u, v in self.edges]

    def boundary_2(self) -> list[dict[int, int]]:
        """Sparse rows: face -> signed sum of the edges along its walk."""
        rows = []
        for f in self.faces:
            row: dict[int, int] = {}
            for u, v in zip(f, f[1:] + f[:1]):
                if u < v:
                    j, s = self.edge_index[(u, v)], 1
                else:
                    j, s = self.edge_index[(v, u)], -1
                row[j] = row.get(j, 0) + s
            rows.append({j: c for j, c in row.items() if c})
        return rows

    def to_json(self) -> str:
        return json.dumps({"vertices": self.n_vertices,
                           "edges": [list(e) for e in self.edges],
                           "faces": [list(f) for f in self.faces]})

    @classmethod
    def from_json(cls, text: str) -> "TwoComplex":
        d = json.loads(text)
        return cls(d["vertices"], [tuple(e) for e in d["edges"]],
                   [tuple(f) for f in d["faces"]])


def build_X(G: Graph) -> TwoComplex:
    faces = [tuple(t) for t in triangles(G)] + [tuple(q) for q in chordless_4cycles(G)]
    return TwoComplex(G.n_vertices, list(G.edges), faces)


@dataclass(frozen=True)
class ConfigCell:
    """A cell of UD^n: ``vertices`` and ``edges`` with pairwise disjoint closures."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.edges)

    def corners(self) -> list[tuple[int, ...]]:
        """Corner configurations, in cyclic order for a 2-cell."""
        w = self.vertices
        if not self.edges:
            return [w]
        if len(self.edges) == 1:
            (a, b), = self.edges
            return [tuple(sorted(w + (a,))), tuple(sorted(w + (b,)))]
        (a, b), (c, d) = self.edges
        return [tuple(sorted(w + p)) for p in ((a, c), (a, d), (b, d), (b, c))]


@dataclass
class UDComplex:
    base: Graph
    n: int
    cells: dict[int, list[ConfigCell]]
    complex: TwoComplex


def build_UD(G: Graph, n: int) -> UDComplex:
    """Cells of dimension 0..2 of ``UD^n(G)`` and the induced 2-complex.

    0-cells are numbered by the lexicographic rank of their vertex set, which
    matches the vertex numbering of ``token_graph(G, n)``.
    """
    t = G.n_vertices
    if n < 1:
        raise GraphError("n must be >= 1")
    if n > t:
        raise GraphError(f"n = {n} exceeds the vertex count {t}")
    cells: dict[int, list[ConfigCell]] = {0: [], 1: [], 2: []}
    for k in range(3):
        if k > n:
            break
        for es in combinations(G.edges, k):
            ends = {v for e in es for v in e}
            if len(ends) < 2 * k:
                continue
            free = [v for v in G.vertices() if v not in ends]
            for ws in combinations(free, n - k):
                cells[k].append(ConfigCell(ws, es))
    rank = {}
    for c in cells[0]:
        rank[c.vertices] = rank_subset(c.vertices, t)
    edges = sorted(tuple(sorted(rank[p] for p in c.corners())) for c in cells[1])
    faces = sorted(canonical_face([rank[p] for p in c.corners()]) for c in cells[2])
    return UDComplex(G, n, cells, TwoComplex(len(cells[0]), edges, faces))


@dataclass
class SkeletonReport:
    graph: str
    n: int
    sk1: bool
    sk2: bool | None  # None when G has 3- or 4-cycles and the clause does not apply
    details: dict

    @property
    def passed(self) -> bool:
        return self.sk1 and self.sk2 is not False


def verify_skeleton_iso(G: Graph, n: int) -> SkeletonReport:
    """Compare ``T_n(G)`` with the 1-skeleton of ``UD^n(G)`` and, when G has
    no 3- or 4-cycles, ``X(T_n(G))`` with the 2-skeleton.

    The bijection is n-subset <-> squarefree configuration. On the 2-skeleton
    the faces are also matched against the Cartesian squares of ``T_n(G)``.
    """
    T = token_graph(G, n)
    U = build_UD(G, n)
    details: dict = {"vertices": T.n_vertices, "edges": T.n_edges}
    mapping = [T.index[c.vertices] for c in U.cells[0]]
    bij = sorted(mapping) == list(range(T.n_vertices)) and len(U.cells[0]) == T.n_vertices
    ud_edges = {tuple(sorted((mapping[u], mapping[v]))) for u, v in U.complex.edges}
    sk1 = bij and ud_edges == set(T.edges) and len(U.complex.edges) == T.n_edges
    details["sk1"] = {"bijection": bij, "ud_edges": len(U.complex.edges)}

    small_cycles = triangles(G) or chordless_4cycles(G)
    sk2 = None
    if not small_cycles:
        XT = build_X(T)
        x_faces = set(XT.faces)
        ud_faces = {canonical_face([mapping[v] for v in f]) for f in U.complex.faces}
        sq = set()
        if n >= 2:
            sq = {canonical_face([T.index[c] for c in s.cycle]) for s in cartesian_squares(T)}
        sk2 = x_faces == ud_faces == sq and len(XT.faces) == len(U.cells[2])
        details["sk2"] = {"x_faces": len(x_faces), "ud_2cells": len(U.cells[2]),
                          "token_squares": len(sq)}
    else:
        details["sk2"] = "skipped: graph has 3- or 4-cycles"
    return SkeletonReport(G.digest(), n, sk1, sk2, details)
