"""First homology of 2-complexes and graphs, with exact integer arithmetic.

Two independent routes to ``H_1``:

* ``h1_cellular`` on a ``TwoComplex`` (``H_1(X(G))`` for ``build_X(G)``);
* ``cubical_h1`` straight from a graph, by enumerating graph maps from the
  1- and 2-cube into it (the discrete singular cubical chain complex in
  degrees 0..2, degenerate maps dropped).

The cubical boundary uses the alternating sign ``(-1)^k`` on the k-th face
pair. A constant sign does not square to zero; ``sign="constant"`` is kept
so that failure can be demonstrated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .complexes import TwoComplex
from .exceptions import GraphError, ResourceCapError
from .graph import Graph
from .powers import (cartesian_squares, config_walk_chain, multiply,
                     project_chain_phi, reduced_power, walk_chain)
from .snf import _normalize_chain, smith_normal_form


@dataclass(frozen=True)
class AbelianGroupDesc:
    """``Z^rank`` plus cyclic torsion factors ``d_1 | d_2 | ...`` (each > 1)."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        if any(d <= 1 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            object.__setattr__(self, "torsion", tuple(d for d in _normalize_chain(t) if d > 1))
        else:
            object.__setattr__(self, "torsion", t)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion

    def __add__(self, other: "AbelianGroupDesc") -> "AbelianGroupDesc":
        return AbelianGroupDesc(self.rank + other.rank, self.torsion + other.torsion)

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "AbelianGroupDesc":
        d = json.loads(text)
        return cls(d["rank"], tuple(d["torsion"]))

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def h1_cellular(X: TwoComplex) -> AbelianGroupDesc:
    if not X.is_connected():
        raise GraphError("h1_cellular requires a connected complex")
    snf = smith_normal_form(X.boundary_2()) if X.faces else None
    r = snf.rank if snf else 0
    cycle_rank = len(X.edges) - X.n_vertices + 1
    return AbelianGroupDesc(cycle_rank - r, tuple(snf.torsion) if snf else ())


def compose_sparse(d_low: Sequence[dict], d_high: Sequence[dict]) -> list[dict]:
    """Rows of ``d_high`` pushed through ``d_low`` (row-vector convention)."""
    out = []
    for row in d_high:
        acc: dict = {}
        for j, c in row.items():
            for k, v in d_low[j].items():
                acc[k] = acc.get(k, 0) + c * v
        out.append({k: v for k, v in acc.items() if v})
    return out


# -- discrete singular cubical chains ------------------------------------------


@dataclass
class CubicalChains:
    """Nondegenerate cubical basis in degrees 1 and 2 plus both boundaries.

    A 2-cube is the corner tuple ``(f00, f10, f01, f11)`` with ``fij = f(i, j)``.
    """

    n_vertices: int
    cubes1: list[tuple[int, int]]
    cubes2: list[tuple[int, int, int, int]]
    d1: list[dict] = field(repr=False)
    d2: list[dict] = field(repr=False)


def cubical_chains(G: Graph, sign: str = "alternating", max_cells: int = 200_000) -> CubicalChains:
    if sign not in ("alternating", "constant"):
        raise ValueError("sign must be 'alternating' or 'constant'")
    closed = [set(G.neighbors(v)) | {v} for v in G.vertices()]
    cubes1 = [(u, v) for u in G.vertices() for v in G.neighbors(u)]
    idx1 = {c: i for i, c in enumerate(cubes1)}
    cubes2 = []
    for f00 in G.vertices():
        for f10 in sorted(closed[f00]):
            for f01 in sorted(closed[f00]):
                for f11 in sorted(closed[f10] & closed[f01]):
                    if f00 == f10 and f01 == f11:
                        continue
                    if f00 == f01 and f10 == f11:
                        continue
                    cubes2.append((f00, f10, f01, f11))
                    if len(cubes2) > max_cells:
                        raise ResourceCapError(f"more than {max_cells} cubical 2-cells")
    # sign on the k-th face pair: (-1)^k, or (-1)^dim for the constant variant
    s1, s2 = (-1, 1) if sign == "alternating" else (1, 1)

    d1 = [{u: -1, v: 1} for u, v in cubes1]  # (-1)^1 (D^- - D^+) = v - u

    def add(row, face, c):
        if face[0] != face[1]:
            j = idx1[face]
            row[j] = row.get(j, 0) + c

    d2 = []
    for f00, f10, f01, f11 in cubes2:
        row: dict = {}
        add(row, (f00, f01), s1)
        add(row, (f10, f11), -s1)
        add(row, (f00, f10), s2)
        add(row, (f01, f11), -s2)
        d2.append({j: c for j, c in row.items() if c})
    return CubicalChains(G.n_vertices, cubes1, cubes2, d1, d2)


def cubical_h1(G: Graph, max_cells: int = 200_000) -> AbelianGroupDesc:
    """``ker d1 / im d2`` of the discrete singular cubical chain complex."""
    if not G.is_connected():
        raise GraphError("cubical_h1 requires a connected graph")
    C = cubical_chains(G, max_cells=max_cells)
    r1 = smith_normal_form(C.d1).rank if C.d1 else 0
    snf2 = smith_normal_form(C.d2) if C.d2 else None
    r2 = snf2.rank if snf2 else 0
    return AbelianGroupDesc(len(C.cubes1) - r1 - r2, tuple(snf2.torsion) if snf2 else ())


# -- integral cycle basis of SP^n(G) -------------------------------------------------


def fundamental_cycles(G: Graph) -> list[list[int]]:
    """One closed walk per non-tree edge ``ab`` of the BFS tree: ``a, b, ..., a``."""
    parent = G.spanning_tree(0)
    tree = {(min(v, p), max(v, p)) for v, p in parent.items() if p is not None}

    def to_root(v):
        out = [v]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    cycles = []
    for a, b in G.edges:
        if (a, b) in tree:
            continue
        pa, pb = to_root(a), to_root(b)
        common = set(pa) & set(pb)
        lca = next(v for v in pb if v in common)
        up_b = pb[:pb.index(lca) + 1]
        down_a = pa[:pa.index(lca)][::-1]
        cycles.append([a] + up_b + down_a)
    return cycles


@dataclass
class HomBasisReport:
    n: int
    x: tuple[int, ...]
    cycle_rank: int
    n_fundamental: int
    n_squares: int
    span_rank: int
    factors_all_one: bool
    rows_are_cycles: bool
    phi_basis_ok: bool
    phi_squares_zero: bool

    @property
    def passed(self) -> bool:
        return (self.span_rank == self.cycle_rank and self.factors_all_one
                and self.rows_are_cycles and self.phi_basis_ok and self.phi_squares_zero)

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["x"] = list(self.x)
        d["passed"] = self.passed
        return d


def verify_hombasis(G: Graph, n: int, x: Sequence[int], max_vertices: int | None = None
                    ) -> HomBasisReport:
    """Check that fundamental cycles of ``G·x`` plus all Cartesian-square
    boundaries span the full cycle lattice of ``SP^n(G)`` over Z.

    Spanning is certified by Smith normal form: the rows reach the cycle rank
    of ``SP^n(G)`` and every invariant factor is 1 (so the span is saturated).
    The projection ``[x, y] -> [u, v]`` must send ``[C_e·x]`` to ``[C_e]``
    and every square boundary to 0.
    """
    if n < 2:
        raise GraphError("verify_hombasis needs n >= 2")
    x = tuple(sorted(x))
    if len(x) != n - 1:
        raise GraphError("x must have degree n - 1")
    if not G.is_connected():
        raise GraphError("verify_hombasis requires a connected graph")
    P = reduced_power(G, n, max_vertices)
    col = {e: i for i, e in enumerate(P.edges)}

    cycles = fundamental_cycles(G)
    rows, phi_basis_ok = [], True
    for walk in cycles:
        ch = config_walk_chain(P, [multiply((v,), x) for v in walk])
        rows.append(ch)
        phi_basis_ok &= project_chain_phi(P, ch) == walk_chain(walk)
    squares = cartesian_squares(P)
    phi_zero = True
    for s in squares:
        ch = config_walk_chain(P, list(s.cycle) + [s.cycle[0]])
        rows.append(ch)
        phi_zero &= project_chain_phi(P, ch) == {}

    sparse = [{col[e]: c for e, c in r.items()} for r in rows]
    bd = [{u: -1, v: 1} for u, v in P.edges]
    are_cycles = all(not r for r in compose_sparse(bd, sparse))
    snf = smith_normal_form(sparse) if sparse else None
    return HomBasisReport(
        n=n, x=x,
        cycle_rank=P.n_edges - P.n_vertices + 1,
        n_fundamental=len(cycles),
        n_squares=len(squares),
        span_rank=snf.rank if snf else 0,
        factors_all_one=all(f == 1 for f in snf.factors) if snf else True,
        rows_are_cycles=are_cycles,
        phi_basis_ok=phi_basis_ok,
        phi_squares_zero=phi_zero,
    )
