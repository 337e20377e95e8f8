"""Reduced powers and token graphs of a graph.

A configuration of ``n`` indistinguishable tokens on a graph with ``t``
vertices is stored as a sorted tuple of vertex ids (a monomial in the
vertices). Repeats are allowed in the reduced power ``SP^n(G)``; the token
graph ``T_n(G)`` keeps only the squarefree ones. Two configurations are
adjacent when one token moves along one edge of the base graph.

Vertex tables are in lexicographic order, and indices are computed with the
combinatorial number system, so the index of a configuration does not depend
on how the graph was built.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .exceptions import CheckFailure, GraphError, ResourceCapError
from .graph import Graph, box_power

TokenConfig = tuple  # sorted tuple of vertex ids

DEFAULT_MAX_VERTICES = 10**6


# -- ranking ----------------------------------------------------------------


def rank_subset(subset: Sequence[int], N: int) -> int:
    """Lexicographic rank of a sorted k-subset of ``{0..N-1}``."""
    k = len(subset)
    # colex rank of the reflected set, then reverse the order
    colex = sum(comb(N - 1 - s, k - j) for j, s in enumerate(subset))
    return comb(N, k) - 1 - colex


def unrank_subset(r: int, N: int, k: int) -> tuple[int, ...]:
    out = []
    lo = 0
    for j in range(k):
        for v in range(lo, N):
            block = comb(N - 1 - v, k - 1 - j)
            if r < block:
                out.append(v)
                lo = v + 1
                break
            r -= block
    return tuple(out)


def rank_multiset(config: Sequence[int], t: int) -> int:
    """Lexicographic rank of a sorted multiset of size n over ``{0..t-1}``."""
    n = len(config)
    return rank_subset([c + i for i, c in enumerate(config)], t + n - 1)


def unrank_multiset(r: int, t: int, n: int) -> tuple[int, ...]:
    s = unrank_subset(r, t + n - 1, n)
    return tuple(c - i for i, c in enumerate(s))


# -- monomial helpers ---------------------------------------------------------


def move(config: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    """Move one token from ``u`` to ``v``."""
    out = list(config)
    out.remove(u)
    out.append(v)
    return tuple(sorted(out))


def multiply(*configs: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for c in configs:
        out.extend(c)
    return tuple(sorted(out))


def move_between(x: Sequence[int], y: Sequence[int]) -> tuple[int, int] | None:
    """The pair ``(u, v)`` with ``x / y = u / v``, or None if x, y differ otherwise."""
    cx, cy = Counter(x), Counter(y)
    extra_x = cx - cy
    extra_y = cy - cx
    if sum(extra_x.values()) != 1 or sum(extra_y.values()) != 1:
        return None
    return next(iter(extra_x)), next(iter(extra_y))


def config_adjacent(G: Graph, x: Sequence[int], y: Sequence[int]) -> bool:
    """``lcm(x, y) / gcd(x, y) = uv`` for an edge ``uv`` of G."""
    if len(x) != len(y):
        return False
    uv = move_between(x, y)
    return uv is not None and G.has_edge(*uv)


def format_monomial(config: Sequence[int]) -> str:
    """E.g. ``(0, 0, 3)`` -> ``"0^2·3"``; the empty monomial is ``"1"``."""
    if not config:
        return "1"
    parts = []
    for v, k in sorted(Counter(config).items()):
        parts.append(str(v) if k == 1 else f"{v}^{k}")
    return "·".join(parts)


# -- power graphs ---------------------------------------------------------------


class PowerGraph(Graph):
    """``SP^n(G)`` (variant ``"reduced"``) or ``T_n(G)`` (variant ``"token"``).

    Vertex ``i`` is the configuration ``configs[i]``.
    """

    def __init__(self, base: Graph, n: int, variant: str, configs, edges):
        super().__init__(len(configs), edges)
        self.base = base
        self.n = n
        self.variant = variant
        self.configs = configs
        self.index = {c: i for i, c in enumerate(configs)}

    def rank(self, config: Sequence[int]) -> int:
        t = self.base.n_vertices
        if self.variant == "reduced":
            return rank_multiset(config, t)
        return rank_subset(config, t)

    def vertex_labels(self) -> list[str]:
        return [format_monomial(c) for c in self.configs]

    def table(self) -> dict:
        """Index -> token multiset table, the JSON sidecar of the edge list."""
        return {
            "base_vertices": self.base.n_vertices,
            "n": self.n,
            "variant": self.variant,
            "configs": [list(c) for c in self.configs],
        }


def _check_cap(count: int, cap: int | None):
    cap = DEFAULT_MAX_VERTICES if cap is None else cap
    if count > cap:
        raise ResourceCapError(f"{count} vertices exceeds cap {cap}")


def reduced_power(G: Graph, n: int, max_vertices: int | None = None) -> PowerGraph:
    """``SP^n(G)``: all n-token configurations, overlaps allowed."""
    if n < 0:
        raise GraphError("n must be >= 0")
    t = G.n_vertices
    _check_cap(comb(t + n - 1, n) if t else int(n == 0), max_vertices)
    configs = list(combinations_with_replacement(range(t), n))
    edges = []
    for i, x in enumerate(configs):
        for u in sorted(set(x)):
            for w in G.neighbors(u):
                if w > u:
                    j = rank_multiset(move(x, u, w), t)
                    edges.append((i, j))
    return PowerGraph(G, n, "reduced", configs, edges)


def token_graph(G: Graph, n: int, max_vertices: int | None = None) -> PowerGraph:
    """``T_n(G)``: squarefree configurations, built without ``SP^n``.

    For ``n > t`` the result is the empty graph.
    """
    if n < 0:
        raise GraphError("n must be >= 0")
    t = G.n_vertices
    _check_cap(comb(t, n), max_vertices)
    configs = list(combinations(range(t), n))
    edges = []
    for i, x in enumerate(configs):
        occupied = set(x)
        for u in x:
            for w in G.neighbors(u):
                if w > u and w not in occupied:
                    edges.append((i, rank_subset(move(x, u, w), t)))
    return PowerGraph(G, n, "token", configs, edges)


def quotient_power(G: Graph, n: int) -> PowerGraph:
    """``SP^n(G)`` as the orbit graph of ``G^n`` under coordinate permutation.

    Exponential in n; only meant as an independent check of ``reduced_power``.
    """
    t = G.n_vertices
    Gn = box_power(G, n)

    def tup(i):
        out = []
        for _ in range(n):
            i, r = divmod(i, t)
            out.append(r)
        return tuple(sorted(out))

    configs = sorted({tup(i) for i in Gn.vertices()})
    index = {c: i for i, c in enumerate(configs)}
    edges = {tuple(sorted((index[tup(a)], index[tup(b)]))) for a, b in Gn.edges}
    edges = {e for e in edges if e[0] != e[1]}
    return PowerGraph(G, n, "reduced", configs, sorted(edges))


def complement_iso(T: PowerGraph) -> tuple[PowerGraph, list[int]]:
    """``T_n(G) -> T_{t-n}(G)`` by taking complements; verified edge-preserving.

    Returns the target graph and the vertex map ``index -> index``.
    """
    if T.variant != "token":
        raise GraphError("complement_iso needs a token graph")
    t = T.base.n_vertices
    target = token_graph(T.base, t - T.n)
    full = set(range(t))
    mapping = [target.index[tuple(sorted(full - set(c)))] for c in T.configs]
    _verify_iso(T, target, mapping)
    return target, mapping


def _verify_iso(A: Graph, B: Graph, mapping: Sequence[int]):
    if A.n_vertices != B.n_vertices or len(set(mapping)) != A.n_vertices:
        raise CheckFailure("map is not a bijection")
    if A.n_edges != B.n_edges:
        raise CheckFailure(f"edge counts differ: {A.n_edges} vs {B.n_edges}")
    for u, v in A.edges:
        if not B.has_edge(mapping[u], mapping[v]):
            raise CheckFailure(f"edge ({u}, {v}) not preserved")


def sp_complement_claim(G: Graph, n: int) -> dict:
    """Test ``SP^n(G) ~ SP^(t-n+1)(G)`` against cheap invariants.

    This only refutes; agreement of invariants is reported as ``None``.
    """
    t = G.n_vertices
    m = t - n + 1
    out = {"n": n, "other": m}
    if m < 0:
        out.update(status="undefined", holds=False)
        return out
    A, B = reduced_power(G, n), reduced_power(G, m)
    inv_a = (A.n_vertices, A.n_edges, sorted(A.degrees()))
    inv_b = (B.n_vertices, B.n_edges, sorted(B.degrees()))
    out["vertices"] = [A.n_vertices, B.n_vertices]
    out["edges"] = [A.n_edges, B.n_edges]
    if inv_a != inv_b:
        out.update(status="refuted", holds=False)
    else:
        out.update(status="invariants agree", holds=None)
    return out


# -- Cartesian squares ----------------------------------------------------------


@dataclass(frozen=True)
class CartesianSquare:
    """The 4-cycle ``(ac·x, ad·x, bd·x, bc·x)`` for edges ``e1 = ab``, ``e2 = cd``."""

    e1: tuple[int, int]
    e2: tuple[int, int]
    x: tuple[int, ...]

    @property
    def cycle(self) -> tuple[tuple[int, ...], ...]:
        (a, b), (c, d) = self.e1, self.e2
        x = self.x
        return (multiply((a, c), x), multiply((a, d), x),
                multiply((b, d), x), multiply((b, c), x))


def cartesian_squares(P: PowerGraph) -> list[CartesianSquare]:
    """All Cartesian squares lying in ``P``.

    For a token graph only squares with disjoint edges and a squarefree
    background coprime to all four endpoints survive.
    """
    if P.n < 2:
        raise GraphError("Cartesian squares need n >= 2")
    G = P.base
    edges = G.edges
    out = []
    if P.variant == "reduced":
        backs = list(combinations_with_replacement(G.vertices(), P.n - 2))
        for e1, e2 in combinations(edges, 2):
            for x in backs:
                out.append(CartesianSquare(e1, e2, x))
        return out
    for e1, e2 in combinations(edges, 2):
        ends = set(e1) | set(e2)
        if len(ends) < 4:
            continue
        free = [v for v in G.vertices() if v not in ends]
        for x in combinations(free, P.n - 2):
            out.append(CartesianSquare(e1, e2, x))
    return out


# -- maps between G, G^n and SP^n(G) ---------------------------------------------


def embed_gx(G: Graph, x: Sequence[int], P: PowerGraph | None = None) -> list[tuple[int, ...]]:
    """The copy ``G·x`` of G inside ``SP^(deg x + 1)(G)``: ``v -> v·x``.

    Raises CheckFailure unless the map is injective and edge-preserving
    (checked against ``P`` when given, else with the monomial adjacency rule).
    """
    image = [multiply((v,), x) for v in G.vertices()]
    if len(set(image)) != len(image):
        raise CheckFailure("embedding is not injective")
    for u, v in G.edges:
        if P is not None:
            ok = P.has_edge(P.index[image[u]], P.index[image[v]])
        else:
            ok = config_adjacent(G, image[u], image[v])
        if not ok:
            raise CheckFailure(f"edge ({u}, {v}) not preserved")
    return image


def eta(vtuple: Sequence[int]) -> tuple[int, ...]:
    """``G^n -> SP^n(G)``: forget the order of the coordinates."""
    return tuple(sorted(vtuple))


def _check_closed_walk(G: Graph, walk: Sequence[Sequence[int]]):
    if len(walk) < 2 or tuple(walk[0]) != tuple(walk[-1]):
        raise GraphError("not a closed walk")
    for x, y in zip(walk, walk[1:]):
        if tuple(x) == tuple(y):
            raise GraphError("consecutive duplicate configurations")
        if not config_adjacent(G, x, y):
            raise GraphError(f"{x} and {y} are not adjacent")


def transposition_path(G: Graph, vt: Sequence[int], i: int, j: int) -> list[tuple[int, ...]]:
    """A walk in ``G^n`` from ``vt`` to ``vt`` with coordinates i, j swapped.

    Coordinate i walks a shortest path from ``vt[i]`` to ``vt[j]``, then
    coordinate j walks it back. The image under ``eta`` is an out-and-back
    walk, so its chain is zero. The start tuple is not included.
    """
    a, b = vt[i], vt[j]
    if a == b:
        return []
    steps = G.shortest_path(a, b)
    cur = list(vt)
    out = []
    for p in steps[1:]:
        cur[i] = p
        out.append(tuple(cur))
    for p in reversed(steps[:-1]):
        cur[j] = p
        out.append(tuple(cur))
    return out


def lift_cycle(P: PowerGraph, cycle: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Lift a closed walk of ``SP^n(G)`` to a closed walk of ``G^n``.

    Each step ``x -> y`` with ``x / y = u / v`` replaces the lowest-index
    coordinate equal to ``u`` by ``v``. The first ``len(cycle)`` tuples map
    onto ``cycle`` under ``eta``. If the trace ends at a permutation of the
    start, transposition paths are appended to close it; they contribute
    nothing to the image chain.
    """
    G = P.base
    _check_closed_walk(G, cycle)
    cur = list(cycle[0])
    Z = [tuple(cur)]
    for x, y in zip(cycle, cycle[1:]):
        u, v = move_between(x, y)
        cur[cur.index(u)] = v
        Z.append(tuple(cur))
    start = Z[0]
    # selection-sort the coordinates back to the start tuple
    for i in range(len(cur)):
        if cur[i] != start[i]:
            j = next(k for k in range(i + 1, len(cur)) if cur[k] == start[i])
            Z += transposition_path(G, cur, i, j)
            cur[i], cur[j] = cur[j], cur[i]
    assert tuple(cur) == start
    return Z


# -- chains -------------------------------------------------------------------------


def add_step(chain: dict, u: int, v: int, coeff: int = 1):
    """Add ``coeff·[u, v]`` to an edge chain keyed by ``(min, max)``."""
    if u == v:
        return
    key, sign = ((u, v), 1) if u < v else ((v, u), -1)
    val = chain.get(key, 0) + sign * coeff
    if val:
        chain[key] = val
    else:
        chain.pop(key, None)


def walk_chain(walk: Sequence[int]) -> dict:
    """The 1-chain ``[P]`` of a vertex walk."""
    chain: dict = {}
    for u, v in zip(walk, walk[1:]):
        add_step(chain, u, v)
    return chain


def config_walk_chain(P: PowerGraph, walk: Sequence[Sequence[int]]) -> dict:
    return walk_chain([P.index[tuple(c)] for c in walk])


def project_chain_phi(P: PowerGraph, chain: dict) -> dict:
    """Linear map ``[x, y] -> [u, v]`` (``x / y = u / v``) from chains of P to chains of G."""
    out: dict = {}
    for (i, j), coeff in chain.items():
        u, v = move_between(P.configs[i], P.configs[j])
        add_step(out, u, v, coeff)
    return out


# -- explicit isomorphisms for paths and stars ---------------------------------------


@dataclass
class IsoReport:
    name: str
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def lattice_graph(points: Iterable[tuple[int, ...]]) -> tuple[Graph, dict]:
    """Subgraph of ``Z^d`` induced by ``points`` (sorted)."""
    pts = sorted(set(points))
    index = {p: i for i, p in enumerate(pts)}
    edges = []
    for p, i in index.items():
        for k in range(len(p)):
            q = p[:k] + (p[k] + 1,) + p[k + 1:]
            if q in index:
                edges.append((i, index[q]))
    return Graph(len(pts), edges), index


def _is_iso(A: Graph, B: Graph, mapping: Sequence[int]) -> bool:
    try:
        _verify_iso(A, B, mapping)
    except CheckFailure:
        return False
    return True


def _monotone(d: int, lo: int, hi: int, strict: bool):
    if strict:
        return list(combinations(range(lo, hi + 1), d))
    return list(combinations_with_replacement(range(lo, hi + 1), d))


def path_iso(m: int, n: int) -> IsoReport:
    """``SP^n(I_m) ~ Delta_{m,n}``, ``T_n(I_m) ~ Gamma_{n,m}`` and the shift identity.

    ``Delta_{m,n}`` is the lattice graph on ``0 <= x_1 <= ... <= x_m <= n``
    and ``Gamma_{n,m}`` the one on ``0 <= x_1 < ... < x_n <= m``. The map to
    ``Delta`` sends x to its tail sums ``phi_k(x) = x(m-k+1) + ... + x(m)``.
    Adding ``(0, 1, ..., m-1)`` carries ``Delta_{m,n}`` onto
    ``Gamma_{m,n+m-1}``, which gives ``SP^n(I_m) ~ T_m(I_{n+m-1})``.
    """
    if m < 1 or n < 1:
        raise GraphError("path_iso needs m, n >= 1")
    from .graph import path

    Im = path(m)
    SP = reduced_power(Im, n)
    delta, dindex = lattice_graph(_monotone(m, 0, n, strict=False))
    phi = []
    for x in SP.configs:
        mult = Counter(x)
        phi.append(tuple(sum(mult[i] for i in range(m - k + 1, m + 1)) for k in range(1, m + 1)))
    checks = {"sp_delta": all(p in dindex for p in phi)
              and _is_iso(SP, delta, [dindex[p] for p in phi])}

    T = token_graph(Im, n)
    if n <= m + 1:
        gamma, gindex = lattice_graph(_monotone(n, 0, m, strict=True))
        checks["token_gamma"] = _is_iso(T, gamma, [gindex[c] for c in T.configs])
    else:
        checks["token_gamma"] = T.n_vertices == 0

    gamma2, g2index = lattice_graph(_monotone(m, 0, n + m - 1, strict=True))
    shift = [tuple(p[k] + k for k in range(m)) for p in sorted(dindex)]
    checks["delta_shift_gamma"] = all(s in g2index for s in shift) and _is_iso(
        delta, gamma2, [g2index[s] for s in shift])
    T2 = token_graph(path(n + m - 1), m)
    composed = [T2.index[tuple(q[k] + k for k in range(m))] for q in phi]
    checks["sp_token_shift"] = _is_iso(SP, T2, composed)
    return IsoReport(f"path_iso(m={m}, n={n})", checks)


def star_iso(m: int, n: int) -> IsoReport:
    """``SP^n(S_m) ~ Theta_{m,n}`` via leaf multiplicities, plus the token slice.

    ``Theta_{m,n}`` is the lattice graph on ``x >= 0`` with ``sum(x) <= n``.
    ``T_n(S_m)`` maps to the subgraph of the cube ``Q_m`` induced by 0/1
    vectors of weight ``n - 1`` or ``n``.
    """
    if m < 1 or n < 1:
        raise GraphError("star_iso needs m, n >= 1")
    from .graph import star

    S = star(m)
    SP = reduced_power(S, n)
    pts = [p for p in _product_range(m, n) if sum(p) <= n]
    theta, tindex = lattice_graph(pts)
    psi = [tuple(Counter(x)[i] for i in range(1, m + 1)) for x in SP.configs]
    checks = {"sp_theta": _is_iso(SP, theta, [tindex[p] for p in psi])}

    T = token_graph(S, n)
    cube_pts = [p for p in _product_range(m, 1) if sum(p) in (n - 1, n)]
    slab, cindex = lattice_graph(cube_pts)
    ind = [tuple(int(i in c) for i in range(1, m + 1)) for c in T.configs]
    checks["token_cube_slice"] = all(p in cindex for p in ind) and _is_iso(
        T, slab, [cindex[p] for p in ind])
    return IsoReport(f"star_iso(m={m}, n={n})", checks)


def _product_range(d: int, hi: int):
    from itertools import product

    return product(range(hi + 1), repeat=d)
