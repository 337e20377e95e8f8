"""Local exchanges in token graphs and the closed-form rank/count formulas.

A local exchange is a 3-cycle or chordless 4-cycle of ``T_n(G)`` that is not
a Cartesian square. Its support is the set of base vertices whose occupancy
changes around the cycle; the kind is fixed by the support length and the
number of tokens sitting on it:

    (3, 1) a    (3, 2) a'    (4, 1) b    (4, 3) b'    (4, 2) c / c'

With two tokens on a chordless 4-cycle ``v0 v1 v2 v3`` the non-square
exchanges pass through two "adjacent pair" configurations that share one
support vertex ``s``. Kind ``c`` is when ``s`` is the smaller vertex of its
diagonal pair ``{s, s_opposite}``, kind ``c'`` otherwise; swapping tokens and
holes moves ``s`` to its opposite vertex, so complementation swaps c and c'.

Those six kinds do not cover every graph. Two tokens on an induced diamond
(a 4-cycle with exactly one chord) also span a chordless 4-cycle of
``T_n(G)``; such exchanges get kind ``"other"`` and are not counted by
``count_local_exchanges``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .complexes import canonical_face
from .exceptions import GraphError
from .graph import Graph, chordless_4cycles, triangles
from .powers import cartesian_squares, token_graph

KINDS = ("a", "a'", "b", "b'", "c", "c'")
OTHER = "other"
COMPLEMENT_KIND = {"a": "a'", "a'": "a", "b": "b'", "b'": "b", "c": "c'", "c'": "c",
                   OTHER: OTHER}


@dataclass(frozen=True)
class LocalExchange:
    kind: str
    support: tuple[int, ...]  # canonical 3-cycle or chordless 4-cycle of G
    stationary: tuple[int, ...]  # tokens off the support
    cycle: tuple[tuple[int, ...], ...]  # configurations around the exchange


def _classify(G: Graph, cycle, support_cycles) -> LocalExchange:
    sets = [set(c) for c in cycle]
    union = set().union(*sets)
    common = set.intersection(*sets)
    support_set = union - common
    on = len(sets[0] & support_set)
    stationary = tuple(sorted(sets[0] - support_set))
    support = support_cycles.get(frozenset(support_set))
    if support is None:
        if len(support_set) == 4 and G.induced_subgraph(support_set)[0].n_edges == 5:
            return LocalExchange(OTHER, tuple(sorted(support_set)), stationary, tuple(cycle))
        raise GraphError(f"exchange {cycle} has support {sorted(support_set)}, "
                         "not a 3-cycle, chordless 4-cycle or diamond of the base graph")
    key = (len(support), on)
    if key == (3, 1):
        kind = "a"
    elif key == (3, 2):
        kind = "a'"
    elif key == (4, 1):
        kind = "b"
    elif key == (4, 3):
        kind = "b'"
    elif key == (4, 2):
        v0, v1, v2, v3 = support
        opposite = {v0: v2, v2: v0, v1: v3, v3: v1}
        adjacent = [s & support_set for s in sets
                    if len(s & support_set) == 2 and
                    G.has_edge(*sorted(s & support_set))]
        shared = set.intersection(*adjacent)
        s, = shared
        kind = "c" if s < opposite[s] else "c'"
    else:
        raise GraphError(f"unexpected exchange pattern {key}")
    return LocalExchange(kind, support, stationary, tuple(cycle))


def enumerate_local_exchanges(G: Graph, n: int, max_vertices: int | None = None
                              ) -> list[LocalExchange]:
    """All local exchanges of ``T_n(G)``, classified, in canonical order."""
    T = token_graph(G, n, max_vertices)
    support_cycles = {frozenset(c): tuple(c) for c in triangles(G) + chordless_4cycles(G)}
    squares = set()
    if n >= 2:
        squares = {frozenset(T.index[c] for c in s.cycle) for s in cartesian_squares(T)}
    out = []
    for tri in triangles(T):
        out.append(_classify(G, [T.configs[i] for i in tri], support_cycles))
    for quad in chordless_4cycles(T):
        if frozenset(quad) in squares:
            continue
        out.append(_classify(G, [T.configs[i] for i in quad], support_cycles))
    return out


def tally(exchanges) -> dict[str, int]:
    """Counts per kind; ``"other"`` only appears when nonzero."""
    c = Counter(e.kind for e in exchanges)
    out = {k: c.get(k, 0) for k in KINDS}
    if c.get(OTHER):
        out[OTHER] = c[OTHER]
    return out


def induced_diamonds(G: Graph) -> list[tuple[int, ...]]:
    """Vertex 4-sets inducing a 4-cycle plus one chord, sorted."""
    out = set()
    for a, c in G.edges:
        common = sorted(set(G.neighbors(a)) & set(G.neighbors(c)))
        for i, b in enumerate(common):
            for d in common[i + 1:]:
                if not G.has_edge(min(b, d), max(b, d)):
                    out.add(tuple(sorted((a, b, c, d))))
    return sorted(out)


def tally_by_support(exchanges) -> list[dict]:
    """Rows ``{support, kind, count}`` for CSV/JSON export."""
    c = Counter((e.support, e.kind) for e in exchanges)
    return [{"support": list(s), "kind": k, "count": v} for (s, k), v in sorted(c.items())]


def complement_exchange(ex: LocalExchange, t: int) -> tuple[tuple[int, ...], ...]:
    """The cycle of ``T_{t-n}`` obtained by swapping tokens and holes, canonically ordered."""
    full = set(range(t))
    return tuple(tuple(sorted(full - set(c))) for c in ex.cycle)


def exchange_key(cycle) -> tuple:
    """Orientation- and rotation-free key of a cycle of configurations."""
    order = sorted(cycle)
    pos = {c: i for i, c in enumerate(order)}
    face = canonical_face([pos[c] for c in cycle])
    return tuple(order[i] for i in face)


def count_local_exchanges(N: int, n: int, kappa3: int, kappa4: int) -> int:
    """Closed-form number of local exchanges (valid for n >= 3 and N >= n + 3)."""
    if n < 3 or N < n + 3:
        raise GraphError("formula needs n >= 3 and N >= n + 3; enumerate instead")
    return (kappa3 * (comb(N - 3, n - 1) + comb(N - 3, n - 2))
            + kappa4 * (comb(N - 4, n - 1) + 4 * comb(N - 4, n - 2) + comb(N - 4, n - 3)))


def expected_kind_counts(N: int, n: int, kappa3: int, kappa4: int) -> dict[str, int]:
    """Per-kind counts in the formula's range."""
    if n < 3 or N < n + 3:
        raise GraphError("formula needs n >= 3 and N >= n + 3")
    return {
        "a": kappa3 * comb(N - 3, n - 1),
        "a'": kappa3 * comb(N - 3, n - 2),
        "b": kappa4 * comb(N - 4, n - 1),
        "b'": kappa4 * comb(N - 4, n - 3),
        "c": kappa4 * 2 * comb(N - 4, n - 2),
        "c'": kappa4 * 2 * comb(N - 4, n - 2),
    }


# -- rank formulas ------------------------------------------------------------------


def wedge_b2_rank(k: int) -> int:
    """Rank of the 2-strand braid group of a wedge of k long cycles: ``3 C(k, 2) + 1``."""
    if k < 1:
        raise GraphError("k must be >= 1")
    return 3 * comb(k, 2) + 1


def wedge_h1_rank(n: int, k: int) -> int:
    """``(2n - 1) C(n + k - 2, n) + 1``."""
    if n < 1 or k < 1:
        raise GraphError("n, k must be >= 1")
    return (2 * n - 1) * comb(n + k - 2, n) + 1


def star_token_rank(m: int, n: int) -> int:
    """Conjectured rank of the token-graph group of the star: ``(n-1) C(m, n) - C(m, n-1) + 1``."""
    if m < 1 or not 1 <= n <= m + 1:
        raise GraphError("need m >= 1 and 1 <= n <= m + 1")
    return (n - 1) * comb(m, n) - comb(m, n - 1) + 1


def star_braid_rank(m: int, n: int) -> int:
    """Braid group rank of the star: ``(m-2) C(n+m-2, n-1) - C(n+m-2, n) + 1``."""
    if m < 2 or n < 1:
        raise GraphError("need m >= 2 and n >= 1")
    return (m - 2) * comb(n + m - 2, n - 1) - comb(n + m - 2, n) + 1


RANK_FORMULAS = {
    "wedge_b2": wedge_b2_rank,
    "wedge_h1": wedge_h1_rank,
    "star_token": star_token_rank,
    "star_braid": star_braid_rank,
}


def rank_formula(kind: str, *params: int) -> int:
    try:
        fn = RANK_FORMULAS[kind]
    except KeyError:
        raise GraphError(f"unknown formula {kind!r}") from None
    return fn(*params)


@dataclass
class StarConjectureReport:
    m: int
    n: int
    h1: dict
    expected_rank: int

    @property
    def passed(self) -> bool:
        return not self.h1["torsion"] and self.h1["rank"] == self.expected_rank


def verify_star_conjecture(m: int, n: int, max_vertices: int | None = None) -> StarConjectureReport:
    from .complexes import build_X
    from .graph import star
    from .homology import h1_cellular

    h = h1_cellular(build_X(token_graph(star(m), n, max_vertices)))
    return StarConjectureReport(m, n, h.to_dict(), star_token_rank(m, n))
