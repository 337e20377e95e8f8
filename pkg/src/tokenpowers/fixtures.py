"""Named graphs and small test corpora."""

from __future__ import annotations

import random
import re

from .exceptions import GraphError
from .graph import (Graph, box_product, complete, cycle, klein_grid, path, star,
                    subdivide_for, wedge_cycles)


def triangle_with_tail(tail: int = 5) -> Graph:
    """Triangle 0-1-2 with a pendant path of ``tail`` extra vertices hanging off 2."""
    edges = [(0, 1), (1, 2), (0, 2)]
    chain = [2] + list(range(3, 3 + tail))
    return Graph(3 + tail, edges + list(zip(chain, chain[1:])))


def square_with_tail(tail: int = 4) -> Graph:
    """4-cycle 0-1-2-3 with a pendant path of ``tail`` extra vertices hanging off 3."""
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    chain = [3] + list(range(4, 4 + tail))
    return Graph(4 + tail, edges + list(zip(chain, chain[1:])))


def diamond_with_tail(tail: int = 3) -> Graph:
    """4-cycle 0-1-2-3 with chord 0-2 and a pendant path of ``tail`` vertices off 3."""
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]
    chain = [3] + list(range(4, 4 + tail))
    return Graph(4 + tail, edges + list(zip(chain, chain[1:])))


def two_pentagons() -> Graph:
    """Two 5-cycles joined by two edges from one vertex of the second to two
    adjacent vertices of the first (a best-effort reading of the drawing)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    edges += [(0, 7), (4, 7)]
    return Graph(10, edges)


_SIMPLE = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "K": complete,
    "klein": klein_grid,
}


def named_graph(name: str) -> Graph:
    """Resolve names like ``klein5``, ``star5``, ``path3``, ``K4``, ``wedge3x5``."""
    name = name.strip()
    m = re.fullmatch(r"wedge(\d+)x(\d+)", name)
    if m:
        return wedge_cycles(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"(path|cycle|star|complete|K|klein)(\d+)", name)
    if m:
        return _SIMPLE[m.group(1)](int(m.group(2)))
    m = re.fullmatch(r"prism(\d+)", name)
    if m:
        return box_product(cycle(int(m.group(1))), path(1))
    fixed = {
        "triangle_tail": triangle_with_tail,
        "square_tail": square_with_tail,
        "diamond_tail": diamond_with_tail,
        "two_pentagons": two_pentagons,
        "cube": lambda: box_product(box_product(path(1), path(1)), path(1)),
        "subdivided_wedge2x5_n3": lambda: subdivide_for(wedge_cycles(2, 5), 3),
    }
    if name in fixed:
        return fixed[name]()
    raise GraphError(f"unknown graph name {name!r}")


def random_connected_graph(t: int, extra: int, rng: random.Random) -> Graph:
    """Random spanning tree on ``t`` vertices plus up to ``extra`` random chords."""
    edges = set()
    for v in range(1, t):
        u = rng.randrange(v)
        edges.add((u, v))
    pairs = [(u, v) for u in range(t) for v in range(u + 1, t) if (u, v) not in edges]
    rng.shuffle(pairs)
    edges.update(pairs[:extra])
    return Graph(t, sorted(edges))


def small_corpus(max_vertices: int = 7, n_random: int = 12, seed: int = 0) -> dict[str, Graph]:
    """Named connected graphs with at most ``max_vertices`` vertices plus seeded random ones."""
    named = {}
    for m in range(0, max_vertices):
        named[f"path{m}"] = path(m)
    for m in range(3, max_vertices + 1):
        named[f"cycle{m}"] = cycle(m)
    for m in range(1, max_vertices):
        named[f"star{m}"] = star(m)
    for t in range(1, max_vertices + 1):
        named[f"K{t}"] = complete(t)
    extras = {
        "wedge2x3": wedge_cycles(2, 3),
        "wedge3x3": wedge_cycles(3, 3),
        "wedge2x4": wedge_cycles(2, 4),
        "prism3": box_product(cycle(3), path(1)),
        "ladder2": box_product(path(2), path(1)),
        "diamond": Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        "house": Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)]),
        "K23": Graph(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)]),
        "bull": Graph(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]),
    }
    named.update({k: g for k, g in extras.items() if g.n_vertices <= max_vertices})
    rng = random.Random(seed)
    for i in range(n_random):
        t = rng.randint(4, max_vertices)
        named[f"random{i}"] = random_connected_graph(t, rng.randint(0, t), rng)
    return named
