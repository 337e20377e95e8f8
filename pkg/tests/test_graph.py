from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from tokenpowers.exceptions import GraphError
from tokenpowers.fixtures import random_connected_graph
from tokenpowers.graph import (Graph, box_power, box_product, chordless_4cycles, complete,
                               cycle, essential_vertices, generate, is_sufficiently_subdivided,
                               klein_grid, parse_edgelist, path, star, subdivide, subdivide_for,
                               triangles, wedge_cycles)

from conftest import to_nx


@st.composite
def graphs(draw, lo=1, hi=8):
    import random
    t = draw(st.integers(lo, hi))
    seed = draw(st.integers(0, 10**6))
    extra = draw(st.integers(0, t))
    return random_connected_graph(t, extra, random.Random(seed))


def test_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


def test_neighbors_sorted_and_symmetric():
    G = Graph(4, [(3, 0), (2, 0), (1, 0)])
    assert G.neighbors(0) == (1, 2, 3)
    assert all(0 in G.neighbors(v) for v in (1, 2, 3))


def test_generator_examples():
    S = star(5)
    assert (S.n_vertices, S.n_edges) == (6, 5)
    assert sorted(S.degrees(), reverse=True) == [5, 1, 1, 1, 1, 1]
    P0 = path(0)
    assert (P0.n_vertices, P0.n_edges) == (1, 0)
    K = klein_grid(5)
    assert (K.n_vertices, K.n_edges) == (25, 50)
    W = wedge_cycles(3, 5)
    assert (W.n_vertices, W.n_edges) == (13, 15)
    assert sorted(W.degrees())[-1] == 6 and sorted(W.degrees())[-2] == 2


def test_generate_dispatch_and_errors():
    assert generate("wedge_cycles", 2, 4).n_vertices == 7
    with pytest.raises(GraphError):
        generate("cycle", 2)
    with pytest.raises(GraphError):
        generate("wedge_cycles", 2, 2)
    with pytest.raises(GraphError):
        generate("klein_grid", 1)
    with pytest.raises(GraphError):
        generate("petersen", 1)


def test_klein_grid_is_4_regular():
    assert set(klein_grid(5).degrees()) == {4}


def test_box_product_examples():
    Q2 = box_product(path(1), path(1))
    assert nx.is_isomorphic(to_nx(Q2), nx.cycle_graph(4))
    G = wedge_cycles(2, 4)
    assert nx.is_isomorphic(to_nx(box_product(complete(1), G)), to_nx(G))
    prism = box_product(cycle(3), path(1))
    assert (prism.n_vertices, prism.n_edges) == (6, 9)
    assert nx.is_isomorphic(to_nx(prism), nx.circular_ladder_graph(3))


@given(graphs(hi=5), graphs(hi=5))
def test_box_product_counts(G, H):
    P = box_product(G, H)
    assert P.n_vertices == G.n_vertices * H.n_vertices
    assert P.n_edges == G.n_vertices * H.n_edges + H.n_vertices * G.n_edges
    assert nx.is_isomorphic(to_nx(P), nx.cartesian_product(to_nx(G), to_nx(H)))


def test_box_power_cube():
    Q3 = box_power(path(1), 3)
    assert nx.is_isomorphic(to_nx(Q3), nx.hypercube_graph(3))


def test_subdivide_examples():
    assert nx.is_isomorphic(to_nx(subdivide(path(1), {(0, 1): 1})), to_nx(path(2)))
    assert nx.is_isomorphic(to_nx(subdivide(cycle(3), 1)), nx.cycle_graph(6))
    spider = subdivide(star(3), 2)
    assert spider.n_vertices == 10
    assert sorted(spider.degrees()) == [1, 1, 1] + [2] * 6 + [3]
    with pytest.raises(GraphError):
        subdivide(cycle(3), {(0, 2): 1, (5, 6): 1})


def test_subdivide_keeps_original_ids():
    G = subdivide(path(1), 2)
    assert G.shortest_path(0, 1) == [0, 2, 3, 1]


@given(graphs(hi=6), st.integers(0, 3))
def test_subdivide_preserves_essential_degrees(G, k):
    H = subdivide(G, k)
    before = sorted(G.degree(v) for v in essential_vertices(G))
    after = sorted(H.degree(v) for v in essential_vertices(H))
    assert before == after


def test_essential_vertices_examples():
    assert essential_vertices(cycle(5)) == []
    assert essential_vertices(path(5)) == [0, 5]
    assert essential_vertices(wedge_cycles(2, 5)) == [0]


def test_sufficiently_subdivided_examples():
    assert is_sufficiently_subdivided(star(5), 2)[0]
    ok, witness = is_sufficiently_subdivided(star(5), 3)
    assert not ok and witness
    assert is_sufficiently_subdivided(wedge_cycles(3, 5), 4)[0]
    assert not is_sufficiently_subdivided(wedge_cycles(3, 5), 5)[0]
    with pytest.raises(GraphError):
        is_sufficiently_subdivided(Graph(2, []), 2)


@given(graphs(hi=7))
def test_always_sufficient_for_two(G):
    assert is_sufficiently_subdivided(G, 2)[0]


@given(graphs(hi=7), st.integers(2, 5))
def test_sufficiency_is_downward_closed(G, n):
    if is_sufficiently_subdivided(G, n)[0]:
        assert all(is_sufficiently_subdivided(G, m)[0] for m in range(1, n))


def test_subdivide_for_examples():
    W = wedge_cycles(2, 5)
    assert subdivide_for(W, 4).edges == W.edges
    assert subdivide_for(path(1), 2).edges == path(1).edges
    assert subdivide_for(cycle(3), 3).edges == cycle(3).edges
    S = subdivide_for(star(3), 4)
    assert is_sufficiently_subdivided(S, 4)[0]


def test_small_cycle_examples():
    assert (len(triangles(complete(4))), len(chordless_4cycles(complete(4)))) == (4, 0)
    assert (len(triangles(cycle(4))), len(chordless_4cycles(cycle(4)))) == (0, 1)
    Q3 = box_power(path(1), 3)
    assert (len(triangles(Q3)), len(chordless_4cycles(Q3))) == (0, 6)


def _brute_triangles(G):
    return sorted(c for c in combinations(G.vertices(), 3)
                  if all(G.has_edge(u, v) for u, v in combinations(c, 2)))


def _brute_chordless(G):
    found = set()
    for quad in combinations(G.vertices(), 4):
        sub = [(u, v) for u, v in combinations(quad, 2) if G.has_edge(u, v)]
        if len(sub) == 4 and all(sum(v in e for e in sub) == 2 for v in quad):
            found.add(frozenset(quad))
    return found


@given(graphs(lo=3, hi=10))
def test_small_cycles_match_brute_force(G):
    assert triangles(G) == _brute_triangles(G)
    fours = chordless_4cycles(G)
    assert {frozenset(c) for c in fours} == _brute_chordless(G)
    assert len(fours) == len(set(map(frozenset, fours)))
    for a, b, c, d in fours:
        assert a == min((a, b, c, d)) and b < d
        assert G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(c, d) and G.has_edge(a, d)


def test_edgelist_round_trip_keeps_isolated_vertices():
    G = Graph(5, [(0, 1), (1, 2)])
    H = parse_edgelist(G.to_edgelist())
    assert H.n_vertices == 5 and H.edges == G.edges
    assert G.digest() == H.digest()


def test_edgelist_parse_errors():
    with pytest.raises(GraphError):
        parse_edgelist("0 1 2\n")
    with pytest.raises(GraphError):
        parse_edgelist("0 a\n")
    with pytest.raises(GraphError):
        parse_edgelist("0 0\n")
    with pytest.raises(GraphError):
        parse_edgelist("# n_vertices 2\n0 3\n")
    G = parse_edgelist("# a comment\n0 1  # trailing\n\n1 2\n")
    assert G.n_edges == 2


def test_dot_output():
    dot = path(2).to_dot("P", ["a", "b", "c"])
    assert dot.startswith("graph P {") and '0 [label="a"];' in dot and "1 -- 2;" in dot
