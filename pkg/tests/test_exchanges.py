import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from tokenpowers.complexes import build_X
from tokenpowers.exceptions import GraphError
from tokenpowers.exchanges import (COMPLEMENT_KIND, KINDS, complement_exchange,
                                   count_local_exchanges, enumerate_local_exchanges,
                                   exchange_key, expected_kind_counts, induced_diamonds,
                                   rank_formula, star_braid_rank, star_token_rank, tally,
                                   tally_by_support, verify_star_conjecture, wedge_b2_rank,
                                   wedge_h1_rank)
from tokenpowers.fixtures import (diamond_with_tail, named_graph, random_connected_graph,
                                  square_with_tail, triangle_with_tail, two_pentagons)
from tokenpowers.graph import box_power, chordless_4cycles, complete, cycle, path, triangles
from tokenpowers.homology import h1_cellular
from tokenpowers.powers import token_graph


def test_no_small_cycles_no_exchanges():
    assert enumerate_local_exchanges(cycle(5), 2) == []


def test_triangle_with_tail():
    G = triangle_with_tail(5)
    ex = enumerate_local_exchanges(G, 3)
    assert len(ex) == 15 == count_local_exchanges(8, 3, 1, 0)
    assert tally(ex) == expected_kind_counts(8, 3, 1, 0)


def test_square_with_tail():
    G = square_with_tail(4)
    ex = enumerate_local_exchanges(G, 3)
    assert len(ex) == 23 == count_local_exchanges(8, 3, 0, 1)
    assert tally(ex) == expected_kind_counts(8, 3, 0, 1)


def test_formula_errors_and_zero():
    assert count_local_exchanges(10, 3, 0, 0) == 0
    with pytest.raises(GraphError):
        count_local_exchanges(5, 3, 1, 0)
    with pytest.raises(GraphError):
        count_local_exchanges(10, 2, 1, 0)


def _diamond_free(seed):
    rng = random.Random(seed)
    while True:
        t = rng.randint(6, 9)
        G = random_connected_graph(t, rng.randint(1, t), rng)
        if not induced_diamonds(G):
            return G, rng.randint(3, t - 3)


@given(st.integers(0, 10**6))
def test_formula_matches_enumeration_without_diamonds(seed):
    G, n = _diamond_free(seed)
    ex = enumerate_local_exchanges(G, n)
    k3, k4 = len(triangles(G)), len(chordless_4cycles(G))
    assert len(ex) == count_local_exchanges(G.n_vertices, n, k3, k4)
    assert tally(ex) == expected_kind_counts(G.n_vertices, n, k3, k4)


def test_diamond_exchanges_fall_outside_the_formula():
    G = diamond_with_tail(3)
    assert induced_diamonds(G) == [(0, 1, 2, 3)]
    ex = enumerate_local_exchanges(G, 3)
    counts = tally(ex)
    assert counts["other"] == 6
    assert len(ex) - counts["other"] == count_local_exchanges(7, 3, 2, 0)


def test_k4_has_no_induced_diamond():
    assert induced_diamonds(complete(4)) == []


@pytest.mark.parametrize("G", [triangle_with_tail(3), square_with_tail(3), diamond_with_tail(3),
                               box_power(path(1), 3), complete(4), two_pentagons()])
def test_complement_swaps_kinds(G):
    t = G.n_vertices
    for n in range(1, t):
        ex = enumerate_local_exchanges(G, n)
        other = {exchange_key(e.cycle): e.kind for e in enumerate_local_exchanges(G, t - n)}
        assert len(ex) == len(other)
        for e in ex:
            assert other[exchange_key(complement_exchange(e, t))] == COMPLEMENT_KIND[e.kind]


def test_three_cycles_are_exchanges_on_triangles(corpus):
    for G in corpus.values():
        tri = {frozenset(c) for c in triangles(G)}
        for n in (2, 3):
            if n > G.n_vertices:
                continue
            T = token_graph(G, n)
            ex = [e for e in enumerate_local_exchanges(G, n) if len(e.cycle) == 3]
            assert len(ex) == len(triangles(T))
            for e in ex:
                assert frozenset(e.support) in tri and e.kind in ("a", "a'")


def test_tally_by_support_rows():
    rows = tally_by_support(enumerate_local_exchanges(square_with_tail(4), 3))
    assert sum(r["count"] for r in rows) == 23
    assert {r["kind"] for r in rows} <= set(KINDS)


def test_rank_formula_examples():
    assert wedge_b2_rank(3) == 10
    assert wedge_h1_rank(2, 3) == 10
    assert rank_formula("star_token", 4, 2) == 3
    with pytest.raises(GraphError):
        rank_formula("nope", 1)
    with pytest.raises(GraphError):
        star_token_rank(3, 5)
    with pytest.raises(GraphError):
        star_braid_rank(1, 2)


def test_formula_agreement_at_n2():
    for m in range(2, 51):
        assert star_token_rank(m, 2) == star_braid_rank(m, 2)
    for k in range(2, 51):
        assert wedge_b2_rank(k) == wedge_h1_rank(2, k)


@pytest.mark.parametrize("m,n,rank", [(3, 2, 1), (4, 2, 3), (4, 3, 3)])
def test_star_conjecture_examples(m, n, rank):
    rep = verify_star_conjecture(m, n)
    assert rep.passed and rep.h1 == {"rank": rank, "torsion": []}


@pytest.mark.parametrize("k", [2, 3])
def test_wedge_token_rank(k):
    h = h1_cellular(build_X(token_graph(named_graph(f"wedge{k}x5"), 2)))
    assert h.is_free and h.rank == wedge_b2_rank(k)


def test_two_pentagons_ranks():
    G = two_pentagons()
    got = [h1_cellular(build_X(token_graph(G, n))).rank for n in range(1, 10)]
    assert got == [2, 3, 4, 5, 5, 5, 4, 3, 2]
