import random

import pytest
from hypothesis import given, strategies as st

from tokenpowers.complexes import build_X
from tokenpowers.exceptions import GraphError
from tokenpowers.fixtures import named_graph, random_connected_graph
from tokenpowers.graph import Graph, complete, cycle, path
from tokenpowers.groups import (Presentation, abelianize, cyclic_reduce, describe, free_reduce,
                                invert, presentation_from_complex, tietze_simplify)
from tokenpowers.homology import AbelianGroupDesc, h1_cellular


def test_word_helpers():
    assert free_reduce((1, -1, 2, 3, -3)) == (2,)
    assert cyclic_reduce((-2, 1, 3, 2)) == (1, 3)
    assert invert((1, -2)) == (2, -1)


def test_presentation_validation_and_json():
    with pytest.raises(ValueError):
        Presentation(1, [(2,)])
    P = Presentation(2, [(1, 2, -1, 2)])
    assert Presentation.from_json(P.to_json()) == P
    assert str(P) == "<a, b | abAb>"
    assert str(Presentation(1, [()])) == "<a | 1>"


def test_from_complex_examples():
    P = presentation_from_complex(build_X(cycle(5)))
    assert (P.n_generators, P.relators) == (1, [])
    P3 = presentation_from_complex(build_X(cycle(3)))
    assert P3.n_generators == 1 and len(P3.relators) == 1
    assert tietze_simplify(P3).n_generators == 0
    with pytest.raises(GraphError):
        presentation_from_complex(build_X(Graph(2, [])))


def test_klein_presentation():
    X = build_X(named_graph("klein5"))
    P = presentation_from_complex(X)
    assert P.n_generators == len(X.edges) - X.n_vertices + 1
    assert len(P.relators) == len(X.faces)
    assert abelianize(P) == AbelianGroupDesc(1, (2,))
    S = tietze_simplify(P)
    assert S.n_generators == 2 and len(S.relators) == 1 and len(S.relators[0]) == 4
    assert abelianize(S) == AbelianGroupDesc(1, (2,))


def test_tietze_examples():
    assert tietze_simplify(Presentation(1, [(1,)])).n_generators == 0
    S = tietze_simplify(Presentation(2, [(2,)]))
    assert (S.n_generators, S.relators) == (1, [])


def test_abelianize_examples():
    assert abelianize(Presentation(2, [(1, 2, 1, -2)])) == AbelianGroupDesc(1, (2,))
    assert abelianize(Presentation(3)) == AbelianGroupDesc(3)
    assert abelianize(Presentation(1, [(1, 1, 1)])) == AbelianGroupDesc(0, (3,))


def test_describe():
    assert describe(presentation_from_complex(build_X(complete(4))))["identified"] == "trivial"
    d = describe(presentation_from_complex(build_X(path(3))))
    assert d["identified"] == "trivial"
    d = describe(Presentation(3, [(1, -1)]))
    assert d["identified"] == "free of rank 3"
    assert describe(Presentation(2, [(1, 2, 1, -2)]))["identified"] is None


def test_pipelines_agree(corpus):
    for name, G in corpus.items():
        X = build_X(G)
        P = presentation_from_complex(X)
        assert P.n_generators == len(X.edges) - X.n_vertices + 1
        h = h1_cellular(X)
        assert abelianize(P) == h, name
        assert abelianize(tietze_simplify(P)) == h, name


@given(st.integers(1, 5), st.lists(st.lists(st.integers(-5, 5).filter(bool), max_size=8),
                                   max_size=5))
def test_tietze_preserves_abelianization(n, rels):
    rels = [tuple(x for x in r if abs(x) <= n) for r in rels]
    P = Presentation(n, rels)
    assert abelianize(tietze_simplify(P)) == abelianize(P)


@given(st.integers(0, 10**6))
def test_tietze_on_random_complexes(seed):
    rng = random.Random(seed)
    G = random_connected_graph(rng.randint(3, 8), rng.randint(0, 8), rng)
    P = presentation_from_complex(build_X(G))
    S = tietze_simplify(P)
    assert abelianize(S) == abelianize(P)
    assert S.n_generators <= P.n_generators


def test_budget_limits_moves():
    P = presentation_from_complex(build_X(named_graph("klein5")))
    S = tietze_simplify(P, budget=3)
    assert S.n_generators >= P.n_generators - 3
