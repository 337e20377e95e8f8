import pytest

from tokenpowers.complexes import (TwoComplex, build_UD, build_X, canonical_face,
                                   verify_skeleton_iso)
from tokenpowers.exceptions import GraphError
from tokenpowers.fixtures import named_graph
from tokenpowers.graph import (box_power, chordless_4cycles, complete, cycle, path, subdivide_for,
                               triangles, wedge_cycles)
from tokenpowers.homology import compose_sparse, h1_cellular
from tokenpowers.powers import token_graph


def test_canonical_face():
    assert canonical_face([2, 0, 1]) == (0, 1, 2)
    assert canonical_face([3, 1, 0, 2]) == (0, 1, 3, 2)
    assert canonical_face([0, 2, 3, 1]) == (0, 1, 3, 2)


def test_build_X_examples():
    assert build_X(cycle(5)).faces == []
    K = build_X(named_graph("klein5"))
    assert (K.n_vertices, len(K.edges), len(K.faces)) == (25, 50, 25)
    assert build_X(cycle(4)).faces == [(0, 1, 2, 3)]


def test_face_count_is_kappa(corpus):
    for G in corpus.values():
        X = build_X(G)
        assert len(X.faces) == len(triangles(G)) + len(chordless_4cycles(G))
        for f in X.faces:
            assert all(G.has_edge(*sorted((u, v))) for u, v in zip(f, f[1:] + f[:1]))
        assert all(not r for r in compose_sparse(X.boundary_1(), X.boundary_2()))


def test_json_round_trip():
    X = build_X(complete(4))
    Y = TwoComplex.from_json(X.to_json())
    assert (Y.n_vertices, Y.edges, Y.faces) == (X.n_vertices, X.edges, X.faces)


def test_bad_faces_rejected():
    with pytest.raises(GraphError):
        TwoComplex(3, [(0, 1), (1, 2)], [(0, 1, 2)])


def test_ud_examples():
    U = build_UD(path(2), 2)
    assert [len(U.cells[k]) for k in range(3)] == [3, 2, 0]
    assert verify_skeleton_iso(path(5), 2).sk1
    with pytest.raises(GraphError):
        build_UD(path(2), 4)


@pytest.mark.parametrize("m", range(1, 6))
def test_ud_of_paths_is_acyclic(m):
    for n in range(1, m + 1):
        U = build_UD(path(m), n)
        assert h1_cellular(U.complex).is_trivial


def test_ud_cells_are_disjoint_and_square():
    U = build_UD(cycle(7), 3)
    for c in U.cells[2]:
        ends = [v for e in c.edges for v in e]
        assert len(set(ends) | set(c.vertices)) == len(ends) + len(c.vertices)
        corners = c.corners()
        assert len(set(corners)) == 4
    assert all(not r for r in compose_sparse(U.complex.boundary_1(), U.complex.boundary_2()))


@pytest.mark.parametrize("G,n", [(cycle(6), 2), (cycle(6), 3), (path(6), 2), (path(6), 3),
                                 (subdivide_for(wedge_cycles(2, 5), 3), 3)])
def test_skeleton_both_clauses(G, n):
    rep = verify_skeleton_iso(G, n)
    assert rep.sk1 and rep.sk2 is True, rep.details


@pytest.mark.parametrize("G", [cycle(4), complete(4)])
def test_skeleton_sk1_only(G):
    rep = verify_skeleton_iso(G, 2)
    assert rep.sk1 and rep.sk2 is None and rep.passed


def test_faces_match_ud_when_no_small_cycles():
    G = subdivide_for(wedge_cycles(2, 5), 3)
    rep = verify_skeleton_iso(G, 3)
    d = rep.details["sk2"]
    assert d["x_faces"] == d["ud_2cells"] == d["token_squares"]


def test_token_of_cube_has_faces():
    # sanity: a graph with 4-cycles gets extra faces beyond UD's 2-cells
    G = box_power(path(1), 3)
    assert len(build_X(token_graph(G, 2)).faces) > len(build_UD(G, 2).cells[2])
