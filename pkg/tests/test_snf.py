import random

import pytest
import sympy
from hypothesis import given, strategies as st

from tokenpowers.snf import IntMatrix, determinant, smith_normal_form


def _check(M: IntMatrix):
    res = smith_normal_form(M, transforms=True)
    assert res.U @ M @ res.V == res.D
    assert abs(determinant(res.U)) == 1 and abs(determinant(res.V)) == 1
    for i in range(M.rows):
        for j in range(M.cols):
            if i != j or i >= res.rank:
                assert res.D.data[i][j] == 0
    diag = [res.D.data[i][i] for i in range(res.rank)]
    assert diag == res.factors and all(d > 0 for d in diag)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    return res


def test_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).factors == [1, 6]
    z = smith_normal_form([[0, 0], [0, 0]])
    assert z.rank == 0 and z.factors == []
    r = smith_normal_form([[2, 4], [4, 8]])
    assert r.rank == 1 and r.factors == [2]
    assert smith_normal_form([[2, 0], [0, 3]], transforms=True).factors == [1, 6]


@given(st.integers(1, 8), st.integers(1, 8), st.integers(0, 10**9))
def test_random_property(rows, cols, seed):
    rng = random.Random(seed)
    M = IntMatrix([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
    res = _check(M)
    assert res.rank == sympy.Matrix(M.data).rank()
    fast = smith_normal_form(M)
    assert fast.factors == res.factors


def test_sparse_input_matches_dense():
    rng = random.Random(1)
    for _ in range(50):
        rows = [{j: rng.choice((-2, -1, 1, 2, 3)) for j in rng.sample(range(12), 3)}
                for _ in range(10)]
        dense = [[r.get(j, 0) for j in range(12)] for r in rows]
        assert smith_normal_form(rows).factors == smith_normal_form(dense, transforms=True).factors


def test_int_matrix_helpers():
    M = IntMatrix([[1, 2], [3, 4]])
    assert M.transpose().data == [[1, 3], [2, 4]]
    assert IntMatrix.from_triplet_text(M.to_triplet_text()) == M
    assert IntMatrix.from_triplets(2, 2, M.triplets()) == M
    assert determinant(M) == -2
    with pytest.raises(ValueError):
        IntMatrix([[1], [1, 2]])
    with pytest.raises(ValueError):
        M @ IntMatrix([[1, 2, 3]])


def test_large_entries_stay_exact():
    big = 10**40
    res = _check(IntMatrix([[big, 0], [0, big * 3]]))
    assert res.factors == [big, 3 * big]
