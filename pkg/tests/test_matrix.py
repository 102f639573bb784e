import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from modcong.matrix import (
    GeneratingSet,
    MatModK,
    NotInvertible,
    VecModK,
    determinant_mod_k,
    identity,
    integer_determinant,
    inverse_mod_k,
    mat_mul,
    mat_vec_mul,
    pad_square,
    reduce_entries,
    zeros,
)
from modcong.oracle import permutation_determinant
from modcong.residue import is_unit


def M(rows, k):
    return reduce_entries(rows, k)


def test_reduce_entries():
    assert M([[5]], 3).tolist() == [[2]]
    assert M([[-1]], 4).tolist() == [[3]]
    assert M([[7, 8], [9, 10]], 7).tolist() == [[0, 1], [2, 3]]


def test_constructor_rejects_noncanonical():
    with pytest.raises(ValueError):
        MatModK(((5,),), 3)
    with pytest.raises(ValueError):
        VecModK((-1,), 3)
    with pytest.raises(ValueError):
        MatModK(((1, 2), (3,)), 5)


def test_pad_square():
    A, y = pad_square(M([[1, 1]], 5), VecModK((0,), 5))
    assert A.tolist() == [[1, 1], [0, 0]] and y.tolist() == [0, 0]
    A, y = pad_square(M([[1], [1]], 5), VecModK((1, 1), 5))
    assert A.tolist() == [[1, 0], [1, 0]] and y.tolist() == [1, 1]
    sq = M([[1, 2], [3, 4]], 5)
    assert pad_square(sq, VecModK((1, 2), 5)) == (sq, VecModK((1, 2), 5))


def test_mat_mul_examples():
    A = M([[1, 1], [0, 1]], 2)
    assert mat_mul(A, A).tolist() == [[1, 0], [0, 1]]
    B = M([[3, 4, 1], [2, 0, 5]], 6)
    assert mat_mul(B, identity(3, 6)) == B
    assert mat_mul(B, zeros(3, 2, 6)) == zeros(2, 2, 6)
    with pytest.raises(ValueError):
        mat_mul(B, B)
    with pytest.raises(ValueError):
        mat_mul(M([[1]], 2), M([[1]], 3))


def test_mat_vec_mul():
    A = M([[1, 2], [3, 4]], 5)
    assert mat_vec_mul(A, VecModK((1, 1), 5)).tolist() == [3, 2]


def _rand(rng, m, n, k):
    return M([[rng.randrange(k) for _ in range(n)] for _ in range(m)], k)


def test_associativity_and_distributivity():
    rng = random.Random(1)
    for _ in range(200):
        k = rng.randint(2, 50)
        n = rng.randint(1, 4)
        A, B, C = (_rand(rng, n, n, k) for _ in range(3))
        assert mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C))
        BC = M([[b + c for b, c in zip(rb, rc)] for rb, rc in zip(B.rows, C.rows)], k)
        lhs = mat_mul(A, BC)
        AB, AC = mat_mul(A, B), mat_mul(A, C)
        assert lhs == M([[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(AB.rows, AC.rows)], k)


def test_determinant_examples():
    assert determinant_mod_k(identity(3, 7)) == 1
    assert determinant_mod_k(M([[2, 1], [1, 2]], 3)) == 0
    assert determinant_mod_k(M([[5]], 6)) == 5
    with pytest.raises(ValueError):
        determinant_mod_k(M([[1, 2]], 3))


def test_determinant_multiplicative():
    rng = random.Random(2)
    for _ in range(300):
        k = rng.randint(2, 60)
        n = rng.randint(1, 5)
        A, B = _rand(rng, n, n, k), _rand(rng, n, n, k)
        assert determinant_mod_k(mat_mul(A, B)) == determinant_mod_k(A) * determinant_mod_k(B) % k


@settings(max_examples=200)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-50, 50), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_integer_determinant_matches_leibniz(rows):
    assert integer_determinant(rows) == permutation_determinant(rows)


def test_inverse_examples():
    assert inverse_mod_k(identity(3, 10)) == identity(3, 10)
    for k in (2, 5, 6, 12, 97):
        A = M([[1, 1], [0, 1]], k)
        inv = inverse_mod_k(A)
        assert inv.tolist() == [[1, k - 1], [0, 1]]
        assert mat_mul(A, inv) == identity(2, k)
    with pytest.raises(NotInvertible) as info:
        inverse_mod_k(M([[2]], 4))
    assert info.value.det == 2


def test_inverse_composite_without_unit_entries():
    # no entry of the first column is a unit mod 6, yet det = 2*1 - 3*1 = -1 is
    A = M([[2, 3], [3, 1]], 6)
    inv = inverse_mod_k(A)
    assert mat_mul(A, inv) == identity(2, 6) == mat_mul(inv, A)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_inverse_exists_iff_det_unit_exhaustive(k):
    for entries in itertools.product(range(k), repeat=4):
        A = M([entries[:2], entries[2:]], k)
        if is_unit(determinant_mod_k(A), k):
            inv = inverse_mod_k(A)
            assert mat_mul(A, inv) == identity(2, k) == mat_mul(inv, A)
        else:
            with pytest.raises(NotInvertible):
                inverse_mod_k(A)


def test_generating_set_normalizes():
    gs = GeneratingSet.build([[2], [0], [6], [1], [2]], 1, 4)
    assert gs.tolist() == [[2], [1]]
    with pytest.raises(ValueError):
        GeneratingSet(1, 4, (VecModK((0,), 4),))
    with pytest.raises(ValueError):
        GeneratingSet(1, 4, (VecModK((1,), 4), VecModK((1,), 4)))
