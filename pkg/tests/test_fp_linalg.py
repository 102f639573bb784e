import itertools
import random

import pytest

from modcong.fp_linalg import nullspace_basis_mod_p, rref_mod_p
from modcong.matrix import identity, mat_vec_mul, reduce_entries
from modcong.oracle import brute_force_nullspace, subgroup_closure


def test_rref_examples():
    r = rref_mod_p(identity(3, 5))
    assert r.matrix == identity(3, 5) and r.rank == 3
    r = rref_mod_p(reduce_entries([[2, 2], [0, 2]], 2))
    assert r.matrix.tolist() == [[0, 0], [0, 0]] and r.rank == 0
    r = rref_mod_p(reduce_entries([[1, 1], [1, 1]], 2))
    assert r.matrix.tolist() == [[1, 1], [0, 0]] and r.pivots == (0,)


def test_rref_rejects_composite():
    with pytest.raises(ValueError):
        rref_mod_p(identity(2, 4))
    with pytest.raises(ValueError):
        nullspace_basis_mod_p(identity(2, 6))


def test_rref_shape_invariants():
    rng = random.Random(3)
    for _ in range(300):
        p = rng.choice([2, 3, 5, 7, 11])
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        A = reduce_entries([[rng.randrange(p) for _ in range(n)] for _ in range(m)], p)
        r = rref_mod_p(A)
        assert list(r.pivots) == sorted(set(r.pivots))
        for i, c in enumerate(r.pivots):
            assert r.matrix[i, c] == 1
            assert all(r.matrix[h, c] == 0 for h in range(m) if h != i)
        assert all(not any(row) for row in r.matrix.rows[r.rank:])
        # same row space: the nullspaces agree
        if p**n <= 2000:
            assert brute_force_nullspace(A, p) == brute_force_nullspace(r.matrix, p)


def test_nullspace_examples():
    assert len(nullspace_basis_mod_p(identity(3, 7))) == 0
    assert nullspace_basis_mod_p(reduce_entries([[0]], 2)).tolist() == [[1]]
    A = reduce_entries([[1, 1], [0, 0]], 2)
    assert nullspace_basis_mod_p(A).tolist() == [[1, 1]]
    assert brute_force_nullspace(A, 2) == {(0, 0), (1, 1)}


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_nullspace_exhaustive(p, n):
    for entries in itertools.product(range(p), repeat=n * n):
        A = reduce_entries([entries[i * n:(i + 1) * n] for i in range(n)], p)
        basis = nullspace_basis_mod_p(A)
        assert len(basis) + rref_mod_p(A).rank == n
        for v in basis:
            assert not any(mat_vec_mul(A, v))
        assert subgroup_closure(basis, p, n) == brute_force_nullspace(A, p)
