"""Brute-force ground truth for small instances.

Deliberately naive and independent of the solver code paths: nothing here
imports the elimination, lifting or CRT modules.
"""

from __future__ import annotations

import itertools
from collections import deque

ENUMERATION_LIMIT = 10**7


class InstanceTooLarge(ValueError):
    pass


def _rows(A):
    return [list(map(int, row)) for row in getattr(A, "rows", A)]


def _check_size(k: int, n: int) -> None:
    if k**n > ENUMERATION_LIMIT:
        raise InstanceTooLarge(f"{k}**{n} exceeds the enumeration limit {ENUMERATION_LIMIT}")


def brute_force_solve(A, y, k: int) -> set[tuple[int, ...]]:
    """Every ``x`` in ``[0, k)^n`` with ``A x = y (mod k)``."""
    k = int(k)
    rows = _rows(A)
    n = len(rows[0])
    y = [int(v) % k for v in y]
    _check_size(k, n)
    return {
        x
        for x in itertools.product(range(k), repeat=n)
        if all(sum(a * b for a, b in zip(row, x)) % k == yi for row, yi in zip(rows, y))
    }


def brute_force_nullspace(B, k: int) -> set[tuple[int, ...]]:
    return brute_force_solve(B, [0] * len(_rows(B)), k)


def subgroup_closure(gens, k: int, n: int) -> set[tuple[int, ...]]:
    """The subgroup of ``(Z/kZ)^n`` generated by ``gens``, found by BFS from 0."""
    k = int(k)
    _check_size(k, n)
    gens = [tuple(int(x) % k for x in g) for g in gens]
    if any(len(g) != n for g in gens):
        raise ValueError(f"generator of wrong length (expected {n})")
    zero = (0,) * n
    seen = {zero}
    queue = deque([zero])
    while queue:
        v = queue.popleft()
        for g in gens:
            w = tuple((a + b) % k for a, b in zip(v, g))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def spans_same(gens_a, gens_b, k: int, n: int) -> bool:
    return subgroup_closure(gens_a, k, n) == subgroup_closure(gens_b, k, n)


def permutation_determinant(A, k: int | None = None) -> int:
    """Leibniz expansion; reduced mod ``k`` when given."""
    rows = _rows(A)
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total % k if k else total
