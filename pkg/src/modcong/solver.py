"""Feasibility, solutions and nullspaces of linear congruences mod k."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .crt import combine_nullspaces
from .lifting import nullspace_mod_prime_power
from .matrix import GeneratingSet, MatModK, VecModK, as_matrix, as_vector, mat_vec_mul, pad_square
from .residue import as_modulus, crt_reconstruct, mod_inverse


@dataclass(frozen=True)
class Solution:
    x: VecModK

    feasible = True


@dataclass(frozen=True)
class Infeasible:
    feasible = False


SolveOutcome = Union[Solution, Infeasible]


def _reduce(M: MatModK, q: int) -> MatModK:
    return MatModK(tuple(tuple(x % q for x in row) for row in M.rows), q)


def nullspace(B, k) -> GeneratingSet:
    """Generators of ``{x : B x = 0 (mod k)}``.

    Non-square input is zero-padded first; generators are projected back to
    the original ``n`` columns.
    """
    modulus = as_modulus(k)
    B = as_matrix(B, modulus.k)
    n = B.shape[1]
    B_sq, _ = pad_square(B)
    per_factor = [
        (p**e, nullspace_mod_prime_power(_reduce(B_sq, p**e), p, e)) for p, e in modulus.factors
    ]
    gens = combine_nullspaces(B_sq, per_factor)
    if B_sq.shape[1] == n:
        return gens
    return GeneratingSet.build((v.entries[:n] for v in gens), n, modulus.k)


def solve_prime_power(A: MatModK, y: VecModK, p: int, e: int) -> SolveOutcome:
    """Solve a square system modulo ``p**e`` through the nullspace of ``[A | y]``.

    Picks the first generator whose last coordinate is a unit and rescales it
    so that coordinate becomes ``-1``.
    """
    q = p**e
    A = as_matrix(A, q)
    y = as_vector(y, q)
    n = A.shape[1]
    if not A.is_square:
        raise ValueError(f"solve_prime_power needs a square matrix, got {A.shape}")
    augmented = MatModK(
        tuple(row + (yi,) for row, yi in zip(A.rows, y.entries)) + ((0,) * (n + 1),), q
    )
    for z in nullspace_mod_prime_power(augmented, p, e):
        last = z.entries[n]
        if last % p:
            alpha = -mod_inverse(last, q) % q
            return Solution(VecModK.reduce((alpha * x for x in z.entries[:n]), q))
    return Infeasible()


def _per_factor(A, y, modulus):
    A = as_matrix(A, modulus.k)
    y = as_vector(y, modulus.k)
    n = A.shape[1]
    A_sq, y_sq = pad_square(A, y)
    for p, e in modulus.factors:
        q = p**e
        yield q, n, solve_prime_power(_reduce(A_sq, q), VecModK.reduce(y_sq, q), p, e)


def solve(A, y, k) -> SolveOutcome:
    """Return ``Solution(x)`` with ``A x = y (mod k)``, or ``Infeasible()``."""
    modulus = as_modulus(k)
    parts = []
    n = 0
    for q, n, outcome in _per_factor(A, y, modulus):
        if not outcome.feasible:
            return Infeasible()
        parts.append((q, outcome.x))
    x = VecModK(
        tuple(crt_reconstruct([(sol[i], q) for q, sol in parts], modulus) for i in range(n)),
        modulus.k,
    )
    A = as_matrix(A, modulus.k)
    if mat_vec_mul(A, x) != as_vector(y, modulus.k):
        raise AssertionError("reconstructed solution failed verification")
    return Solution(x)


def feasible(A, y, k) -> bool:
    """Whether ``A x = y (mod k)`` is solvable: the conjunction over prime powers."""
    return all(outcome.feasible for _, _, outcome in _per_factor(A, y, as_modulus(k)))


def embed_lower_modulus(A, y, k, p: int) -> tuple[MatModK, VecModK]:
    """Scale a system mod ``p`` by ``k/p`` to an equisolvable system mod ``k``."""
    k = int(k)
    if k % p:
        raise ValueError(f"{p} does not divide {k}")
    c = k // p
    A = as_matrix(A, p)
    y = as_vector(y, p)
    return (
        MatModK(tuple(tuple(c * x % k for x in row) for row in A.rows), k),
        VecModK(tuple(c * x % k for x in y), k),
    )
