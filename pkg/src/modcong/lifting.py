"""Nullspace generators modulo a prime power, lifted one power of p at a time.

Level ``t`` holds generators ``V_1..V_N`` (stored mod ``p**e``) such that
``V_1..V_N`` together with ``p**t * I`` span ``{w : B w = 0 mod p**t}``.
A new level is obtained from the F_p nullspace of the constraint block

    [ b_1 ... b_N | B_t ],    b_j = (B_t V_j) / p**t + Bhat_t V_j,

where ``B = B_t + p**t * Bhat_t`` with ``B_t`` in ``[0, p**t)``. Each
nullspace vector ``z`` maps back through ``[V_1 ... V_N | p**t I]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fp_linalg import nullspace_basis_mod_p
from .matrix import GeneratingSet, MatModK
from .residue import factorize


class InexactDivision(ArithmeticError):
    """A generator failed ``B V = 0 (mod p**t)``, so ``B_t V / p**t`` is not integral."""


@dataclass(frozen=True)
class LiftDecomposition:
    low: tuple[tuple[int, ...], ...]
    high: tuple[tuple[int, ...], ...]
    p: int
    t: int


def _prime_power_exponent(B: MatModK, p: int) -> int:
    modulus = factorize(B.modulus)
    if modulus.factors[0][0] != p or not modulus.is_prime_power:
        raise ValueError(f"matrix modulus {B.modulus} is not a power of {p}")
    return modulus.factors[0][1]


def decompose(B: MatModK, p: int, t: int) -> LiftDecomposition:
    """Split ``B = low + p**t * high`` entry-wise over the integers."""
    e = _prime_power_exponent(B, p)
    if not 1 <= t < e:
        raise ValueError(f"lifting level t={t} outside [1, {e})")
    pt = p**t
    return LiftDecomposition(
        low=tuple(tuple(x % pt for x in row) for row in B.rows),
        high=tuple(tuple(x // pt for x in row) for row in B.rows),
        p=p,
        t=t,
    )


def build_lifted_constraint(B: MatModK, gens: GeneratingSet, p: int, t: int) -> MatModK:
    """The ``n x (N_t + n)`` constraint matrix over F_p for lifting level ``t``."""
    dec = decompose(B, p, t)
    pt = p**t
    n = B.shape[0]
    b_cols = []
    for idx, v in enumerate(gens):
        low_v = [sum(a * x for a, x in zip(row, v)) for row in dec.low]
        if any(x % pt for x in low_v):
            raise InexactDivision(
                f"generator {idx} = {v.tolist()} is not in the nullspace mod {pt}"
            )
        high_v = [sum(a * x for a, x in zip(row, v)) for row in dec.high]
        b_cols.append([(lo // pt + hi) % p for lo, hi in zip(low_v, high_v)])
    rows = tuple(
        tuple(col[i] for col in b_cols) + tuple(x % p for x in dec.low[i]) for i in range(n)
    )
    return MatModK(rows, p)


def lift_step(B: MatModK, gens: GeneratingSet, p: int, t: int) -> GeneratingSet:
    """Generators for ``Null(B) mod p**(t+1)`` from generators mod ``p**t``."""
    constraint = build_lifted_constraint(B, gens, p, t)
    n = B.shape[0]
    N = len(gens)
    pt = p**t
    cols = [v.entries for v in gens]

    def image(z):
        w = [pt * z[N + i] for i in range(n)]
        for c, col in zip(z, cols):
            if c:
                w = [a + c * x for a, x in zip(w, col)]
        return w

    z_list = [[p * int(h == j) for j in range(N + n)] for h in range(N)]
    z_list += [z.entries for z in nullspace_basis_mod_p(constraint)]
    return GeneratingSet.build((image(z) for z in z_list), n, B.modulus)


def lift_levels(B: MatModK, p: int, e: int | None = None) -> list[GeneratingSet]:
    """Generating sets for every level ``t = 1..e``, all stored mod ``p**e``."""
    if not B.is_square:
        raise ValueError(f"nullspace lifting needs a square matrix, got {B.shape}")
    if e is None:
        e = _prime_power_exponent(B, p)
    q = p**e
    if B.modulus != q:
        B = MatModK(tuple(tuple(x % q for x in row) for row in B.rows), q)
    n = B.shape[0]
    base = MatModK(tuple(tuple(x % p for x in row) for row in B.rows), p)
    gens = nullspace_basis_mod_p(base).with_modulus(q)
    levels = [gens]
    for t in range(1, e):
        gens = lift_step(B, gens, p, t)
        levels.append(gens)
    assert all(v.dim == n for v in gens)
    return levels


def nullspace_mod_prime_power(B: MatModK, p: int, e: int | None = None) -> GeneratingSet:
    """A generating set of ``{v : B v = 0 mod p**e}`` over Z/p^eZ."""
    return lift_levels(B, p, e)[-1]
