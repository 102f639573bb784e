"""Gluing per-prime-power nullspace generators into generators mod k."""

from __future__ import annotations

from typing import Sequence

from .matrix import GeneratingSet, MatModK
from .residue import factorize


def combine_nullspaces(B: MatModK, per_factor: Sequence[tuple[int, GeneratingSet]]) -> GeneratingSet:
    """Scale each mod-``q_j`` generator by ``k / q_j`` and concatenate.

    A vector ``(k/q_j) X`` is zero mod every other ``q_h``, and ranges over
    the ``q_j``-component of ``Null(B)`` as ``X`` ranges over
    ``Null(B mod q_j)``, so the concatenation spans ``Null(B) mod k``.
    """
    k = B.modulus
    qs = tuple(q for q, _ in per_factor)
    if qs != factorize(k).prime_powers:
        raise ValueError(f"factor list {list(qs)} does not match factorization of {k}")
    n = B.shape[1]
    scaled = []
    for q, gens in per_factor:
        if gens.modulus != q or gens.dim != n:
            raise ValueError(f"generating set for factor {q} has wrong modulus or dimension")
        c = k // q
        scaled.extend([c * x for x in v] for v in gens)
    return GeneratingSet.build(scaled, n, k)
