"""Entries of iterated matrix products as path counts in a layered graph.

An entry ``M[u][v]`` is read as ``M[u][v]`` parallel edges from row-position
``v`` to row-position ``u``. Starting from position ``j`` and applying
``M_T``, then ``M_{T-1}``, ... , ``M_1``, the number of branches ending at
position ``h`` is ``(M_1 M_2 ... M_T)[h][j]``. Indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

PATH_LIMIT = 10**7


class PathExplosion(ValueError):
    pass


@dataclass(frozen=True)
class LayeredProgram:
    matrices: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if not self.matrices:
            raise ValueError("a layered program needs at least one layer")
        n = len(self.matrices[0])
        for M in self.matrices:
            if len(M) != n or any(len(row) != n for row in M):
                raise ValueError(f"every layer must be {n}x{n}")
            if any(x < 0 for row in M for x in row):
                raise ValueError("layer entries must be nonnegative (reduce first)")

    @classmethod
    def from_lists(cls, matrices) -> LayeredProgram:
        return cls(tuple(tuple(tuple(int(x) for x in row) for row in M) for M in matrices))

    @property
    def dim(self) -> int:
        return len(self.matrices[0])

    @property
    def layers(self) -> int:
        return len(self.matrices)


def _check_indices(program: LayeredProgram, j: int, h: int) -> None:
    n = program.dim
    if not (0 <= j < n and 0 <= h < n):
        raise IndexError(f"positions ({h}, {j}) out of range for dimension {n}")


def count_paths_entry(program: LayeredProgram, j: int, h: int, k: int) -> int:
    """Branches from ``j`` to ``h`` mod ``k``, by layer-wise dynamic programming."""
    _check_indices(program, j, h)
    v = [0] * program.dim
    v[j] = 1
    for M in reversed(program.matrices):
        v = [sum(a * x for a, x in zip(row, v)) % k for row in M]
    return v[h]


def count_paths_explicit(
    program: LayeredProgram, j: int, h: int, k: int, limit: int = PATH_LIMIT
) -> int:
    """Same count, by walking every branch (each parallel edge separately)."""
    _check_indices(program, j, h)
    layers = program.matrices[::-1]
    n = program.dim
    accepted = 0
    visited = 0
    # explicit stack of (layer index, position)
    stack = [(0, j)]
    while stack:
        depth, pos = stack.pop()
        visited += 1
        if visited > limit:
            raise PathExplosion(f"more than {limit} branch steps")
        if depth == len(layers):
            accepted += pos == h
            continue
        M = layers[depth]
        for u in range(n):
            for _ in range(M[u][pos]):
                stack.append((depth + 1, u))
    return accepted % k
