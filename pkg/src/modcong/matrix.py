"""Dense matrices and vectors over Z/kZ.

Entries are plain Python ints kept in canonical form ``[0, k)``; values are
immutable (tuples) so they hash and compare bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .residue import as_modulus, crt_reconstruct, is_unit, mod_inverse


class NotInvertible(ArithmeticError):
    """Raised by :func:`inverse_mod_k` when the determinant is not a unit."""

    def __init__(self, det: int, modulus: int):
        self.det = det
        self.modulus = modulus
        super().__init__(f"matrix is not invertible mod {modulus} (det={det})")


@dataclass(frozen=True)
class VecModK:
    entries: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if any(not 0 <= x < self.modulus for x in self.entries):
            raise ValueError(f"vector entries must lie in [0, {self.modulus})")

    @classmethod
    def reduce(cls, values: Iterable[int], modulus: int) -> VecModK:
        modulus = int(modulus)
        return cls(tuple(int(x) % modulus for x in values), modulus)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def scale(self, c: int) -> VecModK:
        return VecModK.reduce((c * x for x in self.entries), self.modulus)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def tolist(self) -> list[int]:
        return list(self.entries)


@dataclass(frozen=True)
class MatModK:
    rows: tuple[tuple[int, ...], ...]
    modulus: int

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        n = len(self.rows[0])
        for row in self.rows:
            if len(row) != n:
                raise ValueError("ragged matrix rows")
            if any(not 0 <= x < self.modulus for x in row):
                raise ValueError(f"matrix entries must lie in [0, {self.modulus})")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_square(self) -> bool:
        m, n = self.shape
        return m == n

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> MatModK:
        return MatModK(tuple(zip(*self.rows)), self.modulus)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def reduce_entries(raw: Sequence[Sequence[int]], k) -> MatModK:
    """Reduce an arbitrary integer matrix entry-wise into ``[0, k)``."""
    k = int(k)
    return MatModK(tuple(tuple(int(x) % k for x in row) for row in raw), k)


def as_matrix(a, k=None) -> MatModK:
    """Coerce nested sequences (or an existing MatModK) to a MatModK."""
    if isinstance(a, MatModK):
        if k is None or int(k) == a.modulus:
            return a
        return reduce_entries(a.rows, k)
    if k is None:
        raise TypeError("a modulus is required to build a matrix from raw entries")
    return reduce_entries(a, k)


def as_vector(v, k=None) -> VecModK:
    if isinstance(v, VecModK):
        if k is None or int(k) == v.modulus:
            return v
        return VecModK.reduce(v.entries, k)
    if k is None:
        raise TypeError("a modulus is required to build a vector from raw entries")
    return VecModK.reduce(v, k)


def identity(n: int, k) -> MatModK:
    return MatModK(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), int(k))


def zeros(m: int, n: int, k) -> MatModK:
    return MatModK(((0,) * n,) * m, int(k))


def pad_square(A: MatModK, y: VecModK | None = None):
    """Zero-pad ``A`` (and ``y``) to a square system of size ``max(m, n)``.

    Returns ``(A_sq, y_sq)``. Solutions of the padded system, projected onto
    the first ``n`` coordinates, are exactly the solutions of the original.
    """
    m, n = A.shape
    if y is not None and y.dim != m:
        raise ValueError(f"right-hand side has length {y.dim}, expected {m}")
    size = max(m, n)
    rows = [row + (0,) * (size - n) for row in A.rows]
    rows += [(0,) * size] * (size - m)
    A_sq = MatModK(tuple(rows), A.modulus)
    if y is None:
        return A_sq, None
    return A_sq, VecModK(y.entries + (0,) * (size - m), y.modulus)


def mat_mul(A: MatModK, B: MatModK) -> MatModK:
    if A.modulus != B.modulus:
        raise ValueError(f"modulus mismatch: {A.modulus} vs {B.modulus}")
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    k = A.modulus
    cols = list(zip(*B.rows))
    return MatModK(
        tuple(tuple(sum(a * b for a, b in zip(row, col)) % k for col in cols) for row in A.rows),
        k,
    )


def mat_vec_mul(A: MatModK, v: VecModK) -> VecModK:
    if A.modulus != v.modulus:
        raise ValueError(f"modulus mismatch: {A.modulus} vs {v.modulus}")
    if A.shape[1] != v.dim:
        raise ValueError(f"cannot multiply {A.shape} by vector of length {v.dim}")
    k = A.modulus
    return VecModK(tuple(sum(a * x for a, x in zip(row, v.entries)) % k for row in A.rows), k)


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    M = [list(map(int, row)) for row in rows]
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant requires a square matrix")
    sign = 1
    prev = 1
    for i in range(n - 1):
        if M[i][i] == 0:
            for r in range(i + 1, n):
                if M[r][i] != 0:
                    M[i], M[r] = M[r], M[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                # exact by Sylvester's identity
                M[r][c] = (M[r][c] * M[i][i] - M[r][i] * M[i][c]) // prev
        prev = M[i][i]
    return sign * M[n - 1][n - 1]


def determinant_mod_k(A: MatModK) -> int:
    if not A.is_square:
        raise ValueError(f"determinant requires a square matrix, got {A.shape}")
    return integer_determinant(A.rows) % A.modulus


def _inverse_mod_prime_power(rows, p: int, q: int) -> list[list[int]]:
    # Gauss-Jordan on [A | I]; an entry is invertible mod p**e iff p does not divide it.
    n = len(rows)
    M = [[x % q for x in row] + [int(i == j) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] % p), None)
        if pivot is None:
            raise ArithmeticError("singular mod p")
        M[col], M[pivot] = M[pivot], M[col]
        inv = pow(M[col][col], -1, q)
        M[col] = [x * inv % q for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [(x - f * y) % q for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


def inverse_mod_k(A: MatModK) -> MatModK:
    """Inverse of ``A`` over Z/kZ, computed per prime power and CRT-combined."""
    det = determinant_mod_k(A)
    k = A.modulus
    if not is_unit(det, k):
        raise NotInvertible(det, k)
    modulus = as_modulus(k)
    n = A.shape[0]
    parts = [_inverse_mod_prime_power(A.rows, p, p**e) for p, e in modulus.factors]
    qs = modulus.prime_powers
    return MatModK(
        tuple(
            tuple(
                crt_reconstruct([(part[i][j], q) for part, q in zip(parts, qs)], modulus)
                for j in range(n)
            )
            for i in range(n)
        ),
        k,
    )


@dataclass(frozen=True)
class GeneratingSet:
    """An ordered list of vectors spanning a subgroup of ``(Z/kZ)^n``.

    Construction through :meth:`build` drops zero vectors and repeats while
    keeping first-occurrence order.
    """

    dim: int
    modulus: int
    vectors: tuple[VecModK, ...] = ()

    def __post_init__(self):
        seen = set()
        for v in self.vectors:
            if v.dim != self.dim or v.modulus != self.modulus:
                raise ValueError("generator has wrong dimension or modulus")
            if v.is_zero():
                raise ValueError("generating set may not contain the zero vector")
            if v in seen:
                raise ValueError("generating set may not contain duplicates")
            seen.add(v)

    @classmethod
    def build(cls, vectors: Iterable, dim: int, modulus: int) -> GeneratingSet:
        modulus = int(modulus)
        out: dict[VecModK, None] = {}
        for v in vectors:
            v = VecModK.reduce(v, modulus)
            if not v.is_zero():
                out.setdefault(v, None)
        return cls(dim, modulus, tuple(out))

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def tolist(self) -> list[list[int]]:
        return [v.tolist() for v in self.vectors]

    def with_modulus(self, modulus: int) -> GeneratingSet:
        """Reinterpret the same integer representatives modulo ``modulus``."""
        return GeneratingSet.build((v.entries for v in self.vectors), self.dim, modulus)
