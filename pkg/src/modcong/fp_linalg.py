"""Row reduction and nullspace bases over the prime field F_p."""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import GeneratingSet, MatModK
from .residue import factorize


@dataclass(frozen=True)
class RrefResult:
    matrix: MatModK
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _require_prime(p: int) -> None:
    if not factorize(p).is_prime:
        raise ValueError(f"modulus {p} is not prime")


def rref_mod_p(M: MatModK) -> RrefResult:
    """Reduced row echelon form of ``M`` over F_p.

    Pivoting is deterministic: columns are scanned left to right and the
    first nonzero entry at or below the current row is used.
    """
    p = M.modulus
    _require_prime(p)
    rows = [list(r) for r in M.rows]
    m, n = M.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return RrefResult(MatModK(tuple(map(tuple, rows)), p), tuple(pivots))


def nullspace_basis_mod_p(M: MatModK) -> GeneratingSet:
    """Basis of ``{v : M v = 0}`` over F_p, one vector per free column.

    Vectors are ordered by ascending free-column index; the free coordinate
    is 1 and the pivot coordinates are read off the RREF.
    """
    rref = rref_mod_p(M)
    p = M.modulus
    n = M.shape[1]
    pivot_set = set(rref.pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [0] * n
        v[f] = 1
        for i, c in enumerate(rref.pivots):
            v[c] = -rref.matrix.rows[i][f] % p
        basis.append(v)
    return GeneratingSet.build(basis, n, p)
