"""
Determinants and inverses modulo k
==================================
"""

from modcong import NotInvertible, determinant_mod_k, identity, inverse_mod_k, mat_mul, reduce_entries

# No entry in the first column is a unit mod 6, but the determinant -1 is.
A = reduce_entries([[2, 3], [3, 1]], 6)
print("det", determinant_mod_k(A))
Ainv = inverse_mod_k(A)
print(Ainv.tolist(), mat_mul(A, Ainv) == identity(2, 6))

try:
    inverse_mod_k(reduce_entries([[2, 0], [0, 1]], 4))
except NotInvertible as exc:
    print("not invertible, det =", exc.det)
