"""
Combining prime powers, and embedding a smaller modulus
=======================================================
"""

from modcong import combine_nullspaces, embed_lower_modulus, factorize, feasible, nullspace, nullspace_mod_prime_power, reduce_entries
from modcong.oracle import brute_force_nullspace, subgroup_closure

k = 12
print(factorize(k))

B = reduce_entries([[3, 6], [9, 0]], k)

# One generating set per prime-power factor...
parts = []
for p, e in factorize(k).factors:
    q = p**e
    gens = nullspace_mod_prime_power(reduce_entries(B.rows, q), p, e)
    print(f"mod {q}:", gens.tolist())
    parts.append((q, gens))

# ...scaled by k/q so each vanishes modulo the other factors.
combined = combine_nullspaces(B, parts)
print("mod 12:", combined.tolist())
print(nullspace(B, k) == combined)
print(subgroup_closure(combined, k, 2) == brute_force_nullspace(B, k))

# A system mod 3 becomes a system mod 12 after scaling by 12/3 = 4.
A, y = [[1, 2], [2, 1]], [1, 2]
A12, y12 = embed_lower_modulus(A, y, 12, 3)
print(A12.tolist(), y12.tolist(), feasible(A12, y12, 12), feasible(A, y, 3))
