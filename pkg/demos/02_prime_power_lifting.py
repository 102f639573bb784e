"""
Nullspaces modulo a prime power, one level at a time
====================================================

Over Z/8Z the nullspace of a matrix is a subgroup, not a vector space.
lift_levels() exposes the generating sets for ``Null(B) mod 2, 4, 8``.
"""

from modcong import lift_levels, reduce_entries
from modcong.oracle import brute_force_nullspace, subgroup_closure

B = reduce_entries([[2, 1, 0], [4, 0, 6], [6, 6, 3]], 8)

levels = lift_levels(B, p=2, e=3)
for t, gens in enumerate(levels, start=1):
    print(f"mod 2^{t}: {len(gens)} generators {gens.tolist()}")

# Every level-t generator really is null modulo 2^t.
for t, gens in enumerate(levels, start=1):
    for v in gens:
        assert all(sum(a * x for a, x in zip(row, v)) % 2**t == 0 for row in B.rows)

# The last level spans exactly the brute-force nullspace mod 8.
span = subgroup_closure(levels[-1], 8, 3)
print(len(span), "null vectors mod 8; brute force agrees:", span == brute_force_nullspace(B, 8))

# Growth per level is at most doubling plus n.
sizes = [len(g) for g in levels]
print("level sizes", sizes, "bound", [(2**t - 1) * 3 for t in range(1, 4)])
