"""
Solving linear congruences modulo a composite
=============================================

Deciding and solving ``A x = y (mod k)`` when ``k`` is not prime.
"""

from modcong import feasible, mat_vec_mul, reduce_entries, solve
from modcong.oracle import brute_force_solve

# Zero divisors make Z/12Z awkward: 4x = 2 has no solution mod 12 because
# 4x is always 0 mod 4, while 4x = 8 has several.
print(feasible([[4]], [2], 12))
print(feasible([[4]], [8], 12))

# A 3x3 system. solve() splits the modulus into 4 * 3, solves each part
# through a nullspace computation and recombines coordinate-wise.
A = [[2, 4, 6], [3, 9, 1], [0, 6, 6]]
y = [6, 3, 0]
outcome = solve(A, y, 12)
print(outcome)

# The answer always verifies by direct multiplication...
Ak = reduce_entries(A, 12)
print(mat_vec_mul(Ak, outcome.x).tolist(), "==", y)

# ...and at this size we can compare with exhaustive search.
solutions = brute_force_solve(A, y, 12)
print(len(solutions), "solutions in total; ours is among them:", tuple(outcome.x) in solutions)

# Infeasibility is an ordinary outcome, not an exception.
print(solve([[2, 4], [6, 8]], [1, 0], 12))
