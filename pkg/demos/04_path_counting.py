"""
Matrix product entries as path counts
=====================================

Nonnegative matrices act on row positions; an entry M[u][v] is a number of
parallel edges from v to u. Counting branches reproduces the product.
"""

from functools import reduce

from modcong import LayeredProgram, count_paths_entry, count_paths_explicit, mat_mul, reduce_entries

mats = [
    [[1, 2, 0], [0, 1, 1], [3, 0, 1]],
    [[0, 1, 1], [1, 0, 2], [1, 1, 0]],
    [[2, 0, 1], [1, 1, 0], [0, 3, 1]],
]
k = 5
program = LayeredProgram.from_lists(mats)
product = reduce(mat_mul, [reduce_entries(M, k) for M in mats])

print("product mod 5:", product.tolist())
for h in range(3):
    row = [count_paths_entry(program, j, h, k) for j in range(3)]
    print("dynamic programming row", h, row)

# Enumerating every branch explicitly gives the same counts.
print(all(
    count_paths_explicit(program, j, h, k) == product[h, j]
    for j in range(3)
    for h in range(3)
))
