"""
Excluded GUPB cardinalities
===========================

For n parties of local dimension d, every orthogonal product set whose size
falls in an interval <lo, hi> has a biproduct vector orthogonal to it, so no
GUPB of that size exists. lo is the smallest size a GUPB could have at all.
"""

from gupb import bounds

# one shape in detail
print(bounds.report(3, 3).as_text())
print()

# the grid of intervals for n = 3..5, d = 3..6
grid = bounds.table1(range(3, 6), range(3, 7))
print("n\\d" + "".join(f"{d:>14}" for d in range(3, 7)))
for n in range(3, 6):
    print(f"{n:<3}" + "".join(f"{f'<{lo},{hi}>':>14}" for lo, hi in (grid[n, d] for d in range(3, 7))))
print()

# the closed form agrees with a direct scan over k
for n, d in [(3, 3), (4, 5), (6, 7)]:
    print(n, d, bounds.prop1_max_k(n, d), bounds.prop1_max_k_scan(n, d))

# grouping six qutrits into three 9-dimensional parties is much weaker than
# treating them as six parties
print("three C^9 parties, largest excluded size:", bounds.prop1_max_k(3, 9))
print("six qutrits, smallest possible GUPB:     ", bounds.min_gupb(6, 3))
