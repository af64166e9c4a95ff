"""
The seesaw oracle against the exact search
==========================================

The seesaw only ever finds witnesses, so each find must agree with an
affirmative exact verdict. When it fails the exact answer decides.
"""

import collections

from gupb import generate_orthogonal_set, is_extendible_bipartite, seesaw_search

tally = collections.Counter()
for seed in range(200):
    pset = generate_orthogonal_set((3, 3), 1 + seed % 8, seed=seed, reuse=0.5)
    exact, _ = is_extendible_bipartite(pset)
    found = seesaw_search(pset, restarts=50, seed=seed).found
    tally[exact, found] += 1

for (exact, found), count in sorted(tally.items()):
    print(f"exact={exact!s:5} seesaw found={found!s:5}: {count}")
assert tally[False, True] == 0
