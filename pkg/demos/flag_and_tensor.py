"""
Flags and tensor products
=========================

Flagging several sets with an extra orthogonal register always leaves a
biproduct vector: the flag |0> times anything orthogonal to the first set.
Tensoring two sets multiplies their sizes and concatenates the parties.
"""

from gupb import (check_gupb, flag_construction, flag_witness, generate_orthogonal_set, shifts,
                  tensor_construction)

a = shifts()
b = generate_orthogonal_set((2, 2, 2), 3, seed=1)
flagged = flag_construction([a, b])
print("flagged:", flagged)

w = flag_witness([a, b])
print("witness across", w.cut, "max overlap", w.max_overlap)
print("extendible cuts:", [str(c) for c in check_gupb(flagged).extendible_cuts])

t = tensor_construction(a, a)
print("Shifts x Shifts:", t)
