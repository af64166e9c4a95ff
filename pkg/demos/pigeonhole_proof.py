"""
Building a biproduct vector for eleven vectors in three qutrits
===============================================================

Some vector v is orthogonal to at least ceil(10/3) = 4 others on one site m.
Those factors all avoid v's own site-m factor, and the remaining at most 7
vectors cannot fill the 9-dimensional rest. Tensoring the two gives a
vector orthogonal to everything.
"""

import sys

from gupb import build_graph, generate_orthogonal_set, pigeonhole_witness, prove_biproduct, to_dot

pset = generate_orthogonal_set((3, 3, 3), 11, seed=2)
g = build_graph(pset)
v, m, nb = pigeonhole_witness(g)
print(f"vector {v} is orthogonal on site {m} to {nb}")

w = prove_biproduct(pset)
print("\n".join(w.trace))
print("overlaps with the set:", w.overlaps(pset).max())

# the graph with the star around (v, m) highlighted; pipe into `dot -Tsvg`
out = sys.argv[1] if len(sys.argv) > 1 else None
dot = to_dot(g, highlight=(v, m))
if out:
    with open(out, "w") as fh:
        fh.write(dot)
else:
    print(dot)
