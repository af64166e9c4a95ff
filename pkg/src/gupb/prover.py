"""Constructive biproduct extension of orthogonal product sets.

For a mutually orthogonal set of ``k`` product vectors, some vector ``v`` is
orthogonal to ``t >= ceil((k-1)/n)`` others on a single site ``m``. Those
``t`` local factors miss ``u_m^(v)``'s direction, so they cannot span site
``m``. If the remaining ``k - t`` vectors (``v`` included) are fewer than the
dimension of the other sites taken together, their joint factors there leave
room for a vector ``ξ``, and ``u_m^(v) ⊗ ξ`` is orthogonal to the whole set.
The count condition holds for every set with ``k <= prop1_max_k(n, d)``; a
vertex with a larger same-site degree pushes the guarantee further.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .bounds import s_required
from .graph import build_graph
from .linalg import kron, orthocomplement, span_basis
from .product import Bipartition, ProductVectorSet


class WitnessValidationError(RuntimeError):
    """A constructed witness failed validation; indicates a bug, not an outcome."""


@dataclass(frozen=True)
class Provenance:
    vertex: int
    site: int
    b1: tuple[int, ...]
    b2: tuple[int, ...]
    bulk_rank: int


@dataclass(frozen=True, eq=False)
class BiproductWitness:
    """Vector ``local_part ⊗ bulk_part`` across the cut ``{site} | rest``.

    ``bulk_part`` lives on the remaining sites in ascending order.
    """

    site: int
    dims: tuple[int, ...]
    local_part: np.ndarray
    bulk_part: np.ndarray
    provenance: Optional[Provenance] = None
    max_overlap: float = float("nan")
    extrapolated: bool = False
    trace: tuple[str, ...] = field(default=(), compare=False)

    @property
    def cut(self) -> Bipartition:
        return Bipartition.from_left({self.site}, len(self.dims))

    def overlaps(self, pset: ProductVectorSet) -> np.ndarray:
        """``|<witness|v_i>|`` for every set element."""
        rest = [j for j in range(pset.n) if j != self.site]
        out = np.empty(pset.k)
        for i, v in enumerate(pset):
            bulk = kron(*(v[j] for j in rest))
            out[i] = abs(np.vdot(self.local_part, v[self.site])) * abs(np.vdot(self.bulk_part, bulk))
        return out

    def full_vector(self) -> np.ndarray:
        """The witness in the full space, lexicographic site order."""
        rest = [d for j, d in enumerate(self.dims) if j != self.site]
        t = np.multiply.outer(self.local_part, self.bulk_part.reshape(rest))
        return np.moveaxis(t, 0, self.site).reshape(-1)

    def as_dict(self) -> dict:
        out = {
            "cut": {"left": [self.site], "right": [j for j in range(len(self.dims)) if j != self.site]},
            "dims": list(self.dims),
            "local_part": [[float(z.real), float(z.imag)] for z in self.local_part],
            "bulk_part": [[float(z.real), float(z.imag)] for z in self.bulk_part],
            "max_overlap": self.max_overlap,
            "extrapolated": self.extrapolated,
        }
        if self.provenance is not None:
            p = self.provenance
            out["provenance"] = {"vertex": p.vertex, "site": p.site, "b1": list(p.b1),
                                 "b2": list(p.b2), "bulk_rank": p.bulk_rank}
        return out


@dataclass(frozen=True)
class NoGuarantee:
    """The count condition failed for every (vertex, site)."""

    k: int
    best_vertex: int
    best_site: int
    best_t: int
    needed_t: int
    trace: tuple[str, ...] = ()

    @property
    def margin(self) -> int:
        return self.best_t - self.needed_t

    def as_dict(self) -> dict:
        return {"k": self.k, "best_vertex": self.best_vertex, "best_site": self.best_site,
                "best_t": self.best_t, "needed_t": self.needed_t, "margin": self.margin}


def validate_witness(w: BiproductWitness, pset: ProductVectorSet) -> float:
    worst = float(w.overlaps(pset).max(initial=0.0))
    if worst > pset.tol.ortho_tol:
        raise WitnessValidationError(f"witness overlap {worst:.3e} exceeds {pset.tol.ortho_tol:.1e}")
    return worst


def best_split(degrees: np.ndarray, dims) -> tuple[int, int, int]:
    """Choose ``(vertex, site, margin)`` from a ``(k, n)`` same-site degree matrix.

    The margin is ``t - (k - (D_m - 1))`` where ``D_m`` is the product of all
    local dimensions except site ``m``; the construction succeeds iff it is
    non-negative. Ties go to the lowest ``(vertex, site)``.
    """
    degrees = np.asarray(degrees)
    k, n = degrees.shape
    total = math.prod(dims)
    bulk_dims = np.array([total // d for d in dims])
    margin = degrees - (k - (bulk_dims - 1))[None, :]
    v, m = divmod(int(np.argmax(margin)), n)
    return v, m, int(margin[v, m])


def prove_biproduct(pset: ProductVectorSet) -> Union[BiproductWitness, NoGuarantee]:
    """Run the pigeonhole construction and return a validated witness.

    Picks the (vertex, site) with the largest margin between its same-site
    orthogonal degree ``t`` and the ``k - (D_m - 1)`` it needs, where ``D_m``
    is the dimension of all sites but ``m``. Ties go to the lowest
    ``(vertex, site)``. Returns :class:`NoGuarantee` when no margin is
    non-negative.
    """
    k, n, shape = pset.k, pset.n, pset.shape
    if n < 3:
        raise ValueError(f"need at least three sites, got {n}")
    if k < 1:
        raise ValueError("need a nonempty set")
    g = build_graph(pset)
    deg = g.degree_matrix()
    v, m, margin = best_split(deg, shape.local_dims)
    bulk_dims = np.array([shape.total_dim // d for d in shape])
    needed = k - (bulk_dims - 1)
    t = int(deg[v, m])
    s = s_required(k, n)
    trace = [
        f"k = {k} orthogonal product vectors on {n} sites with dims {list(shape)}",
        f"pigeonhole: every vector has >= ceil(({k}-1)/{n}) = {s} orthogonal partners on one site",
        f"best choice: vector {v} is orthogonal to t = {t} vectors on site {m}",
        f"bulk dimension on the other sites: {bulk_dims[m]}; "
        f"the remaining {k - t} vectors must number <= {bulk_dims[m] - 1}",
    ]
    if margin < 0:
        trace.append(f"fails: {k - t} > {bulk_dims[m] - 1}; no guarantee (short by {-margin})")
        return NoGuarantee(k, v, m, t, int(needed[m]), tuple(trace))

    b1 = tuple(g.neighbours_on(v, m))
    b2 = tuple(i for i in range(k) if i not in b1)
    rest = [j for j in range(n) if j != m]
    bulk_vectors = [kron(*(pset[i][j] for j in rest)) for i in b2]
    span = span_basis(bulk_vectors, pset.tol, ambient_dim=int(bulk_dims[m]))
    if span.dim >= bulk_dims[m]:
        raise WitnessValidationError(f"{len(b2)} bulk vectors span all of C^{bulk_dims[m]}")
    xi = orthocomplement(span).basis[0]
    trace += [
        f"B1 = {list(b1)}: their site-{m} factors are orthogonal to u_{m}^({v}) so they do not span site {m}",
        f"B2 = {list(b2)}: bulk span has rank {span.dim} < {bulk_dims[m]}; pick xi in its orthocomplement",
    ]
    w = BiproductWitness(m, shape.local_dims, pset[v][m].copy(), xi,
                         Provenance(v, m, b1, b2, span.dim),
                         extrapolated=not shape.is_homogeneous)
    worst = validate_witness(w, pset)
    trace.append(f"witness u_{m}^({v}) (x) xi validated: max overlap {worst:.2e}")
    return BiproductWitness(w.site, w.dims, w.local_part, w.bulk_part, w.provenance,
                            worst, w.extrapolated, tuple(trace))
