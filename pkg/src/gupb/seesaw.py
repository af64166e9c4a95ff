"""Alternating-minimization search for a product vector orthogonal to a set.

With every factor but one fixed, ``sum_i |<w|v_i>|^2`` is a quadratic form in
the free factor whose minimizer is the bottom eigenvector of a positive
semidefinite site-local operator. Restarts run as one batched computation.
The search is one-sided: failing to find a witness proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .product import Bipartition, ProductVector, ProductVectorSet, coarse_grain

FOUND_RESIDUAL = 1e-14
CONVERGED_CHANGE = 1e-12


@dataclass(frozen=True)
class SeesawResult:
    found: bool
    residual: float
    witness: Optional[ProductVector]
    iterations: int
    cut: Optional[Bipartition] = None


def seesaw_search(pset: ProductVectorSet, cut: Optional[Bipartition] = None, restarts: int = 100,
                  iters: int = 500, seed: int = 0) -> SeesawResult:
    """Minimize the summed squared overlap of a product (or cut-product) vector.

    ``found`` iff the best residual is at most ``1e-14``; the best witness is
    returned either way.
    """
    target = coarse_grain(pset, cut) if cut is not None else pset
    rng = np.random.default_rng(seed)
    n, k = target.n, target.k
    if k == 0:
        w = ProductVector(tuple(np.eye(d, dtype=complex)[0] for d in target.shape))
        return SeesawResult(True, 0.0, w, 0, cut)
    V = [target.site_factors(m) for m in range(n)]  # (k, d_m)
    W = []
    for d in target.shape:
        x = rng.standard_normal((restarts, d)) + 1j * rng.standard_normal((restarts, d))
        W.append(x / np.linalg.norm(x, axis=1, keepdims=True))
    A = [np.abs(W[m].conj() @ V[m].T) ** 2 for m in range(n)]  # (R, k)
    residual = np.prod(A, axis=0).sum(axis=1)
    it = 0
    for it in range(1, iters + 1):
        previous = residual
        for m in range(n):
            weights = np.ones((restarts, k))
            for j in range(n):
                if j != m:
                    weights = weights * A[j]
            # sum_i c_i |v_i><v_i| per restart
            M = np.einsum("ri,ia,ib->rab", weights, V[m], V[m].conj())
            _, vecs = np.linalg.eigh(M)
            W[m] = vecs[:, :, 0]
            A[m] = np.abs(W[m].conj() @ V[m].T) ** 2
        residual = np.prod(A, axis=0).sum(axis=1)
        if residual.min() <= FOUND_RESIDUAL or np.max(np.abs(previous - residual)) < CONVERGED_CHANGE:
            break
    best = int(np.argmin(residual))
    witness = ProductVector(tuple(W[m][best] for m in range(n)))
    res = float(residual[best])
    return SeesawResult(res <= FOUND_RESIDUAL, res, witness, it, cut)
