"""Deciding whether a product vector orthogonal to a whole set exists.

A set of product vectors ``φ_i ⊗ ψ_i`` in ``C^m ⊗ C^n`` admits an orthogonal
product vector iff its indices split into ``B1``, ``B2`` with the left
factors of ``B1`` not spanning ``C^m`` and the right factors of ``B2`` not
spanning ``C^n`` (Bennett et al. 1999). The multipartite version asks for an
ordered split into ``n`` groups, group ``j`` rank-deficient on site ``j``.

Both searches are exact (up to the rank tolerance) branch-and-bound over
assignments; a numerical seesaw oracle lives in :mod:`gupb.seesaw`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .linalg import IncrementalSpan, orthocomplement, rank, span_basis
from .product import (Bipartition, ProductVector, ProductVectorSet, all_bipartitions,
                      coarse_grain, overlap)

MAX_EXACT_K = 24


class SearchInfeasible(RuntimeError):
    """The set is larger than the exact-search cap."""


@dataclass(frozen=True)
class ExtendibilityCertificate:
    partition: tuple[tuple[int, ...], ...]
    witness: ProductVector
    ranks: tuple[int, ...]
    max_overlap: float

    # bipartite conveniences
    @property
    def left_rank(self) -> int:
        return self.ranks[0]

    @property
    def right_rank(self) -> int:
        return self.ranks[-1]

    def as_dict(self) -> dict:
        return {
            "partition": [list(g) for g in self.partition],
            "ranks": list(self.ranks),
            "max_overlap": self.max_overlap,
            "witness": [[[float(z.real), float(z.imag)] for z in f] for f in self.witness.factors],
        }


def _pressure_order(pset: ProductVectorSet) -> list[int]:
    # vectors whose factors point in many distinct directions fill spans fastest
    tol = pset.tol.ortho_tol
    score = []
    for i, v in enumerate(pset):
        s = 0
        for j, u in enumerate(pset):
            if i != j:
                for m in range(pset.n):
                    s += abs(abs(np.vdot(v[m], u[m])) - 1.0) > tol
        score.append(s)
    return sorted(range(pset.k), key=lambda i: (-score[i], i))


def _certificate(pset: ProductVectorSet, groups) -> Optional[ExtendibilityCertificate]:
    """Build and validate the witness for an assignment of indices to sites."""
    factors, ranks = [], []
    for m, group in enumerate(groups):
        span = span_basis(pset.site_factors(m, group), pset.tol, ambient_dim=pset.shape[m])
        if span.dim >= pset.shape[m]:
            return None
        factors.append(orthocomplement(span).basis[0])
        ranks.append(span.dim)
    witness = ProductVector(tuple(factors))
    worst = max((overlap(witness, v) for v in pset), default=0.0)
    if worst > pset.tol.ortho_tol:
        return None
    return ExtendibilityCertificate(tuple(tuple(sorted(g)) for g in groups), witness,
                                    tuple(ranks), worst)


def _full_span(pset: ProductVectorSet) -> bool:
    return pset.k >= pset.shape.total_dim and pset.shape.total_dim <= 4096 and \
        rank(pset.flat_matrix(), pset.tol) == pset.shape.total_dim


def _search(pset: ProductVectorSet, max_exact_k: int):
    """Depth-first search over assignments of vectors to sites."""
    if pset.k > max_exact_k:
        raise SearchInfeasible(f"exact search capped at k <= {max_exact_k}, set has k={pset.k}")
    n, tol = pset.n, pset.tol
    order = _pressure_order(pset)
    groups = [[] for _ in range(n)]

    def rec(depth, spans):
        if depth == len(order):
            return _certificate(pset, groups)
        i = order[depth]
        for m in range(n):
            grown = spans[m].with_vector(pset[i][m])
            if grown.rank >= pset.shape[m]:
                continue
            groups[m].append(i)
            cert = rec(depth + 1, spans[:m] + [grown] + spans[m + 1:])
            groups[m].pop()
            if cert is not None:
                return cert
        return None

    return rec(0, [IncrementalSpan(d, tol) for d in pset.shape])


def is_extendible_bipartite(pset: ProductVectorSet, max_exact_k: int = MAX_EXACT_K
                            ) -> tuple[bool, Optional[ExtendibilityCertificate]]:
    """Decide extendibility of a two-site set by partition search.

    Returns ``(True, certificate)`` with a validated product witness, or
    ``(False, None)``. Raises :class:`SearchInfeasible` above ``max_exact_k``.
    """
    if pset.n != 2:
        raise ValueError(f"expected a bipartite set, got {pset.n} sites")
    return is_extendible_multipartite(pset, max_exact_k)


def is_extendible_multipartite(pset: ProductVectorSet, max_exact_k: int = MAX_EXACT_K
                               ) -> tuple[bool, Optional[ExtendibilityCertificate]]:
    """Decide whether some fully product vector is orthogonal to every element."""
    if _full_span(pset):
        return False, None
    cert = _search(pset, max_exact_k)
    return cert is not None, cert


def is_extendible_bruteforce(pset: ProductVectorSet) -> bool:
    """Exhaustive ``n**k`` enumeration with SVD ranks; oracle for small sets."""
    n = pset.n
    for labels in itertools.product(range(n), repeat=pset.k):
        groups = [[i for i in range(pset.k) if labels[i] == m] for m in range(n)]
        if all(rank(pset.site_factors(m, g), pset.tol, ambient_dim=pset.shape[m]) < pset.shape[m]
               for m, g in enumerate(groups)):
            return True
    return False


@dataclass
class GupbVerdict:
    cuts: dict = field(default_factory=dict)  # Bipartition -> (bool, certificate | None)

    @property
    def is_gupb_candidate(self) -> bool:
        return not any(ext for ext, _ in self.cuts.values())

    @property
    def extendible_cuts(self) -> list[Bipartition]:
        return [c for c, (ext, _) in self.cuts.items() if ext]

    def as_dict(self) -> dict:
        return {
            "is_gupb_candidate": self.is_gupb_candidate,
            "cuts": [
                {"cut": str(c), "left": sorted(c.left), "right": sorted(c.right),
                 "extendible": ext, "certificate": cert.as_dict() if cert else None}
                for c, (ext, cert) in self.cuts.items()
            ],
        }


def check_gupb(pset: ProductVectorSet, max_exact_k: int = MAX_EXACT_K) -> GupbVerdict:
    """Run the bipartite decision on every cut of the set."""
    if pset.n < 2:
        raise ValueError("need at least two sites")
    verdict = GupbVerdict()
    for cut in all_bipartitions(pset.n):
        verdict.cuts[cut] = is_extendible_bipartite(coarse_grain(pset, cut), max_exact_k)
    return verdict
