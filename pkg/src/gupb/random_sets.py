"""Random mutually orthogonal product sets.

Vectors are realized one at a time. For each earlier vector the new one picks
a site to be orthogonal on (its edge color); the constraints collected per
site must leave room in that site's space, after which the local factor is
drawn from the orthocomplement of the constraint span. Reusing factors that
already appear on a site keeps spans small and lets sets grow large.
"""

from __future__ import annotations

from typing import Mapping, Optional, Sequence

import numpy as np

from .linalg import DEFAULT_TOL, IncrementalSpan, Tolerance, orthocomplement, span_basis
from .product import ProductVector, ProductVectorSet, SystemShape, validate_set


class InfeasiblePattern(RuntimeError):
    pass


def _draw_factor(constraints: list[np.ndarray], pool: list[np.ndarray], dim: int,
                 rng: np.random.Generator, reuse: float, tol: Tolerance) -> Optional[np.ndarray]:
    span = span_basis(constraints, tol, ambient_dim=dim)
    if span.dim >= dim:
        return None
    comp = orthocomplement(span).basis
    if pool and rng.random() < reuse:
        fits = [u for u in pool
                if all(abs(np.vdot(c, u)) <= tol.ortho_tol * 1e-3 for c in constraints)]
        if fits:
            return fits[rng.integers(len(fits))]
    coeffs = rng.standard_normal(comp.shape[0]) + 1j * rng.standard_normal(comp.shape[0])
    v = coeffs @ comp
    return v / np.linalg.norm(v)


def _realize_vertex(i, colors_for, factors, shape, rng, reuse, tol):
    new = []
    for m, d in enumerate(shape):
        cons = [factors[j][m] for j in colors_for if m in colors_for[j]]
        pool = _unique(f[m] for f in factors)
        u = _draw_factor(cons, pool, d, rng, reuse, tol)
        if u is None:
            return None
        new.append(u)
    return new


def _unique(vectors):
    out = []
    for v in vectors:
        if not any(abs(abs(np.vdot(u, v)) - 1) < 1e-12 for u in out):
            out.append(v)
    return out


def generate_orthogonal_set(shape, k: int, seed: int = 0, pattern: Optional[Mapping] = None,
                            reuse: float = 0.7, max_restarts: int = 200,
                            tol: Tolerance = DEFAULT_TOL) -> ProductVectorSet:
    """Sample a mutually orthogonal product set of ``k`` vectors.

    ``pattern`` optionally fixes the orthogonality pattern as a mapping
    ``(i, j) -> site or iterable of sites`` for every pair ``i < j``; otherwise
    sites are chosen greedily at random. Each pair is orthogonal at least on
    its requested sites and may pick up more, notably when reused factors
    are orthogonal by accident. Deterministic given the arguments.
    Raises :class:`InfeasiblePattern` when no realization is found within
    ``max_restarts`` attempts.
    """
    if not isinstance(shape, SystemShape):
        shape = SystemShape(tuple(shape))
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > shape.total_dim:
        raise InfeasiblePattern(f"at most {shape.total_dim} mutually orthogonal vectors fit in "
                                f"dims {shape.local_dims}, asked for {k}")
    fixed = None
    if pattern is not None:
        fixed = {}
        for (i, j), sites in pattern.items():
            sites = {sites} if isinstance(sites, (int, np.integer)) else set(sites)
            fixed[(min(i, j), max(i, j))] = frozenset(int(s) for s in sites)
        missing = [(i, j) for i in range(k) for j in range(i + 1, k) if (i, j) not in fixed]
        if missing:
            raise ValueError(f"pattern lacks pairs {missing[:5]}")
    rng = np.random.default_rng(seed)
    for _ in range(max_restarts):
        factors = _attempt(shape, k, rng, fixed, reuse, tol)
        if factors is not None:
            return validate_set(shape, [ProductVector(tuple(f)) for f in factors], tol)
    raise InfeasiblePattern(f"no realization of k={k} in dims {shape.local_dims} "
                            f"after {max_restarts} restarts")


def _attempt(shape, k, rng, fixed, reuse, tol, vertex_tries=20):
    factors: list[list[np.ndarray]] = []
    for i in range(k):
        for _ in range(vertex_tries):
            if fixed is not None:
                colors_for = {j: fixed[(j, i)] for j in range(i)}
            else:
                colors_for = _choose_colors(i, factors, shape, rng, tol)
                if colors_for is None:
                    continue
            new = _realize_vertex(i, colors_for, factors, shape, rng, reuse, tol)
            if new is not None:
                factors.append(new)
                break
        else:
            return None
    return factors


def _choose_colors(i, factors, shape, rng, tol):
    spans = [IncrementalSpan(d, tol) for d in shape]
    colors_for = {}
    for j in rng.permutation(i):
        feasible, free = [], []
        for m, d in enumerate(shape):
            grown = spans[m].with_vector(factors[j][m])
            if grown.rank < d:
                feasible.append(m)
                if grown.rank == spans[m].rank:
                    free.append(m)
        if not feasible:
            return None
        options = free if free and rng.random() < 0.8 else feasible
        m = int(options[rng.integers(len(options))])
        spans[m] = spans[m].with_vector(factors[j][m])
        colors_for[int(j)] = frozenset({m})
    return colors_for


def pattern_of(pset: ProductVectorSet) -> dict:
    """Orthogonality pattern ``(i, j) -> sites`` of an existing set."""
    from .product import ortho_sites

    return {(i, j): ortho_sites(pset[i], pset[j], pset.tol)
            for i in range(pset.k) for j in range(i + 1, pset.k)}


def random_product_vector(dims: Sequence[int], rng: np.random.Generator) -> ProductVector:
    fs = []
    for d in dims:
        x = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        fs.append(x)
    return ProductVector(tuple(fs))
