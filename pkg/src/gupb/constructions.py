"""Standard product-set constructions: Shifts, flags, tensoring and grouping."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .linalg import basis_vector, cvec, orthocomplement, span_basis
from .product import ProductVector, ProductVectorSet, SystemShape, group_sites, validate_set
from .prover import BiproductWitness, validate_witness

KET0 = cvec([1, 0])
KET1 = cvec([0, 1])
PLUS = cvec([1, 1])
MINUS = cvec([1, -1])


def shifts() -> ProductVectorSet:
    """The four-element three-qubit UPB |000>, |1+->, |-1+>, |+-1>."""
    return validate_set((2, 2, 2), [
        (KET0, KET0, KET0),
        (KET1, PLUS, MINUS),
        (MINUS, KET1, PLUS),
        (PLUS, MINUS, KET1),
    ])


def flag_construction(bases: Sequence[ProductVectorSet]) -> ProductVectorSet:
    """Prepend the flag ``|i>`` (dimension ``len(bases)``) to every vector of set ``i``."""
    if len(bases) < 2:
        raise ValueError("need at least two sets to flag")
    shape = bases[0].shape
    for i, b in enumerate(bases):
        if b.shape != shape:
            raise ValueError(f"set {i} has dims {b.shape.local_dims}, expected {shape.local_dims}")
    m = len(bases)
    vecs = [ProductVector((basis_vector(m, i),) + v.factors) for i, b in enumerate(bases) for v in b]
    return validate_set(SystemShape((m,) + shape.local_dims), vecs, bases[0].tol)


def flag_witness(bases: Sequence[ProductVectorSet]) -> BiproductWitness:
    """``|0> ⊗ ξ`` with ``ξ`` orthogonal to the span of the first set.

    It is orthogonal to every flagged vector, so a flagged set always has a
    biproduct extension across the flag cut.
    """
    first = bases[0]
    span = span_basis(first.flat_matrix(), first.tol, ambient_dim=first.shape.total_dim)
    if span.dim >= first.shape.total_dim:
        raise ValueError("the first set spans its whole space; no vector is orthogonal to it")
    xi = orthocomplement(span).basis[0]
    m = len(bases)
    w = BiproductWitness(0, (m,) + first.shape.local_dims, basis_vector(m, 0), xi)
    flagged = flag_construction(bases)
    worst = validate_witness(w, flagged)
    return BiproductWitness(w.site, w.dims, w.local_part, w.bulk_part, max_overlap=worst)


def tensor_construction(a: ProductVectorSet, b: ProductVectorSet) -> ProductVectorSet:
    """All products ``v ⊗ w`` over the concatenated shape."""
    vecs = [ProductVector(v.factors + w.factors) for v in a for w in b]
    return validate_set(SystemShape(a.shape.local_dims + b.shape.local_dims), vecs, a.tol)


def grouping_reduction(pset: ProductVectorSet, groups: Sequence[Sequence[int]]) -> ProductVectorSet:
    """Merge site groups into single sites, e.g. six qutrits in pairs -> three C^9 sites."""
    return group_sites(pset, groups)


def computational_basis_set(dims: Sequence[int]) -> ProductVectorSet:
    """The complete orthonormal product basis ``|i_1 ... i_n>``."""
    idx = np.indices(dims).reshape(len(dims), -1).T
    vecs = [tuple(basis_vector(d, int(i)) for d, i in zip(dims, row)) for row in idx]
    return validate_set(dims, vecs)
