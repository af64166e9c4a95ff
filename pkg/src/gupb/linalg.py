"""Tolerance-aware dense complex linear algebra.

Vectors are plain 1-D ``complex128`` numpy arrays. Ranks come from singular
values with a cutoff relative to the largest one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds used throughout the package.

    ``ortho_tol`` bounds ``|<u|v>|`` for normalized vectors considered
    orthogonal; ``rank_tol`` is the singular-value cutoff relative to the
    largest singular value.
    """

    ortho_tol: float = 1e-9
    rank_tol: float = 1e-9

    def __post_init__(self):
        for name in ("ortho_tol", "rank_tol"):
            value = getattr(self, name)
            if not 0 < value < 1e-3:
                raise ValueError(f"{name} must lie in (0, 1e-3), got {value!r}")


DEFAULT_TOL = Tolerance()


def cvec(entries: Iterable[complex], normalize: bool = True) -> np.ndarray:
    """Build a complex vector, normalized by default."""
    v = np.asarray(list(entries) if not isinstance(entries, np.ndarray) else entries,
                   dtype=np.complex128).reshape(-1)
    if v.size == 0:
        raise ValueError("vector must have at least one entry")
    if not normalize:
        return v
    norm = np.linalg.norm(v)
    if not np.isfinite(norm) or norm == 0:
        raise ValueError("cannot normalize a zero or non-finite vector")
    return v / norm


def basis_vector(dim: int, index: int) -> np.ndarray:
    """Computational basis ket ``|index>`` in ``C^dim``."""
    v = np.zeros(dim, dtype=np.complex128)
    v[index] = 1.0
    return v


def inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Return ``<a|b>``, conjugating the first argument."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def kron(*vectors: np.ndarray) -> np.ndarray:
    """Kronecker product of vectors in the given (lexicographic) order."""
    if not vectors:
        return np.ones(1, dtype=np.complex128)
    return reduce(np.kron, (np.asarray(v, dtype=np.complex128) for v in vectors))


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Orthonormal basis of a subspace of ``C^ambient_dim``.

    ``basis`` has shape ``(dim, ambient_dim)``; each row is one basis vector.
    """

    ambient_dim: int
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.basis)


def _as_matrix(vectors: Sequence[np.ndarray] | np.ndarray, ambient_dim: int | None) -> np.ndarray:
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        return vectors.astype(np.complex128, copy=False)
    vectors = [np.asarray(v, dtype=np.complex128) for v in vectors]
    if not vectors:
        if ambient_dim is None:
            raise ValueError("ambient_dim is required for an empty vector list")
        return np.zeros((0, ambient_dim), dtype=np.complex128)
    dims = {v.shape for v in vectors}
    if len(dims) != 1:
        raise ValueError(f"vectors have mixed dimensions: {sorted(dims)}")
    return np.stack(vectors)


def numerical_rank(singular_values: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> int:
    if singular_values.size == 0 or singular_values[0] <= 0:
        return 0
    return int(np.count_nonzero(singular_values > tol.rank_tol * singular_values[0]))


def span_basis(vectors, tol: Tolerance = DEFAULT_TOL, ambient_dim: int | None = None) -> SubspaceBasis:
    """Orthonormal basis of the span of ``vectors``.

    An empty input gives the zero-dimensional subspace, for which
    ``ambient_dim`` must be supplied.
    """
    mat = _as_matrix(vectors, ambient_dim)
    n = mat.shape[1]
    if ambient_dim is not None and n != ambient_dim:
        raise ValueError(f"vectors live in C^{n}, expected C^{ambient_dim}")
    if mat.shape[0] == 0:
        return SubspaceBasis(n, np.zeros((0, n), dtype=np.complex128))
    # columns of u span the column space of mat.T
    u, s, _ = np.linalg.svd(mat.T, full_matrices=False)
    r = numerical_rank(s, tol)
    return SubspaceBasis(n, u[:, :r].T.copy())


def rank(vectors, tol: Tolerance = DEFAULT_TOL, ambient_dim: int | None = None) -> int:
    return span_basis(vectors, tol, ambient_dim).dim


def orthocomplement(s: SubspaceBasis) -> SubspaceBasis:
    """Orthonormal basis of the orthogonal complement of ``s``."""
    n = s.ambient_dim
    if s.dim == 0:
        return SubspaceBasis(n, np.eye(n, dtype=np.complex128))
    # rows of vh past the rank satisfy conj(B) @ x = 0, i.e. <b|x> = 0 for every b
    _, _, vh = np.linalg.svd(s.basis, full_matrices=True)
    return SubspaceBasis(n, vh[s.dim:].copy())


def random_unit_vector(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


class IncrementalSpan:
    """Gram-Schmidt span tracker used inside exhaustive searches.

    Cheaper than recomputing an SVD at every search node; callers that need
    an authoritative rank re-check with :func:`span_basis`.
    """

    __slots__ = ("dim", "rows", "tol")

    def __init__(self, dim: int, tol: Tolerance = DEFAULT_TOL, rows=()):
        self.dim = dim
        self.tol = tol
        self.rows = tuple(rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def with_vector(self, v: np.ndarray) -> "IncrementalSpan":
        """Return the span extended by ``v`` (``self`` if ``v`` is already inside)."""
        r = np.asarray(v, dtype=np.complex128)
        scale = np.linalg.norm(r)
        if scale == 0:
            return self
        r = r / scale
        for q in self.rows:
            r = r - np.vdot(q, r) * q
        # second pass keeps the basis orthonormal to machine precision
        for q in self.rows:
            r = r - np.vdot(q, r) * q
        res = np.linalg.norm(r)
        if res <= self.tol.rank_tol:
            return self
        return IncrementalSpan(self.dim, self.tol, self.rows + (r / res,))
