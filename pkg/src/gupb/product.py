"""Multipartite product vectors, orthogonal product sets and their JSON form.

Sites are indexed from 0. A :class:`ProductVectorSet` is only ever built
through :func:`validate_set`, so every set in circulation is mutually
orthogonal within the tolerance it was validated with.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .linalg import DEFAULT_TOL, Tolerance, cvec, kron


class DimensionMismatch(ValueError):
    pass


class NotMutuallyOrthogonal(ValueError):
    """Raised with every offending pair ``(i, j, per-site overlap magnitudes)``."""

    def __init__(self, pairs):
        self.pairs = list(pairs)
        shown = "; ".join(
            f"({i}, {j}): " + ", ".join(f"{x:.3g}" for x in ov) for i, j, ov in self.pairs[:5]
        )
        more = "" if len(self.pairs) <= 5 else f" (+{len(self.pairs) - 5} more)"
        super().__init__(f"{len(self.pairs)} non-orthogonal pair(s): {shown}{more}")


class SetFormatError(ValueError):
    """Malformed set file; the message names the offending field."""


@dataclass(frozen=True)
class SystemShape:
    local_dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.local_dims)
        object.__setattr__(self, "local_dims", dims)
        if len(dims) < 2:
            raise ValueError("a system needs at least two sites")
        if any(d < 2 for d in dims):
            raise ValueError(f"local dimensions must be >= 2, got {dims}")

    @property
    def n(self) -> int:
        return len(self.local_dims)

    @property
    def total_dim(self) -> int:
        return math.prod(self.local_dims)

    @property
    def is_homogeneous(self) -> bool:
        return len(set(self.local_dims)) == 1

    def __getitem__(self, m):
        return self.local_dims[m]

    def __iter__(self):
        return iter(self.local_dims)


@dataclass(frozen=True, eq=False)
class ProductVector:
    """Tensor product of normalized local factors, one per site."""

    factors: tuple[np.ndarray, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(cvec(f) for f in self.factors))

    @property
    def n(self) -> int:
        return len(self.factors)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(f.size for f in self.factors)

    def __getitem__(self, m):
        return self.factors[m]

    def __repr__(self):
        return f"ProductVector(dims={self.dims})"


def product_vector(*factors) -> ProductVector:
    return ProductVector(tuple(factors))


def flatten(v: ProductVector) -> np.ndarray:
    """Full state vector in lexicographic site order."""
    return kron(*v.factors)


def local_overlaps(a: ProductVector, b: ProductVector) -> np.ndarray:
    """Magnitudes ``|<a_m|b_m>|`` for every site ``m``."""
    if a.dims != b.dims:
        raise DimensionMismatch(f"shapes differ: {a.dims} vs {b.dims}")
    return np.array([abs(np.vdot(x, y)) for x, y in zip(a.factors, b.factors)])


def overlap(a: ProductVector, b: ProductVector) -> float:
    """``|<a|b>|`` computed as a product of local overlaps."""
    return float(np.prod(local_overlaps(a, b)))


def ortho_sites(a: ProductVector, b: ProductVector, tol: Tolerance = DEFAULT_TOL) -> frozenset[int]:
    return frozenset(int(m) for m in np.flatnonzero(local_overlaps(a, b) <= tol.ortho_tol))


@dataclass(frozen=True, eq=False)
class ProductVectorSet:
    """Mutually orthogonal product vectors over one shape.

    Construct with :func:`validate_set`.
    """

    shape: SystemShape
    vectors: tuple[ProductVector, ...]
    tol: Tolerance = field(default=DEFAULT_TOL, compare=False)

    @property
    def k(self) -> int:
        return len(self.vectors)

    @property
    def n(self) -> int:
        return self.shape.n

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def site_factors(self, m: int, indices: Iterable[int] | None = None) -> np.ndarray:
        """Stack of the site-``m`` factors, one row per selected vector."""
        idx = range(self.k) if indices is None else indices
        rows = [self.vectors[i].factors[m] for i in idx]
        if not rows:
            return np.zeros((0, self.shape[m]), dtype=np.complex128)
        return np.stack(rows)

    def flat_matrix(self) -> np.ndarray:
        """All flattened vectors as rows, shape ``(k, total_dim)``."""
        if not self.vectors:
            return np.zeros((0, self.shape.total_dim), dtype=np.complex128)
        return np.stack([flatten(v) for v in self.vectors])

    def __repr__(self):
        return f"ProductVectorSet(dims={self.shape.local_dims}, k={self.k})"


def validate_set(shape, vectors: Sequence, tol: Tolerance = DEFAULT_TOL) -> ProductVectorSet:
    """Check dimensions and pairwise orthogonality, returning a set.

    ``vectors`` may hold :class:`ProductVector` instances or plain sequences of
    local factors. Raises :class:`DimensionMismatch` or
    :class:`NotMutuallyOrthogonal` (listing every bad pair).
    """
    if not isinstance(shape, SystemShape):
        shape = SystemShape(tuple(shape))
    vecs = []
    for i, v in enumerate(vectors):
        if not isinstance(v, ProductVector):
            v = ProductVector(tuple(v))
        if v.dims != shape.local_dims:
            raise DimensionMismatch(f"vector {i} has dims {v.dims}, expected {shape.local_dims}")
        vecs.append(v)
    bad = []
    for i, j in itertools.combinations(range(len(vecs)), 2):
        ov = local_overlaps(vecs[i], vecs[j])
        if not np.any(ov <= tol.ortho_tol):
            bad.append((i, j, tuple(float(x) for x in ov)))
    if bad:
        raise NotMutuallyOrthogonal(bad)
    return ProductVectorSet(shape, tuple(vecs), tol)


@dataclass(frozen=True)
class Bipartition:
    """A cut ``S|S̄`` of the sites, stored with site 0 on the left."""

    left: frozenset[int]
    right: frozenset[int]

    def __post_init__(self):
        left, right = frozenset(self.left), frozenset(self.right)
        if not left or not right:
            raise ValueError("both sides of a bipartition must be nonempty")
        if left & right:
            raise ValueError("bipartition sides overlap")
        if min(right) < min(left):
            left, right = right, left
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @classmethod
    def from_left(cls, left: Iterable[int], n: int) -> "Bipartition":
        left = frozenset(left)
        if not left <= set(range(n)):
            raise ValueError(f"sites {sorted(left)} out of range for n={n}")
        return cls(left, frozenset(range(n)) - left)

    @property
    def n(self) -> int:
        return len(self.left) + len(self.right)

    def __str__(self):
        return "".join(map(str, sorted(self.left))) + "|" + "".join(map(str, sorted(self.right)))


def all_bipartitions(n: int) -> list[Bipartition]:
    """The ``2**(n-1) - 1`` cuts of ``n`` sites, smallest left sides first."""
    rest = list(range(1, n))
    cuts = []
    for size in range(0, n - 1):
        for extra in itertools.combinations(rest, size):
            cuts.append(Bipartition.from_left((0,) + extra, n))
    return sorted(set(cuts), key=lambda c: (min(len(c.left), len(c.right)), sorted(c.left)))


def group_sites(pset: ProductVectorSet, groups: Sequence[Sequence[int]],
                tol: Tolerance | None = None) -> ProductVectorSet:
    """Merge factor groups into single sites (factors kron'd in ascending order)."""
    groups = [sorted(g) for g in groups]
    flat = sorted(itertools.chain.from_iterable(groups))
    if flat != list(range(pset.n)):
        raise ValueError(f"groups {groups} do not partition sites 0..{pset.n - 1}")
    dims = tuple(math.prod(pset.shape[m] for m in g) for g in groups)
    vecs = [ProductVector(tuple(kron(*(v.factors[m] for m in g)) for g in groups)) for v in pset]
    return validate_set(SystemShape(dims), vecs, tol or pset.tol)


def coarse_grain(pset: ProductVectorSet, cut: Bipartition) -> ProductVectorSet:
    """View the set as bipartite across ``cut``."""
    if cut.n != pset.n:
        raise ValueError(f"cut {cut} is for {cut.n} sites, set has {pset.n}")
    return group_sites(pset, [sorted(cut.left), sorted(cut.right)])


# -- JSON file format --------------------------------------------------------

def _num(x: float) -> str:
    x = float(x)
    if x == 0:
        return "0.0"
    return format(x, ".16e")


def set_to_json(pset: ProductVectorSet) -> str:
    """Serialize as ``{"dims": [...], "vectors": [[[[re, im], ...], ...], ...]}``.

    Amplitudes carry 17 significant digits; output is byte-deterministic.
    """
    vec_strs = []
    for v in pset:
        sites = []
        for f in v.factors:
            sites.append("[" + ",".join(f"[{_num(z.real)},{_num(z.imag)}]" for z in f) + "]")
        vec_strs.append("[" + ",".join(sites) + "]")
    dims = ",".join(str(d) for d in pset.shape.local_dims)
    return '{"dims":[' + dims + '],"vectors":[\n' + ",\n".join(vec_strs) + "\n]}\n"


def _parse_amplitude(z, where: str) -> complex:
    if isinstance(z, (list, tuple)) and len(z) == 2 and all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in z
    ):
        return complex(float(z[0]), float(z[1]))
    raise SetFormatError(f"{where}: expected [re, im] pair of numbers, got {z!r}")


def set_from_data(data, tol: Tolerance = DEFAULT_TOL) -> ProductVectorSet:
    if not isinstance(data, dict):
        raise SetFormatError("top level: expected an object with 'dims' and 'vectors'")
    for key in ("dims", "vectors"):
        if key not in data:
            raise SetFormatError(f"top level: missing field '{key}'")
    dims = data["dims"]
    if not isinstance(dims, list) or not all(isinstance(d, int) and not isinstance(d, bool) for d in dims):
        raise SetFormatError(f"dims: expected a list of integers, got {dims!r}")
    try:
        shape = SystemShape(tuple(dims))
    except ValueError as exc:
        raise SetFormatError(f"dims: {exc}") from None
    raw = data["vectors"]
    if not isinstance(raw, list):
        raise SetFormatError("vectors: expected a list")
    vectors = []
    for i, vec in enumerate(raw):
        if not isinstance(vec, list) or len(vec) != shape.n:
            raise SetFormatError(f"vectors[{i}]: expected {shape.n} site factors")
        factors = []
        for m, fac in enumerate(vec):
            where = f"vectors[{i}][{m}]"
            if not isinstance(fac, list) or len(fac) != shape[m]:
                got = len(fac) if isinstance(fac, list) else type(fac).__name__
                raise SetFormatError(f"{where}: expected {shape[m]} amplitudes, got {got}")
            amps = [_parse_amplitude(z, f"{where}[{a}]") for a, z in enumerate(fac)]
            try:
                factors.append(cvec(amps))
            except ValueError as exc:
                raise SetFormatError(f"{where}: {exc}") from None
        vectors.append(ProductVector(tuple(factors)))
    return validate_set(shape, vectors, tol)


def set_from_json(text: str, tol: Tolerance = DEFAULT_TOL) -> ProductVectorSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SetFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return set_from_data(data, tol)


def load_set(path, tol: Tolerance = DEFAULT_TOL) -> ProductVectorSet:
    with open(path, encoding="utf-8") as fh:
        return set_from_json(fh.read(), tol)


def dump_set(pset: ProductVectorSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(set_to_json(pset))
