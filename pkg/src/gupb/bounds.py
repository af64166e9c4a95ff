"""Cardinality and dimension formulas for (genuinely) unextendible product bases.

All arithmetic is exact Python integer arithmetic. Only homogeneous systems
``(C^d)^{⊗n}`` have closed-form bounds here.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass


def _check_dims(**values):
    for name, v in values.items():
        if not isinstance(v, int) or v < 3:
            raise ValueError(f"{name} must be an integer >= 3, got {v!r}")


def min_upb_bipartite(d1: int, d2: int) -> int:
    """Smallest cardinality a UPB in ``C^d1 ⊗ C^d2`` may have (permissible, not
    necessarily achieved)."""
    _check_dims(d1=d1, d2=d2)
    if d1 % 2 == 0 and d2 % 2 == 0:
        return d1 + d2
    return d1 + d2 - 1


def max_upb_bipartite(d1: int, d2: int) -> int:
    _check_dims(d1=d1, d2=d2)
    return d1 * d2 - 4


def min_gupb(n: int, d: int) -> int:
    """Minimal permissible GUPB cardinality in ``(C^d)^{⊗n}``."""
    _check_dims(n=n, d=d)
    return d ** (n - 1) + d - (1 if d % 2 else 0)


def min_gupb_by_cuts(n: int, d: int) -> int:
    """Same quantity as :func:`min_gupb`, obtained by maximizing the bipartite
    minimum over every cut of the homogeneous system."""
    _check_dims(n=n, d=d)
    return max(min_upb_bipartite(d ** a, d ** (n - a)) for a in range(1, n))


def max_ges_dim(n: int, d: int) -> int:
    if n < 2 or d < 2:
        raise ValueError(f"need n, d >= 2, got n={n}, d={d}")
    return (d ** (n - 1) - 1) * (d - 1)


def s_required(k: int, n: int) -> int:
    """``ceil((k-1)/n)``: guaranteed same-site orthogonal neighbours of any element."""
    if k < 1 or n < 2:
        raise ValueError(f"need k >= 1 and n >= 2, got k={k}, n={n}")
    return -(-(k - 1) // n)


def bulk_excess(k: int, n: int) -> int:
    """``k - ceil((k-1)/n)``, the size of the complementary group (non-decreasing in k)."""
    return k - s_required(k, n)


def prop1_max_k(n: int, d: int) -> int:
    """Largest cardinality for which a biproduct vector orthogonal to any
    orthogonal product set is guaranteed: ``d^(n-1) + floor((d^(n-1)-2)/(n-1))``."""
    _check_dims(n=n, d=d)
    D = d ** (n - 1)
    return D + (D - 2) // (n - 1)


def prop1_max_k_scan(n: int, d: int, linear: bool = False) -> int:
    """Independent check of :func:`prop1_max_k`: the largest ``k`` with
    ``k - ceil((k-1)/n) <= d^(n-1) - 1``, searched directly.

    The default search gallops then bisects, which is valid because the
    left-hand side is non-decreasing in ``k``; ``linear=True`` walks every ``k``.
    """
    _check_dims(n=n, d=d)
    w = d ** (n - 1) - 1
    if linear:
        k = 1
        while bulk_excess(k + 1, n) <= w:
            k += 1
        return k
    lo, step = 1, 1
    while bulk_excess(lo + step, n) <= w:
        lo += step
        step *= 2
    hi = lo + step  # bulk_excess(hi) > w >= bulk_excess(lo)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if bulk_excess(mid, n) <= w:
            lo = mid
        else:
            hi = mid
    return lo


def excluded_interval(n: int, d: int) -> tuple[int, int]:
    return min_gupb(n, d), prop1_max_k(n, d)


def table1(n_range, d_range) -> dict[tuple[int, int], tuple[int, int]]:
    """Excluded GUPB cardinality intervals keyed by ``(n, d)``."""
    return {(n, d): excluded_interval(n, d) for n in n_range for d in d_range}


def bounds_for_shape(dims) -> "BoundsReport":
    dims = tuple(dims)
    if len(set(dims)) != 1:
        raise NotImplementedError(
            f"closed-form bounds are only derived for homogeneous systems, got dims {dims}")
    return report(len(dims), dims[0])


@dataclass(frozen=True)
class BoundsReport:
    n: int
    d: int
    min_upb_bipartite: int  # binding cut 1|(n-1): C^d ⊗ C^(d^(n-1))
    max_upb_bipartite: int
    min_gupb: int
    max_ges_dim: int
    w: int
    prop1_max_k: int
    excluded_interval: tuple[int, int]

    def as_dict(self) -> dict:
        out = asdict(self)
        out["excluded_interval"] = list(self.excluded_interval)
        return out

    def as_text(self) -> str:
        lo, hi = self.excluded_interval
        return "\n".join([
            f"system: (C^{self.d})^(x{self.n}), total dimension {self.d ** self.n}",
            f"permissible minimum UPB size across cut 1|{self.n - 1}: {self.min_upb_bipartite}",
            f"maximum UPB size across cut 1|{self.n - 1}: {self.max_upb_bipartite}",
            f"permissible minimum GUPB size: {self.min_gupb}",
            f"maximal GES dimension: {self.max_ges_dim}",
            f"w = d^(n-1) - 1: {self.w}",
            f"largest k with guaranteed biproduct extension: {self.prop1_max_k}",
            f"excluded GUPB cardinalities: <{lo},{hi}>",
        ])


def report(n: int, d: int) -> BoundsReport:
    _check_dims(n=n, d=d)
    D = d ** (n - 1)
    return BoundsReport(
        n=n,
        d=d,
        min_upb_bipartite=min_upb_bipartite(d, D),
        max_upb_bipartite=max_upb_bipartite(d, D),
        min_gupb=min_gupb(n, d),
        max_ges_dim=max_ges_dim(n, d),
        w=D - 1,
        prop1_max_k=prop1_max_k(n, d),
        excluded_interval=excluded_interval(n, d),
    )
