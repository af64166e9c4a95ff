"""Orthogonality graph of a product set.

Vertices are set elements; the edge between two elements is colored by the
sites on which their local factors are orthogonal. Mutual orthogonality makes
the graph complete.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .product import ProductVectorSet, ortho_sites


@dataclass(frozen=True)
class OrthoGraph:
    k: int
    n_sites: int
    edges: dict  # (i, j) with i < j -> frozenset of sites

    def colors(self, i: int, j: int) -> frozenset[int]:
        return self.edges[(i, j) if i < j else (j, i)]

    def degree_matrix(self) -> np.ndarray:
        """``deg[v, m]``: neighbours of ``v`` whose edge colors include ``m``."""
        deg = np.zeros((self.k, self.n_sites), dtype=int)
        for (i, j), cols in self.edges.items():
            for m in cols:
                deg[i, m] += 1
                deg[j, m] += 1
        return deg

    def neighbours_on(self, v: int, m: int) -> list[int]:
        return [u for u in range(self.k) if u != v and m in self.colors(v, u)]


@dataclass(frozen=True)
class DegreeProfile:
    counts: np.ndarray  # shape (k, n)

    def max_site(self, v: int) -> int:
        return int(np.argmax(self.counts[v]))

    def max_deg(self, v: int) -> int:
        return int(self.counts[v].max()) if self.counts.shape[1] else 0


def build_graph(pset: ProductVectorSet) -> OrthoGraph:
    edges = {}
    for i, j in itertools.combinations(range(pset.k), 2):
        edges[(i, j)] = ortho_sites(pset[i], pset[j], pset.tol)
    return OrthoGraph(pset.k, pset.n, edges)


def degree_profile(g: OrthoGraph) -> DegreeProfile:
    return DegreeProfile(g.degree_matrix())


def pigeonhole_bound(k: int, n: int) -> int:
    """Same-site orthogonal neighbours guaranteed to every vertex: ceil((k-1)/n)."""
    return -(-(k - 1) // n)


def pigeonhole_witness(g: OrthoGraph, n_sites: Optional[int] = None) -> tuple[int, int, list[int]]:
    """Vertex, site and neighbour list achieving the largest same-site degree.

    The count is at least ``ceil((k-1)/n)``; ties go to the lowest
    ``(vertex, site)``.
    """
    if g.k < 2:
        raise ValueError("need at least two vertices")
    n = g.n_sites if n_sites is None else n_sites
    deg = g.degree_matrix()[:, :n]
    # argmax over the flattened (vertex, site) grid picks the first maximum
    v, m = divmod(int(np.argmax(deg)), n)
    return v, m, g.neighbours_on(v, m)


def to_dot(g: OrthoGraph, highlight: Optional[tuple[int, int]] = None,
           all_colors: bool = False, name: str = "ortho") -> str:
    """Render as an undirected DOT graph.

    Edge labels show the lowest orthogonal site, or every site when
    ``all_colors`` is set. With ``highlight=(v, m)`` the edges at ``v`` whose
    colors include ``m`` are drawn red and every other edge pale gray.
    """
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.k):
        style = ', style=filled, fillcolor="palegreen"' if highlight and highlight[0] == v else ""
        lines.append(f'  v{v} [label="v{v}"{style}];')
    for (i, j), cols in sorted(g.edges.items()):
        label = ",".join(str(m) for m in sorted(cols)) if all_colors else (
            str(min(cols)) if cols else "")
        hot = highlight is not None and highlight[0] in (i, j) and highlight[1] in cols
        color = "red" if hot else "gray80"
        lines.append(f'  v{i} -- v{j} [label="{label}", color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def minimal_color_counts(g: OrthoGraph) -> np.ndarray:
    """Per-vertex site counts when each edge keeps only its lowest color."""
    deg = np.zeros((g.k, g.n_sites), dtype=int)
    for (i, j), cols in g.edges.items():
        if cols:
            m = min(cols)
            deg[i, m] += 1
            deg[j, m] += 1
    return deg


def complete(g: OrthoGraph) -> bool:
    return len(g.edges) == math.comb(g.k, 2) and all(g.edges.values())
