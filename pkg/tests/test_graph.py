import math
import re

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gupb.graph import (build_graph, complete, degree_profile, minimal_color_counts,
                        pigeonhole_bound, pigeonhole_witness, to_dot)
from gupb.product import ProductVector, validate_set
from gupb.random_sets import generate_orthogonal_set

K0, K1 = np.eye(2, dtype=complex)

# edge colors of Shifts worked out from the local overlaps by hand
SHIFTS_EDGES = {(0, 1): {0}, (0, 2): {1}, (0, 3): {2}, (1, 2): {2}, (1, 3): {1}, (2, 3): {0}}


def test_shifts_graph(shifts_set):
    g = build_graph(shifts_set)
    assert len(g.edges) == 6 and complete(g)
    assert {e: set(c) for e, c in g.edges.items()} == SHIFTS_EDGES
    np.testing.assert_array_equal(g.degree_matrix(), np.ones((4, 3), int))


def test_all_sites_orthogonal_edge():
    g = build_graph(validate_set((2, 2, 2), [(K0, K0, K0), (K1, K1, K1)]))
    assert g.edges == {(0, 1): frozenset({0, 1, 2})}


@pytest.mark.parametrize("k", [2, 5, 9])
def test_graph_is_complete(k):
    g = build_graph(generate_orthogonal_set((3, 3, 3), k, seed=k))
    assert len(g.edges) == math.comb(k, 2) and complete(g)


def test_pigeonhole_small_cases(shifts_set):
    v, m, nb = pigeonhole_witness(build_graph(validate_set((2, 2), [(K0, K0), (K1, K0)])))
    assert len(nb) >= 1
    v, m, nb = pigeonhole_witness(build_graph(shifts_set))
    # every Shifts vertex has one partner per site; ties resolve to (0, 0)
    assert (v, m, nb) == (0, 0, [1])
    with pytest.raises(ValueError):
        pigeonhole_witness(build_graph(validate_set((2, 2), [(K0, K0)])))


@pytest.mark.parametrize("seed", range(5))
def test_pigeonhole_eleven_in_three_qutrits(seed):
    g = build_graph(generate_orthogonal_set((3, 3, 3), 11, seed=seed))
    v, m, nb = pigeonhole_witness(g)
    assert len(nb) >= 4
    assert len(nb) == g.degree_matrix().max()
    assert all(m in g.colors(v, u) for u in nb)


def test_degree_profile(shifts_set):
    p = degree_profile(build_graph(shifts_set))
    assert p.max_deg(2) == 1 and p.max_site(2) == 0


def test_dot_no_highlight(shifts_set):
    dot = to_dot(build_graph(shifts_set))
    assert "red" not in dot
    assert dot.count("--") == 6


def test_dot_highlight(shifts_set):
    g = build_graph(shifts_set)
    dot = to_dot(g, highlight=(0, 0))
    red = re.findall(r"v(\d+) -- v(\d+) \[[^\]]*color=\"red\"", dot)
    assert red == [("0", "1")]
    dot = to_dot(g, highlight=(1, 1))
    assert re.findall(r"v(\d+) -- v(\d+) \[[^\]]*color=\"red\"", dot) == [("1", "3")]


def test_dot_all_colors():
    g = build_graph(validate_set((2, 2, 2), [(K0, K0, K0), (K1, K1, K0)]))
    assert 'label="0"' in to_dot(g)
    assert 'label="0,1"' in to_dot(g, all_colors=True)


def test_dot_grammar(shifts_set):
    """Line-level check against the undirected DOT subset we emit."""
    dot = to_dot(build_graph(shifts_set), highlight=(0, 1))
    lines = dot.strip().splitlines()
    assert re.fullmatch(r"graph \w+ \{", lines[0]) and lines[-1] == "}"
    attr = r'\[(\w+=("[^"]*"|\w+)(, )?)+\]'
    for line in lines[1:-1]:
        assert re.fullmatch(rf"  (node {attr}|v\d+ {attr}|v\d+ -- v\d+ {attr});", line), line
    assert "->" not in dot


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([(2, 2, 2), (3, 3, 3), (2, 3, 4), (3, 3), (2, 2, 2, 2)]),
       st.integers(2, 12))
def test_pigeonhole_bound_holds(seed, dims, k):
    k = min(k, int(np.prod(dims)) - 1)
    pset = generate_orthogonal_set(dims, k, seed)
    g = build_graph(pset)
    assert g.degree_matrix().max() >= pigeonhole_bound(k, len(dims))
    # with one color per edge every vertex's counts sum to k - 1
    assert (minimal_color_counts(g).sum(axis=1) == k - 1).all()
