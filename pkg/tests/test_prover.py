import numpy as np
import pytest

from gupb.bounds import prop1_max_k
from gupb.constructions import computational_basis_set
from gupb.extendibility import is_extendible_bipartite
from gupb.graph import build_graph
from gupb.linalg import kron
from gupb.product import coarse_grain, flatten
from gupb.prover import (BiproductWitness, NoGuarantee, WitnessValidationError, best_split,
                         prove_biproduct, validate_witness)
from gupb.random_sets import generate_orthogonal_set, pattern_of


def test_shifts_witness(shifts_set):
    w = prove_biproduct(shifts_set)
    assert isinstance(w, BiproductWitness)
    assert w.max_overlap <= 1e-9
    assert w.provenance.vertex == 0 and w.site == 0
    assert len(w.trace) >= 5


@pytest.mark.parametrize("seed", range(6))
def test_eleven_vectors_in_three_qutrits(seed):
    pset = generate_orthogonal_set((3, 3, 3), 11, seed=seed)
    w = prove_biproduct(pset)
    assert isinstance(w, BiproductWitness)
    p = w.provenance
    assert len(p.b1) >= 4 and len(p.b2) <= 8
    assert p.bulk_rank < 9
    assert sorted(p.b1 + p.b2) == list(range(11))


def test_full_vector_agrees_with_overlaps():
    pset = generate_orthogonal_set((2, 3, 2), 6, seed=2)
    w = prove_biproduct(pset)
    full = w.full_vector()
    assert full.shape == (12,)
    direct = np.array([abs(np.vdot(full, flatten(v))) for v in pset])
    np.testing.assert_allclose(direct, w.overlaps(pset), atol=1e-14)


def test_witness_matches_exact_cut_verdict():
    for seed in range(10):
        pset = generate_orthogonal_set((3, 3, 3), 10, seed=seed)
        w = prove_biproduct(pset)
        assert is_extendible_bipartite(coarse_grain(pset, w.cut))[0]


def test_no_guarantee_low_degree(qubit_low_degree_set):
    g = build_graph(qubit_low_degree_set)
    assert g.degree_matrix().max() == 2
    out = prove_biproduct(qubit_low_degree_set)
    assert isinstance(out, NoGuarantee)
    assert out.best_t == 2 and out.needed_t == 3 and out.margin == -1
    assert "no guarantee" in out.trace[-1]


def test_no_guarantee_complete_basis():
    out = prove_biproduct(computational_basis_set((3, 3, 3)))
    assert isinstance(out, NoGuarantee)


def test_best_split_abstract_profile():
    # 13 vectors in three qutrits with every same-site degree at the pigeonhole minimum 4
    assert best_split(np.full((13, 3), 4), (3, 3, 3)) == (0, 0, -1)
    assert best_split(np.full((12, 3), 4), (3, 3, 3)) == (0, 0, 0)
    deg = np.full((13, 3), 4)
    deg[5, 2] = 6
    assert best_split(deg, (3, 3, 3)) == (5, 2, 1)


def test_effective_degree_beyond_the_bound():
    """Past prop1_max_k a witness appears exactly when some margin is non-negative."""
    assert prop1_max_k(3, 3) == 12
    for seed in range(15):
        pset = generate_orthogonal_set((3, 3, 3), 13 + seed % 4, seed=seed)
        _, _, margin = best_split(build_graph(pset).degree_matrix(), (3, 3, 3))
        out = prove_biproduct(pset)
        assert isinstance(out, BiproductWitness) == (margin >= 0)


def test_heterogeneous_is_flagged():
    pset = generate_orthogonal_set((2, 3, 4), 9, seed=1)
    w = prove_biproduct(pset)
    assert isinstance(w, BiproductWitness) and w.extrapolated
    assert validate_witness(w, pset) <= 1e-9


def test_homogeneous_not_flagged(shifts_set):
    assert not prove_biproduct(shifts_set).extrapolated


def test_shifts_pattern_realizations(shifts_set):
    pattern = pattern_of(shifts_set)
    for seed in range(5):
        pset = generate_orthogonal_set((2, 2, 2), 4, seed=seed, pattern=pattern)
        got = pattern_of(pset)
        # requested sites are guaranteed; qubit factors may pick up extra orthogonality
        assert all(pattern[e] <= got[e] for e in pattern)
        assert isinstance(prove_biproduct(pset), BiproductWitness)


def test_single_vector():
    pset = generate_orthogonal_set((3, 3, 3), 1, seed=0)
    w = prove_biproduct(pset)
    assert isinstance(w, BiproductWitness) and w.max_overlap <= 1e-9


def test_bad_witness_rejected(shifts_set):
    bad = BiproductWitness(0, (2, 2, 2), shifts_set[0][0], kron(shifts_set[0][1], shifts_set[0][2]))
    with pytest.raises(WitnessValidationError):
        validate_witness(bad, shifts_set)


def test_requires_three_sites(tiles_set):
    with pytest.raises(ValueError):
        prove_biproduct(tiles_set)


def test_as_dict(shifts_set):
    d = prove_biproduct(shifts_set).as_dict()
    assert d["cut"] == {"left": [0], "right": [1, 2]}
    assert len(d["bulk_part"]) == 4
