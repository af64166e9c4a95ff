import numpy as np
import pytest

from gupb.constructions import MINUS, PLUS, shifts
from gupb.linalg import cvec
from gupb.product import validate_set


@pytest.fixture
def shifts_set():
    return shifts()


@pytest.fixture
def tiles_set():
    """Five-element UPB in C^3 ⊗ C^3, used only as a negative test input."""
    k0, k1, k2 = np.eye(3, dtype=complex)
    return validate_set((3, 3), [
        (k0, cvec(k0 - k1)),
        (cvec(k0 - k1), k2),
        (k2, cvec(k1 - k2)),
        (cvec(k1 - k2), k0),
        (cvec(k0 + k1 + k2), cvec(k0 + k1 + k2)),
    ])


@pytest.fixture
def qubit_low_degree_set():
    """Six vectors in (C^2)^3 whose same-site orthogonal degrees never exceed 2.

    Found by exhaustive search over labelings with rays from {|0>,|1>} and
    {|+>,|->}.
    """
    rays = {(0, 0): np.array([1, 0], complex), (0, 1): np.array([0, 1], complex),
            (1, 0): PLUS, (1, 1): MINUS}
    labels = [
        ((0, 0), (0, 0), (0, 0)),
        ((0, 0), (0, 0), (0, 1)),
        ((0, 1), (1, 0), (1, 0)),
        ((0, 1), (1, 1), (1, 0)),
        ((1, 0), (0, 1), (1, 1)),
        ((1, 1), (0, 1), (1, 1)),
    ]
    return validate_set((2, 2, 2), [tuple(rays[l] for l in row) for row in labels])


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
