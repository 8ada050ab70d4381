import numpy as np
import pytest

from projphase import StateVector, inner, random_state


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_states_clear(dim, count, rng, min_overlap=1e-3):
    """Random states whose pairwise overlaps all exceed ``min_overlap``,
    so threshold guards never trip in identity tests."""
    while True:
        states = [random_state(dim, rng) for _ in range(count)]
        ok = all(
            abs(inner(a, b)) > min_overlap
            for i, a in enumerate(states)
            for b in states[i + 1:]
        )
        if ok:
            return states


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


KET_UP = StateVector([1.0, 0.0])
KET_DOWN = StateVector([0.0, 1.0])
KET_X = StateVector.normalized([1.0, 1.0])
KET_Y = StateVector.normalized([1.0, 1.0j])
