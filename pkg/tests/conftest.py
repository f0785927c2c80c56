import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def qclose(a, b, tol=1e-12):
    return float(np.linalg.norm(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))) <= tol
