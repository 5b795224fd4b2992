import numpy as np
import pytest

from maxplus import TropMatrix, TropVector

N = None

SF_LAGS = [[8, 10, N, N], [N, 5, 4, 8], [6, 12, 11, 7], [N, N, N, 12]]
SS_LAGS = [[0, -2, N, N], [N, 0, 3, -1], [-1, N, 0, -4], [2, N, N, 0]]
SF_FLOW = [[2, 4, 4], [2, 3, 5], [3, 2, 3]]

ACCEPTANCE_LINES = []


@pytest.fixture
def sf_lags():
    return TropMatrix(SF_LAGS)


@pytest.fixture
def ss_lags():
    return TropMatrix(SS_LAGS)


@pytest.fixture
def sf_flow():
    return TropMatrix(SF_FLOW)


@pytest.fixture
def rng():
    return np.random.default_rng(20120823)


def random_matrix(rng, n, m=None, low=-5, high=5, zero_prob=0.3, integer=True):
    m = n if m is None else m
    if integer:
        a = rng.integers(low, high + 1, size=(n, m)).astype(float)
    else:
        a = rng.uniform(low, high, size=(n, m))
    a[rng.random((n, m)) < zero_prob] = -np.inf
    return a


def random_irreducible(rng, n, **kw):
    """Random matrix whose graph contains a Hamiltonian cycle, hence irreducible."""
    a = random_matrix(rng, n, **kw)
    perm = rng.permutation(n)
    for k in range(n):
        i, j = perm[(k + 1) % n], perm[k]
        if not np.isfinite(a[i, j]):
            a[i, j] = float(rng.integers(-5, 6))
    return TropMatrix(a)


def random_regular_vector(rng, n, low=-10, high=10, integer=True):
    if integer:
        return TropVector(rng.integers(low, high + 1, size=n).astype(float))
    return TropVector(rng.uniform(low, high, size=n))


def random_regular_matrix(rng, m, n, **kw):
    a = random_matrix(rng, m, n, **kw)
    for i in range(m):
        if not np.any(np.isfinite(a[i])):
            a[i, rng.integers(n)] = float(rng.integers(-5, 6))
    return TropMatrix(a)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
