"""Shared fixtures: known fiducials and seeded random helpers.

The two closed-form fiducials are certified here by a brute-force oracle
written in plain Python (cmath over nested lists), independent of the numpy
code paths under test.
"""

import cmath
import math

import numpy as np
import pytest

from siclab import StateVector


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def _matpow(a, k):
    n = len(a)
    out = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    for _ in range(k):
        out = _matmul(out, a)
    return out


def brute_orbit(components):
    """Weyl-Heisenberg orbit of a fiducial, via plain-Python arithmetic."""
    n = len(components)
    w = cmath.exp(2j * math.pi / n)
    tau = cmath.exp(1j * math.pi * (n + 1) / n)
    clock = [[w**j if i == j else 0.0 for j in range(n)] for i in range(n)]
    shift = [[1.0 if i == (j + 1) % n else 0.0 for j in range(n)] for i in range(n)]
    states = []
    for p1 in range(n):
        xp = _matpow(shift, p1)
        for p2 in range(n):
            mat = _matmul(xp, _matpow(clock, p2))
            phase = tau ** (p1 * p2)
            states.append([phase * sum(mat[i][j] * components[j] for j in range(n))
                           for i in range(n)])
    return states


def brute_squared_overlaps(states):
    """|<s_i|s_j>|^2 for all ordered pairs, plain Python."""
    m = len(states)
    out = [[0.0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            amp = sum(states[i][k].conjugate() * states[j][k]
                      for k in range(len(states[i])))
            out[i][j] = abs(amp) ** 2
    return out


def n2_fiducial_components():
    a = math.sqrt((1 + 1 / math.sqrt(3)) / 2)
    b = cmath.exp(1j * math.pi / 4) * math.sqrt((1 - 1 / math.sqrt(3)) / 2)
    return [a, b]


def n3_fiducial_components():
    s = 1 / math.sqrt(2)
    return [0.0, s, -s]


@pytest.fixture(scope="session")
def n2_fiducial():
    return StateVector(n2_fiducial_components())


@pytest.fixture(scope="session")
def n3_fiducial():
    return StateVector(n3_fiducial_components())


@pytest.fixture(scope="session", autouse=True)
def certify_fixture_fiducials():
    """Fail fast if either committed fiducial is not equiangular by the
    independent oracle."""
    for comps in (n2_fiducial_components(), n3_fiducial_components()):
        n = len(comps)
        ov = brute_squared_overlaps(brute_orbit(comps))
        target = 1.0 / (n + 1)
        worst = max(abs(ov[i][j] - target)
                    for i in range(n * n) for j in range(n * n) if i != j)
        assert worst < 1e-11


def random_state(rng, dim):
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector.normalized(z)


def random_unitary(rng, dim):
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_ensemble(rng, dim):
    from siclab import SicEnsemble

    return SicEnsemble(random_state(rng, dim) for _ in range(dim * dim))
