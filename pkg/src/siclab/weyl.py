"""Clock, shift, and displacement unitaries, and orbits of a fiducial state.

Conventions (any unimodular phase choice leaves every squared overlap, and
hence every certification residual, unchanged; the test suite asserts this):

* shift:  X e_j = e_{j+1 mod N}
* clock:  Z = diag(1, w, ..., w^{N-1}),  w = exp(2*pi*i/N)
* displacement:  D_(p1,p2) = tau^(p1*p2) X^p1 Z^p2,  tau = exp(i*pi*(N+1)/N)

With these matrices Z X = w X Z, and D_p^dag equals D_{-p} up to a sign
(exactly for odd N).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import StateVector, UnitaryOperator, apply_unitary


@dataclass(frozen=True)
class DisplacementIndex:
    """Pair (p1, p2) in Z_N x Z_N labelling a displacement; reduced mod N."""

    p1: int
    p2: int
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be a positive integer")
        object.__setattr__(self, "p1", int(self.p1) % self.dim)
        object.__setattr__(self, "p2", int(self.p2) % self.dim)


def clock(dim: int) -> UnitaryOperator:
    """Diagonal phase unitary Z with Z^N = I."""
    if dim < 1:
        raise ValueError("dimension must be a positive integer")
    phases = np.exp(2j * np.pi * np.arange(dim) / dim)
    return UnitaryOperator(np.diag(phases))


def shift(dim: int) -> UnitaryOperator:
    """Cyclic permutation unitary X with X e_j = e_{j+1 mod N}."""
    if dim < 1:
        raise ValueError("dimension must be a positive integer")
    x = np.zeros((dim, dim), dtype=np.complex128)
    x[(np.arange(dim) + 1) % dim, np.arange(dim)] = 1.0
    return UnitaryOperator(x)


@lru_cache(maxsize=None)
def _displacement_table(dim: int) -> np.ndarray:
    """All N^2 displacement matrices, indexed [p1*N + p2], read-only."""
    x = shift(dim).data
    z = clock(dim).data
    tau = np.exp(1j * np.pi * (dim + 1) / dim)
    xpow = [np.linalg.matrix_power(x, k) for k in range(dim)]
    zpow = [np.linalg.matrix_power(z, k) for k in range(dim)]
    table = np.empty((dim * dim, dim, dim), dtype=np.complex128)
    for p1 in range(dim):
        for p2 in range(dim):
            table[p1 * dim + p2] = tau ** (p1 * p2) * (xpow[p1] @ zpow[p2])
    table.setflags(write=False)
    return table


def displacement(idx: DisplacementIndex) -> UnitaryOperator:
    """Displacement unitary for the given index; D_(0,0) is the identity."""
    return UnitaryOperator(_displacement_table(idx.dim)[idx.p1 * idx.dim + idx.p2])


class SicEnsemble:
    """N^2 unit vectors indexed by (p1, p2) with p2 fastest; the state at
    index (0, 0) is the fiducial. Membership of the ensemble says nothing
    about whether it actually is a SIC; see :mod:`siclab.verify`."""

    __slots__ = ("states",)

    def __init__(self, states):
        states = tuple(states)
        if not states or not all(isinstance(s, StateVector) for s in states):
            raise ValueError("expected a nonempty sequence of StateVector")
        dim = states[0].dim
        if any(s.dim != dim for s in states):
            raise ValueError("ensemble states must share one dimension")
        if len(states) != dim * dim:
            raise ValueError(f"expected {dim * dim} states, got {len(states)}")
        object.__setattr__(self, "states", states)

    def __setattr__(self, name, value):
        raise AttributeError("SicEnsemble is immutable")

    @property
    def dim(self) -> int:
        return self.states[0].dim

    @property
    def fiducial(self) -> StateVector:
        return self.states[0]

    def __len__(self) -> int:
        return len(self.states)

    def state_matrix(self) -> np.ndarray:
        """States stacked as rows of an (N^2, N) array."""
        return np.array([s.data for s in self.states])


def orbit(fiducial: StateVector) -> SicEnsemble:
    """Weyl-Heisenberg orbit {D_p |fiducial>} over all N^2 indices."""
    dim = fiducial.dim
    return SicEnsemble(
        apply_unitary(displacement(DisplacementIndex(p1, p2, dim)), fiducial)
        for p1 in range(dim)
        for p2 in range(dim)
    )
