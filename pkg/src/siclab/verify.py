"""Certification of SIC-POVM candidates.

An ensemble of N^2 unit vectors is a SIC-POVM when every distinct pair has
squared overlap 1/(N+1) (equiangularity) and the rescaled projectors resolve
the identity. The two residuals are reported separately and never blended:
they are independent axioms. Informational completeness is operationalized
as full rank of the projector Gram matrix G_ij = Tr(P_i P_j), which certifies
that the projectors span the whole space of Hermitian matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .weyl import SicEnsemble

DEFAULT_TOLERANCE = 1e-9  # certification default; CLI-overridable
RANK_RTOL = 1e-10         # singular values below RANK_RTOL * largest count as zero


@dataclass(frozen=True)
class VerificationReport:
    """Diagnostics for one ensemble at a stated tolerance.

    ``passed`` holds exactly when equiangularity and identity residuals are
    both within tolerance and the completeness rank equals N^2.
    ``max_overlap_pair`` identifies the worst off-diagonal pair (None when
    N = 1 and there are no pairs).
    """

    dim: int
    equiangularity_residual: float
    identity_residual: float
    completeness_rank: int
    frame_potential: float
    max_overlap_pair: tuple[int, int] | None
    max_overlap_value: float | None
    tolerance: float
    passed: bool


def overlap_matrix(ens: SicEnsemble) -> np.ndarray:
    """Real symmetric matrix of squared overlaps |<psi_i|psi_j>|^2."""
    v = ens.state_matrix()
    g = v.conj() @ v.T
    return g.real**2 + g.imag**2


def equiangularity_residual(ens: SicEnsemble) -> float:
    """Worst deviation of an off-diagonal squared overlap from 1/(N+1).

    Zero for N = 1, where the max runs over an empty set.
    """
    if len(ens) == 1:
        return 0.0
    ov = overlap_matrix(ens)
    target = 1.0 / (ens.dim + 1)
    dev = np.abs(ov - target)
    np.fill_diagonal(dev, 0.0)
    return float(np.max(dev))


def identity_residual(ens: SicEnsemble) -> float:
    """Hilbert-Schmidt norm of sum_i |psi_i><psi_i| / N minus the identity."""
    v = ens.state_matrix()
    m = v.T @ v.conj() / ens.dim - np.eye(ens.dim)
    return float(np.sqrt(np.sum(m.real**2 + m.imag**2)))


def info_completeness_rank(ens: SicEnsemble) -> int:
    """Numerical rank of the projector Gram matrix Tr(P_i P_j).

    Rank N^2 certifies that the ensemble projectors span all Hermitian
    matrices, i.e. measurement statistics determine a density matrix.
    The cutoff is relative (RANK_RTOL times the largest singular value)
    because the Gram scale grows with N.
    """
    gram = overlap_matrix(ens)
    sing = np.linalg.svd(gram, compute_uv=False)
    return int(np.sum(sing > RANK_RTOL * sing[0]))


def frame_potential(ens: SicEnsemble) -> float:
    """Sum of |<psi_i|psi_j>|^4 over all ordered pairs, diagonal included.

    Over ensembles of N^2 unit vectors this is bounded below by
    2 N^3 / (N+1), with equality exactly at SICs.
    """
    ov = overlap_matrix(ens)
    return float(np.sum(ov * ov))


def frame_potential_bound(dim: int) -> float:
    """The minimum 2 N^3 / (N+1) attained by SICs."""
    return 2.0 * dim**3 / (dim + 1)


def verify(ens: SicEnsemble, tol: float = DEFAULT_TOLERANCE) -> VerificationReport:
    """Run all diagnostics and certify at the given tolerance."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    dim = ens.dim
    ov = overlap_matrix(ens)
    target = 1.0 / (dim + 1)
    if len(ens) == 1:
        equi = 0.0
        pair = None
        pair_value = None
    else:
        dev = np.abs(ov - target)
        np.fill_diagonal(dev, 0.0)
        equi = float(np.max(dev))
        off = ov.copy()
        np.fill_diagonal(off, -np.inf)
        flat = int(np.argmax(off))
        pair = (flat // len(ens), flat % len(ens))
        pair_value = float(ov[pair])
    ident = identity_residual(ens)
    rank = info_completeness_rank(ens)
    return VerificationReport(
        dim=dim,
        equiangularity_residual=equi,
        identity_residual=ident,
        completeness_rank=rank,
        frame_potential=float(np.sum(ov * ov)),
        max_overlap_pair=pair,
        max_overlap_value=pair_value,
        tolerance=float(tol),
        passed=bool(equi <= tol and ident <= tol and rank == dim * dim),
    )
