"""Moment-map and simplex geometry of states and density matrices.

The torus action on projective space has moment map

    mu([z_0, ..., z_{M-1}]) = (|z_0|^2, ..., |z_{M-1}|^2) / (2 |z|^2),

whose image is the regular (M-1)-simplex with vertices at half the
coordinate basis vectors; the coordinate-axis points are the fixed points of
the action and map onto those vertices. All M homogeneous components are
kept (the coordinates sum to 1/2), which embeds the simplex in R^M; chart
versions that drop a component are recoverable by projection.

Density matrices embed isometrically into R^(N^2) through a fixed orthonormal
Hermitian basis; in those coordinates, squared Euclidean distance equals
Tr(A - B)^2 = 2 * hs_distance_sq(A, B). A SIC ensemble's projectors land on
the vertices of a regular simplex inscribed in the outsphere of the set of
density matrices, which is what :func:`sic_simplex_report` measures.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import DensityMatrix, projector
from .weyl import SicEnsemble

MOMENT_SUM_TOL = 1e-12     # |sum(coords) - 1/2| allowed in a MomentImage
REGULARITY_TOL = 1e-7      # default edge spread for simplex regularity


class ProjectivePoint:
    """Homogeneous coordinates of a point of CP^(M-1): a nonzero complex
    vector, considered up to overall complex scale (invariance is a property
    of the operations, not a canonical form)."""

    __slots__ = ("data",)

    def __init__(self, rep):
        v = np.array(rep, dtype=np.complex128, copy=True)
        if v.ndim != 1 or v.size == 0:
            raise ValueError("expected a nonempty one-dimensional vector")
        if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
            raise ValueError("homogeneous coordinates must be finite")
        if float(np.real(np.vdot(v, v))) == 0.0:
            raise ValueError("homogeneous coordinates must not all vanish")
        v.setflags(write=False)
        object.__setattr__(self, "data", v)

    def __setattr__(self, name, value):
        raise AttributeError("ProjectivePoint is immutable")

    @property
    def dim(self) -> int:
        return self.data.shape[0]


class MomentImage:
    """A point of the moment-map image: nonnegative coordinates, each at most
    1/2, summing to 1/2 within MOMENT_SUM_TOL."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        c = np.array(coords, dtype=float, copy=True)
        if c.ndim != 1 or c.size == 0 or not np.all(np.isfinite(c)):
            raise ValueError("expected a nonempty finite real vector")
        if np.any(c < 0.0) or np.any(c > 0.5 + MOMENT_SUM_TOL):
            raise ValueError("moment coordinates must lie in [0, 1/2]")
        if abs(float(np.sum(c)) - 0.5) > MOMENT_SUM_TOL:
            raise ValueError("moment coordinates must sum to 1/2")
        c.setflags(write=False)
        object.__setattr__(self, "coords", c)

    def __setattr__(self, name, value):
        raise AttributeError("MomentImage is immutable")

    @property
    def dim(self) -> int:
        return self.coords.shape[0]


def moment_map(z: ProjectivePoint) -> MomentImage:
    """Half the normalized squared moduli of the homogeneous coordinates.

    Invariant under rescaling of z and under componentwise phases.
    """
    a = z.data.real**2 + z.data.imag**2
    return MomentImage(0.5 * a / float(np.sum(a)))


def vertex_images(m: int) -> list[MomentImage]:
    """Images of the coordinate-axis points: half the basis vectors of R^M.

    These are the vertices of the image simplex; all pairwise squared
    Euclidean distances equal 1/2.
    """
    if m < 1:
        raise ValueError("M must be a positive integer")
    return [MomentImage(0.5 * np.eye(m)[k]) for k in range(m)]


def simplex_membership(x, tol: float) -> bool:
    """Whether a raw real vector lies in the image simplex: all coordinates
    >= -tol and coordinate sum within tol of 1/2."""
    c = np.asarray(x, dtype=float)
    return bool(np.all(c >= -tol) and abs(float(np.sum(c)) - 0.5) <= tol)


def simplex_preimage(x: MomentImage) -> ProjectivePoint:
    """A projective point mapping to x: componentwise sqrt(2 x_k).

    Witnesses that the map is onto the simplex.
    """
    return ProjectivePoint(np.sqrt(2.0 * x.coords).astype(np.complex128))


@lru_cache(maxsize=None)
def hermitian_basis(dim: int) -> np.ndarray:
    """Orthonormal basis of Hermitian dim x dim matrices, Tr(B_a B_b) = delta.

    Ordering: identity/sqrt(N) first; then (e_jk + e_kj)/sqrt(2) for j < k in
    row-major order; then i(e_kj - e_jk)/sqrt(2) for j < k; then the diagonal
    traceless generators diag(1, ..., 1, -l, 0, ..., 0)/sqrt(l(l+1)) for
    l = 1..N-1. Deterministic, so coordinate files are stable.
    """
    if dim < 1:
        raise ValueError("dimension must be a positive integer")
    mats = [np.eye(dim, dtype=np.complex128) / np.sqrt(dim)]
    for j in range(dim):
        for k in range(j + 1, dim):
            b = np.zeros((dim, dim), dtype=np.complex128)
            b[j, k] = b[k, j] = 1.0 / np.sqrt(2.0)
            mats.append(b)
    for j in range(dim):
        for k in range(j + 1, dim):
            b = np.zeros((dim, dim), dtype=np.complex128)
            b[j, k] = -1j / np.sqrt(2.0)
            b[k, j] = 1j / np.sqrt(2.0)
            mats.append(b)
    for l in range(1, dim):
        d = np.zeros(dim)
        d[:l] = 1.0
        d[l] = -l
        mats.append(np.diag(d).astype(np.complex128) / np.sqrt(l * (l + 1.0)))
    basis = np.array(mats)
    basis.setflags(write=False)
    return basis


def hermitian_coords(rho: DensityMatrix) -> np.ndarray:
    """Expansion coefficients Tr(B_a rho) in the fixed Hermitian basis.

    The embedding is an isometry up to a factor of two: squared Euclidean
    distance between coordinate vectors equals Tr(A - B)^2, i.e. exactly
    2 * hs_distance_sq(A, B), and coordinate dot products equal Tr(A B).
    """
    basis = hermitian_basis(rho.dim)
    return np.einsum("aij,ji->a", basis, rho.data).real


def outsphere_radius(dim: int) -> float:
    """Trace-metric distance sqrt((N-1)/(2N)) from any pure-state projector
    to the maximally mixed state I/N."""
    if dim < 1:
        raise ValueError("dimension must be a positive integer")
    return float(np.sqrt((dim - 1.0) / (2.0 * dim)))


@dataclass(frozen=True)
class SimplexReport:
    """Edge and outsphere statistics of an ensemble's projector embedding.

    Edges are pairwise hs_distance_sq values (target N/(N+1) for a SIC);
    ``regular`` holds when max - min <= regularity_tol. Center distances are
    trace-metric distances from each projector to I/N, to be compared with
    ``outsphere_radius``. For N = 1 there are no edges and the edge fields
    are zero.
    """

    dim: int
    edge_min: float
    edge_max: float
    edge_mean: float
    edge_target: float
    regular: bool
    regularity_tol: float
    outsphere_radius: float
    center_distance_min: float
    center_distance_max: float


def sic_simplex_report(ens: SicEnsemble,
                       regularity_tol: float = REGULARITY_TOL) -> SimplexReport:
    """Embed the ensemble's projectors and measure the simplex they span."""
    dim = ens.dim
    coords = np.array([hermitian_coords(projector(s)) for s in ens.states])
    center = np.zeros(dim * dim)
    center[0] = 1.0 / np.sqrt(dim)  # coordinates of I/N in the fixed basis
    radii = np.linalg.norm(coords - center, axis=1) / np.sqrt(2.0)
    if len(ens) == 1:
        edge_min = edge_max = edge_mean = 0.0
    else:
        diff = coords[:, None, :] - coords[None, :, :]
        hs_sq = 0.5 * np.sum(diff * diff, axis=2)
        pairs = hs_sq[np.triu_indices(len(ens), k=1)]
        edge_min = float(np.min(pairs))
        edge_max = float(np.max(pairs))
        edge_mean = float(np.mean(pairs))
    return SimplexReport(
        dim=dim,
        edge_min=edge_min,
        edge_max=edge_max,
        edge_mean=edge_mean,
        edge_target=dim / (dim + 1.0),
        regular=bool(edge_max - edge_min <= regularity_tol),
        regularity_tol=float(regularity_tol),
        outsphere_radius=outsphere_radius(dim),
        center_distance_min=float(np.min(radii)),
        center_distance_max=float(np.max(radii)),
    )
