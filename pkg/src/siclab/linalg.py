"""Dense complex linear algebra for small dimensions.

State vectors, Hermitian/unitary matrices with validated invariants, the
trace metric d^2(A, B) = Tr(A - B)^2 / 2 on Hermitian matrices, and a cyclic
Jacobi eigenvalue solver. Everything is immutable after construction and all
operations are pure functions, so values can be shared freely across threads.
"""

from __future__ import annotations

import numpy as np

NORM_TOL = 1e-12        # |norm^2 - 1| allowed for state vectors
HERMITIAN_TOL = 1e-12   # max|A - A^dag| allowed
TRACE_TOL = 1e-12       # |Tr(rho) - 1| allowed for density matrices
PSD_TOL = 1e-10         # smallest eigenvalue >= -PSD_TOL for density matrices
UNITARY_TOL = 1e-10     # max|U^dag U - I| allowed
JACOBI_OFF_TOL = 1e-13  # off-diagonal Frobenius norm at which sweeps stop


def _as_complex_vector(entries) -> np.ndarray:
    # always a fresh array: the caller's buffer must not end up frozen
    v = np.array(entries, dtype=np.complex128, copy=True)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("expected a nonempty one-dimensional complex vector")
    if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
        raise ValueError("vector entries must be finite")
    return v


def _as_complex_matrix(entries) -> np.ndarray:
    m = np.array(entries, dtype=np.complex128, copy=True)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError("expected a nonempty square matrix")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


class StateVector:
    """A unit-norm complex vector; rejects entries whose norm is off by more
    than NORM_TOL. Use :meth:`normalized` to build one from an arbitrary
    nonzero vector (the optimizer produces un-normalized iterates)."""

    __slots__ = ("data",)

    def __init__(self, entries):
        v = _as_complex_vector(entries)
        nrm2 = float(np.real(np.vdot(v, v)))
        if abs(nrm2 - 1.0) > NORM_TOL:
            raise ValueError(f"state vector has squared norm {nrm2!r}, not 1")
        v.setflags(write=False)
        object.__setattr__(self, "data", v)

    @classmethod
    def normalized(cls, entries) -> "StateVector":
        """Scale an arbitrary nonzero vector to unit norm."""
        v = _as_complex_vector(entries)
        nrm = float(np.linalg.norm(v))
        if nrm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(v / nrm)

    def __setattr__(self, name, value):
        raise AttributeError("StateVector is immutable")

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def __repr__(self):
        return f"StateVector({self.data.tolist()!r})"


class SquareMatrix:
    """A square complex matrix with finite entries."""

    __slots__ = ("data",)

    def __init__(self, entries):
        m = self._validate(_as_complex_matrix(entries))
        m.setflags(write=False)
        object.__setattr__(self, "data", m)

    def _validate(self, m: np.ndarray) -> np.ndarray:
        return m

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def __repr__(self):
        return f"{type(self).__name__}({self.data.tolist()!r})"


class HermitianMatrix(SquareMatrix):
    """Square matrix with max|A - A^dag| <= HERMITIAN_TOL.

    Inputs are never symmetrized implicitly; use :func:`hermitian_part` to do
    so explicitly.
    """

    __slots__ = ()

    def _validate(self, m: np.ndarray) -> np.ndarray:
        dev = float(np.max(np.abs(m - m.conj().T)))
        if dev > HERMITIAN_TOL:
            raise ValueError(f"matrix deviates from Hermitian by {dev:.3e}")
        return m


class DensityMatrix(HermitianMatrix):
    """Hermitian matrix with unit trace and spectrum >= -PSD_TOL."""

    __slots__ = ()

    def _validate(self, m: np.ndarray) -> np.ndarray:
        m = super()._validate(m)
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix has trace {tr!r}, not 1")
        low = float(_jacobi_eigenvalues(m)[0])
        if low < -PSD_TOL:
            raise ValueError(f"density matrix has eigenvalue {low:.3e} < 0")
        return m


class UnitaryOperator(SquareMatrix):
    """Square matrix with max|U^dag U - I| <= UNITARY_TOL."""

    __slots__ = ()

    def _validate(self, m: np.ndarray) -> np.ndarray:
        dev = float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))
        if dev > UNITARY_TOL:
            raise ValueError(f"matrix deviates from unitary by {dev:.3e}")
        return m


def _check_dims(a, b) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def inner(u: StateVector, v: StateVector) -> complex:
    """Bracket <u|v>, conjugate-linear in the first argument."""
    _check_dims(u, v)
    return complex(np.vdot(u.data, v.data))


def projector(psi: StateVector) -> DensityMatrix:
    """Rank-one projector |psi><psi|."""
    return DensityMatrix(np.outer(psi.data, psi.data.conj()))


def hs_distance_sq(a: HermitianMatrix, b: HermitianMatrix) -> float:
    """Squared trace distance Tr(A - B)^2 / 2 between Hermitian matrices.

    For Hermitian arguments this equals half the squared Frobenius norm of
    A - B, which is how it is evaluated (manifestly real and nonnegative).
    """
    _check_dims(a, b)
    diff = a.data - b.data
    return 0.5 * float(np.sum(diff.real**2 + diff.imag**2))


def apply_unitary(u: UnitaryOperator, psi: StateVector) -> StateVector:
    """|psi> -> U|psi>; the result is validated to still be unit norm."""
    _check_dims(u, psi)
    return StateVector(u.data @ psi.data)


def conjugate(u: UnitaryOperator, a: HermitianMatrix) -> HermitianMatrix:
    """A -> U A U^dag. Preserves trace, spectrum, and rank-one projectors."""
    _check_dims(u, a)
    return HermitianMatrix(u.data @ a.data @ u.data.conj().T)


def hermitian_part(entries) -> HermitianMatrix:
    """Explicit symmetrization (A + A^dag) / 2 of a square matrix."""
    m = _as_complex_matrix(entries)
    return HermitianMatrix((m + m.conj().T) / 2.0)


def _jacobi_eigenvalues(a: np.ndarray, off_tol: float = JACOBI_OFF_TOL,
                        max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.

    Each rotation zeroes one off-diagonal pair; sweeps repeat until the
    off-diagonal Frobenius norm drops below ``off_tol``. Suited to the O(1)
    matrix norms used here; inputs with much larger norm may not reach an
    absolute 1e-13 floor.
    """
    a = np.array(a, dtype=np.complex128)
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0].real])
    for _ in range(max_sweeps):
        off2 = float(np.sum(np.abs(a) ** 2) - np.sum(np.abs(np.diag(a)) ** 2))
        if off2 < off_tol * off_tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                m = abs(a[p, q])
                if m == 0.0:
                    continue
                phase = a[p, q] / m
                tau = (a[q, q].real - a[p, p].real) / (2.0 * m)
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # Unitary R differing from identity only in rows/cols p,q:
                # R[p,p]=c, R[p,q]=s, R[q,p]=-s*conj(phase), R[q,q]=c*conj(phase);
                # A <- R^dag A R annihilates A[p,q].
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * np.conj(phase) * colq
                a[:, q] = s * colp + c * np.conj(phase) * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * phase * rowq
                a[q, :] = s * rowp + c * phase * rowq
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return np.sort(np.diag(a).real)


def jacobi_eigenvalues(a: HermitianMatrix) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending."""
    return _jacobi_eigenvalues(a.data)


def min_eigenvalue(a: HermitianMatrix) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    return float(_jacobi_eigenvalues(a.data)[0])
