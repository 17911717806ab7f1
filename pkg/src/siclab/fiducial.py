"""Numerical search for Weyl-Heisenberg SIC fiducial vectors.

A candidate state is scored by the equiangularity loss

    L(psi) = sum over p != (0,0) of ( |<psi|D_p psi>|^2 - 1/(N+1) )^2,

which vanishes exactly when the orbit of psi is equiangular. The state is
parametrized by 2N raw reals (re/im interleaved) and normalized inside the
loss, so the optimizer runs unconstrained; the global phase stays free during
descent and is fixed only when a result is serialized.

Minimization is plain gradient descent with monotone Armijo backtracking
(factor 1/2, c = 1e-4). The trial step for each iteration is the
Barzilai-Borwein length s.s/s.y from the previous displacement; this is still
steepest descent (no curvature matrix is built), but it lets the accepted
step swing across the many orders of magnitude the loss landscape demands,
which a fixed or doubling trial cannot do in the nearly flat valleys that
dimension 3 produces. Restarts draw starts from independent PCG64 streams
seeded seed + restart_index, so the restart loop is reproducible and could be
run in parallel; the best result is merged order-independently with ties
broken by lowest restart index.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .linalg import StateVector
from .weyl import _displacement_table

_STEP_MAX = 1e30  # safety cap on the trial step


@dataclass(frozen=True)
class SearchConfig:
    """Reproducible search specification.

    ``loss_tolerance`` is the convergence target for the loss; note that a
    converged loss of t bounds every pair residual by sqrt(t), so certifying
    the orbit at tolerance r requires loss_tolerance <= r^2.
    """

    dim: int
    seed: int = 1
    restarts: int = 20
    max_iterations: int = 10000
    loss_tolerance: float = 1e-16
    initial_step: float = 1.0
    backtrack_factor: float = 0.5
    min_step: float = 1e-14
    armijo_c: float = 1e-4

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be a positive integer")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.loss_tolerance <= 0:
            raise ValueError("loss_tolerance must be positive")
        if self.initial_step <= 0 or self.min_step <= 0:
            raise ValueError("step sizes must be positive")
        if not 0 < self.backtrack_factor < 1:
            raise ValueError("backtrack_factor must lie in (0, 1)")
        if not 0 < self.armijo_c < 1:
            raise ValueError("armijo_c must lie in (0, 1)")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one optimization run; converged implies
    loss <= loss_tolerance of the config that produced it."""

    fiducial: StateVector
    loss: float
    iterations_used: int
    restart_index: int
    converged: bool


@lru_cache(maxsize=None)
def _loss_stacks(dim: int):
    """Flattened displacement stacks for the p != (0,0) loss terms."""
    table = _displacement_table(dim)[1:]  # drop the identity at (0,0)
    flat = table.reshape(-1, dim)
    flat_dag = table.conj().transpose(0, 2, 1).reshape(-1, dim)
    flat.setflags(write=False)
    flat_dag.setflags(write=False)
    return flat, flat_dag


def _params_to_state(params: np.ndarray) -> np.ndarray:
    x = np.asarray(params, dtype=float)
    if x.ndim != 1 or x.size == 0 or x.size % 2:
        raise ValueError("params must be a real vector of even length 2N")
    if not np.all(np.isfinite(x)):
        raise ValueError("params must be finite")
    return x[0::2] + 1j * x[1::2]


def _loss_raw(z: np.ndarray, dim: int) -> float:
    if dim == 1:
        return 0.0
    flat, _ = _loss_stacks(dim)
    n = float(np.real(np.vdot(z, z)))
    dz = (flat @ z).reshape(-1, dim)
    g = dz @ z.conj()
    t = (g.real**2 + g.imag**2) / (n * n)
    r = t - 1.0 / (dim + 1)
    return float(r @ r)


def _grad_raw(z: np.ndarray, dim: int) -> np.ndarray:
    """Gradient with respect to the 2N raw reals, by the chain rule through
    the normalization and the quartic overlap terms."""
    out = np.empty(2 * z.size)
    if dim == 1:
        out[:] = 0.0
        return out
    flat, flat_dag = _loss_stacks(dim)
    n = float(np.real(np.vdot(z, z)))
    dz = (flat @ z).reshape(-1, dim)
    ddagz = (flat_dag @ z).reshape(-1, dim)
    g = dz @ z.conj()
    t = (g.real**2 + g.imag**2) / (n * n)
    r = t - 1.0 / (dim + 1)
    coef = 2.0 * r / (n * n)
    # dL/d(conj z); the raw gradient is twice its real/imag parts.
    wirt = (coef * g.conj()) @ dz + (coef * g) @ ddagz \
        - (2.0 * float(np.sum(coef * (g.real**2 + g.imag**2))) / n) * z
    out[0::2] = 2.0 * wirt.real
    out[1::2] = 2.0 * wirt.imag
    return out


def loss(fiducial: StateVector) -> float:
    """Equiangularity loss of a unit state; zero iff its orbit is a SIC."""
    return _loss_raw(fiducial.data, fiducial.dim)


def loss_gradient(params: np.ndarray) -> np.ndarray:
    """Gradient of loss(normalize(params)) with respect to the raw params."""
    z = _params_to_state(params)
    if float(np.real(np.vdot(z, z))) == 0.0:
        raise ValueError("params must describe a nonzero vector")
    return _grad_raw(z, z.size)


def loss_of_params(params: np.ndarray) -> float:
    """Loss of the state the raw params normalize to."""
    z = _params_to_state(params)
    if float(np.real(np.vdot(z, z))) == 0.0:
        raise ValueError("params must describe a nonzero vector")
    return _loss_raw(z, z.size)


def optimize(start: np.ndarray, cfg: SearchConfig,
             history: list | None = None) -> SearchResult:
    """Descend from one starting point.

    Terminates on loss <= cfg.loss_tolerance, on the line search failing to
    find an acceptable step above cfg.min_step, or on cfg.max_iterations.
    Deterministic for fixed inputs. When ``history`` is given, the loss after
    each accepted step is appended to it.
    """
    z = _params_to_state(start)
    if z.size != cfg.dim:
        raise ValueError(f"start has dimension {z.size}, config says {cfg.dim}")
    if float(np.real(np.vdot(z, z))) == 0.0:
        raise ValueError("start must be a nonzero vector")
    x = np.asarray(start, dtype=float).copy()
    f = _loss_raw(z, cfg.dim)
    g = _grad_raw(z, cfg.dim)
    x_prev = g_prev = None
    last_step = cfg.initial_step
    iterations = 0
    while iterations < cfg.max_iterations and f > cfg.loss_tolerance:
        gg = float(g @ g)
        if gg == 0.0:
            break
        if x_prev is None:
            alpha = cfg.initial_step
        else:
            s = x - x_prev
            y = g - g_prev
            sy = float(s @ y)
            alpha = float(s @ s) / sy if sy > 0.0 else 2.0 * last_step
        alpha = min(max(alpha, cfg.min_step), _STEP_MAX)
        accepted = False
        while alpha >= cfg.min_step:
            xn = x - alpha * g
            fn = _loss_raw(xn[0::2] + 1j * xn[1::2], cfg.dim)
            if fn <= f - cfg.armijo_c * alpha * gg:
                accepted = True
                break
            alpha *= cfg.backtrack_factor
        if not accepted:
            break
        x_prev, g_prev = x, g
        x = xn
        f = fn
        g = _grad_raw(x[0::2] + 1j * x[1::2], cfg.dim)
        last_step = alpha
        iterations += 1
        if history is not None:
            history.append(f)
    return SearchResult(
        fiducial=StateVector.normalized(x[0::2] + 1j * x[1::2]),
        loss=f,
        iterations_used=iterations,
        restart_index=0,
        converged=bool(f <= cfg.loss_tolerance),
    )


def restart_start(cfg: SearchConfig, restart_index: int) -> np.ndarray:
    """Starting params of a given restart: standard normal components from
    the PCG64 stream seeded (seed + restart_index) mod 2^64, which is uniform
    on the sphere after the normalization inside the loss."""
    stream = np.random.PCG64((cfg.seed + restart_index) % 2**64)
    return np.random.Generator(stream).standard_normal(2 * cfg.dim)


def search(cfg: SearchConfig) -> SearchResult:
    """Best-loss result over cfg.restarts independent descents."""
    best = None
    for k in range(cfg.restarts):
        result = replace(optimize(restart_start(cfg, k), cfg), restart_index=k)
        if best is None or result.loss < best.loss:
            best = result
    return best


def gauge_fixed(psi: StateVector) -> StateVector:
    """Rotate the global phase so the first nonzero component is real and
    nonnegative. Applied only at serialization time."""
    v = psi.data
    idx = int(np.argmax(np.abs(v) > 1e-14))
    pivot = v[idx]
    if pivot == 0.0:  # argmax of all-False is 0; fall back to largest entry
        idx = int(np.argmax(np.abs(v)))
        pivot = v[idx]
    rotated = v * np.conj(pivot / abs(pivot))
    rotated[idx] = abs(pivot)  # exactly real, not just up to rounding
    return StateVector(rotated)
