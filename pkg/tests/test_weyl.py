import numpy as np
import pytest

from siclab import (
    DisplacementIndex,
    SicEnsemble,
    StateVector,
    clock,
    displacement,
    equiangularity_residual,
    identity_residual,
    inner,
    orbit,
    projector,
    shift,
)
from conftest import random_state


def test_clock_examples():
    assert np.array_equal(clock(1).data, [[1]])
    assert np.allclose(clock(2).data, np.diag([1, -1]))
    w = np.exp(2j * np.pi / 3)
    assert np.allclose(clock(3).data, np.diag([1, w, w**2]))


def test_shift_examples():
    assert np.array_equal(shift(1).data, [[1]])
    assert np.allclose(shift(2).data, [[0, 1], [1, 0]])
    assert np.allclose(shift(3).data @ [1, 0, 0], [0, 1, 0])


@pytest.mark.parametrize("n", range(1, 9))
def test_clock_shift_order(n):
    assert np.allclose(np.linalg.matrix_power(clock(n).data, n), np.eye(n), atol=1e-12)
    assert np.allclose(np.linalg.matrix_power(shift(n).data, n), np.eye(n), atol=1e-12)


@pytest.mark.parametrize("n", range(1, 9))
def test_commutation(n):
    # With X e_j = e_{j+1} and Z = diag(w^j), the relation is Z X = w X Z.
    x, z = shift(n).data, clock(n).data
    w = np.exp(2j * np.pi / n)
    assert np.allclose(z @ x, w * (x @ z), atol=1e-12)


def test_rejects_dimension_zero():
    with pytest.raises(ValueError):
        clock(0)
    with pytest.raises(ValueError):
        shift(0)
    with pytest.raises(ValueError):
        DisplacementIndex(0, 0, 0)


def test_displacement_index_reduced_mod_n():
    idx = DisplacementIndex(5, -1, 3)
    assert (idx.p1, idx.p2) == (2, 2)


def test_displacement_identity():
    for n in range(1, 6):
        assert np.allclose(displacement(DisplacementIndex(0, 0, n)).data,
                           np.eye(n), atol=1e-14)


def test_displacement_formula_instance():
    # tau^0 X at N=2
    assert np.allclose(displacement(DisplacementIndex(1, 0, 2)).data,
                       [[0, 1], [1, 0]], atol=1e-14)


@pytest.mark.parametrize("n", range(1, 9))
def test_displacement_unitarity_sweep(n):
    for p1 in range(n):
        for p2 in range(n):
            d = displacement(DisplacementIndex(p1, p2, n)).data
            assert np.max(np.abs(d.conj().T @ d - np.eye(n))) < 1e-12


@pytest.mark.parametrize("n", range(1, 7))
def test_dagger_proportional_to_negated_index(n):
    for p1 in range(n):
        for p2 in range(n):
            d = displacement(DisplacementIndex(p1, p2, n)).data
            dm = displacement(DisplacementIndex(-p1, -p2, n)).data
            k = np.unravel_index(np.argmax(np.abs(dm)), dm.shape)
            lam = d.conj().T[k] / dm[k]
            assert abs(abs(lam) - 1) < 1e-12
            assert np.max(np.abs(d.conj().T - lam * dm)) < 1e-12
            if n % 2:  # the tau convention makes this exact for odd N
                assert np.max(np.abs(d.conj().T - dm)) < 1e-12


@pytest.mark.parametrize("n", range(1, 7))
def test_group_law_up_to_phase(n):
    # |Tr(D_{p+q}^dag D_p D_q)| = N: products differ from the sum index by
    # a unimodular phase only.
    for p1 in range(n):
        for p2 in range(n):
            for q1 in range(n):
                for q2 in range(n):
                    dpq = displacement(DisplacementIndex(p1 + q1, p2 + q2, n)).data
                    dp = displacement(DisplacementIndex(p1, p2, n)).data
                    dq = displacement(DisplacementIndex(q1, q2, n)).data
                    val = abs(np.trace(dpq.conj().T @ dp @ dq))
                    assert val == pytest.approx(n, abs=1e-10)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_displacement_matches_plain_python(n):
    import cmath
    import math

    from conftest import _matmul, _matpow

    w = cmath.exp(2j * math.pi / n)
    tau = cmath.exp(1j * math.pi * (n + 1) / n)
    clock_py = [[w**j if i == j else 0.0 for j in range(n)] for i in range(n)]
    shift_py = [[1.0 if i == (j + 1) % n else 0.0 for j in range(n)] for i in range(n)]
    for p1 in range(n):
        for p2 in range(n):
            mat = _matmul(_matpow(shift_py, p1), _matpow(clock_py, p2))
            expected = np.array(mat) * tau ** (p1 * p2)
            got = displacement(DisplacementIndex(p1, p2, n)).data
            assert np.max(np.abs(got - expected)) < 1e-13


def test_orbit_n1_is_single_state():
    fid = StateVector([1])
    ens = orbit(fid)
    assert len(ens) == 1
    assert ens.fiducial is ens.states[0]


def test_orbit_of_basis_vector_has_two_projectors():
    # Basis vectors are not SIC fiducials: the four orbit states collapse to
    # two distinct projectors.
    ens = orbit(StateVector([1, 0]))
    projs = [projector(s).data for s in ens.states]
    distinct = []
    for p in projs:
        if not any(np.allclose(p, q, atol=1e-12) for q in distinct):
            distinct.append(p)
    assert len(distinct) == 2


def test_orbit_structure(n2_fiducial):
    ens = orbit(n2_fiducial)
    assert len(ens) == 4
    assert np.array_equal(ens.states[0].data, n2_fiducial.data)
    # index (p1, p2) with p2 fastest
    d = displacement(DisplacementIndex(1, 0, 2)).data
    assert np.allclose(ens.states[2].data, d @ n2_fiducial.data, atol=1e-15)


def test_orbit_of_known_fiducial_is_equiangular(n2_fiducial):
    ens = orbit(n2_fiducial)
    target = 1 / 3
    for i in range(4):
        for j in range(4):
            if i != j:
                ov = abs(inner(ens.states[i], ens.states[j])) ** 2
                assert ov == pytest.approx(target, abs=1e-12)


def test_relabeling_preserves_overlaps(n3_fiducial):
    ens = orbit(n3_fiducial)
    rng = np.random.default_rng(31)
    d = displacement(DisplacementIndex(2, 1, 3)).data
    for _ in range(20):
        i, j = rng.integers(0, 9, size=2)
        lhs = abs(np.vdot(d @ ens.states[i].data, d @ ens.states[j].data))
        rhs = abs(inner(ens.states[i], ens.states[j]))
        assert lhs == pytest.approx(rhs, abs=1e-12)


@pytest.mark.parametrize("fixture", ["n2_fiducial", "n3_fiducial"])
def test_projector_orbit_is_covariant(fixture, request):
    # Conjugating every orbit projector by a displacement permutes the set.
    fid = request.getfixturevalue(fixture)
    n = fid.dim
    ens = orbit(fid)
    projs = [projector(s).data for s in ens.states]
    for r1, r2 in [(1, 0), (0, 1), (1, 1)]:
        d = displacement(DisplacementIndex(r1, r2, n)).data
        for p in projs:
            moved = d @ p @ d.conj().T
            matches = sum(np.max(np.abs(moved - q)) < 1e-10 for q in projs)
            assert matches == 1


def test_residuals_invariant_under_phase_convention(n3_fiducial):
    # The tau prefactor is pure convention: an orbit built from plain
    # X^p1 Z^p2 has identical residuals.
    n = 3
    x, z = shift(n).data, clock(n).data
    states = []
    for p1 in range(n):
        for p2 in range(n):
            mat = np.linalg.matrix_power(x, p1) @ np.linalg.matrix_power(z, p2)
            states.append(StateVector(mat @ n3_fiducial.data))
    bare = SicEnsemble(states)
    full = orbit(n3_fiducial)
    assert equiangularity_residual(bare) == pytest.approx(
        equiangularity_residual(full), abs=1e-14)
    assert identity_residual(bare) == pytest.approx(
        identity_residual(full), abs=1e-14)


class TestSicEnsembleValidation:
    def test_wrong_count(self):
        with pytest.raises(ValueError):
            SicEnsemble([StateVector([1, 0])])

    def test_mixed_dimensions(self):
        with pytest.raises(ValueError):
            SicEnsemble([StateVector([1]), StateVector([1, 0])])

    def test_rejects_non_states(self):
        with pytest.raises(ValueError):
            SicEnsemble([np.array([1, 0])] * 4)

    def test_state_matrix_rows(self):
        rng = np.random.default_rng(37)
        states = [random_state(rng, 2) for _ in range(4)]
        ens = SicEnsemble(states)
        assert np.array_equal(ens.state_matrix()[2], states[2].data)
