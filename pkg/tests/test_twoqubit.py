import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from relinfo.ensemble import so2_rotation
from relinfo.qubit import polar_state
from relinfo.twoqubit import (
    SchmidtParams,
    apply_local,
    bell_states,
    concurrence_wootters,
    fidelity,
    pair_state,
    reduced_density_first,
    schmidt_state,
    schmidt_state_from,
    sigma_z_in_basis,
    swap_qubits,
    tangle,
    tensor,
)

S = 1 / np.sqrt(2)
angles = st.floats(0.0, 2 * np.pi, allow_nan=False)


def random_schmidt(rng, n):
    a, b, tn, tm = rng.uniform(0, 2 * np.pi, (4, n))
    return a, schmidt_state(a, b, tn, tm)


def test_tensor_examples():
    e0, e1 = np.array([1.0, 0]), np.array([0, 1.0])
    np.testing.assert_array_equal(tensor(e0, e0), [1, 0, 0, 0])
    np.testing.assert_array_equal(tensor(e0, e1), [0, 1, 0, 0])
    np.testing.assert_allclose(tensor(polar_state(np.pi / 2), polar_state(np.pi / 2)), [0.5] * 4)


def test_tensor_matches_kron(rng):
    a, b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    np.testing.assert_allclose(tensor(a, b), np.kron(a, b))


def test_schmidt_state_examples():
    np.testing.assert_allclose(schmidt_state(0, 0), [1, 0, 0, 0], atol=1e-15)
    # minus sign between the Schmidt terms: alpha=pi/2, beta=0 is phi-
    np.testing.assert_allclose(schmidt_state(np.pi / 2, 0), [S, 0, 0, -S], atol=1e-15)
    # beta=pi: e^{-i pi/2}/sqrt2 |00> - e^{i pi/2}/sqrt2 |11> = -i phi+
    np.testing.assert_allclose(schmidt_state(np.pi / 2, np.pi), -1j * np.array([S, 0, 0, S]), atol=1e-15)


def test_schmidt_params_wraps_and_builds():
    p = SchmidtParams(alpha=-np.pi / 2, beta=7.0, theta_n=0.3, theta_m=9.0)
    assert 0 <= p.alpha < 2 * np.pi and 0 <= p.theta_m < 2 * np.pi
    # 2pi shifts of the half-angles only flip the global sign
    assert fidelity(schmidt_state_from(p), schmidt_state(-np.pi / 2, 7.0, 0.3, 9.0)) == pytest.approx(1, abs=1e-14)


def test_schmidt_state_matches_explicit_kron():
    a, b, tn, tm = 0.9, 2.2, 0.4, 5.1
    n, m = polar_state(tn), polar_state(tm)
    nn, mm = polar_state(tn + np.pi), polar_state(tm + np.pi)
    expected = (np.exp(-0.5j * b) * np.cos(a / 2) * np.kron(n, m)
                - np.exp(0.5j * b) * np.sin(a / 2) * np.kron(nn, mm))
    np.testing.assert_allclose(schmidt_state(a, b, tn, tm), expected, atol=1e-15)


def test_pair_state_examples():
    np.testing.assert_allclose(pair_state(-1, 0, 0), [0, S, -S, 0], atol=1e-15)
    np.testing.assert_allclose(pair_state(+1, 0, 0), [0, S, S, 0], atol=1e-15)
    for sign in (1, -1):
        psi = pair_state(sign, 0.7, 2.1)
        assert psi.dtype == np.float64
        assert tangle(psi) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        pair_state(0, 0, 0)


def test_bell_states_orthonormal_and_swap():
    b = bell_states()
    vecs = np.array(list(b.values()))
    np.testing.assert_allclose(vecs.conj() @ vecs.T, np.eye(4), atol=1e-15)
    np.testing.assert_allclose(swap_qubits(b["psi-"]), -b["psi-"])
    for key in ("phi+", "phi-", "psi+"):
        np.testing.assert_allclose(swap_qubits(b[key]), b[key])


def test_reduced_density_examples():
    np.testing.assert_allclose(reduced_density_first(np.array([1, 0, 0, 0])), np.diag([1, 0]))
    np.testing.assert_allclose(reduced_density_first(bell_states()["phi+"]), np.eye(2) / 2, atol=1e-15)
    r = reduced_density_first(schmidt_state(np.pi / 3, 0.4))
    np.testing.assert_allclose(r, np.diag([np.cos(np.pi / 6) ** 2, np.sin(np.pi / 6) ** 2]), atol=1e-15)


def test_reduced_density_brute_force(rng):
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi /= np.linalg.norm(psi)
    full = np.outer(psi, psi.conj()).reshape(2, 2, 2, 2)
    expected = sum(full[:, k, :, k] for k in range(2))
    np.testing.assert_allclose(reduced_density_first(psi), expected, atol=1e-15)


def test_entanglement_examples():
    product = tensor(polar_state(0.3), polar_state(2.0))
    assert tangle(product) == pytest.approx(0, abs=1e-15)
    assert concurrence_wootters(product) == pytest.approx(0, abs=1e-15)
    for psi in bell_states().values():
        assert tangle(psi) == pytest.approx(1, abs=1e-12)
        assert concurrence_wootters(psi) == pytest.approx(1, abs=1e-12)
    psi = schmidt_state(np.pi / 3, 0.2, 1.0, 2.0)
    # numeric determinant of the reduced state
    assert tangle(psi) == pytest.approx(4 * np.linalg.det(reduced_density_first(psi)).real)
    assert tangle(psi) == pytest.approx(0.75, abs=1e-12)
    assert concurrence_wootters(psi) == pytest.approx(np.sin(np.pi / 3), abs=1e-12)


def test_tangle_is_concurrence_squared(rng):
    _, psi = random_schmidt(rng, 1000)
    np.testing.assert_allclose(tangle(psi), concurrence_wootters(psi) ** 2, atol=1e-10)


def test_tangle_grid_beta_independent():
    a = np.linspace(0, 2 * np.pi, 10, endpoint=False)
    b = np.linspace(0, 2 * np.pi, 10, endpoint=False)
    t = np.linspace(0, 2 * np.pi, 5, endpoint=False)
    A, B, TN, TM = np.meshgrid(a, b, t, t, indexing="ij")
    np.testing.assert_allclose(tangle(schmidt_state(A, B, TN, TM)), np.sin(A) ** 2, atol=1e-12)


@given(angles, angles, angles, angles)
def test_constructors_unit_norm(a, b, tn, tm):
    assert abs(np.linalg.norm(schmidt_state(a, b, tn, tm)) - 1) < 1e-12
    for sign in (1, -1):
        assert abs(np.linalg.norm(pair_state(sign, tn, tm)) - 1) < 1e-12


@given(angles)
def test_singlet_like_antisymmetric_on_diagonal(theta):
    psi = pair_state(-1, theta, theta)
    np.testing.assert_allclose(swap_qubits(psi), -psi, atol=1e-12)


def test_apply_local():
    psi = schmidt_state(1.0, 0.5, 0.2, 0.3)
    np.testing.assert_allclose(apply_local(np.eye(2), np.eye(2), psi), psi)
    with pytest.raises(ValueError):
        apply_local(np.diag([1.0, 2.0]), np.eye(2), psi)


@given(angles, angles, angles, angles, angles, angles)
def test_local_rotation_preserves_tangle_and_norm(a, b, tn, tm, p1, p2):
    psi = schmidt_state(a, b, tn, tm)
    out = apply_local(so2_rotation(p1), so2_rotation(p2), psi)
    assert abs(np.linalg.norm(out) - 1) < 1e-12
    assert abs(tangle(out) - tangle(psi)) < 1e-12


@pytest.mark.parametrize("sign", [1, -1])
def test_rotation_advances_pair_state(sign):
    # R(phi) rotates the Bloch direction by 2 phi in the x-z plane
    tn, tm, p1, p2 = 0.4, 1.3, 0.25, -0.7
    out = apply_local(so2_rotation(p1), so2_rotation(p2), pair_state(sign, tn, tm))
    np.testing.assert_allclose(out, pair_state(sign, tn + 2 * p1, tm + 2 * p2), atol=1e-14)


def test_sigma_z_in_basis_examples():
    np.testing.assert_allclose(sigma_z_in_basis(0), np.diag([1, -1]), atol=1e-15)
    n, m = polar_state(np.pi / 2), polar_state(3 * np.pi / 2)
    np.testing.assert_allclose(sigma_z_in_basis(np.pi / 2), np.outer(n, n) - np.outer(m, m))
    np.testing.assert_allclose(sigma_z_in_basis(np.pi / 2), [[0, 1], [1, 0]], atol=1e-15)
    u = sigma_z_in_basis(0.3)
    np.testing.assert_allclose(u @ u.T, np.eye(2), atol=1e-15)
    np.testing.assert_allclose(u, u.T)


@given(angles, angles)
def test_sigma_z_relates_pair_states(tn, tm):
    mapped = apply_local(sigma_z_in_basis(tn), np.eye(2), pair_state(+1, tn, tm))
    assert abs(fidelity(pair_state(-1, tn, tm), mapped) - 1) < 1e-12
