"""Two-qubit pure states, Bell basis, entanglement measures and local operations.

Amplitudes are ordered |00>, |01>, |10>, |11> (first qubit most significant).
Global phases are kept; compare states with :func:`fidelity`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qubit import overlap, polar_state, wrap_angle

SQRT_HALF = np.sqrt(0.5)
UNITARY_TOL = 1e-10

SIGMA_Y = np.array([[0, -1j], [1j, 0]])


@dataclass(frozen=True)
class SchmidtParams:
    """Entanglement angle, Schmidt phase and the two polar Schmidt directions."""

    alpha: float
    beta: float
    theta_n: float = 0.0
    theta_m: float = 0.0

    def __post_init__(self):
        for name in ("alpha", "beta", "theta_n", "theta_m"):
            object.__setattr__(self, name, wrap_angle(float(getattr(self, name))))


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product state a (x) b; broadcasts over leading axes."""
    a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
    return np.einsum("...i,...j->...ij", a, b).reshape(a.shape[:-1] + (4,))


def schmidt_state(alpha, beta, theta_n=0.0, theta_m=0.0) -> np.ndarray:
    """Schmidt-form state built on polar-circle directions n and m.

    Returns ``e^{-i beta/2} cos(alpha/2) |n>|m> - e^{i beta/2} sin(alpha/2) |-n>|-m>``.
    The minus sign between the terms is the phase convention under which the
    polar-circle average has mixing parameter ``q = sin(alpha) cos(beta)``
    (see :func:`relinfo.ensemble.rho_analytic`). At ``theta_n = theta_m = 0``,
    ``alpha = pi/2`` gives phi- for ``beta = 0`` and ``-i phi+`` for ``beta = pi``.

    All arguments broadcast, so arrays of angles give a stack of states.
    """
    alpha, beta, theta_n, theta_m = np.broadcast_arrays(
        *(np.asarray(x, dtype=float) for x in (alpha, beta, theta_n, theta_m))
    )
    near = tensor(polar_state(theta_n), polar_state(theta_m))
    far = tensor(polar_state(theta_n + np.pi), polar_state(theta_m + np.pi))
    c = (np.exp(-0.5j * beta) * np.cos(alpha / 2))[..., None]
    s = (np.exp(0.5j * beta) * np.sin(alpha / 2))[..., None]
    return c * near - s * far


def schmidt_state_from(p: SchmidtParams) -> np.ndarray:
    return schmidt_state(p.alpha, p.beta, p.theta_n, p.theta_m)


def pair_state(sign: int, theta_n, theta_m) -> np.ndarray:
    """``(|n>|-m> + sign |-n>|m>) / sqrt(2)`` for polar directions n, m.

    ``sign=-1`` is the singlet-like state (E1 plane), ``sign=+1`` the
    symmetric-like one (E2 plane).
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    theta_n = np.asarray(theta_n, dtype=float)
    theta_m = np.asarray(theta_m, dtype=float)
    first = tensor(polar_state(theta_n), polar_state(theta_m + np.pi))
    second = tensor(polar_state(theta_n + np.pi), polar_state(theta_m))
    return SQRT_HALF * (first + sign * second)


def bell_states() -> dict[str, np.ndarray]:
    """The four Bell states keyed ``psi+``, ``psi-``, ``phi+``, ``phi-``."""
    return {
        "psi+": SQRT_HALF * np.array([0, 1, 1, 0], dtype=complex),
        "psi-": SQRT_HALF * np.array([0, 1, -1, 0], dtype=complex),
        "phi+": SQRT_HALF * np.array([1, 0, 0, 1], dtype=complex),
        "phi-": SQRT_HALF * np.array([1, 0, 0, -1], dtype=complex),
    }


def swap_qubits(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi)
    return psi[..., [0, 2, 1, 3]]


def fidelity(a: np.ndarray, b: np.ndarray):
    """Phase-insensitive overlap magnitude |<a|b>|."""
    return np.abs(overlap(a, b))


def reduced_density_first(psi: np.ndarray) -> np.ndarray:
    """Trace out the second qubit."""
    m = np.asarray(psi).reshape(np.shape(psi)[:-1] + (2, 2))
    return np.einsum("...ij,...kj->...ik", m, m.conj())


def tangle(psi: np.ndarray):
    """``4 det Tr_2 |psi><psi|``; equals sin^2(alpha) for Schmidt-form states."""
    r = reduced_density_first(psi)
    det = r[..., 0, 0] * r[..., 1, 1] - r[..., 0, 1] * r[..., 1, 0]
    out = np.clip(4.0 * det.real, 0.0, 1.0)
    return float(out) if np.ndim(out) == 0 else out


def concurrence_wootters(psi: np.ndarray):
    """Pure-state concurrence ``|<psi| sigma_y (x) sigma_y |psi*>|``."""
    psi = np.asarray(psi)
    yy = np.kron(SIGMA_Y, SIGMA_Y)
    out = np.abs(np.einsum("...i,ij,...j->...", psi, yy, psi))
    return float(out) if np.ndim(out) == 0 else out


def is_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    u = np.asarray(u)
    return u.shape == (2, 2) and np.allclose(u @ u.conj().T, np.eye(2), rtol=0, atol=tol)


def apply_local(u1: np.ndarray, u2: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """Apply ``u1 (x) u2`` to a two-qubit state."""
    for name, u in (("u1", u1), ("u2", u2)):
        if not is_unitary(u):
            raise ValueError(f"{name} is not a 2x2 unitary")
    return np.asarray(psi) @ np.kron(u1, u2).T


def sigma_z_in_basis(theta) -> np.ndarray:
    """``|n><n| - |-n><-n|`` for the polar direction ``theta``."""
    n = polar_state(theta)
    m = polar_state(theta + np.pi)
    return np.outer(n, n) - np.outer(m, m)
