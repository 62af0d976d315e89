"""Polar-circle averaged density operators of Schmidt-form states.

Averaging ``|psi><psi|`` over independent uniform Schmidt directions on the
x-z great circle leaves a two-parameter state that depends on (alpha, beta)
only through the mixing parameter ``q = sin(alpha) cos(beta)``::

    rho(q) = (1 - q)/4 * E1 + (1 + q)/4 * E2

with E1, E2 the Bell-plane projectors of :mod:`relinfo.measurement`.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .qubit import TWO_PI, sample_polar
from .twoqubit import schmidt_state

Q_TOL = 1e-12


class SpectralDecomp(NamedTuple):
    eigenvalues: np.ndarray  # descending
    eigenvectors: np.ndarray  # column k belongs to eigenvalues[k]

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def q_of(alpha, beta):
    return np.sin(alpha) * np.cos(beta)


def check_density(rho: np.ndarray, tol: float = 1e-12) -> None:
    """Raise ``ValueError`` unless ``rho`` is a 4x4 Hermitian PSD unit-trace matrix."""
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.abs(rho - rho.conj().T).max() > tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > tol:
        raise ValueError(f"trace {np.trace(rho).real:.3g} != 1")
    if np.linalg.eigvalsh(rho).min() < -tol:
        raise ValueError("density matrix has a negative eigenvalue")


def rho_analytic(q: float) -> np.ndarray:
    """Closed-form averaged state in the computational basis."""
    if abs(q) > 1 + Q_TOL:
        raise ValueError(f"|q| must be <= 1, got {q}")
    return 0.25 * np.array(
        [
            [1, 0, 0, -q],
            [0, 1, q, 0],
            [0, q, 1, 0],
            [-q, 0, 0, 1],
        ],
        dtype=complex,
    )


def rho_quadrature(alpha: float, beta: float, grid_points: int = 16) -> np.ndarray:
    """Average over an N x N periodic trapezoidal grid of Schmidt directions.

    Every matrix entry is a trigonometric polynomial of degree one in each
    direction angle, so the rule is exact up to roundoff once N >= 8.
    """
    if grid_points < 8:
        raise ValueError("grid must be >= 8")
    theta = TWO_PI * np.arange(grid_points) / grid_points
    tn, tm = np.meshgrid(theta, theta, indexing="ij")
    psi = schmidt_state(alpha, beta, tn, tm).reshape(-1, 4)
    return np.einsum("ki,kj->ij", psi, psi.conj()) / psi.shape[0]


def rho_montecarlo(alpha: float, beta: float, trials: int, rng: np.random.Generator) -> np.ndarray:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    tn = sample_polar(rng, trials)
    tm = sample_polar(rng, trials)
    psi = schmidt_state(alpha, beta, tn, tm)
    return np.einsum("ki,kj->ij", psi, psi.conj()) / trials


def eigendecompose(rho: np.ndarray) -> SpectralDecomp:
    w, v = np.linalg.eigh(rho)
    order = np.argsort(w)[::-1]
    return SpectralDecomp(w[order], v[:, order])


def so2_rotation(phi: float) -> np.ndarray:
    c, s = np.cos(phi), np.sin(phi)
    return np.array([[c, -s], [s, c]])


def invariance_defect(rho: np.ndarray, phi1: float, phi2: float) -> float:
    """Max-entry change of ``rho`` under conjugation by R(phi1) (x) R(phi2)."""
    u = np.kron(so2_rotation(phi1), so2_rotation(phi2))
    return float(np.abs(u @ rho @ u.T - rho).max())


def separability_margin(q: float) -> float:
    """``max(|2f-1|-1, |2g-1|-1)`` with ``f = (1+q)/2``, ``g = (1-q)/2``.

    Non-positive means the averaged state is separable.
    """
    if abs(q) > 1 + Q_TOL:
        raise ValueError(f"|q| must be <= 1, got {q}")
    f = 0.5 * (1 + q)
    g = 0.5 * (1 - q)
    return max(abs(2 * f - 1) - 1, abs(2 * g - 1) - 1)
