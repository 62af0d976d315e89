"""Single-qubit pure states on the Bloch sphere.

Convention: ``|n(theta)> = cos(theta/2)|0> + sin(theta/2)|1>`` with ``|+z> = |0>``,
so every direction on the x-z great circle has real amplitudes. The opposite
direction ``|-n>`` is ``|n(theta + pi)>`` with no extra phase.

Functions accept scalars or numpy arrays; state vectors carry the amplitude
axis last.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

TWO_PI = 2.0 * np.pi


class SpherePoint(NamedTuple):
    theta: float | np.ndarray  # polar angle in [0, pi]
    phi: float | np.ndarray  # azimuth in [0, 2pi)


def wrap_angle(theta):
    """Reduce an angle (or array of angles) into [0, 2pi)."""
    out = np.mod(theta, TWO_PI)
    # np.mod can return exactly 2pi for tiny negative inputs
    out = np.where(out >= TWO_PI, 0.0, out)
    return float(out) if np.ndim(out) == 0 else out


def polar_state(theta) -> np.ndarray:
    """Real qubit state for the x-z great-circle direction at angle ``theta``."""
    theta = np.asarray(theta, dtype=float)
    return np.stack([np.cos(theta / 2), np.sin(theta / 2)], axis=-1)


def antipode(theta):
    """Polar angle of the opposite Bloch direction."""
    return wrap_angle(np.asarray(theta, dtype=float) + np.pi)


def sphere_state(p: SpherePoint) -> np.ndarray:
    theta = np.asarray(p.theta, dtype=float)
    phi = np.asarray(p.phi, dtype=float)
    return np.stack(
        [np.cos(theta / 2) + 0j, np.exp(1j * phi) * np.sin(theta / 2)], axis=-1
    )


def sphere_antipode(p: SpherePoint) -> SpherePoint:
    """Opposite point on the sphere; its state is orthogonal to ``sphere_state(p)``."""
    return SpherePoint(np.pi - np.asarray(p.theta), wrap_angle(np.asarray(p.phi) + np.pi))


def sample_polar(rng: np.random.Generator, size=None):
    """Uniform angle(s) on the polar great circle."""
    return rng.uniform(0.0, TWO_PI, size=size)


def sample_sphere(rng: np.random.Generator, size=None) -> SpherePoint:
    """Area-uniform point(s) on the Bloch sphere (cos theta uniform on [-1, 1])."""
    cos_theta = rng.uniform(-1.0, 1.0, size=size)
    phi = rng.uniform(0.0, TWO_PI, size=size)
    return SpherePoint(np.arccos(cos_theta), phi)


def overlap(a: np.ndarray, b: np.ndarray):
    """Inner product <a|b> (conjugating ``a``) over the last axis."""
    out = np.sum(np.conj(a) * b, axis=-1)
    return complex(out) if np.ndim(out) == 0 else out
