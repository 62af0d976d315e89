"""Two-qubit POVMs, Born-rule probabilities and outcome sampling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .twoqubit import bell_states

POVM_TOL = 1e-12
NEGATIVE_TOL = 1e-9


def projector(*vectors: np.ndarray) -> np.ndarray:
    """Sum of rank-one projectors onto the given (orthonormal) vectors."""
    return sum(np.outer(v, np.conj(v)) for v in vectors)


@dataclass(frozen=True)
class Povm:
    effects: tuple[np.ndarray, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.effects) != len(self.labels):
            raise ValueError("one label per effect required")
        effects = tuple(np.asarray(e, dtype=complex) for e in self.effects)
        for label, e in zip(self.labels, effects):
            if e.shape != (4, 4):
                raise ValueError(f"effect {label!r} is not 4x4")
            if np.abs(e - e.conj().T).max() > POVM_TOL:
                raise ValueError(f"effect {label!r} is not Hermitian")
            w = np.linalg.eigvalsh(e)
            if w.min() < -POVM_TOL or w.max() > 1 + POVM_TOL:
                raise ValueError(f"effect {label!r} has eigenvalues outside [0, 1]")
        if np.abs(sum(effects) - np.eye(4)).max() > POVM_TOL:
            raise ValueError("effects do not sum to the identity")
        object.__setattr__(self, "effects", effects)
        object.__setattr__(self, "labels", tuple(self.labels))

    def __len__(self):
        return len(self.effects)


def bell_plane_povm() -> Povm:
    """Projectors E1 = phi+ + psi- and E2 = phi- + psi+ (labels "E1", "E2")."""
    b = bell_states()
    e1 = projector(b["phi+"], b["psi-"])
    e2 = projector(b["phi-"], b["psi+"])
    return Povm((e1, e2), ("E1", "E2"))


def sym_antisym_povm() -> Povm:
    """Singlet projector and its complement (labels "anti", "sym")."""
    anti = projector(bell_states()["psi-"])
    return Povm((anti, np.eye(4) - anti), ("anti", "sym"))


def outcome_probabilities(povm: Povm, rho: np.ndarray) -> np.ndarray:
    """Born rule ``Tr[E_i rho]``."""
    p = np.array([np.trace(e @ rho).real for e in povm.effects])
    return _clean(p)


def outcome_probabilities_pure(povm: Povm, psi: np.ndarray) -> np.ndarray:
    """``<psi|E_i|psi>``; a stack of states gives one probability row per state."""
    psi = np.asarray(psi)
    p = np.stack(
        [np.einsum("...i,ij,...j->...", psi.conj(), e, psi).real for e in povm.effects],
        axis=-1,
    )
    return _clean(p)


def _clean(p: np.ndarray) -> np.ndarray:
    # roundoff negatives are zeroed, anything larger is a real error
    if p.min() < -NEGATIVE_TOL:
        raise ValueError(f"negative probability {p.min():.3g}")
    return np.clip(p, 0.0, 1.0)


def sample_outcome(probs: np.ndarray, rng: np.random.Generator):
    """Draw an outcome index from ``probs``.

    A 2-D array is treated as one distribution per row and returns one index
    per row, using a single uniform draw per row.
    """
    probs = _clean(np.asarray(probs, dtype=float))
    total = probs.sum(axis=-1)
    if np.abs(total - 1).max() > NEGATIVE_TOL:
        raise ValueError("probabilities must sum to 1")
    cdf = np.cumsum(probs, axis=-1)
    u = rng.random(size=probs.shape[:-1])
    idx = np.sum(cdf <= u[..., None], axis=-1)
    # u can exceed a cdf that sums to 1 - eps
    idx = np.minimum(idx, probs.shape[-1] - 1)
    return int(idx) if np.ndim(idx) == 0 else idx
