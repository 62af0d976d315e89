"""Discrimination payoffs, Monte-Carlo experiments and parameter sweeps.

Hypothesis j=1 is the state family detected by E1 (mixing parameter q = -1 at
perfect discrimination), j=2 the family detected by E2. The guessing rule is
fixed: outcome E1 -> j=1, outcome E2 -> j=2.

Monte-Carlo runs are split into partitions of :data:`PARTITION_SIZE` trials.
Partition ``k`` draws from ``default_rng(SeedSequence([seed, k]))``, so the
result depends only on (config, seed) and never on the worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

import numpy as np

from .ensemble import q_of, rho_analytic, rho_quadrature
from .measurement import (
    bell_plane_povm,
    outcome_probabilities_pure,
    sample_outcome,
    sym_antisym_povm,
)
from .qubit import sample_polar, sample_sphere, sphere_antipode, sphere_state
from .twoqubit import schmidt_state, tensor

PARTITION_SIZE = 4096
PRYDE_PAYOFF = 0.75


@dataclass(frozen=True)
class ExperimentConfig:
    alpha1: float
    beta1: float
    alpha2: float
    beta2: float
    prior1: float = 0.5
    trials: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.prior1 <= 1.0:
            raise ValueError(f"prior1 must lie in [0, 1], got {self.prior1}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")

    @property
    def prior2(self) -> float:
        return 1.0 - self.prior1


@dataclass(frozen=True)
class Tally:
    """Counts indexed ``[prepared hypothesis, guessed hypothesis]`` (0-based)."""

    counts: np.ndarray

    @property
    def trials(self) -> int:
        return int(self.counts.sum())

    @property
    def successes(self) -> int:
        return int(np.trace(self.counts))

    def success_rate(self, prepared: int | None = None) -> float:
        """Overall success rate, or the rate conditioned on one preparation (0 or 1)."""
        if prepared is None:
            return self.successes / self.trials
        row = self.counts[prepared]
        return float(row[prepared] / row.sum()) if row.sum() else float("nan")


@dataclass(frozen=True)
class DiscriminationReport:
    analytic_payoff: float
    empirical_payoff: float
    trials: int
    std_error: float
    seed: int
    config_echo: dict[str, Any] = field(default_factory=dict)

    SCHEMA_VERSION = 1

    @classmethod
    def from_tally(cls, tally: Tally, analytic: float, seed: int, config: dict) -> "DiscriminationReport":
        p_hat = tally.success_rate()
        return cls(
            analytic_payoff=float(analytic),
            empirical_payoff=float(p_hat),
            trials=tally.trials,
            std_error=math.sqrt(p_hat * (1 - p_hat) / tally.trials),
            seed=seed,
            config_echo=dict(config),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": self.SCHEMA_VERSION,
            "analytic_payoff": self.analytic_payoff,
            "empirical_payoff": self.empirical_payoff,
            "abs_deviation": abs(self.empirical_payoff - self.analytic_payoff),
            "trials": self.trials,
            "std_error": self.std_error,
            "seed": self.seed,
            "config": self.config_echo,
        }


@dataclass(frozen=True)
class SweepRow:
    alpha1: float
    alpha2: float
    optimal_payoff: float


def payoff_analytic(alpha1, beta1, alpha2, beta2, prior1=0.5):
    """``p1 Tr[E1 rho(q1)] + p2 Tr[E2 rho(q2)] = p1 (1-q1)/2 + p2 (1+q2)/2``."""
    q1 = q_of(alpha1, beta1)
    q2 = q_of(alpha2, beta2)
    return prior1 * (1 - q1) / 2 + (1 - prior1) * (1 + q2) / 2


def payoff_optimal(alpha1, alpha2):
    """Best equal-prior payoff over the Schmidt phases, for alpha in [0, pi]."""
    return 0.5 + np.abs(np.sin(alpha1) + np.sin(alpha2)) / 4


def optimize_beta(alpha1: float, alpha2: float) -> tuple[float, float, float]:
    """Schmidt phases maximizing the equal-prior payoff, and the payoff reached.

    The j=1 state wants ``q1 = -|sin alpha1|`` and the j=2 state
    ``q2 = +|sin alpha2|``; flat directions (sin alpha = 0) take beta1 = pi,
    beta2 = 0.
    """
    beta1 = 0.0 if np.sin(alpha1) < 0 else np.pi
    beta2 = np.pi if np.sin(alpha2) < 0 else 0.0
    return beta1, beta2, float(payoff_analytic(alpha1, beta1, alpha2, beta2))


def _partitions(trials: int) -> list[tuple[int, int]]:
    return [(k, min(PARTITION_SIZE, trials - start))
            for k, start in enumerate(range(0, trials, PARTITION_SIZE))]


def _run_partitioned(worker: Callable[[int, np.random.Generator], np.ndarray],
                     trials: int, seed: int, threads: int) -> Tally:
    def job(part):
        k, n = part
        rng = np.random.default_rng(np.random.SeedSequence([seed, k]))
        return worker(n, rng)

    parts = _partitions(trials)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(job, parts))
    else:
        results = [job(p) for p in parts]
    return Tally(np.sum(results, axis=0))


def _confusion(prepared: np.ndarray, guessed: np.ndarray) -> np.ndarray:
    counts = np.zeros((2, 2), dtype=np.int64)
    np.add.at(counts, (prepared, guessed), 1)
    return counts


def discrimination_tally(config: ExperimentConfig, threads: int = 1) -> Tally:
    """Simulate the E1/E2 measurement on randomly oriented Schmidt states."""
    povm = bell_plane_povm()
    alphas = np.array([config.alpha1, config.alpha2])
    betas = np.array([config.beta1, config.beta2])

    def worker(n, rng):
        prepared = (rng.random(n) >= config.prior1).astype(np.intp)
        tn = sample_polar(rng, n)
        tm = sample_polar(rng, n)
        psi = schmidt_state(alphas[prepared], betas[prepared], tn, tm)
        guessed = sample_outcome(outcome_probabilities_pure(povm, psi), rng)
        return _confusion(prepared, guessed)

    return _run_partitioned(worker, config.trials, config.seed, threads)


def run_discrimination_mc(config: ExperimentConfig, threads: int = 1) -> DiscriminationReport:
    tally = discrimination_tally(config, threads)
    analytic = payoff_analytic(config.alpha1, config.beta1, config.alpha2, config.beta2, config.prior1)
    return DiscriminationReport.from_tally(tally, analytic, config.seed, asdict(config))


def pryde_tally(trials: int, seed: int, threads: int = 1) -> Tally:
    """Correlated product states |n>|-n> (j=1) vs |n>|n> (j=2), n uniform on the sphere,
    measured on the antisymmetric/symmetric subspaces."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    povm = sym_antisym_povm()

    def worker(n, rng):
        prepared = (rng.random(n) >= 0.5).astype(np.intp)
        point = sample_sphere(rng, n)
        first = sphere_state(point)
        flipped = sphere_state(sphere_antipode(point))
        second = np.where(prepared[:, None] == 0, flipped, first)
        guessed = sample_outcome(outcome_probabilities_pure(povm, tensor(first, second)), rng)
        return _confusion(prepared, guessed)

    return _run_partitioned(worker, trials, seed, threads)


def run_pryde_baseline(trials: int, seed: int, threads: int = 1) -> DiscriminationReport:
    tally = pryde_tally(trials, seed, threads)
    return DiscriminationReport.from_tally(
        tally, PRYDE_PAYOFF, seed, {"experiment": "pryde", "trials": trials, "seed": seed}
    )


def payoff_sweep(alpha_steps: int) -> list[SweepRow]:
    """Optimal payoff on a uniform ``alpha_steps x alpha_steps`` grid over [0, pi]^2."""
    if alpha_steps < 2:
        raise ValueError("alpha_steps must be >= 2")
    grid = np.linspace(0.0, np.pi, alpha_steps)
    return [SweepRow(float(a1), float(a2), float(payoff_optimal(a1, a2)))
            for a1 in grid for a2 in grid]


def verify_rho(alpha: float, beta: float, grid_points: int = 16) -> float:
    """Max-entry gap between the quadrature average and the closed form."""
    diff = rho_quadrature(alpha, beta, grid_points) - rho_analytic(q_of(alpha, beta))
    return float(np.abs(diff).max())
