"""Entanglement as a relative parameter in two-qubit state discrimination.

Restricted Schmidt-form state families, their polar-circle averaged density
operators, the Bell-plane measurement that separates them, and Monte-Carlo
experiments that check the resulting payoffs.
"""

__version__ = "0.1.0"

from .discrimination import (
    DiscriminationReport,
    ExperimentConfig,
    SweepRow,
    Tally,
    optimize_beta,
    payoff_analytic,
    payoff_optimal,
    payoff_sweep,
    run_discrimination_mc,
    run_pryde_baseline,
    verify_rho,
)
from .ensemble import q_of, rho_analytic, rho_montecarlo, rho_quadrature
from .measurement import Povm, bell_plane_povm, sym_antisym_povm
from .twoqubit import SchmidtParams, bell_states, pair_state, schmidt_state, tangle

__all__ = [
    "DiscriminationReport",
    "ExperimentConfig",
    "Povm",
    "SchmidtParams",
    "SweepRow",
    "Tally",
    "bell_plane_povm",
    "bell_states",
    "optimize_beta",
    "pair_state",
    "payoff_analytic",
    "payoff_optimal",
    "payoff_sweep",
    "q_of",
    "rho_analytic",
    "rho_montecarlo",
    "rho_quadrature",
    "run_discrimination_mc",
    "run_pryde_baseline",
    "schmidt_state",
    "sym_antisym_povm",
    "tangle",
    "verify_rho",
]
