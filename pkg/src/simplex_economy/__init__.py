"""Exact competitive equilibria for simplex economies."""

from .equilibrium import (
    EquilibriumResult,
    PriceNegative,
    PriceSystemError,
    SystemInconsistent,
    SystemUnderdetermined,
    build_f_star,
    compute_min_terms,
    group_preferences,
    is_minimal,
    solve_equilibrium,
    supporting_price,
    verify_equilibrium_sampled,
)
from .gen import GenSpec, GenerationFailed, generate_economy
from .linalg import Inconsistent, Underdetermined, UniqueSolution, solve_exact
from .model import (
    Allocation,
    EconomyError,
    PriceSystem,
    SimplexEconomy,
    StochasticPolicy,
    is_feasible,
    strictly_prefers,
    utility,
    validate_economy,
    value,
)

__version__ = "0.1.0"
