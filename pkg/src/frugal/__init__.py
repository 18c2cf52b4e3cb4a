"""Frugal bribery in elections: rules, vulnerable votes, solvers and reductions."""

from .election import Election, ElectionError, RuleSpec, Vote, compute_winner, normalize_score_vector, positional_scores
from .solvers import Limits, Solution, solve, solve_exact, validate_solution
from .vulnerability import BriberyInstance, Variant, build_instance, classify_vulnerable

__all__ = [
    "BriberyInstance",
    "Election",
    "ElectionError",
    "Limits",
    "RuleSpec",
    "Solution",
    "Variant",
    "Vote",
    "build_instance",
    "classify_vulnerable",
    "compute_winner",
    "normalize_score_vector",
    "positional_scores",
    "solve",
    "solve_exact",
    "validate_solution",
]
