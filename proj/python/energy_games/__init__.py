"""Minimum sufficient energies for two-player energy games.

Energies are returned as lists with one entry per vertex; ``None`` stands
for an infinite requirement.
"""

from ._core import (
    GameGraph,
    ParseError,
    PreconditionError,
    ValidationError,
    apnp,
    apnp_oracle,
    brute_force,
    gen_no_neg_cycle,
    gen_random,
    has_negative_triangle,
    parse,
    serialize,
    solve_all_alice,
    solve_all_bob,
    solve_fixpoint,
    solve_no_neg_cycles,
    value_iteration,
)

__all__ = [
    "GameGraph",
    "ParseError",
    "PreconditionError",
    "ValidationError",
    "apnp",
    "apnp_oracle",
    "brute_force",
    "gen_no_neg_cycle",
    "gen_random",
    "has_negative_triangle",
    "parse",
    "serialize",
    "solve",
    "solve_all_alice",
    "solve_all_bob",
    "solve_fixpoint",
    "solve_no_neg_cycles",
    "value_iteration",
]


def solve(game):
    """Pick the solver from the owners: all-Alice, all-Bob, or the general fixpoint."""
    if set(game.owners) == {"A"}:
        return solve_all_alice(game)
    if set(game.owners) == {"B"}:
        return solve_all_bob(game)
    return solve_fixpoint(game)
