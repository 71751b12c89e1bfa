"""Online algorithms for the multi-objective time series search problem.

The heavy lifting lives in the compiled ``_motss`` extension: balanced price
policies, Pareto fronts, per-instance competitive ratios, optimal-ratio
values (closed-form and numeric) and the adversarial verification oracles.
"""

from ._motss import (
    AdversaryGame,
    Bounds,
    CanonicalOrdering,
    InputSequence,
    IntervalKind,
    MinimaxResult,
    MotssError,
    ParetoFront,
    PlayResult,
    RatioReport,
    RunOutcome,
    Scalarization,
    ZValue,
    balance_residual,
    bpp_decide,
    bpp_game_worst_cr,
    build_adversary,
    canonicalize,
    check_monotone,
    competitive_ratio,
    enumerate_instances,
    game_worst_case_cr,
    generate_random_instances,
    minimax_optimal_cr,
    pareto_maximal,
    parse_instance_file,
    play_adversary,
    play_adversary_with,
    rpp_decide,
    run_bpp,
    run_policy,
    solve_fiber,
    validate_bounds,
    write_instance_file,
    z_closed_form,
    z_discrete,
    z_numeric,
)

__version__ = "0.1.0"

__all__ = [
    "AdversaryGame",
    "Bounds",
    "CanonicalOrdering",
    "InputSequence",
    "IntervalKind",
    "MinimaxResult",
    "MotssError",
    "ParetoFront",
    "PlayResult",
    "RatioReport",
    "RunOutcome",
    "Scalarization",
    "ZValue",
    "balance_residual",
    "bpp_decide",
    "bpp_game_worst_cr",
    "build_adversary",
    "canonicalize",
    "check_monotone",
    "competitive_ratio",
    "enumerate_instances",
    "game_worst_case_cr",
    "generate_random_instances",
    "minimax_optimal_cr",
    "pareto_maximal",
    "parse_instance_file",
    "play_adversary",
    "play_adversary_with",
    "rpp_decide",
    "run_bpp",
    "run_policy",
    "solve_fiber",
    "validate_bounds",
    "write_instance_file",
    "z_closed_form",
    "z_discrete",
    "z_numeric",
]
