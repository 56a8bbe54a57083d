"""Scheduling unit-length jobs with cubic incompatibility graphs on three uniform machines."""

from .coloring import (
    Coloring,
    bipartize,
    brooks_three_coloring,
    decrease_width_by_one,
    equitable_clw,
    equitable_two_coloring,
    greedy_independent_set,
    modified_clw,
)
from .graph import (
    Chromatic,
    CubicGraph,
    bipartition,
    classify,
    components,
    format_graph,
    parse_graph,
    random_cubic,
)
from .oracle import (
    OracleBudget,
    exists_semi_equitable,
    independence_number,
    optimal_schedule_exact,
    verify_schedule,
)
from .scheduler import (
    LoadTargets,
    MachineSpeeds,
    Schedule,
    ideal_loads,
    makespan,
    round_candidates,
    schedule,
    schedule_bicubic,
    schedule_disconnected_bicubic,
    schedule_k33,
    schedule_prism,
    schedule_tricubic,
)

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "bipartize",
    "brooks_three_coloring",
    "decrease_width_by_one",
    "equitable_clw",
    "equitable_two_coloring",
    "greedy_independent_set",
    "modified_clw",
    "Chromatic",
    "CubicGraph",
    "bipartition",
    "classify",
    "components",
    "format_graph",
    "parse_graph",
    "random_cubic",
    "OracleBudget",
    "exists_semi_equitable",
    "independence_number",
    "optimal_schedule_exact",
    "verify_schedule",
    "LoadTargets",
    "MachineSpeeds",
    "Schedule",
    "ideal_loads",
    "makespan",
    "round_candidates",
    "schedule",
    "schedule_bicubic",
    "schedule_disconnected_bicubic",
    "schedule_k33",
    "schedule_prism",
    "schedule_tricubic",
]
