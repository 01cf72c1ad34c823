"""gapfire: gap-encoded noisy-violinist chip-firing toolkit.

Move engine, exhaustive explorer, room-level oracle, invariant suites, and a
constructive scheduler for every reachable final state of a flat clusteron.
"""

from .gap_core import (
    GapState,
    IllegalTriggerError,
    Trajectory,
    apply_move,
    check_window_bound,
    classify_norm_step,
    entry_step_law,
    flat_clusteron,
    format_state,
    is_final,
    legal_triggers,
    norm,
    parse_state,
)
from .explorer import (
    ExploreReport,
    MoveTree,
    NodeCapExceededError,
    ReachabilityGraph,
    build_move_tree,
    classify_final,
    explore,
    validate_trajectory,
)
from .playouts import playout, playout_stats
from .rooms import (
    RoomOccupancy,
    check_move_equivalence,
    gaps_to_rooms,
    rooms_to_gaps,
    simulate_room_move,
)
from .schedules import (
    InvalidScheduleError,
    Schedule,
    build_final_schedule,
    lift_insert_zero,
    mirror,
    replay,
    replay_schedule,
)

__version__ = "0.1.0"

__all__ = [
    "GapState",
    "IllegalTriggerError",
    "Trajectory",
    "apply_move",
    "check_window_bound",
    "classify_norm_step",
    "entry_step_law",
    "flat_clusteron",
    "format_state",
    "is_final",
    "legal_triggers",
    "norm",
    "parse_state",
    "ExploreReport",
    "MoveTree",
    "NodeCapExceededError",
    "ReachabilityGraph",
    "build_move_tree",
    "classify_final",
    "explore",
    "validate_trajectory",
    "playout",
    "playout_stats",
    "RoomOccupancy",
    "check_move_equivalence",
    "gaps_to_rooms",
    "rooms_to_gaps",
    "simulate_room_move",
    "InvalidScheduleError",
    "Schedule",
    "build_final_schedule",
    "lift_insert_zero",
    "mirror",
    "replay",
    "replay_schedule",
]
