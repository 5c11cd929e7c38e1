from .explore import (
    DEFAULT_STATE_BOUND, BoundExceeded, Deadlock, ExploreResult, OverheadReport,
    Race, SimState, compare_overhead, count_lock_ops, explore, replay_deadlock,
    replay_race,
)
from .lower import Op, SimProgram, Step, lower_to_sim

__all__ = [
    "DEFAULT_STATE_BOUND", "BoundExceeded", "Deadlock", "ExploreResult",
    "OverheadReport", "Race", "SimState", "compare_overhead", "count_lock_ops",
    "explore", "replay_deadlock", "replay_race", "Op", "SimProgram", "Step",
    "lower_to_sim",
]
