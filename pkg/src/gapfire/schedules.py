"""Constructive reachability: schedules from the all-zero state.

A schedule is an explicit trigger sequence claimed to turn ``0^L`` into a
target state.  ``build_final_schedule`` produces one for every final state of
the form ``1^k 2 1^(L-1-k)``; the recursion inserts an untouched zero column
into a shorter schedule (``lift_insert_zero``), then either fires the new zero
directly (edge cases) or walks it rightward until it annihilates between two
2s (middle case).  Every constructed schedule is replay-validated before it is
returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gap_core import (
    GapState,
    IllegalTriggerError,
    apply_move,
    flat_clusteron,
    format_state,
    parse_state,
)


class InvalidScheduleError(ValueError):
    def __init__(self, step: int, message: str):
        super().__init__(f"invalid schedule at step {step}: {message}")
        self.step = step


@dataclass(frozen=True)
class Schedule:
    length: int  # gap-state length the triggers act on
    triggers: tuple[int, ...]
    target: GapState


def replay(length: int, triggers) -> GapState:
    """Fold the move rule over ``triggers`` starting from ``0^length``."""
    s = flat_clusteron(length + 1)
    for step, t in enumerate(triggers, start=1):
        try:
            s = apply_move(s, t)
        except (IllegalTriggerError, ValueError) as exc:
            raise InvalidScheduleError(step, str(exc)) from exc
    return s


def replay_schedule(sched: Schedule) -> GapState:
    return replay(sched.length, sched.triggers)


def validate_schedule(sched: Schedule) -> None:
    """Replay and compare against the claimed target; raise on mismatch."""
    end = replay_schedule(sched)
    if end != sched.target:
        raise InvalidScheduleError(
            len(sched.triggers),
            f"replay ends at {format_state(end)}, target is {format_state(sched.target)}",
        )


def lift_insert_zero(sched: Schedule, i: int) -> Schedule:
    """Insert an untouched zero column at position ``i`` (1-based).

    Triggers at or beyond ``i`` shift right by one; the target gains a 0 at
    position ``i``.  Validity is preserved because no trigger ever touches
    the new column.
    """
    if not 1 <= i <= sched.length + 1:
        raise ValueError(f"insertion position {i} out of range for length {sched.length}")
    triggers = tuple(t if t < i else t + 1 for t in sched.triggers)
    target = sched.target[: i - 1] + (0,) + sched.target[i - 1 :]
    return Schedule(sched.length + 1, triggers, target)


def mirror(sched: Schedule) -> Schedule:
    """Left-right reflection; valid because the move rule is symmetric."""
    length = sched.length
    return Schedule(
        length,
        tuple(length + 1 - t for t in sched.triggers),
        tuple(reversed(sched.target)),
    )


def build_final_schedule(length: int, k: int) -> Schedule:
    """Schedule from ``0^length`` to the final state ``1^k 2 1^(length-1-k)``.

    Base case: a single gap has the single schedule [1] -> (2).  For k = 0 the
    shorter schedule is lifted with a zero in front, reaching
    ``0 2 1^(length-2)``, and the front zero is fired once.  For k = length-1
    the k = 0 construction is mirrored.  In between, the lift reaches
    ``0 1^k 2 1^(length-2-k)`` and triggers 1..k+1 migrate the zero rightward
    until it disappears between the trailing 2s.
    """
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if not 0 <= k <= length - 1:
        raise ValueError(f"k must be in 0..{length - 1}, got {k}")
    sched = _build(length, k)
    validate_schedule(sched)
    return sched


def _build(length: int, k: int) -> Schedule:
    if length == 1:
        return Schedule(1, (1,), (2,))
    if k == length - 1:
        return mirror(_build(length, 0))
    lifted = lift_insert_zero(_build(length - 1, k), 1)
    if k == 0:
        migration = (1,)
    else:
        migration = tuple(range(1, k + 2))
    target = (1,) * k + (2,) + (1,) * (length - 1 - k)
    return Schedule(length, lifted.triggers + migration, target)


def parse_schedule(text: str) -> Schedule:
    """Parse the ``L; T1,...,Tn; target`` text form."""
    parts = text.split(";")
    if len(parts) != 3:
        raise ValueError(f"expected 'L; triggers; target', got {text!r}")
    length = int(parts[0].strip())
    trig_text = parts[1].strip()
    triggers = tuple(int(p.strip()) for p in trig_text.split(",")) if trig_text else ()
    return Schedule(length, triggers, parse_state(parts[2].strip()))


def format_schedule(sched: Schedule) -> str:
    return "{}; {}; {}".format(
        sched.length,
        ",".join(str(t) for t in sched.triggers),
        format_state(sched.target),
    )
