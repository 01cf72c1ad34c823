"""Gap-encoded states and the single-move rule.

A state of N violinists in a bi-infinite row of hotel rooms is encoded as
the tuple of gap lengths between consecutive occupants: ``(a_1, ..., a_{N-1})``
with every ``a_k >= 0``.  Absolute room positions are deliberately dropped;
see :mod:`gapfire.rooms` for the occupancy-level view and the conversion.

A move picks a triggering position ``T`` with ``a_T == 0`` (1-based), sets it
to 2, and decrements the nearest nonzero entry on each side (skipping a side
that has none).  A state with no zeros admits no moves and is final.
"""

from __future__ import annotations

from dataclasses import dataclass

GapState = tuple[int, ...]


class IllegalTriggerError(ValueError):
    """The chosen trigger position does not hold a zero."""


def flat_clusteron(n: int) -> GapState:
    """All-zero state for ``n`` violinists in consecutive rooms (length n-1)."""
    if n < 1:
        raise ValueError(f"violinist count must be >= 1, got {n}")
    return (0,) * (n - 1)


def legal_triggers(s: GapState) -> list[int]:
    """1-based positions holding 0, in increasing order.  Empty iff final."""
    return [i + 1 for i, a in enumerate(s) if a == 0]


def is_final(s: GapState) -> bool:
    """True iff no entry is 0.  The empty state is final."""
    return 0 not in s


def apply_move(s: GapState, trigger: int) -> GapState:
    """Fire one move at the given 1-based trigger position.

    The trigger entry becomes 2; the nearest nonzero entry to its left and the
    nearest nonzero entry to its right each drop by one (a side with no
    nonzero entry is skipped).
    """
    if not 1 <= trigger <= len(s):
        raise ValueError(f"trigger {trigger} out of range for length {len(s)}")
    if s[trigger - 1] != 0:
        raise IllegalTriggerError(
            f"position {trigger} holds {s[trigger - 1]}, not 0"
        )
    r = list(s)
    r[trigger - 1] = 2
    for j in range(trigger - 2, -1, -1):
        if s[j] > 0:
            r[j] -= 1
            break
    for j in range(trigger, len(s)):
        if s[j] > 0:
            r[j] -= 1
            break
    return tuple(r)


def norm(s: GapState) -> int:
    """Sum of all gap entries; non-decreasing along any move sequence."""
    return sum(s)


def classify_norm_step(prev: GapState, nxt: GapState, trigger: int) -> int:
    """Norm difference across one move, validated against the move rule.

    Recomputes the move instead of trusting the caller, and checks the full
    delta law: the difference is 2 exactly when ``prev`` is all-zero, 1 when
    exactly one side of the trigger has a nonzero entry, and 0 when both do.
    """
    if apply_move(prev, trigger) != nxt:
        raise ValueError(
            f"{nxt} is not the result of triggering {trigger} on {prev}"
        )
    delta = norm(nxt) - norm(prev)
    left_nonzero = any(a > 0 for a in prev[: trigger - 1])
    right_nonzero = any(a > 0 for a in prev[trigger:])
    expected = 2 - int(left_nonzero) - int(right_nonzero)
    if delta != expected:
        raise ValueError(
            f"norm delta {delta} contradicts the move rule on {prev} at {trigger}"
        )
    return delta


def check_window_bound(s: GapState) -> bool:
    """True iff every window of length l sums to at most l+1.

    States reachable from an all-zero state always satisfy this bound; it can
    fail for arbitrary states (e.g. ``(2, 2, 0)``).
    """
    prefix = [0]
    for a in s:
        prefix.append(prefix[-1] + a)
    for i in range(len(s)):
        for j in range(i + 1, len(s) + 1):
            if prefix[j] - prefix[i] > (j - i) + 1:
                return False
    return True


def entry_step_law(prev: GapState, nxt: GapState) -> bool:
    """Check the per-entry evolution law across one move.

    A positive entry may only stay or drop by one; a zero entry may only stay
    or jump to 2.
    """
    if len(prev) != len(nxt):
        raise ValueError(f"length mismatch: {len(prev)} vs {len(nxt)}")
    for p, n in zip(prev, nxt):
        if p == 0:
            if n not in (0, 2):
                return False
        elif n not in (p, p - 1):
            return False
    return True


@dataclass(frozen=True)
class Trajectory:
    """An initial state, a trigger sequence, and the induced state sequence.

    ``states[0]`` is the initial state and ``states[t]`` should equal
    ``apply_move(states[t-1], triggers[t-1])``; a Trajectory built by hand may
    break that, which is what :func:`gapfire.explorer.validate_trajectory`
    detects.
    """

    initial: GapState
    triggers: tuple[int, ...]
    states: tuple[GapState, ...]

    @classmethod
    def from_triggers(cls, initial: GapState, triggers) -> "Trajectory":
        """Build the trajectory by replaying the triggers from ``initial``."""
        initial = tuple(initial)
        triggers = tuple(triggers)
        states = [initial]
        for t in triggers:
            states.append(apply_move(states[-1], t))
        return cls(initial, triggers, tuple(states))


def parse_state(text: str) -> GapState:
    """Parse a gap state from its text form.

    Accepts comma-separated entries (``2,0,1``), the same in parentheses,
    and the compact digit string (``201``).  The empty string is the empty
    state.
    """
    t = text.strip()
    had_parens = False
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1].strip()
        had_parens = True
    if not t:
        return ()
    if "," in t or had_parens:
        entries = tuple(int(p.strip()) for p in t.split(","))
    elif t.isdigit():
        entries = tuple(int(c) for c in t)
    else:
        raise ValueError(f"cannot parse gap state from {text!r}")
    if any(a < 0 for a in entries):
        raise ValueError(f"negative gap entry in {text!r}")
    return entries


def format_state(s: GapState) -> str:
    """Canonical text form: compact digits when all entries fit, else commas."""
    if all(a <= 9 for a in s):
        return "".join(str(a) for a in s)
    return ",".join(str(a) for a in s)
