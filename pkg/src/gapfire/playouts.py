"""Seeded playouts: run moves to a final state under a trigger policy.

The random policy draws from Python's ``random.Random`` (the Mersenne Twister
MT19937), so a seed reproduces the same playouts on any platform.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .gap_core import GapState, apply_move, is_final, legal_triggers

POLICIES = ("leftmost", "rightmost", "random")


class NonterminationError(RuntimeError):
    """A playout exceeded its depth limit (theoretically impossible)."""


def playout(
    initial: GapState,
    policy: str = "leftmost",
    rng: random.Random | None = None,
    depth_limit: int = 10_000,
) -> tuple[GapState, int]:
    """Play moves until final; returns (final state, number of moves)."""
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}, expected one of {POLICIES}")
    if policy == "random" and rng is None:
        raise ValueError("random policy needs an rng")
    s = tuple(initial)
    steps = 0
    while not is_final(s):
        if steps >= depth_limit:
            raise NonterminationError(
                f"no final state within {depth_limit} moves from {initial}"
            )
        triggers = legal_triggers(s)
        if policy == "leftmost":
            t = triggers[0]
        elif policy == "rightmost":
            t = triggers[-1]
        else:
            t = rng.choice(triggers)
        s = apply_move(s, t)
        steps += 1
    return s, steps


@dataclass
class PlayoutStats:
    policy: str
    trials: int
    lengths: list[int]
    final_counts: Counter  # GapState -> occurrences


def playout_stats(
    initial: GapState,
    policy: str,
    trials: int,
    seed: int = 0,
    depth_limit: int = 10_000,
) -> PlayoutStats:
    rng = random.Random(seed) if policy == "random" else None
    lengths: list[int] = []
    finals: Counter = Counter()
    for _ in range(trials):
        final, steps = playout(initial, policy, rng, depth_limit)
        lengths.append(steps)
        finals[final] += 1
    return PlayoutStats(policy, trials, lengths, finals)
