"""Executable invariant suites behind the ``verify`` subcommand.

Each suite sweeps a family of cases (exhaustive at small sizes, seeded random
beyond) and returns how many cases were checked plus any violation messages.
Zero violations on every suite is the mechanical confirmation of the norm law,
the window bound, termination, the move-rule oracle equivalence, the lift
lemma, and the final-state constructor.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import rooms
from .explorer import build_move_tree, explore
from .gap_core import (
    apply_move,
    check_window_bound,
    classify_norm_step,
    entry_step_law,
    flat_clusteron,
    format_state,
    legal_triggers,
)
from .playouts import playout
from .schedules import (
    Schedule,
    build_final_schedule,
    lift_insert_zero,
    replay,
    replay_schedule,
)

SUITES = (
    "norm-law",
    "window-bound",
    "alphabet",
    "oracle-equivalence",
    "acyclic",
    "constructor",
    "lemma-lift",
)


@dataclass
class SuiteResult:
    suite: str
    cases: int
    violations: list[str]


def _all_states(length: int, entries_max: int):
    return itertools.product(range(entries_max + 1), repeat=length)


def verify_norm_law(gaps_max: int = 5, entries_max: int = 2) -> SuiteResult:
    """Every legal move has norm delta in {0,1,2}, with 2 only from all-zero."""
    cases = 0
    violations: list[str] = []
    for length in range(1, gaps_max + 1):
        for s in _all_states(length, entries_max):
            for t in legal_triggers(s):
                cases += 1
                nxt = apply_move(s, t)
                try:
                    delta = classify_norm_step(s, nxt, t)
                except ValueError as exc:
                    violations.append(f"{format_state(s)} T{t}: {exc}")
                    continue
                if delta == 2 and any(s):
                    violations.append(f"{format_state(s)} T{t}: delta 2 from nonzero")
                if not entry_step_law(s, nxt):
                    violations.append(f"{format_state(s)} T{t}: entry step law")
    return SuiteResult("norm-law", cases, violations)


def verify_window_bound(gaps_max: int = 8) -> SuiteResult:
    """Window sums stay at most l+1 on everything reachable from flat starts."""
    cases = 0
    violations: list[str] = []
    for length in range(1, gaps_max + 1):
        graph, _ = explore(flat_clusteron(length + 1))
        for s in graph.nodes:
            cases += 1
            if not check_window_bound(s):
                violations.append(f"{format_state(s)}: window bound")
    return SuiteResult("window-bound", cases, violations)


def verify_alphabet(gaps_max: int = 8) -> SuiteResult:
    """Entries never leave {0,1,2} on flat-origin reachability graphs."""
    cases = 0
    violations: list[str] = []
    for length in range(1, gaps_max + 1):
        graph, _ = explore(flat_clusteron(length + 1))
        for s in graph.nodes:
            cases += 1
            if any(a > 2 for a in s):
                violations.append(f"{format_state(s)}: entry above 2")
    return SuiteResult("alphabet", cases, violations)


def verify_oracle_equivalence(
    exhaustive_gaps_max: int = 5,
    exhaustive_entries_max: int = 3,
    trials: int = 10_000,
    seed: int = 0,
    random_gaps_max: int = 12,
    random_entries_max: int = 9,
) -> SuiteResult:
    """Gap-level moves agree with the room-level simulation everywhere."""
    cases = 0
    violations: list[str] = []

    def check(s, t):
        nonlocal cases
        cases += 1
        if not rooms.check_move_equivalence(s, t):
            violations.append(f"{format_state(s)} T{t}: oracle disagreement")

    for length in range(1, exhaustive_gaps_max + 1):
        for s in _all_states(length, exhaustive_entries_max):
            for t in legal_triggers(s):
                check(s, t)
    rng = random.Random(seed)
    done = 0
    while done < trials:
        length = rng.randint(1, random_gaps_max)
        s = tuple(rng.randint(0, random_entries_max) for _ in range(length))
        triggers = legal_triggers(s)
        if not triggers:
            continue
        check(s, rng.choice(triggers))
        done += 1
    return SuiteResult("oracle-equivalence", cases, violations)


def verify_acyclic(
    gaps_max: int = 6,
    entries_max: int = 2,
    random_trials: int = 10_000,
    seed: int = 0,
    random_gaps_max: int = 11,
    random_entries_max: int = 5,
) -> SuiteResult:
    """Termination at desk scale: acyclic graphs and terminating playouts."""
    cases = 0
    violations: list[str] = []
    for length in range(1, gaps_max + 1):
        for s in _all_states(length, entries_max):
            cases += 1
            _, report = explore(s, flat_origin=False)
            if not report.is_acyclic:
                violations.append(f"{format_state(s)}: cycle detected")
            try:
                playout(s, "leftmost")
            except Exception as exc:  # non-termination or illegal move
                violations.append(f"{format_state(s)}: leftmost playout failed ({exc})")
    rng = random.Random(seed)
    for _ in range(random_trials):
        cases += 1
        length = rng.randint(1, random_gaps_max)
        s = tuple(rng.randint(0, random_entries_max) for _ in range(length))
        try:
            playout(s, "random", rng)
        except Exception as exc:
            violations.append(f"{format_state(s)}: random playout failed ({exc})")
    return SuiteResult("acyclic", cases, violations)


def verify_constructor(gaps_max: int = 11) -> SuiteResult:
    """Every (length, k) schedule replays exactly to 1^k 2 1^(length-1-k)."""
    cases = 0
    violations: list[str] = []
    for length in range(1, gaps_max + 1):
        for k in range(length):
            cases += 1
            sched = build_final_schedule(length, k)
            expected = (1,) * k + (2,) + (1,) * (length - 1 - k)
            if replay_schedule(sched) != expected or sched.target != expected:
                violations.append(f"L={length} k={k}: wrong target")
    return SuiteResult("constructor", cases, violations)


def _tree_schedules(length: int) -> list[Schedule]:
    """All trigger prefixes arising in the full move tree from 0^length."""
    tree = build_move_tree(flat_clusteron(length + 1))
    out: list[Schedule] = []
    stack: list[tuple[object, tuple[int, ...]]] = [(tree.root, ())]
    while stack:
        node, triggers = stack.pop()
        out.append(Schedule(length, triggers, node.state))
        for t, child in node.children:
            stack.append((child, triggers + (t,)))
    return out


def verify_lemma_lift(
    exhaustive_gaps_max: int = 4,
    trials: int = 1_000,
    seed: int = 0,
    random_gaps_max: int = 8,
) -> SuiteResult:
    """Lifting a schedule replays to its target with a zero inserted."""
    cases = 0
    violations: list[str] = []

    def check(sched: Schedule, i: int):
        nonlocal cases
        cases += 1
        lifted = lift_insert_zero(sched, i)
        expected = sched.target[: i - 1] + (0,) + sched.target[i - 1 :]
        if replay_schedule(lifted) != expected or lifted.target != expected:
            violations.append(
                f"L={sched.length} triggers={sched.triggers} i={i}: lift broken"
            )

    for length in range(1, exhaustive_gaps_max + 1):
        for sched in _tree_schedules(length):
            for i in range(1, length + 2):
                check(sched, i)
    rng = random.Random(seed)
    for _ in range(trials):
        length = rng.randint(1, random_gaps_max)
        s = flat_clusteron(length + 1)
        triggers: list[int] = []
        for _ in range(rng.randint(0, 3 * length)):
            options = legal_triggers(s)
            if not options:
                break
            t = rng.choice(options)
            triggers.append(t)
            s = apply_move(s, t)
        check(Schedule(length, tuple(triggers), s), rng.randint(1, length + 1))
    return SuiteResult("lemma-lift", cases, violations)


def run_suite(name: str, *, gaps_max: int | None = None, entries_max: int | None = None,
              trials: int | None = None, seed: int = 0) -> list[SuiteResult]:
    """Run one named suite (or all of them) with optional size overrides."""
    names = SUITES if name == "all" else (name,)
    results: list[SuiteResult] = []
    for n in names:
        if n == "norm-law":
            results.append(verify_norm_law(
                gaps_max=gaps_max or 5, entries_max=entries_max or 2))
        elif n == "window-bound":
            results.append(verify_window_bound(gaps_max=gaps_max or 8))
        elif n == "alphabet":
            results.append(verify_alphabet(gaps_max=gaps_max or 8))
        elif n == "oracle-equivalence":
            results.append(verify_oracle_equivalence(
                exhaustive_gaps_max=min(gaps_max or 5, 5),
                trials=trials or 10_000, seed=seed))
        elif n == "acyclic":
            results.append(verify_acyclic(
                gaps_max=gaps_max or 6, entries_max=entries_max or 2,
                random_trials=trials or 10_000, seed=seed))
        elif n == "constructor":
            results.append(verify_constructor(gaps_max=gaps_max or 11))
        elif n == "lemma-lift":
            results.append(verify_lemma_lift(
                exhaustive_gaps_max=min(gaps_max or 4, 4),
                trials=trials or 1_000, seed=seed))
        else:
            raise ValueError(f"unknown suite {n!r}")
    return results
