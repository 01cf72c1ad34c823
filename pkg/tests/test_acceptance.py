"""Acceptance suite: one test per criterion, printing a pass line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines as they pass.
"""

import itertools
import random
from collections import Counter

from gapfire.explorer import build_move_tree, explore
from gapfire.gap_core import (
    apply_move,
    check_window_bound,
    classify_norm_step,
    flat_clusteron,
    format_state,
    is_final,
    legal_triggers,
)
from gapfire.playouts import playout
from gapfire.schedules import build_final_schedule, replay_schedule
from gapfire.verify import (
    verify_acyclic,
    verify_lemma_lift,
    verify_oracle_equivalence,
)


def _clusteron_final(length, k):
    return (1,) * k + (2,) + (1,) * (length - 1 - k)


def test_criterion_1_figure_reproduction():
    tree = build_move_tree((0, 0, 0), depth_limit=10)
    assert tree.node_count() == 20
    assert not tree.any_truncated()
    assert format_state(tree.root.state) == "000"
    depth1 = {format_state(c.state) for _, c in tree.root.children}
    assert depth1 == {"200", "020", "002"}
    leaves = Counter(format_state(s) for s in tree.leaf_states())
    assert leaves == Counter({"112": 2, "211": 2, "121": 2})

    _, report = explore((0, 0, 0))
    assert report.node_count == 14
    assert [format_state(s) for s in report.final_states] == ["112", "121", "211"]
    print("criterion 1 (figure reproduction): PASS")


def test_criterion_2_final_state_closure():
    for n in range(2, 11):
        length = n - 1
        _, report = explore(flat_clusteron(n))
        expected = [_clusteron_final(length, k) for k in range(length)]
        assert sorted(report.final_states) == sorted(expected), n
        for k in range(length):
            sched = build_final_schedule(length, k)
            assert replay_schedule(sched) == _clusteron_final(length, k), (n, k)
    print("criterion 2 (final-state closure and constructor): PASS")


def test_criterion_3_window_bound_and_alphabet():
    checked = 0
    for n in range(2, 11):
        graph, report = explore(flat_clusteron(n))
        for s in graph.nodes:
            assert check_window_bound(s), s
            assert all(a in (0, 1, 2) for a in s), s
            checked += 1
        assert report.invariant_violations == []
    assert checked > 0
    print(f"criterion 3 (window bound + alphabet, {checked} states): PASS")


def test_criterion_4_termination_desk_scale():
    result = verify_acyclic(gaps_max=6, entries_max=2,
                            random_trials=10_000, seed=0,
                            random_gaps_max=11, random_entries_max=5)
    assert result.violations == []
    print(f"criterion 4 (termination, {result.cases} cases): PASS")


def test_criterion_5_norm_law():
    moves = 0
    # every edge of the explorations behind criteria 1-4
    initials = [flat_clusteron(n) for n in range(2, 11)]
    for length in range(1, 7):
        initials.extend(itertools.product(range(3), repeat=length))
    for initial in initials:
        graph, _ = explore(initial, flat_origin=False)
        for src, t, dst in graph.edges:
            delta = classify_norm_step(src, dst, t)
            assert delta in (0, 1, 2)
            assert delta >= 0
            assert (delta == 2) == all(a == 0 for a in src), (src, t)
            moves += 1
    # plus the moves of seeded random playouts
    rng = random.Random(0)
    for _ in range(500):
        length = rng.randint(1, 11)
        s = tuple(rng.randint(0, 5) for _ in range(length))
        while not is_final(s):
            t = rng.choice(legal_triggers(s))
            nxt = apply_move(s, t)
            delta = classify_norm_step(s, nxt, t)
            assert delta in (0, 1, 2)
            assert (delta == 2) == all(a == 0 for a in s)
            s = nxt
            moves += 1
    print(f"criterion 5 (norm law, {moves} moves): PASS")


def test_criterion_6_oracle_equivalence():
    result = verify_oracle_equivalence(
        exhaustive_gaps_max=5, exhaustive_entries_max=3,
        trials=10_000, seed=0, random_gaps_max=12, random_entries_max=9,
    )
    assert result.violations == []
    print(f"criterion 6 (oracle equivalence, {result.cases} cases): PASS")


def test_criterion_7_lemma_lift():
    result = verify_lemma_lift(exhaustive_gaps_max=4, trials=1_000,
                               seed=0, random_gaps_max=8)
    assert result.violations == []
    print(f"criterion 7 (lemma lift, {result.cases} cases): PASS")


def test_criterion_8_off_by_one_regression():
    length, k = 4, 2
    target = _clusteron_final(length, k)  # 1121

    # migrate: trigger the unique zero until final
    def migrate(s):
        while not is_final(s):
            triggers = legal_triggers(s)
            assert len(triggers) == 1
            s = apply_move(s, triggers[0])
        return s

    printed = (0,) + (1,) * (k - 1) + (2,) + (1,) * (length - 1 - k)  # 0121
    assert migrate(printed) == (1, 2, 1, 1)
    assert migrate(printed) != target

    corrected = (0,) + (1,) * k + (2,) + (1,) * (length - 2 - k)  # 0112
    assert migrate(corrected) == target
    assert replay_schedule(build_final_schedule(length, k)) == target

    # a playout confirms the leftmost policy drives the same migration
    assert playout(corrected, "leftmost")[0] == target
    print("criterion 8 (off-by-one regression): PASS")
