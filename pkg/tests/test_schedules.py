import random

import pytest

from gapfire.explorer import explore
from gapfire.gap_core import apply_move, flat_clusteron, is_final, legal_triggers
from gapfire.schedules import (
    InvalidScheduleError,
    Schedule,
    build_final_schedule,
    format_schedule,
    lift_insert_zero,
    mirror,
    parse_schedule,
    replay,
    replay_schedule,
    validate_schedule,
)


def test_replay_examples():
    assert replay(3, (1, 2, 3)) == (1, 1, 2)
    assert replay(3, ()) == (0, 0, 0)
    with pytest.raises(InvalidScheduleError) as exc:
        replay(3, (1, 1))
    assert exc.value.step == 2


def test_lift_insert_zero_examples():
    base = Schedule(1, (1,), (2,))
    assert lift_insert_zero(base, 1) == Schedule(2, (2,), (0, 2))
    assert lift_insert_zero(base, 2) == Schedule(2, (1,), (2, 0))
    two = Schedule(2, (1, 2), (1, 2))
    assert lift_insert_zero(two, 1) == Schedule(3, (2, 3), (0, 1, 2))
    with pytest.raises(ValueError):
        lift_insert_zero(base, 3)
    with pytest.raises(ValueError):
        lift_insert_zero(base, 0)


def test_mirror_examples():
    assert mirror(Schedule(2, (2, 1), (2, 1))) == Schedule(2, (1, 2), (1, 2))
    fixed = Schedule(1, (1,), (2,))
    assert mirror(fixed) == fixed
    assert mirror(Schedule(3, (2, 3, 1, 2), (1, 2, 1))) == Schedule(3, (2, 1, 3, 2), (1, 2, 1))
    validate_schedule(mirror(Schedule(3, (2, 3, 1, 2), (1, 2, 1))))


def test_mirror_involution_on_harvested_schedules():
    rng = random.Random(5)
    for _ in range(200):
        length = rng.randint(1, 7)
        s = flat_clusteron(length + 1)
        triggers = []
        while not is_final(s) and rng.random() < 0.8:
            t = rng.choice(legal_triggers(s))
            triggers.append(t)
            s = apply_move(s, t)
        sched = Schedule(length, tuple(triggers), s)
        assert mirror(mirror(sched)) == sched
        assert replay_schedule(mirror(sched)) == tuple(reversed(s))


def test_build_final_schedule_base():
    assert build_final_schedule(1, 0) == Schedule(1, (1,), (2,))


def test_build_final_schedule_examples():
    assert build_final_schedule(3, 1).triggers == (2, 3, 1, 2)
    assert replay_schedule(build_final_schedule(3, 1)) == (1, 2, 1)
    assert replay_schedule(build_final_schedule(3, 0)) == (2, 1, 1)


def test_build_final_schedule_range_errors():
    with pytest.raises(ValueError):
        build_final_schedule(3, 5)
    with pytest.raises(ValueError):
        build_final_schedule(3, -1)
    with pytest.raises(ValueError):
        build_final_schedule(0, 0)


def test_build_final_schedule_total_up_to_eleven():
    for length in range(1, 12):
        for k in range(length):
            sched = build_final_schedule(length, k)
            expected = (1,) * k + (2,) + (1,) * (length - 1 - k)
            assert sched.target == expected
            assert replay_schedule(sched) == expected


def test_constructor_matches_explorer_finals():
    for length in range(1, 10):
        constructed = {replay_schedule(build_final_schedule(length, k))
                       for k in range(length)}
        _, report = explore(flat_clusteron(length + 1))
        assert constructed == set(report.final_states)


def test_lift_correctness_exhaustive_small():
    # every prefix schedule of the full move tree, every insertion point
    from gapfire.verify import verify_lemma_lift

    result = verify_lemma_lift(exhaustive_gaps_max=4, trials=0)
    assert result.violations == []
    assert result.cases > 0


def test_migration_micro_steps():
    # the zero walks right, trailing a 2 ...
    assert apply_move((1, 2, 0, 1, 1), 3) == (1, 1, 2, 0, 1)
    # ... and annihilates between two 2s
    assert apply_move((1, 2, 0, 2, 1), 3) == (1, 1, 2, 1, 1)


def _migrate_only_zero(s):
    """Trigger the unique zero until final; returns the end state."""
    while not is_final(s):
        triggers = legal_triggers(s)
        assert len(triggers) == 1
        s = apply_move(s, triggers[0])
    return s


def test_middle_case_intermediate_off_by_one_regression():
    # The printed middle-case intermediate (zero, k-1 ones, 2, ones) migrates
    # to a final with the 2 one position left of the claimed target; the
    # corrected recursion inserts the zero before k ones instead.
    length, k = 4, 2
    target = (1,) * k + (2,) + (1,) * (length - 1 - k)  # 1121

    printed = (0,) + (1,) * (k - 1) + (2,) + (1,) * (length - 1 - k)  # 0121
    final_from_printed = _migrate_only_zero(printed)
    assert final_from_printed == (1,) * (k - 1) + (2,) + (1,) * (length - k)  # 1211
    assert final_from_printed != target

    corrected = (0,) + (1,) * k + (2,) + (1,) * (length - 2 - k)  # 0112
    assert _migrate_only_zero(corrected) == target
    assert replay_schedule(build_final_schedule(length, k)) == target


def test_schedule_text_form():
    sched = build_final_schedule(3, 1)
    text = format_schedule(sched)
    assert text == "3; 2,3,1,2; 121"
    assert parse_schedule(text) == sched
    assert parse_schedule("3; ; 000") == Schedule(3, (), (0, 0, 0))
