"""Command-line front end.

Subcommands: simulate, explore, construct, verify, convert, playout.
All output is deterministic for a fixed invocation (including seed); machine
output is a single JSON document on stdout, diagnostics go to stderr.

Exit codes: 0 success / zero violations, 1 domain error, 2 usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import rooms
from .explorer import (
    NodeCapExceededError,
    build_move_tree,
    explore,
    graph_to_dot,
    graph_to_machine,
    tree_to_dot,
    tree_to_machine,
)
from .gap_core import (
    IllegalTriggerError,
    apply_move,
    format_state,
    is_final,
    norm,
    parse_state,
)
from .playouts import NonterminationError, POLICIES, playout_stats
from .schedules import build_final_schedule, format_schedule
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["plain", "machine", "diagram"],
                   default="plain", dest="fmt")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth-limit", type=int, default=10_000)
    p.add_argument("--node-cap", type=int, default=1_000_000)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapfire",
        description="Gap-encoded noisy-violinist chip-firing toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="replay a trigger sequence on a state")
    p.add_argument("state")
    p.add_argument("--triggers", default="")
    _common_flags(p)

    p = sub.add_parser("explore", help="enumerate everything reachable from a state")
    p.add_argument("state")
    p.add_argument("--tree", action="store_true",
                   help="emit the full move tree (repeated states kept)")
    _common_flags(p)

    p = sub.add_parser("construct", help="build a schedule reaching a final state")
    p.add_argument("--gaps", type=int, required=True, help="gap-state length L")
    p.add_argument("--k", type=int, required=True,
                   help="position class: k ones before the single 2")
    _common_flags(p)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--gaps-max", type=int, default=None)
    p.add_argument("--entries-max", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    _common_flags(p)

    p = sub.add_parser("convert", help="translate between gaps and room occupancy")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--rooms", help="occupancy as sorted comma-separated integers")
    g.add_argument("--gaps", help="gap state text form")
    p.add_argument("--leftmost", type=int, default=0)
    _common_flags(p)

    p = sub.add_parser("playout", help="run playouts under a trigger policy")
    p.add_argument("state")
    p.add_argument("--policy", choices=POLICIES, default="leftmost")
    p.add_argument("--trials", type=int, default=1)
    _common_flags(p)

    return parser


def _parse_triggers(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(p.strip()) for p in text.split(","))


def cmd_simulate(args) -> int:
    state = parse_state(args.state)
    triggers = _parse_triggers(args.triggers)
    rows = [(0, None, state)]
    for step, t in enumerate(triggers, start=1):
        try:
            state = apply_move(state, t)
        except (IllegalTriggerError, ValueError) as exc:
            print(f"error at step {step} (trigger {t}): {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        rows.append((step, t, state))
    if args.fmt == "machine":
        doc = {
            "states": [format_state(s) for _, _, s in rows],
            "triggers": list(triggers),
            "norms": [norm(s) for _, _, s in rows],
            "final": is_final(state),
        }
        print(json.dumps(doc, indent=2))
    else:
        print("step  trigger  state  norm  final")
        for step, t, s in rows:
            print(f"{step:<5} {t if t is not None else '-':<8} "
                  f"{format_state(s):<6} {norm(s):<5} {'yes' if is_final(s) else 'no'}")
        print(f"final: {'yes' if is_final(state) else 'no'}")
    return EXIT_OK


def cmd_explore(args) -> int:
    state = parse_state(args.state)
    try:
        graph, report = explore(state, node_cap=args.node_cap)
    except NodeCapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    tree = build_move_tree(state, args.depth_limit) if args.tree else None

    if args.fmt == "machine":
        doc = graph_to_machine(graph)
        doc["report"] = {
            "node_count": report.node_count,
            "edge_count": report.edge_count,
            "final_states": [format_state(s) for s in report.final_states],
            "max_trajectory_length": report.max_trajectory_length,
            "is_acyclic": report.is_acyclic,
            "invariant_violations": report.invariant_violations,
        }
        if tree is not None:
            doc["tree"] = tree_to_machine(tree)
        print(json.dumps(doc, indent=2))
    elif args.fmt == "diagram":
        print(tree_to_dot(tree) if tree is not None else graph_to_dot(graph), end="")
    else:
        print(f"root: {format_state(graph.root)}")
        print(f"nodes: {report.node_count}")
        print(f"edges: {report.edge_count}")
        print("finals: " + ",".join(format_state(s) for s in report.final_states))
        print(f"max-trajectory-length: {report.max_trajectory_length}")
        print(f"acyclic: {'true' if report.is_acyclic else 'false'}")
        print(f"violations: {len(report.invariant_violations)}")
        if tree is not None:
            print(f"tree-nodes: {tree.node_count()}")
            _print_tree_plain(tree.root, None, 0)
    return EXIT_OK if report.is_acyclic and not report.invariant_violations else EXIT_DOMAIN


def _print_tree_plain(node, via, depth) -> None:
    label = format_state(node.state)
    suffix = " [truncated]" if node.truncated else ""
    if via is None:
        print(f"{label}{suffix}")
    else:
        print(f"{'  ' * depth}T{via} -> {label}{suffix}")
    for t, child in node.children:
        _print_tree_plain(child, t, depth + 1)


def cmd_construct(args) -> int:
    try:
        sched = build_final_schedule(args.gaps, args.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.fmt == "machine":
        print(json.dumps({
            "length": sched.length,
            "triggers": list(sched.triggers),
            "target": format_state(sched.target),
        }, indent=2))
    else:
        print(format_schedule(sched))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite, gaps_max=args.gaps_max,
                        entries_max=args.entries_max, trials=args.trials,
                        seed=args.seed)
    total = sum(len(r.violations) for r in results)
    if args.fmt == "machine":
        print(json.dumps({
            "suites": [
                {"suite": r.suite, "cases": r.cases, "violations": r.violations}
                for r in results
            ],
            "total_violations": total,
        }, indent=2))
    else:
        for r in results:
            print(f"{r.suite}: {r.cases} cases, {len(r.violations)} violations")
            for v in r.violations:
                print(f"  {v}", file=sys.stderr)
        print(f"total violations: {total}")
    return EXIT_OK if total == 0 else EXIT_DOMAIN


def cmd_convert(args) -> int:
    try:
        if args.rooms is not None:
            occ = rooms.parse_occupancy(args.rooms)
            print(format_state(rooms.rooms_to_gaps(occ)))
        else:
            s = parse_state(args.gaps)
            print(rooms.format_occupancy(rooms.gaps_to_rooms(s, args.leftmost)))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_playout(args) -> int:
    state = parse_state(args.state)
    try:
        stats = playout_stats(state, args.policy, args.trials,
                              seed=args.seed, depth_limit=args.depth_limit)
    except NonterminationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    lengths = stats.lengths
    finals = sorted(stats.final_counts.items())
    if args.fmt == "machine":
        print(json.dumps({
            "policy": stats.policy,
            "trials": stats.trials,
            "lengths": {"min": min(lengths), "max": max(lengths),
                        "mean": sum(lengths) / len(lengths)},
            "finals": [{"state": format_state(s), "count": c} for s, c in finals],
        }, indent=2))
    else:
        print(f"policy: {stats.policy}")
        print(f"trials: {stats.trials}")
        print(f"lengths: min={min(lengths)} max={max(lengths)} "
              f"mean={sum(lengths) / len(lengths):.2f}")
        print("final  count")
        for s, c in finals:
            print(f"{format_state(s):<6} {c}")
    return EXIT_OK


_HANDLERS = {
    "simulate": cmd_simulate,
    "explore": cmd_explore,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "convert": cmd_convert,
    "playout": cmd_playout,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
