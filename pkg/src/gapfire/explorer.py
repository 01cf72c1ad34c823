"""Exhaustive enumeration of move trees and reachability graphs.

``build_move_tree`` enumerates every trajectory as a tree, keeping repeated
states as distinct nodes.  ``explore`` deduplicates: it computes the memoized
breadth-first closure of a state under all legal moves, then certifies
acyclicity by explicit cycle detection rather than assuming termination.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .gap_core import (
    GapState,
    IllegalTriggerError,
    Trajectory,
    apply_move,
    check_window_bound,
    classify_norm_step,
    entry_step_law,
    format_state,
    is_final,
    legal_triggers,
)

DEFAULT_NODE_CAP = 1_000_000
DEFAULT_DEPTH_LIMIT = 10_000


class NodeCapExceededError(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"exploration exceeded the node cap of {cap}")
        self.cap = cap


@dataclass
class TreeNode:
    state: GapState
    children: list[tuple[int, "TreeNode"]] = field(default_factory=list)
    truncated: bool = False


@dataclass
class MoveTree:
    root: TreeNode
    depth_limit: int

    def _walk(self):
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            for _, child in node.children:
                stack.append(child)

    def node_count(self) -> int:
        return sum(1 for _ in self._walk())

    def leaf_states(self) -> list[GapState]:
        """States of all childless nodes, including truncated ones."""
        return [n.state for n in self._walk() if not n.children]

    def any_truncated(self) -> bool:
        return any(n.truncated for n in self._walk())


def build_move_tree(initial: GapState, depth_limit: int = DEFAULT_DEPTH_LIMIT) -> MoveTree:
    """Full move tree from ``initial``, children in increasing trigger order.

    Branches longer than ``depth_limit`` are cut and their cut points flagged
    as truncated instead of raising.
    """
    root = TreeNode(tuple(initial))
    stack = [(root, 0)]
    while stack:
        node, depth = stack.pop()
        triggers = legal_triggers(node.state)
        if not triggers:
            continue
        if depth >= depth_limit:
            node.truncated = True
            continue
        for t in triggers:
            child = TreeNode(apply_move(node.state, t))
            node.children.append((t, child))
            stack.append((child, depth + 1))
    return MoveTree(root, depth_limit)


@dataclass
class ReachabilityGraph:
    root: GapState
    nodes: list[GapState]  # breadth-first discovery order
    edges: list[tuple[GapState, int, GapState]]
    index: dict[GapState, int]

    def finals(self) -> list[GapState]:
        return sorted(s for s in self.nodes if is_final(s))


@dataclass
class ExploreReport:
    node_count: int
    edge_count: int
    final_states: list[GapState]
    max_trajectory_length: int | None
    is_acyclic: bool
    invariant_violations: list[str]


def explore(
    initial: GapState,
    node_cap: int = DEFAULT_NODE_CAP,
    flat_origin: bool | None = None,
) -> tuple[ReachabilityGraph, ExploreReport]:
    """Memoized breadth-first closure of ``initial`` under all legal moves.

    The report carries explicit verdicts: cycle detection over the finished
    graph, the longest root trajectory (well-defined only when acyclic), the
    norm-delta and per-entry laws checked on every edge, and -- for all-zero
    starts, or when ``flat_origin`` is forced -- the window bound and the
    {0,1,2} alphabet on every reached state.
    """
    initial = tuple(initial)
    if flat_origin is None:
        flat_origin = all(a == 0 for a in initial)
    index = {initial: 0}
    nodes = [initial]
    edges: list[tuple[GapState, int, GapState]] = []
    queue = deque([initial])
    while queue:
        s = queue.popleft()
        for t in legal_triggers(s):
            nxt = apply_move(s, t)
            if nxt not in index:
                if len(nodes) >= node_cap:
                    raise NodeCapExceededError(node_cap)
                index[nxt] = len(nodes)
                nodes.append(nxt)
                queue.append(nxt)
            edges.append((s, t, nxt))
    graph = ReachabilityGraph(initial, nodes, edges, index)
    return graph, _build_report(graph, flat_origin)


def _build_report(graph: ReachabilityGraph, flat_origin: bool) -> ExploreReport:
    n = len(graph.nodes)
    adj: list[list[int]] = [[] for _ in range(n)]
    indegree = [0] * n
    for src, _, dst in graph.edges:
        adj[graph.index[src]].append(graph.index[dst])
        indegree[graph.index[dst]] += 1

    acyclic = _is_acyclic(adj)
    longest = _longest_path_from_root(adj, indegree) if acyclic else None

    violations: list[str] = []
    for src, t, dst in graph.edges:
        try:
            delta = classify_norm_step(src, dst, t)
        except (ValueError, IllegalTriggerError) as exc:
            violations.append(f"edge {format_state(src)} -{t}-> {format_state(dst)}: {exc}")
            continue
        if delta == 2 and any(src):
            violations.append(
                f"edge {format_state(src)} -{t}->: norm jumped by 2 from a nonzero state"
            )
        if not entry_step_law(src, dst):
            violations.append(
                f"edge {format_state(src)} -{t}-> {format_state(dst)}: entry step law"
            )
    if flat_origin:
        for s in graph.nodes:
            if not check_window_bound(s):
                violations.append(f"state {format_state(s)}: window bound")
            if any(a > 2 for a in s):
                violations.append(f"state {format_state(s)}: entry above 2")

    return ExploreReport(
        node_count=n,
        edge_count=len(graph.edges),
        final_states=graph.finals(),
        max_trajectory_length=longest,
        is_acyclic=acyclic,
        invariant_violations=violations,
    )


def _is_acyclic(adj: list[list[int]]) -> bool:
    # iterative three-color DFS
    WHITE, GRAY, BLACK = 0, 1, 2
    color = [WHITE] * len(adj)
    for start in range(len(adj)):
        if color[start] != WHITE:
            continue
        stack: list[tuple[int, int]] = [(start, 0)]
        color[start] = GRAY
        while stack:
            node, i = stack[-1]
            if i < len(adj[node]):
                stack[-1] = (node, i + 1)
                nxt = adj[node][i]
                if color[nxt] == GRAY:
                    return False
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, 0))
            else:
                color[node] = BLACK
                stack.pop()
    return True


def _longest_path_from_root(adj: list[list[int]], indegree: list[int]) -> int:
    order: list[int] = []
    deg = list(indegree)
    ready = deque(i for i, d in enumerate(deg) if d == 0)
    while ready:
        node = ready.popleft()
        order.append(node)
        for nxt in adj[node]:
            deg[nxt] -= 1
            if deg[nxt] == 0:
                ready.append(nxt)
    longest = [0] * len(adj)
    for node in reversed(order):
        for nxt in adj[node]:
            longest[node] = max(longest[node], 1 + longest[nxt])
    return longest[0]  # node 0 is the root


def classify_final(s: GapState) -> int | None:
    """Position class of a clusteron-shaped final state.

    Returns k when the state is k ones, a single 2, then ones again; None for
    final states of any other shape (those arise only from non-flat starts).
    """
    if not is_final(s):
        raise ValueError(f"{s} is not final")
    if s.count(2) == 1 and all(a in (1, 2) for a in s):
        return s.index(2)
    return None


def validate_trajectory(traj: Trajectory, flat_origin: bool = False) -> list[str]:
    """Run every per-step and per-state law over a trajectory.

    Returns a list of violation messages, empty for a legal trajectory.  With
    ``flat_origin`` the window bound and alphabet checks are applied to every
    state as well.
    """
    if len(traj.states) != len(traj.triggers) + 1 or traj.states[0] != traj.initial:
        raise ValueError("malformed trajectory: states do not match triggers")
    violations: list[str] = []
    for step, trigger in enumerate(traj.triggers, start=1):
        prev, nxt = traj.states[step - 1], traj.states[step]
        if len(prev) != len(nxt):
            violations.append(f"step {step}: length changed")
            continue
        if not entry_step_law(prev, nxt):
            violations.append(f"step {step}: entry step law violated")
            continue
        try:
            delta = classify_norm_step(prev, nxt, trigger)
        except (ValueError, IllegalTriggerError) as exc:
            violations.append(f"step {step}: not a legal move ({exc})")
            continue
        if delta == 2 and any(prev):
            violations.append(f"step {step}: norm jumped by 2 from a nonzero state")
    if flat_origin:
        for i, s in enumerate(traj.states):
            if not check_window_bound(s):
                violations.append(f"state {i}: window bound violated")
            if any(a > 2 for a in s):
                violations.append(f"state {i}: entry above 2")
    return violations


# --- exports ---------------------------------------------------------------


def graph_to_machine(graph: ReachabilityGraph) -> dict:
    """JSON-ready form: dense ids in discovery order, finals flagged."""
    return {
        "root": format_state(graph.root),
        "nodes": [
            {"id": i, "state": format_state(s), "final": is_final(s)}
            for i, s in enumerate(graph.nodes)
        ],
        "edges": [
            {"from": graph.index[src], "trigger": t, "to": graph.index[dst]}
            for src, t, dst in graph.edges
        ],
    }


def tree_to_machine(tree: MoveTree) -> dict:
    def render(node: TreeNode) -> dict:
        return {
            "state": format_state(node.state),
            "truncated": node.truncated,
            "children": [
                {"trigger": t, "node": render(child)} for t, child in node.children
            ],
        }

    return render(tree.root)


def graph_to_dot(graph: ReachabilityGraph) -> str:
    lines = ["digraph reachability {"]
    for i, s in enumerate(graph.nodes):
        shape = "doublecircle" if is_final(s) else "circle"
        lines.append(f'  n{i} [label="{format_state(s)}" shape={shape}];')
    for src, t, dst in graph.edges:
        lines.append(f'  n{graph.index[src]} -> n{graph.index[dst]} [label="{t}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(tree: MoveTree) -> str:
    lines = ["digraph movetree {"]
    counter = 0

    def render(node: TreeNode) -> int:
        nonlocal counter
        my_id = counter
        counter += 1
        shape = "doublecircle" if is_final(node.state) else "circle"
        lines.append(f'  n{my_id} [label="{format_state(node.state)}" shape={shape}];')
        for t, child in node.children:
            child_id = render(child)
            lines.append(f'  n{my_id} -> n{child_id} [label="{t}"];')
        return my_id

    render(tree.root)
    lines.append("}")
    return "\n".join(lines) + "\n"
