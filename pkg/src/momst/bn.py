"""Build-network baseline solver.

Works on the unpruned transition graph and breaks tree symmetry with
canonical ("minimal") path representations instead of arc pruning: a label
may only be extended by arcs that keep the represented tree's unique
construction order. The queue may hold several labels per node; dominance
is re-checked lazily after extraction.
"""

from __future__ import annotations

import heapq
import time
from operator import add

from .core import CostVector, MultiGraph
from .igmda import (Label, Limits, SolveResult, SolveStats,
                    _assert_pairwise_nondominated, _check_limits, _dominated,
                    _dominated_label, _LimitHit, reconstruct_tree)
from .transition import ArcCopy, StateMap

__all__ = ["BnLabel", "minimal_extensions", "solve_bn"]

SORT_MODES = ("lex", "sum")


class BnLabel(Label):
    """Label plus the order in which original nodes joined the tree
    (root first); positions in that vector drive the extension rule."""

    __slots__ = ("order",)

    def __init__(self, cost, node, arc, pred, order: tuple[int, ...]) -> None:
        super().__init__(cost, node, arc, pred)
        self.order = order


def minimal_extensions(label: BnLabel, outgoing: list[ArcCopy]) -> list[ArcCopy]:
    """Arcs that extend ``label`` to another canonical tree representation.

    Interpreting each arc's preimage as the ordered pair (interior endpoint,
    new node), an arc is allowed iff it attaches to the same interior
    endpoint as the label's last arc with a strictly larger new-node id, or
    its interior endpoint joined the tree strictly later than the last
    arc's. Both cases collapse to a strict increase of the key
    (join position of interior endpoint, new node id). Everything is
    allowed from the initial label.
    """
    last = label.arc
    if last is None:
        return list(outgoing)
    pos = {node: i for i, node in enumerate(label.order)}
    last_key = (pos[last.inside_node], last.new_node)
    return [a for a in outgoing if (pos[a.inside_node], a.new_node) > last_key]


def _key_packer(graph: MultiGraph, sort: str):
    """Queue keys as plain ints: with every reachable component below
    ``base``, the base-B digit string of a cost vector orders exactly like
    the vector itself, and int comparisons keep the huge lazy queue cheap."""
    top = max((max(c) for _, _, c in graph.edges), default=0)
    base = top * max(1, graph.n - 1) + 1

    def pack(cost: CostVector) -> int:
        key = 0
        for c in cost:
            key = key * base + c
        return key

    if sort == "lex":
        return pack
    return lambda cost: (sum(cost), pack(cost))


def solve_bn(graph: MultiGraph, *, exhaustive: bool = False, sort: str = "lex",
             limits: Limits | None = None, debug: bool = False) -> SolveResult:
    """Solve via canonical-path enumeration with lazy dominance checks.

    ``exhaustive=True`` (test-only) disables every dominance check so that
    each spanning tree is extracted at the full node exactly once — the
    canonical-representation bijection. ``sort`` picks the queue order:
    lexicographic (default, enables the reduced dominance test) or sum of
    cost components (ablation only).
    """
    if sort not in SORT_MODES:
        raise ValueError("unknown sort mode %r" % sort)
    lex = sort == "lex"
    t0 = time.perf_counter()
    limits = limits or Limits()
    stats = SolveStats()
    smap = StateMap(graph, "none", track_incoming=False)
    root_mask = 1 << graph.root
    full = graph.full_mask
    root_state = smap.get_or_create(root_mask)
    init = BnLabel((0,) * graph.dimension, root_mask, None, None, (graph.root,))

    pack = _key_packer(graph, sort)
    seq = 0
    heap: list[tuple] = [(pack(init.cost), seq, root_state, init)]
    queue_counts: dict[int, int] = {root_state.index: 1} if debug else {}

    solutions: list[BnLabel] = []
    status = "solved"
    last_key = None
    check_interval = max(1, limits.check_interval)
    try:
        while heap:
            key, _, state, label = heapq.heappop(heap)
            stats.iterations += 1
            if stats.iterations % check_interval == 0:
                stats.transition_nodes_created = smap.created
                _check_limits(limits, stats, graph.dimension, t0)
            if debug:
                assert last_key is None or last_key <= key, "extraction order violated"
                last_key = key
                queue_counts[state.index] -= 1
            if not exhaustive and (
                    _dominated_label(state.frontier, label, debug) if lex
                    else state.frontier.dominates(label.cost, start=label.checked)):
                continue
            if label.node == full:
                state.frontier.append(label.cost)
                stats.permanent_count += 1
                if len(state.frontier) > stats.max_frontier:
                    stats.max_frontier = len(state.frontier)
                solutions.append(label)
                continue
            outgoing = smap.ensure_outgoing(state)
            success = False
            for arc in minimal_extensions(label, outgoing):
                qcost = tuple(map(add, label.cost, arc.cost))
                head_state = arc.head_state
                if not exhaustive and (
                        _dominated(head_state.frontier, qcost, debug) if lex
                        else head_state.frontier.dominates(qcost)):
                    continue
                seq += 1
                stats.labels_created += 1
                q = BnLabel(qcost, arc.head, arc, label, label.order + (arc.new_node,))
                q.checked = len(head_state.frontier)
                heapq.heappush(heap, (pack(qcost), seq, head_state, q))
                success = True
                if debug:
                    count = queue_counts.get(head_state.index, 0) + 1
                    queue_counts[head_state.index] = count
                    if count > stats.max_queue_per_node:
                        stats.max_queue_per_node = count
            if success:
                state.frontier.append(label.cost)
                stats.permanent_count += 1
                if len(state.frontier) > stats.max_frontier:
                    stats.max_frontier = len(state.frontier)
    except _LimitHit as hit:
        status = hit.status

    stats.transition_nodes_created = smap.created
    stats.solve_time = time.perf_counter() - t0
    if debug and not exhaustive:
        for st in smap.states.values():
            _assert_pairwise_nondominated(st.frontier.costs)
    costs = [lab.cost for lab in solutions]
    trees = [reconstruct_tree(lab) for lab in solutions]
    return SolveResult(status, costs, trees, stats)
