"""Implicit-graph multiobjective Dijkstra solver.

Label-setting search on the pruned transition graph. The priority queue
holds at most one explored label per transition node (lex order on full
cost vectors, ties broken by node index); displaced explored labels wait in
per-arc backlog deques kept lex-sorted by front/back insertion, and every
extraction refills the vacated queue slot from those backlogs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from operator import add, le
from typing import Callable, Optional

from .core import CostVector, EdgeId, MultiGraph
from .transition import ArcCopy, NodeState, StateMap

__all__ = [
    "Label",
    "Limits",
    "SolveStats",
    "SolveResult",
    "AddressableHeap",
    "solve",
    "propagate",
    "next_queue_path",
    "reconstruct_tree",
]


class Label:
    """A partial solution: an {root}-to-subset path, i.e. a tree spanning the
    nodes of ``node``. ``pred`` chains lead back to the initial label.

    ``checked`` counts how many entries of the owning node's (append-only)
    frontier this label has already been compared against, so repeated
    dominance tests only scan the new suffix.
    """

    __slots__ = ("cost", "node", "arc", "pred", "checked")

    def __init__(self, cost: CostVector, node: int, arc: Optional[ArcCopy],
                 pred: Optional["Label"]) -> None:
        self.cost = cost
        self.node = node
        self.arc = arc
        self.pred = pred
        self.checked = 0

    @property
    def last_edge(self) -> Optional[EdgeId]:
        return None if self.arc is None else self.arc.preimage

    def __repr__(self) -> str:
        return "Label(cost=%s, node=%#x)" % (self.cost, self.node)


@dataclass
class Limits:
    """Solve limits and the bench progress hook, checked every
    ``check_interval`` queue extractions."""

    time_limit_s: float | None = None
    mem_limit_mb: float | None = None
    progress: Callable[["SolveStats"], None] | None = None
    check_interval: int = 64


@dataclass
class SolveStats:
    iterations: int = 0
    transition_nodes_created: int = 0
    permanent_count: int = 0
    max_frontier: int = 0
    solve_time: float = 0.0
    labels_created: int = 0
    max_queue_per_node: int = 0  # maintained by the baseline solver in debug mode

    def estimated_bytes(self, dimension: int) -> int:
        # Rough per-object arena estimate; only used for the in-process
        # memory budget, not for reporting.
        per_label = 160 + 16 * dimension
        return self.labels_created * per_label + self.transition_nodes_created * 256


@dataclass
class SolveResult:
    status: str  # solved | timeout | memout
    costs: list[CostVector] = field(default_factory=list)
    trees: list[frozenset[EdgeId]] = field(default_factory=list)
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def solved(self) -> bool:
        return self.status == "solved"


class AddressableHeap:
    """Binary min-heap keyed by (cost, node index) with decrease-key.

    Holds at most one entry per transition node; entries are
    (key, state, label) triples and the position map is keyed by the node
    index, so replacing a node's label is a sift from its known position.
    """

    __slots__ = ("_entries", "_pos")

    def __init__(self) -> None:
        self._entries: list[tuple[tuple, NodeState, Label]] = []
        self._pos: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def get(self, index: int) -> Optional[Label]:
        pos = self._pos.get(index)
        return None if pos is None else self._entries[pos][2]

    def insert(self, state: NodeState, label: Label) -> None:
        if state.index in self._pos:
            raise AssertionError("duplicate queue entry for node %#x" % state.mask)
        self._entries.append(((label.cost, state.index), state, label))
        self._siftup(len(self._entries) - 1)

    def decrease_key(self, index: int, label: Label) -> None:
        pos = self._pos[index]
        state = self._entries[pos][1]
        self._entries[pos] = ((label.cost, index), state, label)
        self._siftup(pos)

    def extract_min(self) -> tuple[NodeState, Label]:
        entries = self._entries
        _, state, label = entries[0]
        del self._pos[state.index]
        last = entries.pop()
        if entries:
            entries[0] = last
            self._pos[last[1].index] = 0
            self._siftdown(0)
        return state, label

    def _siftup(self, pos: int) -> None:
        entries, posmap = self._entries, self._pos
        entry = entries[pos]
        key = entry[0]
        while pos > 0:
            parent_pos = (pos - 1) >> 1
            parent = entries[parent_pos]
            if key >= parent[0]:
                break
            entries[pos] = parent
            posmap[parent[1].index] = pos
            pos = parent_pos
        entries[pos] = entry
        posmap[entry[1].index] = pos

    def _siftdown(self, pos: int) -> None:
        entries, posmap = self._entries, self._pos
        size = len(entries)
        entry = entries[pos]
        key = entry[0]
        while True:
            child = 2 * pos + 1
            if child >= size:
                break
            right = child + 1
            if right < size and entries[right][0] < entries[child][0]:
                child = right
            if entries[child][0] >= key:
                break
            entries[pos] = entries[child]
            posmap[entries[pos][1].index] = pos
            pos = child
        entries[pos] = entry
        posmap[entry[1].index] = pos


class _LimitHit(Exception):
    def __init__(self, status: str) -> None:
        self.status = status


def _check_limits(limits: Limits, stats: SolveStats, dimension: int, t0: float) -> None:
    if limits.progress is not None:
        limits.progress(stats)
    if limits.time_limit_s is not None and time.perf_counter() - t0 > limits.time_limit_s:
        raise _LimitHit("timeout")
    if (limits.mem_limit_mb is not None
            and stats.estimated_bytes(dimension) > limits.mem_limit_mb * 2**20):
        raise _LimitHit("memout")


def _dominated(frontier, cost: CostVector, debug: bool) -> bool:
    hit = frontier.dominates(cost, skip_first=True)
    if debug:
        # Dimensionality-reduction cross-check: with lex extraction order the
        # reduced test must agree with the full componentwise test.
        assert hit == frontier.dominates(cost, skip_first=False), \
            "dimensionality reduction mismatch for %s" % (cost,)
    return hit


def _dominated_label(frontier, label: Label, debug: bool) -> bool:
    """Cached variant for labels re-tested against their node's growing
    frontier: only the entries appended since the last test are scanned."""
    start = label.checked
    size = len(frontier)
    if size == start:
        return False
    hit = frontier.dominates(label.cost, skip_first=True, start=start)
    if debug:
        assert hit == frontier.dominates(label.cost, skip_first=False, start=start), \
            "dimensionality reduction mismatch for %s" % (label.cost,)
    if not hit:
        label.checked = size
    return hit


def propagate(label: Label, state: NodeState, smap: StateMap, heap: AddressableHeap,
              stats: SolveStats, debug: bool = False) -> bool:
    """Expand an extracted label along its node's pruned outgoing arcs.

    Returns True iff at least one expansion survived the dominance check
    against its head's permanent frontier (which makes ``label`` permanent).
    Surviving labels go to the queue, displace a lex-greater incumbent, or
    wait in their arc's backlog; dominated-or-equal material is dropped.
    """
    success = False
    pcost = label.cost
    for arc in smap.ensure_outgoing(state):
        head_state = arc.head_state
        qcost = tuple(map(add, pcost, arc.cost))
        frontier = head_state.frontier
        if frontier.dominates(qcost, True):
            if debug:
                assert frontier.dominates(qcost, False), \
                    "dimensionality reduction mismatch for %s" % (qcost,)
            continue
        if debug:
            assert not frontier.dominates(qcost, False), \
                "dimensionality reduction mismatch for %s" % (qcost,)
        success = True
        incumbent = heap.get(head_state.index)
        if incumbent is None:
            q = Label(qcost, arc.head, arc, label)
        elif qcost < incumbent.cost:
            q = Label(qcost, arc.head, arc, label)
            if not all(map(le, qcost, incumbent.cost)):
                # Displaced incumbent stays lex-minimal among its arc's
                # waiting labels, so it belongs at the front.
                incumbent.arc.backlog.appendleft(incumbent)
        elif not all(map(le, incumbent.cost, qcost)):
            q = Label(qcost, arc.head, arc, label)
        else:
            continue  # dominated-or-equal by the incumbent, drop
        q.checked = len(frontier)
        stats.labels_created += 1
        if incumbent is None:
            heap.insert(head_state, q)
        elif qcost < incumbent.cost:
            heap.decrease_key(head_state.index, q)
        else:
            arc.backlog.append(q)
    return success


def next_queue_path(state: NodeState, debug: bool = False) -> Optional[Label]:
    """Refill candidate for a node whose queue slot was just vacated.

    Scans the heads of the backlogs of all incoming arcs; heads dominated by
    (or equal to) the node's frontier are popped and discarded for good,
    and the lex-least surviving head is removed from its deque and returned.
    """
    frontier = state.frontier
    size = len(frontier.costs)
    dominates = frontier.dominates
    best_cost = None
    best_deque = None
    for arc in state.incoming:
        dq = arc.backlog
        while dq:
            head = dq[0]
            start = head.checked
            if size > start:
                if dominates(head.cost, True, start):
                    if debug:
                        assert dominates(head.cost, False, start)
                    dq.popleft()
                    continue
                if debug:
                    assert not dominates(head.cost, False, start)
                head.checked = size
            break
        if dq:
            cost = dq[0].cost
            if best_cost is None or cost < best_cost:
                best_cost = cost
                best_deque = dq
    if best_deque is None:
        return None
    if debug:
        assert all(best_deque[i].cost <= best_deque[i + 1].cost
                   for i in range(len(best_deque) - 1)), "backlog out of lex order"
    return best_deque.popleft()


def reconstruct_tree(label: Label) -> frozenset[EdgeId]:
    """Edge ids of the tree a permanent label represents (pred-chain walk)."""
    edges = []
    while label.arc is not None:
        edges.append(label.arc.preimage)
        label = label.pred
        if label is None:
            raise AssertionError("broken predecessor chain")
    return frozenset(edges)


def solve(graph: MultiGraph, *, prune: bool = True, limits: Limits | None = None,
          debug: bool = False) -> SolveResult:
    """Compute a minimum complete set of efficient spanning trees.

    Returns one tree per nondominated cost vector plus run statistics.
    ``prune=False`` disables the cut-dominance arc pruning (for equivalence
    tests). ``debug=True`` turns on the internal invariant assertions.
    """
    t0 = time.perf_counter()
    limits = limits or Limits()
    stats = SolveStats()
    smap = StateMap(graph, "cut_star" if prune else "none", track_incoming=True)
    heap = AddressableHeap()
    root_mask = 1 << graph.root
    full = graph.full_mask
    root_state = smap.get_or_create(root_mask)
    heap.insert(root_state, Label((0,) * graph.dimension, root_mask, None, None))

    solutions: list[Label] = []
    status = "solved"
    last_cost: CostVector | None = None
    check_interval = max(1, limits.check_interval)
    try:
        while heap:
            stats.iterations += 1
            if stats.iterations % check_interval == 0:
                stats.transition_nodes_created = smap.created
                _check_limits(limits, stats, graph.dimension, t0)
            state, label = heap.extract_min()
            if debug:
                assert last_cost is None or last_cost <= label.cost, \
                    "extraction order not lex-nondecreasing"
                last_cost = label.cost
            success = False
            if label.node != full:
                success = propagate(label, state, smap, heap, stats, debug)
            if success or label.node == full:
                state.frontier.append(label.cost)
                stats.permanent_count += 1
                if len(state.frontier) > stats.max_frontier:
                    stats.max_frontier = len(state.frontier)
                if label.node == full:
                    solutions.append(label)
            refill = next_queue_path(state, debug)
            if refill is not None:
                heap.insert(state, refill)
    except _LimitHit as hit:
        status = hit.status

    stats.transition_nodes_created = smap.created
    stats.solve_time = time.perf_counter() - t0
    if debug:
        for st in smap.states.values():
            _assert_pairwise_nondominated(st.frontier.costs)
    costs = [lab.cost for lab in solutions]
    trees = [reconstruct_tree(lab) for lab in solutions]
    return SolveResult(status, costs, trees, stats)


def _assert_pairwise_nondominated(costs: list[CostVector]) -> None:
    for i, x in enumerate(costs):
        for y in costs[i + 1:]:
            if x == y:
                raise AssertionError("frontier contains duplicate vector %s" % (x,))
            if all(map(le, x, y)) or all(map(le, y, x)):
                raise AssertionError("frontier not an antichain: %s vs %s" % (x, y))
