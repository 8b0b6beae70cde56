"""Implicit transition-graph layer over root-containing node subsets.

A transition node is a bitmask over the original nodes with the root bit
always set. Its outgoing arcs are copies of the cut edges of that subset;
an arc's head adds exactly one new node, so the graph is a layered acyclic
multigraph. Arcs are built on demand (``StateMap``) or exhaustively for
counting tests (``explicit_graph``).
"""

from __future__ import annotations

from collections import deque

from .core import CostVector, EdgeId, Frontier, MultiGraph, UnsupportedSizeError, cut, dominates

PRUNING_MODES = ("none", "cut_star")


def node_index(mask: int, root: int) -> int:
    """Bijective index of a root-containing mask: drop the root bit and read
    the remaining n-1 bits as an integer. Used as the hash-map key."""
    if not (mask >> root) & 1:
        raise ValueError("mask %#x does not contain root %d" % (mask, root))
    low = mask & ((1 << root) - 1)
    return low | ((mask >> (root + 1)) << root)


class ArcCopy:
    """One copy of an original edge in the transition graph.

    ``inside_node`` is the endpoint that was already in the tail subset,
    ``new_node`` the one being added; head == tail | (1 << new_node).
    ``backlog`` and ``head_state`` are solver-owned slots filled in when the
    arc set is registered for a solve.
    """

    __slots__ = ("tail", "head", "preimage", "cost", "new_node", "inside_node",
                 "backlog", "head_state")

    def __init__(self, tail: int, head: int, preimage: EdgeId, cost: CostVector,
                 new_node: int, inside_node: int) -> None:
        self.tail = tail
        self.head = head
        self.preimage = preimage
        self.cost = cost
        self.new_node = new_node
        self.inside_node = inside_node
        self.backlog = None
        self.head_state = None

    def __repr__(self) -> str:
        return "ArcCopy(%#x->%#x, edge=%d, cost=%s)" % (
            self.tail, self.head, self.preimage, self.cost)


def build_outgoing(graph: MultiGraph, mask: int, pruning: str = "cut_star") -> list[ArcCopy]:
    """Arc copies leaving ``mask``, sorted by (new_node, EdgeId).

    pruning="none" keeps one arc per cut edge. pruning="cut_star" keeps only
    a minimum complete set of the cut: edges strictly dominated by another
    cut edge are dropped, and of every cost-equal class exactly the lowest
    EdgeId survives.
    """
    if pruning not in PRUNING_MODES:
        raise ValueError("unknown pruning mode %r" % pruning)
    edge_ids = cut(graph, mask)
    if pruning == "cut_star" and len(edge_ids) > 1:
        costs = [graph.edges[e][2] for e in edge_ids]
        kept = []
        seen: set[CostVector] = set()
        for eid, ce in zip(edge_ids, costs):
            if ce in seen:
                continue
            if any(dominates(cf, ce) for cf in costs):
                continue
            seen.add(ce)
            kept.append(eid)
        edge_ids = kept

    arcs = []
    for eid in edge_ids:
        u, v, cost = graph.edges[eid]
        if (mask >> u) & 1:
            inside, new = u, v
        else:
            inside, new = v, u
        arcs.append(ArcCopy(mask, mask | (1 << new), eid, cost, new, inside))
    arcs.sort(key=lambda a: (a.new_node, a.preimage))
    return arcs


def explicit_graph(graph: MultiGraph, pruning: str = "none") -> tuple[int, int]:
    """Materialize every reachable transition node; return (nodes, arcs).

    Test-scale only: refuses graphs with more than 20 nodes.
    """
    if graph.n > 20:
        raise UnsupportedSizeError("explicit construction limited to n <= 20")
    root_mask = 1 << graph.root
    full = graph.full_mask
    seen = {root_mask}
    stack = [root_mask]
    arc_count = 0
    while stack:
        mask = stack.pop()
        if mask == full:
            continue
        for arc in build_outgoing(graph, mask, pruning):
            arc_count += 1
            if arc.head not in seen:
                seen.add(arc.head)
                stack.append(arc.head)
    return len(seen), arc_count


class NodeState:
    """Per-transition-node solver state: the permanent frontier, the lazily
    built outgoing arc set, and (for the queue-refill search) the incoming
    arcs registered so far."""

    __slots__ = ("mask", "index", "frontier", "outgoing", "incoming")

    def __init__(self, mask: int, index: int, dimension: int | None = None) -> None:
        self.mask = mask
        self.index = index
        self.frontier = Frontier(dimension)
        self.outgoing: list[ArcCopy] | None = None
        self.incoming: list[ArcCopy] = []


class StateMap:
    """Lazily created transition-node states for one solve.

    With ``track_incoming`` every newly built arc gets an empty backlog
    deque and is registered at its head's incoming list (the bookkeeping
    the queue-refill search needs); the plain mode is enough for the
    baseline solver.
    """

    def __init__(self, graph: MultiGraph, pruning: str = "cut_star",
                 track_incoming: bool = False) -> None:
        if pruning not in PRUNING_MODES:
            raise ValueError("unknown pruning mode %r" % pruning)
        self.graph = graph
        self.pruning = pruning
        self.track_incoming = track_incoming
        self.states: dict[int, NodeState] = {}
        self.created = 0

    def get_or_create(self, mask: int) -> NodeState:
        idx = node_index(mask, self.graph.root)
        state = self.states.get(idx)
        if state is None:
            state = NodeState(mask, idx, self.graph.dimension)
            self.states[idx] = state
            self.created += 1
        return state

    def ensure_outgoing(self, state: NodeState) -> list[ArcCopy]:
        if state.outgoing is None:
            arcs = build_outgoing(self.graph, state.mask, self.pruning)
            for arc in arcs:
                head_state = self.get_or_create(arc.head)
                arc.head_state = head_state
                if self.track_incoming:
                    arc.backlog = deque()
                    head_state.incoming.append(arc)
            state.outgoing = arcs
        return state.outgoing
