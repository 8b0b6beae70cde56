"""Red/blue edge reduction of MO-MST instances.

A red edge (replaceable on a cycle of strictly dominating edges) is never
needed and is deleted; a blue edge (dominates-or-equals every other edge of
some cut) can carry one tree per nondominated vector and is contracted.
Both checks are conservative: one connectivity search over a filtered edge
set per edge, so they may miss reducible edges but never misclassify.

Contractions are applied one at a time with fresh re-checks in between;
batching them is unsound when blue edges tie in cost (e.g. a triangle of
equal-cost edges, where all three are individually blue but only two fit
in a tree).
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import add

from .core import (
    CostVector,
    EdgeId,
    MultiGraph,
    dominates,
    dominates_or_equal,
)

__all__ = ["Reduction", "is_red", "is_blue", "reduce", "lift"]


@dataclass
class Reduction:
    """A reduced instance plus the bookkeeping to lift solutions back."""

    original: MultiGraph
    reduced_graph: MultiGraph
    node_map: dict[int, int]        # original node -> reduced node
    blue_edges: list[EdgeId]        # original ids forced into every tree
    blue_offset: CostVector
    edge_map: list[EdgeId]          # reduced edge id -> original edge id
    red_count: int
    blue_count: int


def _endpoints_connected(graph: MultiGraph, src: int, dst: int, allowed: list[EdgeId]) -> bool:
    adjacency: dict[int, list[int]] = {}
    for eid in allowed:
        u, v, _ = graph.edges[eid]
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    seen = {src}
    stack = [src]
    while stack:
        u = stack.pop()
        if u == dst:
            return True
        for w in adjacency.get(u, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return dst in seen


def is_red(graph: MultiGraph, eid: EdgeId) -> bool:
    """Cycle rule: a path of strictly dominating edges makes ``eid``
    replaceable in every tree containing it."""
    u, v, ce = graph.edges[eid]
    allowed = [f for f, (_, _, cf) in enumerate(graph.edges)
               if f != eid and dominates(cf, ce)]
    return _endpoints_connected(graph, u, v, allowed)


def is_blue(graph: MultiGraph, eid: EdgeId) -> bool:
    """Cut rule: removing ``eid`` and every edge it does not
    dominate-or-equal disconnects its endpoints, i.e. some cut exists in
    which ``eid`` dominates-or-equals every other crossing edge."""
    u, v, ce = graph.edges[eid]
    allowed = [f for f, (_, _, cf) in enumerate(graph.edges)
               if f != eid and not dominates_or_equal(ce, cf)]
    return not _endpoints_connected(graph, u, v, allowed)


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        self.parent[self.find(x)] = self.find(y)


def reduce(graph: MultiGraph) -> Reduction:
    """Delete red and contract blue edges until a full scan finds neither.

    The working graph lives over contraction classes of the original nodes;
    each deletion or contraction strictly decreases m or n, so the loop
    terminates after at most m + n changes.
    """
    uf = _UnionFind(graph.n)
    alive: list[EdgeId] = list(range(graph.m))
    blue_edges: list[EdgeId] = []
    red_count = 0

    def current_graph() -> tuple[MultiGraph, list[EdgeId]]:
        reps = sorted({uf.find(x) for x in range(graph.n)})
        rep_id = {r: i for i, r in enumerate(reps)}
        edges = []
        ids = []
        for eid in alive:
            u, v, cost = graph.edges[eid]
            ru, rv = rep_id[uf.find(u)], rep_id[uf.find(v)]
            edges.append((ru, rv, cost))
            ids.append(eid)
        g = MultiGraph(len(reps), edges, root=rep_id[uf.find(graph.root)],
                       dimension=graph.dimension)
        return g, ids

    changed = True
    while changed:
        changed = False
        scan = list(alive)
        for eid in scan:
            if eid not in alive:
                continue
            cur, ids = current_graph()
            local = ids.index(eid)
            if is_red(cur, local):
                alive.remove(eid)
                red_count += 1
                changed = True
                check, _ = current_graph()  # constructor asserts connectivity
                assert check.n >= 1
            elif is_blue(cur, local):
                u, v, _ = graph.edges[eid]
                blue_edges.append(eid)
                uf.union(u, v)
                alive = [f for f in alive
                         if uf.find(graph.edges[f][0]) != uf.find(graph.edges[f][1])]
                changed = True

    reduced, edge_map = current_graph()
    reps = sorted({uf.find(x) for x in range(graph.n)})
    rep_id = {r: i for i, r in enumerate(reps)}
    node_map = {x: rep_id[uf.find(x)] for x in range(graph.n)}
    offset = (0,) * graph.dimension
    for eid in blue_edges:
        offset = tuple(map(add, offset, graph.edges[eid][2]))
    return Reduction(
        original=graph,
        reduced_graph=reduced,
        node_map=node_map,
        blue_edges=blue_edges,
        blue_offset=offset,
        edge_map=edge_map,
        red_count=red_count,
        blue_count=len(blue_edges),
    )


def lift(reduction: Reduction, reduced_tree: frozenset[EdgeId] | set[EdgeId]) -> frozenset[EdgeId]:
    """Map a spanning tree of the reduced graph back to original edge ids,
    adding the contracted blue edges."""
    original = set()
    for rid in reduced_tree:
        if not 0 <= rid < len(reduction.edge_map):
            raise ValueError("unmapped reduced edge id %d" % rid)
        original.add(reduction.edge_map[rid])
    original.update(reduction.blue_edges)
    return frozenset(original)
