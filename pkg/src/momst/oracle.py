"""Brute-force ground truth for small instances.

Every (n-1)-subset of edges is tested for being a spanning tree with a
disjoint-set union; nothing here is shared with the solvers, which is the
point. Guarded so it refuses anything beyond desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from operator import le

from .core import CostVector, EdgeId, MultiGraph

__all__ = ["TreeSet", "enumerate_spanning_trees", "pareto_filter", "nondominated_costs"]

_GUARD = 10_000_000


@dataclass
class TreeSet:
    trees: list[frozenset[EdgeId]]
    costs: list[CostVector]


def enumerate_spanning_trees(graph: MultiGraph) -> TreeSet:
    """All spanning trees of ``graph`` by exhaustive subset enumeration."""
    n, m = graph.n, graph.m
    if n == 1:
        return TreeSet([frozenset()], [(0,) * graph.dimension])
    if math.comb(m, n - 1) > _GUARD:
        raise ValueError("instance too large for exhaustive enumeration")

    heads = [e[0] for e in graph.edges]
    tails = [e[1] for e in graph.edges]
    costs = [e[2] for e in graph.edges]
    d = graph.dimension

    trees: list[frozenset[EdgeId]] = []
    tree_costs: list[CostVector] = []
    for combo in combinations(range(m), n - 1):
        parent = list(range(n))
        ok = True
        for eid in combo:
            x = heads[eid]
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            y = tails[eid]
            while parent[y] != y:
                parent[y] = parent[parent[y]]
                y = parent[y]
            if x == y:
                ok = False
                break
            parent[x] = y
        if not ok:
            continue
        acc = [0] * d
        for eid in combo:
            c = costs[eid]
            for i in range(d):
                acc[i] += c[i]
        trees.append(frozenset(combo))
        tree_costs.append(tuple(acc))
    return TreeSet(trees, tree_costs)


def pareto_filter(costs: list[CostVector] | set[CostVector]) -> set[CostVector]:
    """The nondominated subset of the inputs, deduplicated.

    After lex-sorting the distinct vectors, any dominator of a vector
    precedes it, so a single forward sweep against the kept set suffices.
    """
    front: list[CostVector] = []
    for v in sorted(set(costs)):
        for p in front:
            if all(map(le, p, v)):
                break
        else:
            front.append(v)
    return set(front)


def nondominated_costs(graph: MultiGraph) -> set[CostVector]:
    """Exact nondominated cost-vector set of ``graph``'s spanning trees."""
    return pareto_filter(enumerate_spanning_trees(graph).costs)
