"""Cost vectors, dominance relations, and the undirected multigraph model.

Cost vectors are plain tuples of nonnegative ints so that every comparison
is exact. A ``Frontier`` is the append-only set of permanent cost vectors
kept per transition node by the solvers; insertion order is guaranteed
lex-nondecreasing by the solver loops, which is what makes the
``skip_first`` dominance shortcut sound.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from operator import le
from typing import Iterable, Iterator, Sequence

CostVector = tuple[int, ...]
EdgeId = int

MAX_NODES = 64
MAX_DIMENSION = 8

# Per-component accumulators are contractually 64-bit; instances whose
# summed costs could exceed this bound are rejected at load time.
_ACC_LIMIT = 2**63 - 1


class InstanceError(ValueError):
    """Base class for invalid MO-MST instances."""


class DisconnectedGraphError(InstanceError):
    pass


class UnsupportedSizeError(InstanceError):
    pass


class NegativeCostError(InstanceError):
    pass


def dominates(x: CostVector, y: CostVector) -> bool:
    """True iff x <= y componentwise and x != y."""
    if len(x) != len(y):
        raise ValueError("dimension mismatch: %d vs %d" % (len(x), len(y)))
    return x != y and all(map(le, x, y))


def dominates_or_equal(x: CostVector, y: CostVector) -> bool:
    """True iff x <= y componentwise (the pointwise building block of the
    set-against-vector dominance test)."""
    if len(x) != len(y):
        raise ValueError("dimension mismatch: %d vs %d" % (len(x), len(y)))
    return all(map(le, x, y))


def lex_less(x: CostVector, y: CostVector) -> bool:
    """Strict lexicographic comparison."""
    if len(x) != len(y):
        raise ValueError("dimension mismatch: %d vs %d" % (len(x), len(y)))
    return x < y


class Frontier:
    """Pairwise nondominated cost vectors in lex-nondecreasing append order.

    ``dominates(y)`` implements the dominated-or-equal test of a set against
    a single vector: true iff some stored vector is <= y componentwise.
    With ``skip_first`` only components 2..d are compared; the caller must
    guarantee that every stored first component is <= y's first component
    (true for the solvers because extraction order is lex-nondecreasing and
    arc costs are nonnegative).

    When the dimension is known at construction, the reduced test is served
    from an index over the trailing components: a running minimum for d=2
    and a staircase (2d Pareto set of the tails, x ascending / y strictly
    descending) for d=3. Both answer exactly the same query as the linear
    scan, which stays in place for d >= 4 and for full-width tests.
    """

    __slots__ = ("costs", "_tails", "_dim", "_min_tail", "_xs", "_ys")

    def __init__(self, dimension: int | None = None) -> None:
        self.costs: list[CostVector] = []
        self._tails: list[CostVector] = []
        self._dim = dimension
        self._min_tail: int | None = None
        self._xs: list[int] = []
        self._ys: list[int] = []

    def __len__(self) -> int:
        return len(self.costs)

    def __iter__(self) -> Iterator[CostVector]:
        return iter(self.costs)

    def append(self, cost: CostVector) -> None:
        self.costs.append(cost)
        tail = cost[1:]
        self._tails.append(tail)
        if self._dim == 2:
            if self._min_tail is None or tail[0] < self._min_tail:
                self._min_tail = tail[0]
        elif self._dim == 3:
            self._stair_insert(tail[0], tail[1])

    def _stair_insert(self, a: int, b: int) -> None:
        xs, ys = self._xs, self._ys
        i = bisect_right(xs, a) - 1
        if i >= 0 and ys[i] <= b:
            return  # an existing tail already covers everything (a, b) would
        lo = bisect_left(xs, a)
        hi = lo
        size = len(xs)
        while hi < size and ys[hi] >= b:
            hi += 1
        xs[lo:hi] = [a]
        ys[lo:hi] = [b]

    def dominates(self, y: CostVector, skip_first: bool = False, start: int = 0) -> bool:
        """``start`` skips the first entries, for callers that already
        checked a prefix of this append-only frontier (the indexes answer
        for the whole set, which is the same thing under that contract)."""
        if skip_first:
            dim = self._dim
            if dim == 3:
                tails = self._tails
                if start and len(tails) - start <= 8:
                    y1, y2 = y[1], y[2]
                    for t in tails[start:]:
                        if t[0] <= y1 and t[1] <= y2:
                            return True
                    return False
                xs = self._xs
                i = bisect_right(xs, y[1]) - 1
                return i >= 0 and self._ys[i] <= y[2]
            if dim == 2:
                mt = self._min_tail
                return mt is not None and mt <= y[1]
            if dim == 1:
                return bool(self.costs)
            yt = y[1:]
            for t in self._tails[start:] if start else self._tails:
                if all(map(le, t, yt)):
                    return True
            return False
        for f in self.costs[start:] if start else self.costs:
            if all(map(le, f, y)):
                return True
        return False


def frontier_dominates(front: Frontier, y: CostVector, skip_first: bool = False) -> bool:
    """Set-against-vector dominance: some member of ``front`` is <= y."""
    return front.dominates(y, skip_first)


class MultiGraph:
    """Undirected connected multigraph with vector edge costs and a root.

    Edges are (u, v, cost) triples indexed by position; that index is the
    stable EdgeId used everywhere else. Parallel edges are permitted,
    self-loops are not. Instances are immutable after construction and safe
    to share across threads.

    n == 1 (no edges) is allowed so that fully contracted instances coming
    out of preprocessing remain representable; ``dimension`` must then be
    given explicitly.
    """

    __slots__ = ("n", "root", "edges", "adjacency", "dimension", "full_mask")

    def __init__(
        self,
        n: int,
        edges: Sequence[tuple[int, int, CostVector]],
        root: int = 0,
        dimension: int | None = None,
    ) -> None:
        if n < 1:
            raise InstanceError("graph needs at least one node")
        if n > MAX_NODES:
            raise UnsupportedSizeError(
                "n=%d exceeds the %d-node bitmask bound" % (n, MAX_NODES)
            )
        if not 0 <= root < n:
            raise InstanceError("root %d out of range" % root)
        if dimension is None:
            if not edges:
                raise InstanceError("dimension required for edgeless graph")
            dimension = len(edges[0][2])
        if not 1 <= dimension <= MAX_DIMENSION:
            raise UnsupportedSizeError("dimension %d outside 1..%d" % (dimension, MAX_DIMENSION))

        comp_limit = _ACC_LIMIT // max(1, n - 1)
        adjacency: list[list[EdgeId]] = [[] for _ in range(n)]
        normalized: list[tuple[int, int, CostVector]] = []
        for eid, (u, v, cost) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise InstanceError("edge %d endpoint out of range" % eid)
            if u == v:
                raise InstanceError("edge %d is a self-loop" % eid)
            cost = tuple(cost)
            if len(cost) != dimension:
                raise InstanceError("edge %d has %d cost components, expected %d"
                                    % (eid, len(cost), dimension))
            for c in cost:
                if c < 0:
                    raise NegativeCostError("edge %d has negative cost" % eid)
                if c > comp_limit:
                    raise InstanceError("edge %d cost overflows 64-bit accumulation" % eid)
            normalized.append((u, v, cost))
            adjacency[u].append(eid)
            adjacency[v].append(eid)

        self.n = n
        self.root = root
        self.edges = normalized
        self.adjacency = adjacency
        self.dimension = dimension
        self.full_mask = (1 << n) - 1
        if not self._connected():
            raise DisconnectedGraphError("graph is not connected")

    def _connected(self) -> bool:
        seen = 1 << self.root
        stack = [self.root]
        while stack:
            u = stack.pop()
            for eid in self.adjacency[u]:
                a, b, _ = self.edges[eid]
                w = b if a == u else a
                bit = 1 << w
                if not seen & bit:
                    seen |= bit
                    stack.append(w)
        return seen == self.full_mask

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return (self.n, self.root, self.edges) == (other.n, other.root, other.edges)

    def __hash__(self) -> int:  # pragma: no cover - not used as dict key
        return hash((self.n, self.root, tuple(self.edges)))

    def __repr__(self) -> str:
        return "MultiGraph(n=%d, m=%d, d=%d, root=%d)" % (self.n, self.m, self.dimension, self.root)

    def tree_cost(self, edge_ids: Iterable[EdgeId]) -> CostVector:
        """Componentwise sum of the given edges' costs."""
        acc = [0] * self.dimension
        for eid in edge_ids:
            cost = self.edges[eid][2]
            for i, c in enumerate(cost):
                acc[i] += c
        return tuple(acc)


def cut(graph: MultiGraph, mask: int) -> list[EdgeId]:
    """Edges with exactly one endpoint inside ``mask``, ascending EdgeId.

    ``mask`` must be a nonempty proper subset of the nodes; an empty cut on
    a connected graph only happens for the full or the empty set, which
    signals a caller bug.
    """
    if mask == 0 or mask == graph.full_mask:
        raise ValueError("cut of empty or full node set")
    return [
        eid
        for eid, (u, v, _) in enumerate(graph.edges)
        if ((mask >> u) ^ (mask >> v)) & 1
    ]
