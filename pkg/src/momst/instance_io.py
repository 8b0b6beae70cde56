"""Instance file format, parser, and seeded generators.

Grammar (plain text, UTF-8, LF):

    p momst <n> <m> <d> <root>      (root 1-indexed)
    # optional comment lines
    e <u> <v> <c1> ... <cd>         (m lines, 1-indexed endpoints)

Generators are deterministic functions of their spec; the RNG is Python's
Mersenne Twister seeded with the spec seed, and the algorithm name is
recorded in the file header comment so instances stay reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import InstanceError, MultiGraph

__all__ = ["InstanceSpec", "ParseError", "parse_instance", "serialize_instance",
           "generate", "instance_text"]

FAMILIES = ("complete", "grid", "random_sparse")
CORRELATIONS = ("uncorrelated", "correlated", "anticorrelated")

_NOISE = 10  # half-width of the (anti)correlation jitter


class ParseError(InstanceError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__("line %d: %s" % (line, message))
        self.line = line


def parse_instance(text: str) -> MultiGraph:
    """Parse the line-oriented instance grammar into a validated graph."""
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty instance")
    header = lines[0].split()
    if len(header) != 6 or header[0] != "p" or header[1] != "momst":
        raise ParseError(1, "expected header 'p momst <n> <m> <d> <root>'")
    try:
        n, m, d, root = (int(tok) for tok in header[2:])
    except ValueError:
        raise ParseError(1, "non-integer header field") from None
    if not 1 <= root <= n:
        raise ParseError(1, "root %d outside 1..%d" % (root, n))

    edges = []
    for lineno, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if tokens[0] != "e":
            raise ParseError(lineno, "expected edge line starting with 'e'")
        if len(edges) >= m:
            raise ParseError(lineno, "more than %d edge lines" % m)
        if len(tokens) != 3 + d:
            raise ParseError(lineno, "expected 'e <u> <v>' plus %d costs" % d)
        try:
            u, v = int(tokens[1]), int(tokens[2])
            cost = tuple(int(t) for t in tokens[3:])
        except ValueError:
            raise ParseError(lineno, "non-integer edge field") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, "endpoint outside 1..%d" % n)
        edges.append((u - 1, v - 1, cost))
    if len(edges) != m:
        raise ParseError(len(lines), "header claims %d edges, found %d" % (m, len(edges)))
    return MultiGraph(n, edges, root=root - 1, dimension=d)


def serialize_instance(graph: MultiGraph, comments: tuple[str, ...] = ()) -> str:
    """Inverse of ``parse_instance`` up to comments."""
    out = ["p momst %d %d %d %d" % (graph.n, graph.m, graph.dimension, graph.root + 1)]
    out.extend("# " + c for c in comments)
    for u, v, cost in graph.edges:
        out.append("e %d %d %s" % (u + 1, v + 1, " ".join(str(c) for c in cost)))
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class InstanceSpec:
    """Parameters of one generated instance.

    ``n`` is ignored for grids (rows x cols there); ``edge_factor`` only
    applies to random_sparse, where m = edge_factor * n.
    """

    family: str
    dimension: int
    n: int = 0
    rows: int = 0
    cols: int = 0
    edge_factor: int = 0
    correlation: str = "uncorrelated"
    seed: int = 0
    cost_range: tuple[int, int] = (0, 100)

    def node_count(self) -> int:
        return self.rows * self.cols if self.family == "grid" else self.n


def _cost_sampler(spec: InstanceSpec, rng: random.Random):
    lo, hi = spec.cost_range
    if lo < 0 or hi < lo:
        raise InstanceError("invalid cost range %s" % (spec.cost_range,))
    d = spec.dimension

    def clamp(x: int) -> int:
        return lo if x < lo else hi if x > hi else x

    if spec.correlation == "uncorrelated":
        return lambda: tuple(rng.randint(lo, hi) for _ in range(d))
    if spec.correlation == "correlated":
        def sample():
            base = rng.randint(lo, hi)
            return (base,) + tuple(
                clamp(base + rng.randint(-_NOISE, _NOISE)) for _ in range(d - 1))
        return sample
    if spec.correlation == "anticorrelated":
        def sample():
            base = rng.randint(lo, hi)
            return (base,) + tuple(
                clamp(lo + hi - base + rng.randint(-_NOISE, _NOISE)) for _ in range(d - 1))
        return sample
    raise InstanceError("unknown correlation %r" % spec.correlation)


def generate(spec: InstanceSpec) -> MultiGraph:
    """Deterministically generate the instance described by ``spec``."""
    if spec.family not in FAMILIES:
        raise InstanceError("unknown family %r" % spec.family)
    rng = random.Random(spec.seed)
    sample = _cost_sampler(spec, rng)
    n = spec.node_count()
    if n < 2:
        raise InstanceError("generated instances need n >= 2")

    edges: list[tuple[int, int, tuple[int, ...]]] = []
    if spec.family == "complete":
        for u in range(n):
            for v in range(u + 1, n):
                edges.append((u, v, sample()))
    elif spec.family == "grid":
        rows, cols = spec.rows, spec.cols
        if rows < 1 or cols < 1:
            raise InstanceError("grid needs positive rows and cols")
        for i in range(rows):
            for j in range(cols):
                node = i * cols + j
                if j + 1 < cols:
                    edges.append((node, node + 1, sample()))
                if i + 1 < rows:
                    edges.append((node, node + cols, sample()))
    else:  # random_sparse
        m = spec.edge_factor * n
        if m < n - 1:
            raise InstanceError("edge_factor %d too small for connectivity" % spec.edge_factor)
        order = list(range(1, n))
        rng.shuffle(order)
        order = [0] + order
        for idx in range(1, n):
            anchor = order[rng.randrange(idx)]
            u, v = sorted((order[idx], anchor))
            edges.append((u, v, sample()))
        for _ in range(m - (n - 1)):
            u = rng.randrange(n)
            v = rng.randrange(n - 1)
            if v >= u:
                v += 1
            edges.append((min(u, v), max(u, v), sample()))
    return MultiGraph(n, edges, root=0, dimension=spec.dimension)


def instance_text(spec: InstanceSpec) -> str:
    """The instance file for ``spec``, with a provenance header comment."""
    graph = generate(spec)
    meta = "family=%s n=%d d=%d correlation=%s seed=%d rng=mt19937 cost_range=%d..%d" % (
        spec.family, graph.n, spec.dimension, spec.correlation, spec.seed,
        spec.cost_range[0], spec.cost_range[1])
    if spec.family == "grid":
        meta += " rows=%d cols=%d" % (spec.rows, spec.cols)
    if spec.family == "random_sparse":
        meta += " edge_factor=%d" % spec.edge_factor
    return serialize_instance(graph, comments=(meta,))
