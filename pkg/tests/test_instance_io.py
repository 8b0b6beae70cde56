import statistics

import pytest
from hypothesis import given, settings, strategies as st

from momst import (
    DisconnectedGraphError,
    InstanceError,
    InstanceSpec,
    ParseError,
    UnsupportedSizeError,
    generate,
    instance_text,
    parse_instance,
    serialize_instance,
)


def test_parse_triangle(triangle_text, triangle):
    g = parse_instance(triangle_text)
    assert g == triangle
    assert g.n == 3 and g.m == 3 and g.dimension == 2 and g.root == 0


def test_parse_errors_have_distinct_kinds():
    with pytest.raises(ParseError):
        parse_instance("p momst 3 3 2 1\ne 1 2 3 3\ne 1 3 1 1\n")  # m mismatch
    with pytest.raises(ParseError):
        parse_instance("q wrong header\n")
    with pytest.raises(ParseError):
        parse_instance("p momst 2 1 2 1\ne 1 5 1 1\n")  # endpoint range
    with pytest.raises(ParseError):
        parse_instance("p momst 2 1 2 1\ne 1 2 1\n")  # cost arity
    with pytest.raises(DisconnectedGraphError):
        parse_instance("p momst 4 2 1 1\ne 1 2 1\ne 3 4 1\n")
    with pytest.raises(UnsupportedSizeError):
        parse_instance("p momst 65 0 2 1\n")
    with pytest.raises(InstanceError):
        parse_instance("p momst 2 1 2 1\ne 1 2 -1 1\n")  # negative cost


def test_parse_accepts_comments_and_duplicate_edges():
    text = "p momst 2 2 1 1\n# generated somewhere\ne 1 2 4\ne 1 2 4\n"
    g = parse_instance(text)
    assert g.m == 2  # duplicate edge kept as a parallel edge


def test_roundtrip(triangle):
    assert parse_instance(serialize_instance(triangle)) == triangle


def test_generate_deterministic():
    spec = InstanceSpec("complete", 3, n=5, seed=1)
    assert instance_text(spec) == instance_text(spec)
    assert generate(spec) == generate(spec)


def test_generated_instances_parse_and_roundtrip():
    specs = [
        InstanceSpec("complete", 3, n=5, seed=1),
        InstanceSpec("grid", 2, rows=3, cols=3, seed=2, correlation="correlated"),
        InstanceSpec("random_sparse", 4, n=10, edge_factor=5, seed=3,
                     correlation="anticorrelated"),
    ]
    for spec in specs:
        g = generate(spec)
        assert parse_instance(serialize_instance(g)) == g
        assert parse_instance(instance_text(spec)) == g


def test_grid_shape():
    g = generate(InstanceSpec("grid", 2, rows=3, cols=3, seed=0))
    assert g.n == 9
    assert g.m == 12  # 2*r*c - r - c


def test_random_sparse_edge_count():
    g = generate(InstanceSpec("random_sparse", 3, n=10, edge_factor=5, seed=4))
    assert g.m == 50
    with pytest.raises(InstanceError):
        generate(InstanceSpec("random_sparse", 3, n=10, edge_factor=0, seed=4))


def test_correlation_signs():
    for corr, check in (("correlated", lambda r: r > 0.5),
                        ("anticorrelated", lambda r: r < -0.5)):
        g = generate(InstanceSpec("random_sparse", 3, n=10, edge_factor=5,
                                  seed=9, correlation=corr))
        assert g.m >= 50
        for j in range(1, g.dimension):
            first = [float(c[0]) for _, _, c in g.edges]
            other = [float(c[j]) for _, _, c in g.edges]
            assert check(statistics.correlation(first, other))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(4, 8), st.integers(1, 4))
def test_generate_always_connected_and_valid(seed, n, d):
    spec = InstanceSpec("random_sparse", d, n=n, edge_factor=2, seed=seed)
    g = generate(spec)  # MultiGraph validates connectivity on construction
    assert parse_instance(serialize_instance(g)) == g


def test_unknown_family_and_correlation():
    with pytest.raises(InstanceError):
        generate(InstanceSpec("hypercube", 2, n=4))
    with pytest.raises(InstanceError):
        generate(InstanceSpec("complete", 2, n=4, correlation="sideways"))
