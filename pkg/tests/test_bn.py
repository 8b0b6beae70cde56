import pytest

from momst import (
    BnLabel,
    InstanceSpec,
    Limits,
    MultiGraph,
    StateMap,
    enumerate_spanning_trees,
    generate,
    minimal_extensions,
    nondominated_costs,
    solve,
    solve_bn,
)


def _arcs_by_pair(smap, mask):
    state = smap.get_or_create(mask)
    return {(a.inside_node, a.new_node): a for a in smap.ensure_outgoing(state)}


def test_minimal_extension_star_example():
    # path ((1,2),(1,3)) extends along (1,4); ((1,2),(1,4)) must reject (1,3)
    edges = [(u, v, (1,)) for u in range(5) for v in range(u + 1, 5)]
    g = MultiGraph(5, edges, root=0)  # nodes 0..4 stand for 1..5
    smap = StateMap(g, "none")
    init = BnLabel((0,), 0b00001, None, None, (0,))

    arcs1 = _arcs_by_pair(smap, 0b00001)
    lab_12 = BnLabel((1,), 0b00011, arcs1[(0, 1)], init, (0, 1))
    arcs2 = _arcs_by_pair(smap, 0b00011)
    lab_123 = BnLabel((2,), 0b00111, arcs2[(0, 2)], lab_12, (0, 1, 2))
    arcs3 = _arcs_by_pair(smap, 0b00111)
    allowed = {(a.inside_node, a.new_node)
               for a in minimal_extensions(lab_123, list(arcs3.values()))}
    assert (0, 3) in allowed          # ((1,2),(1,3),(1,4)) stays minimal

    lab_124 = BnLabel((2,), 0b01011, arcs2[(0, 3)], lab_12, (0, 1, 3))
    arcs4 = _arcs_by_pair(smap, 0b01011)
    allowed = {(a.inside_node, a.new_node)
               for a in minimal_extensions(lab_124, list(arcs4.values()))}
    assert (0, 2) not in allowed      # child ids of node 1 must increase


def test_initial_label_allows_everything(triangle):
    smap = StateMap(triangle, "none")
    init = BnLabel((0, 0), 0b001, None, None, (0,))
    outgoing = smap.ensure_outgoing(smap.get_or_create(0b001))
    assert minimal_extensions(init, outgoing) == outgoing


def test_later_parent_allowed_earlier_parent_rejected():
    edges = [(u, v, (1,)) for u in range(4) for v in range(u + 1, 4)]
    g = MultiGraph(4, edges, root=0)
    smap = StateMap(g, "none")
    init = BnLabel((0,), 0b0001, None, None, (0,))
    arcs1 = _arcs_by_pair(smap, 0b0001)
    lab_01 = BnLabel((1,), 0b0011, arcs1[(0, 1)], init, (0, 1))
    arcs2 = _arcs_by_pair(smap, 0b0011)
    # parent 1 joined after parent 0: arcs rooted at 1 are allowed after an
    # arc rooted at 0 regardless of child id
    lab_012 = BnLabel((2,), 0b0111, arcs2[(0, 2)], lab_01, (0, 1, 2))
    arcs3 = _arcs_by_pair(smap, 0b0111)
    allowed = {(a.inside_node, a.new_node)
               for a in minimal_extensions(lab_012, list(arcs3.values()))}
    assert (1, 3) in allowed and (2, 3) in allowed and (0, 3) in allowed

    # but after expanding from parent 1, parent 0 is no longer allowed
    lab_013 = BnLabel((2,), 0b1011, arcs2[(1, 3)], lab_01, (0, 1, 3))
    arcs4 = _arcs_by_pair(smap, 0b1011)
    allowed = {(a.inside_node, a.new_node)
               for a in minimal_extensions(lab_013, list(arcs4.values()))}
    assert all(inside != 0 for inside, _ in allowed)


def test_triangle_matches_igmda(triangle):
    assert solve_bn(triangle, debug=True).costs == solve(triangle).costs == [(3, 2)]


def test_exhaustive_counts_cayley():
    for n in (3, 4, 5, 6):
        g = generate(InstanceSpec("complete", 3, n=n, seed=7,
                                  correlation="uncorrelated"))
        result = solve_bn(g, exhaustive=True)
        assert len(result.costs) == n ** (n - 2)


def test_exhaustive_matches_oracle_tree_count():
    for seed in range(4):
        g = generate(InstanceSpec("random_sparse", 2, n=6, edge_factor=2,
                                  seed=seed, correlation="uncorrelated"))
        result = solve_bn(g, exhaustive=True)
        ts = enumerate_spanning_trees(g)
        assert len(result.costs) == len(ts.trees)
        # each extracted tree is a genuine spanning tree, each exactly once
        assert len(set(result.trees)) == len(result.trees)
        assert set(result.trees) == set(ts.trees)


def test_queue_holds_multiple_labels_per_node():
    g = generate(InstanceSpec("complete", 3, n=6, seed=3,
                              correlation="anticorrelated"))
    result = solve_bn(g, debug=True)
    assert result.stats.max_queue_per_node >= 2


def test_output_identical_to_igmda_and_oracle():
    for seed in range(5):
        g = generate(InstanceSpec("complete", 3, n=6, seed=seed,
                                  correlation="anticorrelated"))
        want = nondominated_costs(g)
        bn_result = solve_bn(g, debug=True)
        assert set(bn_result.costs) == want == set(solve(g).costs)
        assert len(set(bn_result.costs)) == len(bn_result.costs)
        for cost, tree in zip(bn_result.costs, bn_result.trees):
            assert g.tree_cost(tree) == cost


def test_sum_sort_ablation_same_costs():
    for seed in range(3):
        g = generate(InstanceSpec("random_sparse", 3, n=7, edge_factor=2,
                                  seed=seed, correlation="anticorrelated"))
        assert set(solve_bn(g, sort="sum").costs) == set(solve_bn(g).costs)
    with pytest.raises(ValueError):
        solve_bn(g, sort="weird")


def test_limits_plumbing():
    g = generate(InstanceSpec("complete", 3, n=9, seed=0,
                              correlation="anticorrelated"))
    assert solve_bn(g, limits=Limits(time_limit_s=1e-9, check_interval=8)).status == "timeout"
    assert solve_bn(g, limits=Limits(mem_limit_mb=0.001, check_interval=8)).status == "memout"
