import random

import pytest

from flatwall.common import SizeCapExceeded
from flatwall.decomposition import (TreeDecomposition, WeightedTree, closure_bag,
                                    exact_treewidth, make_small, select_tree_vertex,
                                    validate, width)
from flatwall.generators import grid, pyramid, wall
from flatwall.graph import Graph, complete_graph, cycle_graph, delete, path_graph

from oracles import random_elimination_td, random_graph, treewidth_by_elimination


def tw(g):
    return exact_treewidth(g)[0]


def test_treewidth_known_values():
    assert tw(complete_graph(4)) == 3
    assert tw(complete_graph(5)) == 4
    assert tw(cycle_graph(6)) == 2
    assert tw(path_graph(7)) == 1
    assert tw(grid(3, 3)[0]) == 3
    assert tw(grid(4, 4)[0]) == 4
    assert tw(pyramid(2, 1)) == 3
    assert tw(pyramid(3, 1)) == 4
    assert tw(wall(2).graph) == 3
    assert tw(Graph([0], [])) == 0


def test_treewidth_decomposition_is_valid_and_tight():
    for g in (complete_graph(5), grid(3, 3)[0], cycle_graph(7)):
        k, td = exact_treewidth(g)
        assert validate(td)
        assert width(td) == k


def test_treewidth_matches_elimination_oracle():
    rng = random.Random(1)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 6), rng.choice([0.2, 0.4, 0.7]))
        assert tw(g) == treewidth_by_elimination(g)


def test_treewidth_cap():
    with pytest.raises(SizeCapExceeded):
        exact_treewidth(grid(5, 5)[0], cap=20)


def test_validate_rejects_broken_decompositions():
    g = cycle_graph(4)
    _, td = exact_treewidth(g)

    missing = {i: sorted(b - {0}) for i, b in td.bags.items()}
    bad = TreeDecomposition(g, td.tree, missing)
    v = validate(bad)
    assert not v and v.condition in ("uncovered-vertex", "uncovered-edge")

    # break connectivity: vertex 0 in two far-apart bags only
    tree = path_graph(3)
    bad = TreeDecomposition(g, tree, {0: [0, 1, 2], 1: [1, 2], 2: [0, 2, 3]})
    v = validate(bad)
    assert not v and v.condition == "disconnected-trace"


def test_non_tree_rejected_at_construction():
    g = path_graph(2)
    with pytest.raises(ValueError):
        TreeDecomposition(g, cycle_graph(3), {0: [0], 1: [0, 1], 2: [1]})


def test_apex_deletion_lowers_treewidth_boundedly():
    # removing X costs at most |X| in width
    rng = random.Random(2)
    for _ in range(60):
        g = random_graph(rng, rng.randint(3, 9), 0.4)
        k = tw(g)
        xs = rng.sample(list(g.vertices), rng.randint(1, min(3, g.n - 1)))
        assert tw(delete(g, xs)) >= k - len(xs)


def test_make_small_is_small_and_bounded():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 9), 0.35)
        td = random_elimination_td(rng, g)
        assert validate(td)
        small = make_small(td)
        assert validate(small)
        assert width(small) <= width(td)
        assert len(small.bags) <= g.n
        for i, j in small.tree.edges:
            assert not small.bags[i] <= small.bags[j]
            assert not small.bags[j] <= small.bags[i]


def test_closure_bag_adds_neighbor_cliques():
    g = path_graph(4)
    tree = path_graph(2)
    td = TreeDecomposition(g, tree, {0: [0, 1, 2], 1: [1, 2, 3]})
    cb = closure_bag(td, 0)
    assert cb.has_edge(1, 2)
    with pytest.raises(ValueError):
        closure_bag(td, 9)


def test_some_closure_bag_carries_the_width():
    rng = random.Random(4)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 8), 0.4)
        k = tw(g)
        td = random_elimination_td(rng, g)
        assert any(tw(closure_bag(td, i)) >= k for i in td.bags)


def test_select_tree_vertex_splits_weight():
    tree = Graph(range(7), [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (4, 6)])
    weight = {v: 1 for v in tree.vertices}
    u = select_tree_vertex(WeightedTree(tree, weight), 1)
    rest = delete(tree, [u])
    comps = []
    seen = set()
    for v in rest.vertices:
        if v in seen:
            continue
        comp = set()
        stack = [v]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(rest.neighbors(x))
        seen |= comp
        comps.append(sum(weight[x] for x in comp))
    assert sum(1 for c in comps if c > 1) <= 1


def test_select_tree_vertex_needs_a_heavy_vertex():
    with pytest.raises(ValueError):
        select_tree_vertex(WeightedTree(path_graph(3), {0: 0, 1: 0, 2: 0}), 1)
