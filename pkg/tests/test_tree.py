import pytest
from hypothesis import given
from hypothesis import strategies as st

from bcs.errors import NotATree
from bcs.generate import random_tree
from bcs.graph import BLUE, RED, Verdict, verify_solution
from bcs.oracle import oracle_bcs
from bcs.tree import PairSet, RootedTree, minkowski_sum, pairset_internal, pairset_leaf, solve_rooted, solve_tree

from reference import graph, path_edges, star_edges, unpruned_best, unpruned_root_pairs

trees = st.builds(random_tree, st.integers(1, 14), st.integers(0, 2**32 - 1), st.floats(0.0, 1.0))


def root_pairsets(t: RootedTree) -> dict[int, PairSet]:
    sets: dict[int, PairSet] = {}
    for v in t.order:
        kids = [sets[c] for c in t.children[v]]
        sets[v] = pairset_internal(kids, t.graph.colors[v]) if kids else pairset_leaf(t.graph.colors[v])
    return sets


def subtree_size(t: RootedTree, v: int) -> int:
    return 1 + sum(subtree_size(t, c) for c in t.children[v])


def test_leaf_pair_sets():
    assert pairset_leaf(RED).as_dict() == {0: (0, 0), -1: (1, 0)}
    assert pairset_leaf(BLUE).as_dict() == {0: (0, 0), 1: (0, 1)}


def test_minkowski_red_leaf_plus_blue_leaf():
    # the raw sums are (0,0), (1,0), (0,1), (1,1); (0,0) and (1,1) share key 0
    s = minkowski_sum(pairset_leaf(RED), pairset_leaf(BLUE))
    assert s.as_dict() == {-1: (1, 0), 0: (1, 1), 1: (0, 1)}


def test_minkowski_prunes_equal_differences():
    a = PairSet.from_pairs([(0, 0), (1, 1)])
    assert a.as_dict() == {0: (1, 1)}
    assert minkowski_sum(a, a).as_dict() == {0: (2, 2)}


@given(trees)
def test_zero_is_identity(g):
    t = RootedTree.from_graph(g, 0)
    p = root_pairsets(t)[0]
    assert minkowski_sum(p, PairSet.zero()) == p
    assert minkowski_sum(PairSet.zero(), p) == p


def test_internal_blue_with_two_red_leaves():
    p = pairset_internal([pairset_leaf(RED), pairset_leaf(RED)], BLUE)
    assert p.as_dict() == {0: (1, 1), 1: (0, 1), -1: (2, 1)}


def test_internal_without_children_is_leaf():
    assert pairset_internal([], RED) == pairset_leaf(RED)


def test_internal_blue_with_blue_leaf():
    p = pairset_internal([pairset_leaf(BLUE)], BLUE)
    assert p.as_dict() == {0: (0, 0), 1: (0, 1), 2: (0, 2)}


def test_solve_rooted_examples():
    s = solve_rooted(RootedTree.from_graph(graph("RBR", path_edges(3)), 1))
    assert s.size == 2 and 1 in s.vertices
    assert solve_rooted(RootedTree.from_graph(graph("B"), 0)).size == 0
    star = solve_rooted(RootedTree.from_graph(graph("BRRR", star_edges(3)), 0))
    assert star.size == 2 and 0 in star.vertices


def test_solve_tree_examples():
    assert solve_tree(graph("RB", [(0, 1)])).vertices == (0, 1)
    assert solve_tree(graph("BBRR", path_edges(4))).size == 4


def test_caterpillar_against_oracle():
    # spine 0-1-2, legs on each spine vertex; 5 red and 2 blue
    g = graph("RBRRRRB", [(0, 1), (1, 2), (0, 3), (1, 4), (2, 5), (2, 6)])
    assert solve_tree(g).size == oracle_bcs(g).size == 4


def test_rejects_cycle_naming_edge():
    with pytest.raises(NotATree) as info:
        solve_tree(graph("RBRB", path_edges(4) + [(0, 3)]))
    assert info.value.cycle_edge == (2, 3)
    assert "2 3" in str(info.value)


def test_forest_solved_per_component():
    g = graph("RBRRRB", [(0, 1), (2, 3), (3, 4), (4, 5)])
    s = solve_tree(g)
    assert s.size == 2 and s.vertices == (0, 1)


def test_threads_give_same_answer():
    g = random_tree(60, seed=3, red_frac=0.4)
    assert solve_tree(g, threads=4) == solve_tree(g)


@given(trees)
def test_matches_oracle(g):
    s = solve_tree(g)
    assert s.size == oracle_bcs(g).size
    assert verify_solution(g, s) is Verdict.OK


@given(st.integers(1, 12), st.integers(0, 2**32 - 1), st.floats(0.0, 1.0), st.data())
def test_pruned_equals_unpruned(n, seed, red_frac, data):
    g = random_tree(n, seed, red_frac)
    root = data.draw(st.integers(0, n - 1))
    t = RootedTree.from_graph(g, root)
    pruned = root_pairsets(t)[root]
    full = unpruned_root_pairs(g, root)
    # every stored pair is realizable and is the largest one at its difference
    expected = {}
    for r, b in full:
        if b - r not in expected or r > expected[b - r][0]:
            expected[b - r] = (r, b)
    assert pruned.as_dict() == expected
    assert solve_rooted(t).size == unpruned_best(g, root)


@given(trees)
def test_pairset_size_bound(g):
    t = RootedTree.from_graph(g, 0)
    for v, p in root_pairsets(t).items():
        assert 0 in p
        assert len(p) <= 2 * subtree_size(t, v) + 1
        assert all(b - r == d for d, (r, b) in p.items())


@given(trees, st.data())
def test_rooted_solution_contains_root(g, data):
    root = data.draw(st.integers(0, g.n - 1))
    s = solve_rooted(RootedTree.from_graph(g, root))
    assert verify_solution(g, s) is Verdict.OK
    if s.size:
        assert root in s.vertices
