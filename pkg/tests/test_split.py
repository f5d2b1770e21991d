import pytest
from hypothesis import given
from hypothesis import strategies as st

from bcs.errors import NotSplit
from bcs.generate import random_split
from bcs.graph import BLUE, RED, Verdict, verify_solution
from bcs.oracle import oracle_bcs
from bcs.split import prune_edges, solve_split, split_partition

from reference import complete_edges, cycle_edges, graph, star_edges

splits = st.builds(random_split, st.integers(1, 14), st.integers(0, 2**32 - 1), st.floats(0.0, 1.0))


def test_partition_of_triangle():
    p = split_partition(graph("RRB", complete_edges(3)))
    assert p.S == () and p.K == (0, 1, 2)


def test_partition_of_star_takes_lowest_leaf():
    p = split_partition(graph("BRRR", star_edges(3)))
    assert p.K == (0, 1) and p.S == (2, 3)


def test_partition_of_triangle_with_pendant():
    p = split_partition(graph("RRBB", complete_edges(3) + [(2, 3)]))
    assert p.K == (0, 1, 2) and p.S == (3,)


def test_partition_rejects_non_split():
    with pytest.raises(NotSplit):
        split_partition(graph("RBRB", cycle_edges(4)))
    with pytest.raises(NotSplit):
        solve_split(graph("RBRBR", cycle_edges(5)))


def test_prune_keeps_lowest_opposite_neighbor():
    # clique 0..5, reds at 3 and 5; S-vertex 6 is blue and sees 2, 3, 5
    g = graph("BBBRBRB", complete_edges(6) + [(6, 2), (6, 3), (6, 5)])
    p = split_partition(g)
    assert 6 in p.S
    pruned = prune_edges(g, p)
    assert pruned.adj[6] == (3,)
    assert all(pruned.has_edge(u, v) for u, v in complete_edges(6))


def test_prune_leaves_same_color_attachments():
    g = graph("BBBB", complete_edges(3) + [(3, 0), (3, 1)])
    p = split_partition(g)
    assert prune_edges(g, p) == g


def test_prune_without_independent_set_is_identity():
    g = graph("RBRB", complete_edges(4))
    assert prune_edges(g, split_partition(g)) == g


def test_balanced_clique_taken_whole():
    assert solve_split(graph("RRBB", complete_edges(4))).size == 4


def test_red_clique_with_one_blue():
    g = graph("RRRRRB", complete_edges(6))
    s = solve_split(g)
    assert s.size == 2 and 5 in s.vertices
    assert oracle_bcs(g).size == 2


def test_case_two_uses_forced_neighbors():
    # red clique 0..3; blue S-vertices 4 and 5 each tied to one clique vertex
    g = graph("RRRRBB", complete_edges(4) + [(4, 0), (5, 1)])
    s = solve_split(g)
    assert s.vertices == (0, 1, 4, 5)
    assert oracle_bcs(g).size == 4


def test_case_two_after_pruning():
    # blue 5 sees reds 1 and 2; pruning keeps only (5, 1)
    g = graph("RRRRBB", complete_edges(4) + [(4, 0), (5, 1), (5, 2)])
    s = solve_split(g)
    assert s.size == 4 and verify_solution(g, s) is Verdict.OK


def test_minority_red_is_symmetric():
    g = graph("BBBBRR", complete_edges(4) + [(4, 0), (5, 1)])
    assert solve_split(g).vertices == (0, 1, 4, 5)


@given(splits)
def test_matches_oracle(g):
    s = solve_split(g)
    assert s.size == oracle_bcs(g).size
    assert verify_solution(g, s) is Verdict.OK


@given(st.integers(1, 120), st.integers(0, 2**32 - 1), st.floats(0.0, 1.0))
def test_reaches_min_color_count(n, seed, red_frac):
    g = random_split(n, seed, red_frac)
    s = solve_split(g)
    assert s.size == 2 * min(g.count(RED), g.count(BLUE))
    assert verify_solution(g, s) is Verdict.OK
