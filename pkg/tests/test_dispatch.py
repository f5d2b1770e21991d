import pytest
from hypothesis import given
from hypothesis import strategies as st

from bcs.classify import classify
from bcs.dispatch import choose_method, solve_auto
from bcs.errors import Unsupported
from bcs.generate import generate, random_graph, random_tree
from bcs.graph import BLUE, RED, Verdict, verify_solution
from bcs.oracle import oracle_bcs

from reference import complete_edges, cycle_edges, graph, path_edges


def test_complete_bichromatic_graph():
    g = graph("RRRRRBB", complete_edges(7))
    s, tag = solve_auto(g)
    assert tag in ("split", "diam2")
    assert s.size == 2 * min(g.count(RED), g.count(BLUE)) == 4


def test_large_tree_routes_to_tree_solver():
    g = random_tree(100, seed=1)
    assert classify(g).monochromatic_edge is not None
    assert solve_auto(g)[1] == "tree"


def test_properly_colored_tree_prefers_bipartite():
    assert solve_auto(graph("RBRB", path_edges(4)))[1] == "bipartite"


def test_unsupported_carries_report():
    # long cycle with one monochromatic edge: not a tree, split, proper or diameter 2
    g = graph("RR" + "BR" * 14, cycle_edges(30))
    with pytest.raises(Unsupported) as info:
        solve_auto(g)
    r = info.value.report
    assert not (r.is_tree or r.is_split or r.is_proper_bipartite or r.diameter_le_2)


def test_small_unclassified_graph_uses_oracle():
    g = graph("RRBRBRB", cycle_edges(7))
    s, tag = solve_auto(g)
    assert tag == "oracle" and s == oracle_bcs(g)


def test_choice_is_deterministic():
    g = random_graph(12, seed=4)
    assert choose_method(classify(g), g.n) == choose_method(classify(g), g.n)


@given(st.sampled_from(["tree", "split", "bipartite", "diam2", "random"]), st.integers(1, 14), st.integers(0, 10**6), st.floats(0.0, 1.0))
def test_auto_matches_oracle(cls, n, seed, red_frac):
    g = generate(cls, n, seed, red_frac)
    s, _ = solve_auto(g)
    assert s.size == oracle_bcs(g).size
    assert verify_solution(g, s) is Verdict.OK
