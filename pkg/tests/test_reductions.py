import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bcs.classify import classify
from bcs.errors import BudgetTooSmall, InvalidInstance, NotTargetSize
from bcs.graph import BLUE, RED, Solution, Verdict, verify_solution
from bcs.oracle import OracleConfig, oracle_balanced_path, oracle_bcs, oracle_bcs_at_least, oracle_bcs_containing, oracle_ham_path
from bcs.reductions import (
    Ec3SetInstance,
    SteinerInstance,
    SteinerTree,
    exact_covers,
    format_ec3set,
    map_back,
    parse_ec3set,
    planted_ec3set,
    planted_steiner,
    random_planar_graph,
    reduce_ec3set_bcs,
    reduce_ec3set_bcs_chordal,
    reduce_ec3set_existence,
    reduce_hampath_bcp,
    reduce_stpg_bcs,
    unsatisfiable_ec3set,
)

from reference import complete_edges, graph, is_chordal, path_edges, star_edges

CAP = OracleConfig(max_n=26)


def test_k1_gadget_shape():
    out = reduce_ec3set_bcs(Ec3SetInstance(3, ((0, 1, 2),)))
    g = out.graph
    assert g.n == 12 and g.count(RED) == 6 and g.count(BLUE) == 6
    assert out.target_size == 12
    assert {k: len(v) for k, v in out.vertex_map.items()} == {"u": 3, "s": 1, "b_path": 5, "r_path": 3}
    assert oracle_bcs(g).size == 12


def test_role_map_covers_every_vertex_once():
    x, _ = planted_ec3set(2, 4, seed=1)
    for out in (reduce_ec3set_bcs(x), reduce_ec3set_bcs_chordal(x), reduce_ec3set_existence(x)):
        ids = sorted(v for vs in out.vertex_map.values() for v in vs)
        assert ids == list(range(out.graph.n))
        assert out.role_of(out.vertex_map["s"][0]) == ("s", 0)
        assert json.loads(out.to_json())["target_size"] == out.target_size


def test_planted_k2_reaches_24():
    x, cover = planted_ec3set(2, 2, seed=5)
    out = reduce_ec3set_bcs(x)
    assert out.graph.n == 24
    s = oracle_bcs(out.graph, CAP)
    assert s.size == 24
    assert map_back(out, s) == cover


def test_invalid_ec3set_instances():
    with pytest.raises(InvalidInstance):
        Ec3SetInstance(3, ((0, 0, 1),))
    with pytest.raises(InvalidInstance):
        Ec3SetInstance(4, ())
    with pytest.raises(InvalidInstance):
        Ec3SetInstance(3, ((0, 1, 3),))


def test_gadget_is_bipartite_but_not_properly_colored():
    x, _ = planted_ec3set(2, 3, seed=2)
    r = classify(reduce_ec3set_bcs(x).graph)
    assert not r.is_proper_bipartite
    g = reduce_ec3set_bcs(x).graph
    b_path = reduce_ec3set_bcs(x).vertex_map["b_path"]
    assert all(g.colors[a] is g.colors[b] for a, b in zip(b_path, b_path[1:]))
    assert g.has_edge(b_path[0], b_path[1])


def test_chordal_variant_edges():
    one = Ec3SetInstance(3, ((0, 1, 2),))
    assert reduce_ec3set_bcs_chordal(one).graph == reduce_ec3set_bcs(one).graph
    three = Ec3SetInstance(3, ((0, 1, 2),) * 3)
    assert reduce_ec3set_bcs_chordal(three).graph.m == reduce_ec3set_bcs(three).graph.m + 3


def test_chordal_variant_planted_k1_reaches_12():
    x, _ = planted_ec3set(1, 2, seed=0)
    out = reduce_ec3set_bcs_chordal(x)
    assert out.graph.n == 13
    assert oracle_bcs(out.graph).size == 12


def test_is_chordal_reference_sanity():
    assert is_chordal(graph("RRRR", complete_edges(4)))
    assert not is_chordal(graph("RRRR", path_edges(4) + [(0, 3)]))
    assert is_chordal(graph("RRRRR", path_edges(5)))


@given(st.integers(1, 2), st.integers(0, 4), st.integers(0, 10**6))
def test_chordal_variant_is_chordal(k, extra, seed):
    x, _ = planted_ec3set(k, k + extra, seed)
    assert is_chordal(reduce_ec3set_bcs_chordal(x).graph)


def test_existence_examples():
    x, cover = planted_ec3set(1, 1, seed=0)
    out = reduce_ec3set_existence(x)
    assert out.target_size == 6 and out.special_vertex == out.vertex_map["b_path"][0]
    s = oracle_bcs_containing(out.graph, out.special_vertex)
    assert s.size == 6
    assert map_back(out, s) == cover
    empty = reduce_ec3set_existence(Ec3SetInstance(3, ()))
    assert oracle_bcs_containing(empty.graph, empty.special_vertex) is None


def test_existence_unsatisfiable_k2():
    x = Ec3SetInstance(6, ((0, 1, 2), (0, 3, 4), (1, 3, 5)))
    assert not exact_covers(x)
    out = reduce_ec3set_existence(x)
    s = oracle_bcs_containing(out.graph, out.special_vertex)
    assert s is None or s.size < out.target_size


def test_stpg_path_example():
    x = SteinerInstance(3, ((0, 1), (1, 2)), (0, 2), 2)
    out = reduce_stpg_bcs(x)
    g = out.graph
    assert g.n == 6 and out.target_size == 6
    assert len(out.vertex_map["u'"]) == 2 and len(out.vertex_map["Z"]) == 1
    s = oracle_bcs(g)
    assert s.size == 6
    tree = map_back(out, s)
    assert isinstance(tree, SteinerTree)
    assert set(tree.vertices) == {0, 1, 2} and len(tree.edges) <= 2


def test_stpg_single_terminal_zero_budget():
    out = reduce_stpg_bcs(SteinerInstance(1, (), (0,), 0))
    assert out.vertex_map["Z"] == [] and out.target_size == 2


def test_stpg_budget_too_small():
    with pytest.raises(BudgetTooSmall):
        reduce_stpg_bcs(SteinerInstance(6, tuple(path_edges(6)), (0, 1, 2, 3, 4), 3))


def test_stpg_all_blue_original_vertices():
    x, _ = planted_steiner(8, 3, seed=4)
    out = reduce_stpg_bcs(x)
    assert all(out.graph.colors[v] is BLUE for v in range(x.n))
    assert all(out.graph.colors[v] is RED for v in range(x.n, out.graph.n))


def test_hampath_examples():
    k3 = reduce_hampath_bcp(3, complete_edges(3))
    assert k3.graph.n == 4 and k3.vertex_map["dummy"] == [3]
    assert oracle_balanced_path(k3.graph).size == 4 == k3.target_size
    star = reduce_hampath_bcp(4, star_edges(3))
    assert star.vertex_map["dummy"] == []
    assert oracle_balanced_path(star.graph).size < 4
    assert not oracle_ham_path(star.graph)
    single = reduce_hampath_bcp(1, [])
    assert oracle_balanced_path(single.graph).size == 2


def test_hampath_coloring_lower_half_red():
    out = reduce_hampath_bcp(5, path_edges(5))
    assert [c.token for c in out.graph.colors] == list("RRRBBB")


def test_hampath_map_back_gives_path():
    out = reduce_hampath_bcp(4, path_edges(4))
    s = oracle_balanced_path(out.graph)
    path = map_back(out, s)
    assert sorted(path) == [0, 1, 2, 3]
    assert all(out.graph.has_edge(a, b) for a, b in zip(path, path[1:]))
    # a solution without a recorded order is recovered by search
    assert len(map_back(out, Solution.of(out.graph, range(4)))) == 4


def test_map_back_below_target():
    x, _ = planted_ec3set(1, 1, seed=0)
    out = reduce_ec3set_bcs(x)
    with pytest.raises(NotTargetSize):
        map_back(out, Solution.empty())


def test_map_back_rejects_unverified_solution():
    x, _ = planted_ec3set(1, 1, seed=0)
    out = reduce_ec3set_bcs(x)
    whole = Solution.of(out.graph, range(12))
    assert verify_solution(out.graph, whole) is Verdict.OK
    assert map_back(out, whole) == [0]
    # twelve vertices of a 13-vertex gadget with a hole in the blue path
    wide = reduce_ec3set_bcs(Ec3SetInstance(3, ((0, 1, 2), (0, 1, 2))))
    broken = Solution.of(wide.graph, [v for v in range(13) if v != wide.vertex_map["b_path"][2]])
    assert verify_solution(wide.graph, broken) is not Verdict.OK
    with pytest.raises(NotTargetSize):
        map_back(wide, broken)


def test_generators_refuse_impossible_parameters():
    with pytest.raises(InvalidInstance):
        planted_ec3set(2, 1)
    with pytest.raises(InvalidInstance):
        unsatisfiable_ec3set(1, 3)


def test_unsatisfiable_generator_has_no_cover():
    for seed in range(10):
        assert not exact_covers(unsatisfiable_ec3set(2, 3, seed))


@given(st.integers(1, 12), st.integers(0, 10**6))
def test_random_planar_graph_is_connected_grid_subgraph(n, seed):
    n, edges = random_planar_graph(n, seed)
    g = graph("B" * n, edges)
    assert classify(g).is_connected
    assert all(g.degree(v) <= 4 for v in range(n))


def test_ec3set_text_round_trip():
    x, _ = planted_ec3set(2, 3, seed=9)
    assert parse_ec3set(format_ec3set(x)) == x


@given(st.integers(1, 2), st.integers(0, 2), st.integers(0, 10**6))
def test_planted_instances_reach_target(k, extra, seed):
    x, cover = planted_ec3set(k, k + extra, seed)
    assert x.is_exact_cover(cover)
    out = reduce_ec3set_bcs(x)
    s = oracle_bcs_at_least(out.graph, out.target_size, CAP)
    assert s is not None and s.size == out.target_size
    assert x.is_exact_cover(map_back(out, s))
