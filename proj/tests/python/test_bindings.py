"""Smoke tests for the gdsets extension module."""

import pytest

import gdsets

C6_ORDER = [1, 4, 2, 5, 3, 6]
C6_EDGES = [(v, v % 6 + 1) for v in range(1, 7)]
CYCLIC3 = [[1, 2, 3], [2, 3, 1], [3, 1, 2]]


def test_graph_operations():
    g = gdsets.OrderedGraph(6, C6_EDGES, C6_ORDER)
    colors, max_color, proper = gdsets.greedy_color(g)
    assert colors == [1, 2, 3, 1, 2, 3] and max_color == 3 and proper
    assert gdsets.chromatic_number(g) == 2
    assert not gdsets.is_gds(g, {})
    assert gdsets.is_gds(g, {3: 1})

    r = gdsets.gdn(g)
    assert r["size"] == 1 == gdsets.brute_force_gdn_oracle(g)
    assert gdsets.is_gds(g, r["witness"], r["coloring"])
    assert gdsets.OrderedGraph.parse(str(g)).order == C6_ORDER


def test_descents_and_fixed_coloring():
    p = gdsets.OrderedGraph(3, [(1, 2), (2, 3)])
    assert gdsets.find_descents(p, [2, 1, 2]) == [{"head": 1, "tail": [2], "low": 1, "high": 2}]
    assert gdsets.gdn_fixed(p, [2, 1, 2])["witness"] == {1: 2}
    assert gdsets.forest_gdn(p)["size"] == 0


def test_solvers_and_reductions():
    assert gdsets.min_hitting_set([[1, 2], [3, 4], [1, 3]]) == [1, 3]
    assert len(gdsets.min_vertex_cover(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])) == 3
    graph, coloring = gdsets.colored_vc_instance(3, [(1, 2), (2, 3)])
    assert gdsets.gdn_fixed(graph, coloring)["size"] == 1
    assert gdsets.gdn(gdsets.bipartite_vc_instance(3, [(1, 2), (2, 3)]))["size"] == 1


def test_latin_operations():
    l3 = gdsets.LatinSquare(CYCLIC3)
    assert gdsets.latin_descents(l3) == [[(2, 2, 3), (2, 3, 1), (3, 2, 1)]]
    cells, optimal = gdsets.min_latin_gds(l3)
    assert len(cells) == 1 and optimal
    assert gdsets.verify_latin_gds(l3, cells)
    assert gdsets.verify_latin_gds(l3, [(2, 2, 3)])
    assert not gdsets.verify_latin_gds(l3, [])
    for kind in ("rows", "cols", "entries"):
        assert gdsets.verify_latin_gds(l3, gdsets.cover_gds(l3, kind))

    done = gdsets.greedy_complete(3, [(2, 2, 3)])
    assert done["ok"] and done["square"] == l3
    assert gdsets.greedy_complete(3, [])["failure"] == (2, 3)
    assert gdsets.greedy_square(4)["ok"]
    assert gdsets.g_number(3) == 1

    report = gdsets.bound_report(l3)
    assert report["cover_size"] == 1 and report["holds"]
    assert report["bound"] == pytest.approx(gdsets.gds_size_bound(3))
    assert gdsets.random_latin(5, 2) == gdsets.random_latin(5, 2)


def test_sharing():
    key = gdsets.LatinSquare(CYCLIC3)
    sets = {"board": ["alice", "bob"], "solo": ["carol"]}
    pieces = gdsets.deal(key, sets, 4)
    assert pieces == gdsets.deal(key, sets, 4)
    board = [pieces[("alice", "board")], pieces[("bob", "board")]]
    assert gdsets.reconstruct(board, 3)["square"] == key
    passed, report = gdsets.audit(key, sets, pieces)
    assert passed and "set board" in report


def test_errors():
    with pytest.raises(gdsets.InputError):
        gdsets.OrderedGraph(2, [(1, 1)])
    with pytest.raises(ValueError):
        gdsets.LatinSquare([[1, 2], [1, 2]])
    with pytest.raises(gdsets.CapabilityError):
        gdsets.g_number(5)
    with pytest.raises(gdsets.GdsError):
        gdsets.g_number(6)
