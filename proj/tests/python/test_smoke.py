"""Smoke tests for the python bindings."""

import json

import pytest

import domratio as dr


def path(n):
    return dr.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_graph_basics():
    g = path(4)
    assert g.n == 4
    assert g.edge_count == 3
    assert g.neighbors(1) == [0, 2]
    assert g.degree(0) == 1
    assert g.max_degree == 2
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_graph6_round_trip():
    g = dr.parse_graph6("C~")
    assert g.n == 4 and g.edge_count == 6
    assert dr.encode_graph6(g) == "C~"
    assert dr.parse_graph6(path(4).to_graph6()) == path(4)
    with pytest.raises(RuntimeError):
        dr.parse_graph6("A_X")


def test_edge_list_and_forest_info():
    g = dr.parse_edge_list("n 4\n0 1\n1 2\n2 3")
    info = dr.classify_forest(g)
    assert info.is_tree and info.is_forest
    assert info.components == [[0, 1, 2, 3]]
    with pytest.raises(ValueError):
        dr.parse_edge_list("n 3\n0 0")


def test_solvers():
    assert dr.gamma_brute(path(4)) == (2, [0, 2])
    assert dr.i_brute(path(4))[0] == 2
    assert dr.gamma_forest_dp(path(7))[0] == 3
    assert dr.i_forest_dp(path(7))[0] == 3
    star = dr.balanced_double_star(3)
    assert dr.gamma_brute(star) == (2, [0, 1])
    assert dr.i_brute(star) == (4, [0, 5, 6, 7])
    assert dr.is_dominating(star, [0, 1])
    assert not dr.is_independent(star, [0, 1])


def test_ratio_report():
    report = dr.ratio_report(dr.balanced_double_star(3))
    assert (report.gamma, report.i, report.max_degree) == (2, 4, 4)
    assert report.ratio == dr.Rational(2, 1)
    assert report.equality and report.meets_bound
    payload = json.loads(report.to_json())
    assert payload["gamma"] == 2
    assert payload["ratio"] == {"num": 2, "den": 1}


def test_construction():
    run = dr.run_construction_with_trace(dr.balanced_double_star(3))
    cert = run.certificate
    assert cert.all_checks_pass()
    assert (cert.delta, cert.gamma, cert.k, cert.degree_sum) == (4, 2, 1, 1)
    assert cert.i_upper == 4 and cert.eq1_rhs == 3
    assert run.trace.k == 1
    assert run.trace.steps[0].block == [0, 1]
    assert run.i_set == [5, 6, 7]
    with pytest.raises(ValueError):
        dr.run_construction(dr.parse_graph6("Bw"))  # triangle, not a tree


def test_enumeration():
    assert dr.count_trees(7) == 11
    assert dr.count_rooted_trees(7) == 48
    trees = dr.enumerate_trees(10)
    assert len(trees) == 106
    assert len(list(dr.TreeStream(6))) == 6
    assert all(dr.classify_forest(t).is_tree for t in trees[:10])


def test_verify_and_linegraph():
    report = dr.verify_trees(8)
    assert report.trees_checked == 48
    assert report.violations == []
    assert all(c.report.equality for c in report.equality_cases)
    lg = dr.linegraph_check(6)
    assert lg.all_ratios_one


def test_mediant():
    assert dr.mediant_within_bound([(1, 3), (2, 4)], dr.Rational(1, 2))
    with pytest.raises(ValueError):
        dr.mediant_within_bound([(2, 2), (1, 2)], dr.Rational(1, 2))


def test_line_graph():
    lg, vertex_map = dr.line_graph(dr.balanced_double_star(1))
    assert lg.n == 3 and lg.edge_count == 2
    assert len(vertex_map) == 3
