from hypothesis import given, settings

from graphoid import parse
from graphoid.adequacy import (
    adequacy_report, alternating_sum, build_F, checkerboard_bound, cut_edges, dual_graph, marked_state,
)
from graphoid.closures import closed
from graphoid.codec import load
from graphoid.diagram import AbstractGraph, genus
from conftest import CORPUS_DIR
from strategies import planar_diagrams


def corpus(name):
    return load(CORPUS_DIR / f"{name}.gpd")


def test_cut_edges():
    assert cut_edges(AbstractGraph(3, [(0, 1), (1, 2)])) == {0, 1}
    assert cut_edges(AbstractGraph(3, [(0, 1), (1, 2), (2, 0)])) == set()
    assert cut_edges(AbstractGraph(2, [(0, 0), (0, 1)])) == {1}


def test_marked_state_tags_two_vertices_per_crossing():
    g = marked_state(parse("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"))
    assert len(g.tags) == 6
    assert sorted({c for c, _ in g.tags.values()}) == [0, 1, 2]


def test_F_contracts_bridgeless_pieces():
    g = AbstractGraph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    f = build_F(g)
    assert f.graph.n == 2 and len(f.graph.edges) == 1


def test_alternating_sum():
    assert alternating_sum({1: 4, 2: 6, 3: 4, 4: 1}) == -1
    assert alternating_sum({0: 1, 1: 2, 2: 1}) == 0


def test_worked_adequacy_counts():
    r = adequacy_report(corpus("adequate_genus_two"))
    assert r.a_counts == {1: 1}
    assert r.b_counts == {1: 4, 2: 6, 3: 4, 4: 1}
    assert r.adequate
    assert (r.extreme_coeff_check, r.span_identity) == ("pass", "pass")


def test_inadequate_diagram():
    r = adequacy_report(corpus("twisted_unknot"))
    assert not r.A_adequate and not r.B_adequate
    assert r.span_identity == "not-applicable"


def test_span_identity_on_adequate_corpus():
    for name in ("trefoil", "hopf", "figure_eight", "virtual_trefoil", "theta_graphoid"):
        r = adequacy_report(corpus(name))
        assert r.adequate and r.span_identity == "pass", name


def test_nontriviality_certificate():
    assert adequacy_report(corpus("theta_graphoid")).nontriviality == "certified-nontrivial"
    assert adequacy_report(parse("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")).nontriviality is None


@settings(max_examples=25)
@given(planar_diagrams(steps=4, max_crossings=3))
def test_extreme_coefficients(d):
    assert adequacy_report(d).extreme_coeff_check == "pass"


def test_dual_graph():
    _, rep = dual_graph(parse("V(1,2,3) V(3,2,1)"))
    assert rep.s_hat == 3 and rep.faces == 3
    _, rep = dual_graph(parse("X(1,1,2,2)"))
    assert sorted(tag for *_, tag in rep.dual_edges) == ["A", "B"]
    assert rep.betti_bound_ok and rep.s_bound_ok


@settings(max_examples=20)
@given(planar_diagrams(steps=4, max_crossings=3))
def test_dual_bounds_on_connected_planar(d):
    _, rep = dual_graph(d)
    if rep.connected:
        assert rep.betti_bound_ok
        if genus(closed(d)) == 0:
            assert rep.s_bound_ok


def test_s_bound_can_fail_on_a_torus():
    # reported, not asserted: the closure lives on a torus
    _, rep = dual_graph(parse("H(1) X(1,2,3,4) X(4,5,6,2) T(6) X(5,7,7,3)"))
    assert rep.genus == 1 and rep.betti_bound_ok and rep.s_bound_ok is False


def test_checkerboard():
    for name in ("trefoil", "hopf", "figure_eight", "theta"):
        r = checkerboard_bound(corpus(name))
        assert r.verdict == "holds" and r.lower_bound_ok, name
    assert corpus("hopf") and checkerboard_bound(corpus("hopf")).lower_bound == 4
    r2 = checkerboard_bound(parse("V(1,2,3,4) V(5,3,2,6) X(7,8,5,6) X(4,8,7,1)"))
    assert r2.verdict == "not-applicable"
    assert checkerboard_bound(parse("V()")).verdict == "not-applicable"


def test_checkerboard_with_given_augmentation():
    r = checkerboard_bound(parse("V(1,2,3) V(3,2,1)"), augmentation=[(0, 0, 1, 0)])
    assert r.verdict in ("holds", "not-applicable")
    if r.verdict == "holds":
        assert r.lower_bound_ok


def test_report_json_keys():
    j = adequacy_report(corpus("trefoil")).to_json()
    assert {"a_counts", "b_counts", "adequate", "span_identity"} <= j.keys()
