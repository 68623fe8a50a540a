import pytest
from hypothesis import given

from graphoid import parse
from graphoid.closures import closed
from graphoid.diagram import (
    AbstractGraph, DiagramError, GraphoidDiagram, Site, betti, boundary_components, bridges, faces,
    genus, isomorphic, shadow_graph, underlying_graph, validate,
)
from strategies import diagrams, planar_diagrams

TREFOIL = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"


def test_validate_examples():
    validate(parse("H(1) T(1)"))
    validate(parse("V(1,2,3) V(3,2,1)"))


@pytest.mark.parametrize("build, code", [
    (lambda: GraphoidDiagram([Site("V", (1, 2)), Site("V", (2, 3))], [(1, 3)]), "duplicate-half-edge"),
    (lambda: GraphoidDiagram([Site("V", (1, 2))], [(1, 2), (2, 3)]), "duplicate-half-edge"),
    (lambda: GraphoidDiagram([Site("V", (1, 2, 3))], [(1, 2)]), "unmatched-half-edge"),
    (lambda: Site.crossing((1, 2, 3, 4), (1, 2)), "bad-over-pair"),
    (lambda: GraphoidDiagram([Site("H", (1,)), Site("V", (2,))], [(1, 2)]), "endpoint-count"),
])
def test_validate_error_codes(build, code):
    with pytest.raises(DiagramError) as exc:
        d = build()
        validate(d)
    assert exc.value.code == code


def test_crossing_rotation_normalized_to_over_slots():
    s = Site.crossing((1, 2, 3, 4), (1, 3))
    assert s.over_pair == (1, 3) or set(s.over_pair) == {1, 3}
    assert s.rot[1] in (1, 3) and s.rot[3] in (1, 3)


@pytest.mark.parametrize("text, beta1", [("H(1) T(1)", 0), ("H(1) X(1,2,2,3) T(3)", 0),
                                         ("V(1,2,3) V(3,2,1)", 2), ("V(1,2,3) X(1,4,2,5) V(3,5,4)", 2)])
def test_underlying_graph(text, beta1):
    assert betti(underlying_graph(parse(text)))[1] == beta1


def test_shadow_graph():
    kink = shadow_graph(parse("H(1) X(1,2,2,3) T(3)"))
    assert kink.n == 3 and betti(kink)[1] == 1
    theta = parse("V(1,2,3) V(3,2,1)")
    assert betti(shadow_graph(theta)) == betti(underlying_graph(theta))
    t = shadow_graph(parse(TREFOIL))
    assert (t.n, len(t.edges), betti(t)[1]) == (3, 6, 4)


def test_betti_examples():
    assert betti(AbstractGraph(1, [(0, 0)])) == (1, 1)
    assert betti(AbstractGraph(0, [])) == (0, 0)
    tri = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    assert betti(AbstractGraph(6, tri)) == (2, 2)


def test_bridges():
    assert bridges(AbstractGraph(3, [(0, 1), (1, 2)])) == {0, 1}
    assert bridges(AbstractGraph(3, [(0, 1), (1, 2), (2, 0)])) == set()
    g = AbstractGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    assert bridges(g) == {6}
    assert bridges(AbstractGraph(1, [(0, 0)])) == set()


def test_faces_examples():
    f = faces(parse("H(1) T(1)"))
    assert (f.faces, f.genus) == (1, 0)
    f = faces(parse("V(1,2,3) V(3,2,1)"))
    assert (f.faces, f.genus) == (3, 0)
    f = faces(parse("V(1,2,3) V(1,2,3)"))
    assert (f.faces, f.genus) == (1, 1)


def test_boundary_components_examples():
    assert boundary_components(parse("V()")) == 1
    assert boundary_components(parse("V(1,1)")) == 2
    assert boundary_components(parse("V(1,2,1,2)")) == 1
    # no bands: one boundary circle per disk
    assert boundary_components(parse("V(1,2,3) V(3,2,1)"), []) == 2


@given(diagrams())
def test_walks_cover_every_side_once(d):
    f = faces(d)
    darts = [h for w in f.walks for h in w]
    assert len(darts) == len(set(darts)) == 2 * len(d.edges())


@given(diagrams())
def test_euler_relation_between_graphs(d):
    u, s = underlying_graph(d), shadow_graph(d)
    assert u.euler_characteristic() == s.euler_characteristic() + d.crossing_count


@given(planar_diagrams())
def test_move_built_diagrams_are_planar(d):
    assert genus(d) == 0


@given(diagrams())
def test_canonical_form_ignores_labels_and_site_order(d):
    shift = 100
    sites = [Site(s.kind, tuple(h + shift for h in s.rot)) for s in reversed(d.sites)]
    pairs = [(a + shift, b + shift) for a, b in d.edges()]
    e = GraphoidDiagram(sites, pairs, d.loops)
    assert e.canonical() == d.canonical()
    assert isomorphic(d, e)


def test_reflection_only_with_flag():
    d = parse("V(1,2,3,4,5) X(1,3,6,4) V(2,5,6)")
    m = d.mirror_surface()
    assert isomorphic(d, m, allow_reflection=True)


def test_normalized_drops_bivalent_vertices():
    d = parse("H(1) V(1,2) T(2)").normalized()
    assert d.canonical() == parse("H(1) T(1)").canonical()
    assert parse("V(1,2) V(2,1)").normalized().loops == 1
