import pytest

from graphoid import parse, yamada
from graphoid.closures import close, closed, dual_paths, overpass_closure, underpass_closure, virtual_closure
from graphoid.diagram import DiagramError, genus
from graphoid.pi1 import hom_profile
from strategies import planar_diagrams
from hypothesis import given, settings


def test_virtual_closure_of_trivial_is_a_circle():
    c = virtual_closure(parse("H(1) T(1)"))
    assert not c.sites and c.loops == 1


def test_closing_twice_fails():
    c = virtual_closure(parse("H(1) X(1,2,2,3) T(3)"))
    with pytest.raises(DiagramError) as exc:
        virtual_closure(c)
    assert exc.value.code == "already-closed"
    assert closed(c) is c


def test_shortcuts_need_planarity():
    d = parse("H(1) X(1,2,3,4) X(3,5,6,2) T(7) V(4,6,5,7)")
    if genus(d) == 0:
        pytest.skip("example happened to be planar")
    for mode in ("under", "over"):
        with pytest.raises(DiagramError) as exc:
            close(d, mode)
        assert exc.value.code == "not-classical-planar"


def test_shared_face_closures_coincide():
    d = parse("H(1) V(1,2,3) V(2,4,3) T(4)")
    assert list(dual_paths(d)) == [[]]
    v = virtual_closure(d)
    assert underpass_closure(d) == v == overpass_closure(d)


def test_kink_knotoid_closures():
    d = parse("H(1) X(1,2,3,4) X(4,3,5,2) T(5)")
    paths = list(dual_paths(d))
    assert paths and len({len(p) for p in paths}) == 1
    u, o = underpass_closure(d), overpass_closure(d)
    assert genus(u) == genus(o) == 0
    assert u.crossing_count == o.crossing_count == d.crossing_count + len(paths[0])


@settings(max_examples=20)
@given(planar_diagrams(steps=3, max_crossings=3))
def test_every_shortest_path_gives_planar_closure(d):
    if not d.has_endpoints:
        return
    paths = list(dual_paths(d))
    assert len({len(p) for p in paths}) == 1
    for p in paths[:4]:
        u = underpass_closure(d, p)
        assert genus(u) == 0 and not u.has_endpoints
    # the underpass closure is a classical diagram whose group does not see the path choice
    profiles = {tuple(sorted(hom_profile(underpass_closure(d, p), ("S3",)).items())) for p in paths[:4]}
    assert len(profiles) == 1


def test_unknown_mode():
    with pytest.raises(ValueError):
        close(parse("H(1) T(1)"), "sideways")
