import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphoid import parse, yamada
from graphoid.codec import load
from graphoid.constituents import (
    constituent_bounds, constituent_list, constituent_multiset, local_replacements, tangle_insert,
)
from graphoid.diagram import DiagramError, FLAT
from graphoid.moves import RIGID_KINDS, apply_move, enumerate_moves
from conftest import CORPUS_DIR
from strategies import planar_diagrams

THETA = parse("V(1,2,3) V(3,2,1)")


def test_replacement_counts():
    assert len(local_replacements(THETA, 0)) == 3
    assert len(local_replacements(parse("V(1,2,3,4) V(4,3,2,1)"), 0)) == 6
    assert len(local_replacements(parse("V(1,2,3,4) V(4,3,2,1)"), 0, adjacent_only=True)) == 4


def test_vertexless_diagram_has_one_record():
    m = constituent_multiset(parse("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"))
    assert sum(m.values()) == 1


def test_theta_constituents_are_unknots():
    m = constituent_multiset(THETA)
    assert sum(m.values()) == 9
    unknot = str(yamada(parse("O()")).unit_normalized())
    assert all(set(r.parts) <= {unknot} for r in m)


def test_replacing_a_crossing_fails():
    with pytest.raises(DiagramError):
        local_replacements(parse("X(1,1,2,2)"), 0)


@settings(max_examples=15)
@given(planar_diagrams(steps=3, max_crossings=3), st.integers(0, 2**32 - 1))
def test_multiset_invariant_under_moves(d, seed):
    ms = enumerate_moves(d, RIGID_KINDS)
    if not ms:
        return
    e = apply_move(d, random.Random(seed).choice(ms))
    if e.crossing_count > 5:
        return
    assert constituent_multiset(d) == constituent_multiset(e)


def test_bounds():
    assert constituent_bounds([{1}, {2}, {3}], [1, 1, 1])[0] == 3
    mcc, mch, chosen = constituent_bounds([{1, 2}, {2, 3}, {3}], [3, 2, 1], [0, 5, 1])
    assert (mcc, chosen) == (4, [0, 2])
    assert mch == 5


def test_constituent_list_supports():
    items = constituent_list(parse("H(1) V(1,2,3) V(2,4,3) T(4)"))
    closed = [c for c in items if c["closed"]]
    assert len(closed) == 1 and closed[0]["R"] is not None
    free = [c for c in items if c["R"] is None]
    assert free and all(not c["closed"] for c in free)


def test_tangle_insert():
    d = parse("H(1) V(1,2,2,3) T(3)")
    plat = tangle_insert(d, 1, "plat")
    braid = tangle_insert(d, 1, "braid")
    assert not any(s.kind == FLAT for s in plat.sites)
    assert {plat.loops, braid.loops} == {0, 1}
    with pytest.raises(DiagramError):
        tangle_insert(THETA, 0)


def _tangle_values(d):
    v = next(i for i, s in enumerate(d.sites) if s.kind == FLAT)
    return {str(yamada(tangle_insert(d, v, p)).unit_normalized()) for p in ("plat", "braid")}


def test_tangle_values_invariant_under_rigid_moves():
    rng = random.Random(1)
    for _ in range(30):
        d = parse(rng.choice(["H(1) V(1,2,2,3) T(3)", "H(1) V(1,2,3,4) X(2,4,5,3) T(5)"]))
        for _ in range(3):
            e = apply_move(d, rng.choice(enumerate_moves(d, RIGID_KINDS)))
            if e.crossing_count > 4:
                continue
            assert _tangle_values(e) == _tangle_values(d)
            d = e


def test_vertex_kink_graphoid_has_nonclassical_closure_constituent():
    d = load(CORPUS_DIR / "vertex_kink_graphoid.gpd")
    verdicts = {r.verdict for r in constituent_multiset(d, "closure")}
    assert "certified-non-classical" in verdicts
