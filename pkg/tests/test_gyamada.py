from hypothesis import given, settings

from graphoid import gyamada, nonclassicality_test, parse, yamada
from graphoid.closures import closed
from graphoid.diagram import genus
from graphoid.gyamada import CALIBRATION_UNIT, flat_gyamada, unit_for
from graphoid.laurent import parse as poly
from strategies import planar_diagrams


def test_base_values():
    assert gyamada(parse("H(1) T(1)")) == poly("-A - 1 - A^-1")
    assert gyamada(parse("V()")) == poly("-1")


def test_units():
    assert unit_for(parse("H(1) T(1)")) == CALIBRATION_UNIT
    assert unit_for(parse("O()")) == 1


def test_classical_closed_diagrams_agree():
    for text in ("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)", "V(1,2,3) V(3,2,1)", "X(1,2,3,4) X(4,3,2,1)"):
        d = parse(text)
        assert gyamada(d) == yamada(d)


@settings(max_examples=25)
@given(planar_diagrams(steps=4, max_crossings=3))
def test_planar_closures_are_never_certified(d):
    if genus(closed(d)) == 0:
        v = nonclassicality_test(d)
        assert v.verdict == "inconclusive"
        assert v.yamada == v.gyamada * v.unit


def test_certificates():
    assert nonclassicality_test(parse("X(1,2,3,4) X(3,4,1,2)")).verdict == "certified-non-classical"
    assert nonclassicality_test(parse("H(1) X(1,2,3,2) T(3)")).verdict == "certified-non-classical"


def test_flat_value_ignores_crossing_data():
    a = parse("X(1,2,3,4) X(3,4,1,2)")
    b = parse("X(1,2,3,4) X(4,1,2,3)")
    assert flat_gyamada(a) == flat_gyamada(b)


def test_report_json():
    j = nonclassicality_test(parse("H(1) T(1)")).to_json()
    assert j["verdict"] == "inconclusive" and j["calibration_unit"] == -1
