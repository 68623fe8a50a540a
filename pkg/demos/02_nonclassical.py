"""Certifying that a virtual closure has no classical diagram.

R(D) and the generalized polynomial R(D; A, 1) agree (up to the fixed
calibration unit) on every diagram without virtual crossings, so any
mismatch is a certificate.
"""

from graphoid import genus, nonclassicality_test, parse
from graphoid.closures import closed

for name, text in {
    "trivial knotoid": "H(1) T(1)",
    "theta graphoid": "H(1) V(1,2,3) V(2,4,3) T(4)",
    "virtual trefoil": "X(1,2,3,4) X(3,4,1,2)",
    "circle around the head": "H(1) X(1,2,3,2) T(3)",
}.items():
    d = parse(text)
    v = nonclassicality_test(d)
    print(f"{name}: closure genus {genus(closed(d))}, {v.verdict}")
    print(f"    R        = {v.yamada}")
    print(f"    R(A,1)*u = {v.gyamada * v.unit}")
