"""Yamada polynomials of a few small diagrams, by both routes."""

from graphoid import parse, yamada_skein, yamada_state_sum

DIAGRAMS = {
    "trivial knotoid": "H(1) T(1)",
    "unknot": "O()",
    "single vertex": "V()",
    "theta graph": "V(1,2,3) V(3,2,1)",
    "handcuff": "V(1,1,2) V(2,3,3)",
    "trefoil": "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)",
    "knotoid with a kink around the head": "H(1) X(1,2,3,4) X(4,3,5,2) T(5)",
}

for name, text in DIAGRAMS.items():
    d = parse(text)
    skein, states = yamada_skein(d), yamada_state_sum(d)
    assert skein == states
    print(f"{name:38s} {skein}")
