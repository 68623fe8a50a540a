"""Hypothesis strategies shared by the test modules."""

import random

from hypothesis import strategies as st

from graphoid.diagram import AbstractGraph
from graphoid.generate import random_planar, random_small

PLANAR_SEEDS = (
    "H(1) T(1)", "X(1,1,2,2)", "V(1,2,3) V(3,2,1)", "H(1) V(1,2,3) V(2,4,3) T(4)",
    "H(1) V(1,2,2,3) T(3)", "H(1) X(1,2,3,4) X(4,3,5,2) T(5)", "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)",
)


@st.composite
def diagrams(draw, max_crossings=3, max_vertices=2, planar=False):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_small(random.Random(seed), max_crossings, max_vertices, planar=planar)


@st.composite
def planar_diagrams(draw, steps=4, max_crossings=4):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return random_planar(rng, PLANAR_SEEDS, steps=steps, max_crossings=max_crossings)


@st.composite
def multigraphs(draw, max_vertices=5, max_edges=8):
    n = draw(st.integers(1, max_vertices))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_edges))
    return AbstractGraph(n, edges)
