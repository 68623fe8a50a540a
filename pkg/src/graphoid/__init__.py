"""Invariants of virtual graphoids and virtual spatial graphs.

Diagrams are abstract ribbon graphs (:class:`GraphoidDiagram`); virtual
crossings are implicit in the rotation system.
"""

from .codec import load, parse, serialize
from .diagram import AbstractGraph, DiagramError, GraphoidDiagram, Site, faces, genus
from .gyamada import gyamada, nonclassicality_test
from .laurent import LaurentPoly
from .yamada import yamada, yamada_skein, yamada_state_sum

__all__ = [
    "AbstractGraph", "DiagramError", "GraphoidDiagram", "LaurentPoly", "Site", "faces", "genus",
    "gyamada", "load", "nonclassicality_test", "parse", "serialize", "yamada", "yamada_skein",
    "yamada_state_sum",
]
__version__ = "0.1.0"
