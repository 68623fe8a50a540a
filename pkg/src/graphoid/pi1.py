"""Wirtinger presentations of classical diagrams and finite group invariants.

Generators are arcs: maximal strands that are never the under-strand of a
crossing.  Each edge is oriented from its end at the lower site index to the
end at the higher one (ties broken by half-edge id), and each arc inherits
the orientation of its lowest-numbered edge.  Relators:

* crossing: ``y_out = x y_in x^-1`` where the under-strand runs from rotation
  slot 0 to slot 2, ``x`` is the over-arc oriented from slot 1 to slot 3,
  ``y_in``/``y_out`` are the under-arcs oriented along the under-strand;
* flat vertex: the product, in counterclockwise rotation order, of the
  incident arc meridians oriented out of the vertex.

Heads and tails contribute no relator, so the trivial knotoid gives
``<x | >`` and the group agrees with that of the underpass closure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import budget as _budget
from .diagram import CROSSING, FLAT, DiagramError, GraphoidDiagram, faces

Word = tuple[tuple[int, int], ...]  # (generator, +1 | -1)


def _reduce(word) -> Word:
    out: list[tuple[int, int]] = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def _inv(word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


@dataclass
class GroupPresentation:
    generators: list[int]
    relators: list[Word]
    edge_orientation: dict[int, int] = field(default_factory=dict)  # edge rep -> tail half-edge

    def __post_init__(self):
        gens = set(self.generators)
        for r in self.relators:
            for g, _ in r:
                if g not in gens:
                    raise ValueError(f"relator uses unknown generator {g}")

    def __str__(self) -> str:
        name = {g: f"x{g}" for g in self.generators}

        def w(r):
            return "*".join(name[g] if e == 1 else f"{name[g]}^-1" for g, e in r) or "1"

        return f"<{', '.join(name[g] for g in self.generators)} | {', '.join(w(r) for r in self.relators)}>"

    def to_json(self) -> dict:
        return {
            "generators": [f"x{g}" for g in self.generators],
            "relators": [[[f"x{g}", e] for g, e in r] for r in self.relators],
            "text": str(self),
        }


def wirtinger(d: GraphoidDiagram) -> GroupPresentation:
    if faces(d).genus > 0:
        raise DiagramError("not-classical-planar", "Wirtinger presentations need a planar diagram")
    # orientation: tail half-edge of each edge
    tail_of: dict[int, int] = {}
    edges = d.edges()
    for a, b in edges:
        ka, kb = (d.where(a)[0], a), (d.where(b)[0], b)
        t = a if ka <= kb else b
        tail_of[a] = tail_of[b] = t
    eid = {h: i for i, (a, b) in enumerate(edges) for h in (a, b)}

    # arcs: union of edges through over-passes, with relative sign
    parent = list(range(len(edges)))
    sign = [1] * len(edges)  # orientation of edge relative to its parent

    def find(x):
        s = 1
        while parent[x] != x:
            s *= sign[x]
            x = parent[x]
        return x, s

    def into(h):  # +1 if the edge at half-edge h is oriented into h's site
        return 1 if tail_of[h] != h else -1

    for s_ in d.sites:
        if s_.kind != CROSSING:
            continue
        b, dd = s_.rot[1], s_.rot[3]
        eb, ed = eid[b], eid[dd]
        # strand direction b -> d: edge at b aligned iff oriented into b, edge at d iff out of d
        rel = into(b) * -into(dd)
        (rb, sb), (rd, sd) = find(eb), find(ed)
        if rb == rd:
            if sb * sd != rel:
                raise DiagramError("bad-over-pair", "inconsistent arc orientation")
            continue
        if rb < rd:
            parent[rd], sign[rd] = rb, sb * sd * rel
        else:
            parent[rb], sign[rb] = rd, sb * sd * rel

    roots: dict[int, int] = {}
    meridian = {}
    for i in range(len(edges)):
        r, s = find(i)
        roots.setdefault(r, len(roots))
        meridian[i] = (roots[r], s)
    gens = list(range(len(roots))) + [len(roots) + j for j in range(d.loops)]

    def mu_in(h):  # arc meridian oriented into the site of h
        g, s = meridian[eid[h]]
        return ((g, s * into(h)),)

    relators: list[Word] = []
    for s_ in d.sites:
        if s_.kind == CROSSING:
            a, b, c, _ = s_.rot
            x = mu_in(b)
            y_in, y_out = mu_in(a), _inv(mu_in(c))
            relators.append(_reduce(_inv(y_out) + x + y_in + _inv(x)))
        elif s_.kind == FLAT and s_.degree > 0:
            relators.append(_reduce(sum((_inv(mu_in(h)) for h in s_.rot), ())))
    return GroupPresentation(gens, relators, {a: tail_of[a] for a, _ in edges})


def abelianization(p: GroupPresentation) -> tuple[int, list[int]]:
    """Rank and torsion coefficients (each > 1) of the abelianized group."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    n = len(p.generators)
    col = {g: i for i, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * n
        for g, e in r:
            row[col[g]] += e
        if any(row):
            rows.append(row)
    if not rows or n == 0:
        return n, []
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    nonzero = [x for x in diag if x]
    return n - len(nonzero), sorted(x for x in nonzero if x > 1)


# ---------------------------------------------------------------------------
# finite targets


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    table: tuple[tuple[int, ...], ...]  # table[a][b] = a*b
    identity: int

    @property
    def order(self) -> int:
        return len(self.table)

    def inverse(self, a: int) -> int:
        return next(b for b in range(self.order) if self.table[a][b] == self.identity)


def group_from_permutations(name: str, elements) -> FiniteGroup:
    elems = sorted({tuple(e) for e in elements})
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems[0])
    ident = index[tuple(range(n))]
    table = tuple(tuple(index[tuple(a[b[i]] for i in range(n))] for b in elems) for a in elems)
    return FiniteGroup(name, table, ident)


@lru_cache(maxsize=None)
def named_group(name: str) -> FiniteGroup:
    """``S3``, ``D4``, ``A4``, ``Zn`` or ``trivial``."""
    from sympy.combinatorics.named_groups import AlternatingGroup, CyclicGroup, DihedralGroup, SymmetricGroup

    key = name.strip().upper()
    if key in ("TRIVIAL", "1", "Z1"):
        return FiniteGroup("trivial", ((0,),), 0)
    if key == "S3":
        g = SymmetricGroup(3)
    elif key == "D4":
        g = DihedralGroup(4)
    elif key == "A4":
        g = AlternatingGroup(4)
    elif key.startswith("Z") and key[1:].isdigit():
        g = CyclicGroup(int(key[1:]))
    else:
        raise ValueError(f"unknown target group {name!r}")
    return group_from_permutations(name, (p.array_form for p in g.generate()))


def count_homs(p: GroupPresentation, target: FiniteGroup | str,
               budgets: _budget.Budgets | None = None) -> int:
    """Exact number of homomorphisms from the presented group to ``target``."""
    b = budgets or _budget.current()
    grp = named_group(target) if isinstance(target, str) else target
    if grp.order > b.hom_group_order:
        raise _budget.BudgetExceeded(f"target order {grp.order} exceeds {b.hom_group_order}")
    T, e = grp.table, grp.identity
    inv = [grp.inverse(a) for a in range(grp.order)]
    rels = [r for r in p.relators if r]
    # assign generators in order of first use; check each relator as soon as it is fully assigned
    order: list[int] = []
    for r in rels:
        for g, _ in r:
            if g not in order:
                order.append(g)
    free = [g for g in p.generators if g not in order]
    pos = {g: i for i, g in enumerate(order)}
    ready: list[list[Word]] = [[] for _ in order]
    for r in rels:
        ready[max(pos[g] for g, _ in r)].append(r)

    val: dict[int, int] = {}
    nodes = 0

    def holds(r):
        x = e
        for g, s in r:
            y = val[g]
            x = T[x][y if s > 0 else inv[y]]
        return x == e

    def rec(i):
        nonlocal nodes
        if i == len(order):
            return 1
        total = 0
        g = order[i]
        for a in range(grp.order):
            nodes += 1
            if nodes > b.hom_nodes:
                raise _budget.BudgetExceeded(f"homomorphism search exceeded {b.hom_nodes} nodes")
            val[g] = a
            if all(holds(r) for r in ready[i]):
                total += rec(i + 1)
        del val[g]
        return total

    return rec(0) * grp.order ** len(free)


def hom_profile(d: GraphoidDiagram, targets=("S3", "D4", "A4")) -> dict[str, int]:
    p = wirtinger(d)
    return {t: count_homs(p, t) for t in targets}
