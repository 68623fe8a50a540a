"""Adequacy of closed diagrams and the surface bounds around it.

All computations run on the virtual closure of the input (closed diagrams
pass through unchanged).  Notation follows the usual construction:

* the marked state ``S'`` is the all-A (or all-B) state with one degree-2
  vertex placed on each smoothing arc, tagged by its crossing;
* ``F`` contracts each component of ``S'`` minus its bridges to a vertex and
  keeps the bridges as edges;
* ``J`` adds to ``F`` one edge per essential crossing (a crossing whose
  switch to the X-resolution raises the first Betti number by one), joining
  the pieces that hold the crossing's two tagged vertices;
* ``counts[k]`` is the number of bridgeless ``K`` with ``F <= K <= J`` and
  ``beta1(K) = k``.

A side is adequate when the alternating sum ``sum (-1)^k counts[k]`` is
nonzero; the plain sum is reported too.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import budget as _budget
from .closures import closed
from .diagram import (
    CROSSING,
    FLAT,
    AbstractGraph,
    GraphoidDiagram,
    Site,
    betti,
    bridges,
    components,
    face_of_dart,
    faces,
    underlying_graph,
)
from .yamada import all_a_state, resolve, resolved_diagram, yamada


def marked_state(d: GraphoidDiagram, which: str = "A") -> AbstractGraph:
    """All-A (or all-B) state with two tagged degree-2 vertices per crossing.

    ``g.tags`` maps each tagged vertex to ``(crossing index, arc 0 | 1)``.
    """
    dc = closed(d)
    flat, tags = resolved_diagram(dc, all_a_state(dc, which), tagged=True)
    sites = list(range(len(flat.sites)))
    from .diagram import _strand_graph

    g = _strand_graph(flat, sites, {})
    g.tags = dict(tags)
    return g


def cut_edges(g: AbstractGraph) -> set[int]:
    return bridges(g)


@dataclass
class Contraction:
    graph: AbstractGraph     # F
    piece: list[int]         # vertex of the state -> vertex of F


def build_F(g: AbstractGraph) -> Contraction:
    cut = cut_edges(g)
    keep = [e for i, e in enumerate(g.edges) if i not in cut]
    lab = components(g.n, keep)
    ids: dict[int, int] = {}
    piece = [ids.setdefault(x, len(ids)) for x in lab]
    f = AbstractGraph(len(ids), [(piece[g.edges[i][0]], piece[g.edges[i][1]]) for i in sorted(cut)])
    return Contraction(f, piece)


def essential_crossings(d: GraphoidDiagram, which: str = "A") -> list[int]:
    dc = closed(d)
    base = all_a_state(dc, which)
    b1 = betti(resolve(dc, base))[1]
    out = []
    for x in dc.indices(CROSSING):
        st = dict(base)
        st[x] = "X"
        if betti(resolve(dc, st))[1] == b1 + 1:
            out.append(x)
    return out


def build_J(d: GraphoidDiagram, which: str = "A"):
    """Return ``(J, F, marked state, essential crossings)``; ``J``'s first
    edges are ``F``'s, followed by one edge per essential crossing."""
    g = marked_state(d, which)
    con = build_F(g)
    ess = essential_crossings(d, which)
    where = {}
    for v, (x, arc) in g.tags.items():
        where[(x, arc)] = v
    j = AbstractGraph(con.graph.n, list(con.graph.edges))
    for x in ess:
        j.edges.append((con.piece[where[(x, 0)]], con.piece[where[(x, 1)]]))
    return j, con.graph, g, ess


def subgraph_counts(j: AbstractGraph, f: AbstractGraph,
                    budgets: _budget.Budgets | None = None) -> dict[int, int]:
    """Bridgeless intermediate subgraphs ``F <= K <= J`` counted by ``beta1(K)``.

    ``J``'s edge list must start with ``F``'s edges.
    """
    b = budgets or _budget.current()
    base = list(f.edges)
    if j.edges[: len(base)] != base:
        raise ValueError("J must extend F")
    extra = j.edges[len(base):]
    if len(extra) > b.subsets:
        raise _budget.BudgetExceeded(f"{len(extra)} added edges exceed the subset budget {b.subsets}")
    counts: dict[int, int] = {}
    for r in range(len(extra) + 1):
        for sub in itertools.combinations(extra, r):
            k = AbstractGraph(j.n, base + list(sub))
            if bridges(k):
                continue
            b1 = betti(k)[1]
            counts[b1] = counts.get(b1, 0) + 1
    return dict(sorted(counts.items()))


def alternating_sum(counts: dict[int, int]) -> int:
    return sum((-1) ** k * c for k, c in counts.items())


@dataclass
class AdequacyReport:
    a_counts: dict[int, int]
    b_counts: dict[int, int]
    alt_sum_A: int
    alt_sum_B: int
    plain_sum_A: int
    plain_sum_B: int
    A_adequate: bool
    B_adequate: bool
    essential_A: list[int]
    essential_B: list[int]
    crossings: int
    beta1_SA: int
    beta1_SB: int
    chi_G: int
    polynomial: object = None
    extreme_coeff_check: str = "not-applicable"
    extreme_detail: dict = field(default_factory=dict)
    span_identity: str = "not-applicable"
    nontriviality: str | None = None

    @property
    def adequate(self) -> bool:
        return self.A_adequate and self.B_adequate

    def to_json(self) -> dict:
        return {
            "a_counts": {str(k): v for k, v in self.a_counts.items()},
            "b_counts": {str(k): v for k, v in self.b_counts.items()},
            "alt_sum_A": self.alt_sum_A,
            "alt_sum_B": self.alt_sum_B,
            "plain_sum_A": self.plain_sum_A,
            "plain_sum_B": self.plain_sum_B,
            "A_adequate": self.A_adequate,
            "B_adequate": self.B_adequate,
            "adequate": self.adequate,
            "essential_A": self.essential_A,
            "essential_B": self.essential_B,
            "crossings": self.crossings,
            "beta1_SA": self.beta1_SA,
            "beta1_SB": self.beta1_SB,
            "chi_G": self.chi_G,
            "polynomial": None if self.polynomial is None else str(self.polynomial),
            "extreme_coeff_check": self.extreme_coeff_check,
            "extreme_detail": self.extreme_detail,
            "span_identity": self.span_identity,
            "nontriviality": self.nontriviality,
        }


def adequacy_report(d: GraphoidDiagram, budgets: _budget.Budgets | None = None,
                    with_polynomial: bool = True) -> AdequacyReport:
    b = budgets or _budget.current()
    dc = closed(d)
    side = {}
    for w in "AB":
        j, f, _, ess = build_J(dc, w)
        side[w] = (subgraph_counts(j, f, b), ess)
    (ca, ea), (cb, eb) = side["A"], side["B"]
    c = dc.crossing_count
    b1a = betti(resolve(dc, all_a_state(dc, "A")))[1]
    b1b = betti(resolve(dc, all_a_state(dc, "B")))[1]
    chi = underlying_graph(dc).euler_characteristic()
    alt_a, alt_b = alternating_sum(ca), alternating_sum(cb)
    rep = AdequacyReport(ca, cb, alt_a, alt_b, sum(ca.values()), sum(cb.values()),
                         alt_a != 0, alt_b != 0, ea, eb, c, b1a, b1b, chi)
    if not with_polynomial or c > b.crossings:
        return rep
    try:
        p = yamada(dc)
    except _budget.BudgetExceeded:
        return rep
    rep.polynomial = p
    sign = (-1) ** (chi % 2)
    top, bot = c + b1a, -c - b1b
    got_top, got_bot = p.coeff(top), p.coeff(bot)
    rep.extreme_detail = {
        "max_exponent": top, "max_coeff": got_top, "predicted_max": sign * alt_a,
        "min_exponent": bot, "min_coeff": got_bot, "predicted_min": sign * alt_b,
    }
    ok = got_top == sign * alt_a and got_bot == sign * alt_b
    rep.extreme_coeff_check = "pass" if ok else "fail"
    if rep.adequate:
        span = None if p.is_zero() else p.degrees()[2]
        rep.span_identity = "pass" if span == 2 * c + b1a + b1b else "fail"
        if d.has_endpoints:
            b1g = betti(underlying_graph(d))[1]
            rep.nontriviality = ("certified-nontrivial" if span is not None and span > 2 * b1g
                                 else "inconsistent")
    return rep


# ---------------------------------------------------------------------------
# surfaces


@dataclass
class DualReport:
    s_hat: int
    faces: int
    dual_edges: list[tuple[int, int, str]]
    genus: int
    chi_surface: int
    chi_G: int
    beta1_G: int
    crossings: int
    beta1_SA: int
    beta1_SB: int
    connected: bool
    betti_bound_ok: bool | None      # beta1(S_A)+beta1(S_B) <= s - chi(G) + c - chi(F) + 2
    s_bound_ok: bool | None          # s <= beta1(G) + chi(F) - 1

    def to_json(self) -> dict:
        return {k: v for k, v in self.__dict__.items()}


def _corner_faces(d: GraphoidDiagram):
    """Face index of the corner between ``rot[i]`` and ``rot[i+1]`` for every site."""
    fd = faces(d)
    fof = face_of_dart(fd.walks)
    return fd, fof


def dual_graph(d: GraphoidDiagram) -> tuple[AbstractGraph, DualReport]:
    dc = closed(d)
    fd, fof = _corner_faces(dc)
    nf = fd.faces
    g = AbstractGraph(nf)
    labelled = []
    for s in dc.sites:
        if s.kind != CROSSING:
            continue
        h0, h1, h2, h3 = s.rot
        for tag, (x, y) in (("A", (h2, h0)), ("B", (h1, h3))):
            g.edges.append((fof[x], fof[y]))
            labelled.append((fof[x], fof[y], tag))
    s_hat = betti(g)[0]
    ug = underlying_graph(dc)
    chi_g = ug.euler_characteristic()
    b1g = betti(ug)[1]
    chi_f = fd.euler_characteristic
    c = dc.crossing_count
    b1a = betti(resolve(dc, all_a_state(dc, "A")))[1]
    b1b = betti(resolve(dc, all_a_state(dc, "B")))[1]
    connected = fd.components == 1
    rep = DualReport(
        s_hat, nf, labelled, fd.genus, chi_f, chi_g, b1g, c, b1a, b1b, connected,
        (b1a + b1b <= s_hat - chi_g + c - chi_f + 2) if connected else None,
        (s_hat <= b1g + chi_f - 1) if connected else None,
    )
    return g, rep


# ---------------------------------------------------------------------------
# checkerboard


def _add_chord(d: GraphoidDiagram, v: int, i: int, w: int, j: int) -> GraphoidDiagram:
    """Insert an edge from corner ``i`` of site ``v`` to corner ``j`` of ``w``
    (corner ``i`` lies after ``rot[i]``)."""
    a, b = d.fresh(2)
    sites = list(d.sites)
    rv = list(sites[v].rot)
    rv.insert(i + 1, a)
    sites[v] = Site(FLAT, tuple(rv))
    rw = list(sites[w].rot)
    rw.insert(j + 1, b)
    sites[w] = Site(FLAT, tuple(rw))
    pairs = [(x, y) for x, y in d.partner.items() if x < y] + [(a, b)]
    return GraphoidDiagram(sites, pairs, d.loops, d.name)


def _augmentations(d: GraphoidDiagram, limit: int = 200):
    """Face-respecting edge sets pairing up the odd-degree flat vertices."""
    found = []

    def rec(cur):
        if len(found) >= limit:
            return
        odd = [i for i, s in enumerate(cur.sites) if s.kind == FLAT and s.degree % 2]
        if not odd:
            found.append(cur)
            return
        v = odd[0]
        fd = faces(cur)
        fof = face_of_dart(fd.walks)
        sv = cur.sites[v]
        for i in range(sv.degree):
            f = fof[sv.rot[(i + 1) % sv.degree]]
            for w in odd[1:]:
                sw = cur.sites[w]
                for j in range(sw.degree):
                    if fof[sw.rot[(j + 1) % sw.degree]] == f:
                        rec(_add_chord(cur, v, i, w, j))

    rec(d)
    return found


def _two_colour(d: GraphoidDiagram):
    fd = faces(d)
    fof = face_of_dart(fd.walks)
    n = len(fd.walks)
    adj = [[] for _ in range(n)]
    for x, y in d.edges():
        adj[fof[x]].append(fof[y])
        adj[fof[y]].append(fof[x])
    col = [-1] * n
    for s in range(n):
        if col[s] >= 0:
            continue
        col[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if col[v] < 0:
                    col[v] = 1 - col[u]
                    stack.append(v)
                elif col[v] == col[u]:
                    return None, fof
    return col, fof


def _decorations_follow(d: GraphoidDiagram, col, fof) -> bool:
    a_colours = set()
    for s in d.sites:
        if s.kind != CROSSING:
            continue
        h0, _, h2, _ = s.rot
        a_colours |= {col[fof[h0]], col[fof[h2]]}
    return len(a_colours) <= 1


@dataclass
class CheckerboardReport:
    verdict: str                # "holds" | "not-applicable"
    odd_vertices: int
    augmented: str | None = None
    lower_bound: int | None = None
    beta1_sum: int | None = None
    lower_bound_ok: bool | None = None
    gap_bound: float | None = None
    s_surrogate: int | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return dict(self.__dict__)


def checkerboard_bound(d: GraphoidDiagram, augmentation=None) -> CheckerboardReport:
    """Checkerboard lower bound on ``beta1(S_A) + beta1(S_B)``.

    ``augmentation`` is a list of ``(site, corner, site, corner)`` chords to
    add; by default every face-respecting augmentation is tried.
    """
    from .codec import serialize

    dc = closed(d)
    odd = sum(1 for s in dc.sites if s.kind == FLAT and s.degree % 2)
    rep = CheckerboardReport("not-applicable", odd)
    if any(s.kind == FLAT and s.degree == 0 for s in dc.sites):
        rep.notes.append("isolated vertex has no faces to colour")
        return rep
    if odd > 8:
        rep.notes.append("more than 8 odd vertices; augmentation search skipped")
        return rep
    if augmentation is not None:
        cands = [dc]
        for v, i, w, j in augmentation:
            cands = [_add_chord(cands[0], v, i, w, j)]
        if any(s.kind == FLAT and s.degree % 2 for s in cands[0].sites):
            rep.notes.append("given augmentation leaves odd vertices")
            return rep
    else:
        cands = _augmentations(dc)
    for aug in cands:
        col, fof = _two_colour(aug)
        if col is None or not _decorations_follow(aug, col, fof):
            continue
        fd = faces(dc)
        if fd.components != 1:
            rep.notes.append("shadow is disconnected; bound stated for connected shadows")
        c = dc.crossing_count
        chi_g = underlying_graph(dc).euler_characteristic()
        chi_s = fd.euler_characteristic
        b1a = betti(resolve(dc, all_a_state(dc, "A")))[1]
        b1b = betti(resolve(dc, all_a_state(dc, "B")))[1]
        _, dual = dual_graph(dc)
        rep.verdict = "holds"
        rep.augmented = serialize(aug)
        rep.lower_bound = c - chi_g - odd // 2 + chi_s
        rep.beta1_sum = b1a + b1b
        rep.lower_bound_ok = rep.beta1_sum >= rep.lower_bound
        rep.s_surrogate = dual.s_hat
        rep.gap_bound = (dual.s_hat + odd / 2 - 2 * chi_s + 2) / 3
        rep.notes.append("gap bound uses s of this shadow as a stand-in for the maximum over shadows")
        return rep
    rep.notes.append("no face-respecting augmentation admits a checkerboard colouring matching the crossings")
    return rep
