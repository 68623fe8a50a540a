"""Constituents from local replacements at flat vertices, and tangle insertion.

A local replacement at a vertex joins two of its half-edges into a through
strand and turns every other incident half-edge into a free end.  Choosing
one replacement at every flat vertex gives a diagram whose components are
closed curves and strands.

Strands ending in a replacement-made free end can be pulled back through
everything by moves across that end, so they carry no information; the
invariant records drop them together with their crossings and keep the
closed curves plus the head-to-tail strand.  ``mode="closure"`` keeps every
component instead and closes each strand virtually, which is what the
non-classicality experiments need.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from . import budget as _budget
from .diagram import CROSSING, END, FLAT, HEAD, TAIL, DiagramError, GraphoidDiagram, Site
from .gyamada import nonclassicality_test
from .laurent import LaurentPoly
from .yamada import yamada


def _flat_vertices(d: GraphoidDiagram) -> list[int]:
    return [i for i, s in enumerate(d.sites) if s.kind == FLAT]


def replacement_pairs(d: GraphoidDiagram, vertex: int, adjacent_only: bool = False) -> list[tuple[int, int] | None]:
    """Slot pairs joined by each replacement at ``vertex``; ``None`` when the
    vertex has fewer than two half-edges and only turns into free ends."""
    s = d.sites[vertex]
    if s.kind != FLAT:
        raise DiagramError("bad-site", f"site {vertex} is not a flat vertex")
    k = s.degree
    if k < 2:
        return [None]
    pairs = list(itertools.combinations(range(k), 2))
    if adjacent_only and k > 2:
        pairs = [(i, j) for i, j in pairs if j == i + 1 or (i == 0 and j == k - 1)]
    return pairs


def _replace(d: GraphoidDiagram, choices: dict[int, tuple[int, int] | None]) -> GraphoidDiagram:
    drop, joins, ends = [], [], []
    for v, pair in choices.items():
        s = d.sites[v]
        drop.append(v)
        for j, h in enumerate(s.rot):
            if pair is not None and j in pair:
                continue
            ends.append(h)
        if pair is not None:
            joins.append((s.rot[pair[0]], s.rot[pair[1]]))
    ids = d.fresh(len(ends))
    new_sites = [Site(END, (x,)) for x in ids]
    joins += list(zip(ends, ids))
    return d.splice(drop=drop, new_sites=new_sites, joins=joins)


def local_replacements(d: GraphoidDiagram, vertex: int, adjacent_only: bool = False) -> list[GraphoidDiagram]:
    """One diagram per unordered pair of half-edges at ``vertex`` (``C(k, 2)``)."""
    return [_replace(d, {vertex: p}) for p in replacement_pairs(d, vertex, adjacent_only)]


def choice_vectors(d: GraphoidDiagram, adjacent_only: bool = False,
                   budgets: _budget.Budgets | None = None):
    b = budgets or _budget.current()
    vs = _flat_vertices(d)
    options = [replacement_pairs(d, v, adjacent_only) for v in vs]
    total = 1
    for o in options:
        total *= len(o)
    if total > b.replacements:
        raise _budget.BudgetExceeded(f"{total} replacement choices exceed budget {b.replacements}")
    for combo in itertools.product(*options):
        yield dict(zip(vs, combo))


# ---------------------------------------------------------------------------
# components


def _strand_components(d: GraphoidDiagram) -> list[set[int]]:
    """Half-edge sets of the strands: edges joined straight through crossings.

    Every site other than a crossing ends a strand (after replacement only
    heads, tails and free ends remain).
    """
    seen: set[int] = set()
    comps = []
    for h in d.half_edges():
        if h in seen:
            continue
        comp, stack = set(), [h]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.append(d.partner[x])
            i, j = d.where(x)
            if d.sites[i].kind == CROSSING:
                stack.append(d.sites[i].rot[(j + 2) % 4])
        seen |= comp
        comps.append(comp)
    return comps


def _keep_strands(d: GraphoidDiagram, keep: set[int], strands: list[set[int]]) -> GraphoidDiagram:
    """Delete every strand not in ``keep``; crossings with deleted strands
    dissolve into the kept strand passing straight through."""
    gone = set().union(*(strands[k] for k in range(len(strands)) if k not in keep)) if strands else set()
    drop, joins = [], []
    for i, s in enumerate(d.sites):
        hs = set(s.rot)
        if not hs & gone:
            continue
        drop.append(i)
        if s.kind == CROSSING:
            for a, c in ((s.rot[0], s.rot[2]), (s.rot[1], s.rot[3])):
                if a not in gone:
                    joins.append((a, c))
    out = d.splice(drop=drop, joins=joins, cut=[(a, d.partner[a]) for a in gone if a < d.partner[a]])
    return out


def _closed_strands(d: GraphoidDiagram, strands):
    ends = {HEAD, TAIL, END}
    out = []
    for k, comp in enumerate(strands):
        kinds = {d.sites[d.where(h)[0]].kind for h in comp} & ends
        out.append(kinds)
    return out


@dataclass(frozen=True)
class ConstituentRecord:
    """Invariant data of one replacement choice.

    ``parts`` are the unit-normalized R of each kept component taken alone
    (closed curves and the head-to-tail strand); ``joint`` is the
    unit-normalized R of all kept components together.
    """

    parts: tuple[str, ...]
    joint: str
    verdict: str | None = None

    def to_json(self) -> dict:
        out = {"parts": list(self.parts), "joint": self.joint}
        if self.verdict is not None:
            out["nonclassicality"] = self.verdict
        return out


def _norm(p: LaurentPoly) -> str:
    return str(p.unit_normalized())


def _record(d: GraphoidDiagram) -> ConstituentRecord:
    strands = _strand_components(d)
    kinds = _closed_strands(d, strands)
    keep = {k for k, ks in enumerate(kinds) if END not in ks}
    kept = _keep_strands(d, keep, strands)
    parts = []
    ks2 = _strand_components(kept)
    for k in range(len(ks2)):
        alone = _keep_strands(kept, {k}, ks2)
        # a component left without crossings comes back as a free loop
        parts.append(_norm(yamada(alone.with_loops(alone.loops - kept.loops))))
    parts += [_norm(yamada(GraphoidDiagram([], [], 1)))] * kept.loops
    return ConstituentRecord(tuple(sorted(parts)), _norm(yamada(kept)))


def _close_all(d: GraphoidDiagram) -> GraphoidDiagram:
    """Join the two ends of every strand (virtual closure of each strand)."""
    drop, joins = [], []
    for comp in _strand_components(d):
        ends = [h for h in comp if d.sites[d.where(h)[0]].kind in (HEAD, TAIL, END)]
        if len(ends) == 2:
            joins.append(tuple(ends))
            drop += [d.where(h)[0] for h in ends]
    return d.splice(drop=drop, joins=joins)


def constituent_multiset(d: GraphoidDiagram, mode: str = "invariant", adjacent_only: bool = False,
                         budgets: _budget.Budgets | None = None) -> Counter:
    """Multiset of :class:`ConstituentRecord` over all replacement choices."""
    out: Counter = Counter()
    for ch in choice_vectors(d, adjacent_only, budgets):
        e = _replace(d, ch) if ch else d
        if mode == "invariant":
            out[_record(e)] += 1
        elif mode == "closure":
            c = _close_all(e)
            v = nonclassicality_test(c)
            out[ConstituentRecord((), _norm(v.yamada), v.verdict)] += 1
        else:
            raise ValueError(f"unknown mode {mode!r}")
    return out


def constituent_list(d: GraphoidDiagram, adjacent_only: bool = False,
                     budgets: _budget.Budgets | None = None) -> list[dict]:
    """Distinct constituents (single components) with their edge supports in ``d``.

    Each entry has ``id``, ``support`` (sorted edge ids of ``d``), ``closed``
    and ``R``: the unit-normalized polynomial of the component taken alone,
    or None for strands ending in a replacement-made free end.
    """
    seen: dict[tuple[frozenset, bool], tuple[dict, int | None]] = {}
    for ch in choice_vectors(d, adjacent_only, budgets):
        for support, closed_, anchor in _walk_supports(d, ch):
            seen.setdefault((support, closed_), (ch, anchor))
    out = []
    for k, (support, closed_) in enumerate(sorted(seen, key=lambda t: (sorted(t[0]), t[1]))):
        ch, anchor = seen[(support, closed_)]
        ends = {d.sites[d.where(h)[0]].kind for e in support for h in _edge_halves(d, e)}
        free_end = not closed_ and not ({HEAD, TAIL} <= ends)
        if free_end:
            r = None
        elif anchor is None:
            r = _norm(yamada(GraphoidDiagram([], [], 1)))
        else:
            e = _replace(d, ch) if ch else d
            strands = _strand_components(e)
            sid = next(i for i, c in enumerate(strands) if anchor in c)
            alone = _keep_strands(e, {sid}, strands)
            r = _norm(yamada(alone.with_loops(alone.loops - e.loops)))
        out.append({"id": k, "support": sorted(support), "closed": closed_, "R": r})
    return out


def _edge_halves(d: GraphoidDiagram, eid: int):
    return eid, d.partner[eid]


def _walk_supports(d: GraphoidDiagram, choice: dict):
    """Components of a replacement choice as ``(edge ids of d, closed, anchor)``;
    ``anchor`` is a half-edge of the component that survives replacement."""
    through: dict[int, int] = {}
    for i, s in enumerate(d.sites):
        if s.kind == CROSSING:
            for j in range(4):
                through[s.rot[j]] = s.rot[(j + 2) % 4]
        elif s.kind == FLAT and choice.get(i) is not None:
            a, b = (s.rot[j] for j in choice[i])
            through[a], through[b] = b, a
    replaced = set(choice)
    seen: set[int] = set()
    for h in d.half_edges():
        if h in seen:
            continue
        edges, closed_, anchor, stack = set(), True, None, [h]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            edges.add(d.edge_id(x))
            stack.append(d.partner[x])
            if d.where(x)[0] not in replaced and anchor is None:
                anchor = x
            if x in through:
                stack.append(through[x])
            else:
                closed_ = False
        yield frozenset(edges), closed_, anchor


def constituent_bounds(supports: list[set[int] | frozenset], crossing: list[int | None],
                       height: list[int | None] | None = None) -> tuple[int, int, list[int]]:
    """Best sums over pairwise edge-disjoint constituents.

    Returns ``(mcc, mch, chosen)`` where ``chosen`` are the indices
    realizing ``mcc``.  Missing values count as zero.
    """
    n = len(supports)
    height = height or [None] * n
    sup = [frozenset(s) for s in supports]

    def best(weights):
        w = [x or 0 for x in weights]
        order = sorted(range(n), key=lambda i: -w[i])
        top = [0, []]

        def rec(pos, used, total, chosen, rest):
            if total > top[0]:
                top[0], top[1] = total, list(chosen)
            if pos == len(order) or total + rest <= top[0]:
                return
            i = order[pos]
            if not (sup[i] & used):
                chosen.append(i)
                rec(pos + 1, used | sup[i], total + w[i], chosen, rest - w[i])
                chosen.pop()
            rec(pos + 1, used, total, chosen, rest - w[i])

        rec(0, frozenset(), 0, [], sum(w))
        return top[0], sorted(top[1])

    mcc, chosen = best(crossing)
    mch, _ = best(height)
    return mcc, mch, chosen


# ---------------------------------------------------------------------------
# rigid-vertex tangles


def tangle_insert(d: GraphoidDiagram, vertex: int, pattern: str = "plat") -> GraphoidDiagram:
    """Replace a vertex of degree ``2k`` by a crossingless ``k``-string tangle.

    ``plat`` joins rotation-adjacent slots ``(0, 1), (2, 3), ...``;
    ``braid`` joins slot ``i`` with slot ``2k - 1 - i``.
    """
    s = d.sites[vertex]
    if s.kind != FLAT:
        raise DiagramError("bad-site", f"site {vertex} is not a flat vertex")
    n = s.degree
    if n % 2:
        raise DiagramError("odd-degree", f"vertex {vertex} has odd degree {n}")
    if pattern == "plat":
        pairs = [(i, i + 1) for i in range(0, n, 2)]
    elif pattern in ("braid", "braid-closure"):
        pairs = [(i, n - 1 - i) for i in range(n // 2)]
    else:
        raise ValueError(f"unknown tangle pattern {pattern!r}")
    return d.splice(drop=[vertex], joins=[(s.rot[i], s.rot[j]) for i, j in pairs])
