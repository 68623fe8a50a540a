"""Reidemeister moves on abstract diagrams and bounded equivalence search.

Every move is a local rewrite between two *patterns*: small diagrams whose
dangling half-edges carry port labels.  Removing a matched left-hand side and
gluing in the right-hand side along equal port labels is done by
:meth:`GraphoidDiagram.splice`.  Moves that create crossings on a bare edge
(R1+, R2+, and R4 starting from an uncrossed strand) have no sites on the
left and are located by edges and faces instead.

Virtual moves and the detour move are identities in this encoding and are
not represented.  No pattern contains a head or tail, and insertion moves
only cut edges, so no move ever pulls a strand across an endpoint.

Move kinds: ``R1+ R1- R2+ R2- R3 R4 R5 R6``.  R5 flips a rigid vertex disk
(rotation reversed, adjacent edge blocks half-twisted); R6 swaps two
adjacent edges at a vertex through a crossing and is the only move that is
not rigid.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .diagram import CROSSING, FLAT, DiagramError, GraphoidDiagram, Site, face_of_dart, faces

ALL_KINDS = ("R1+", "R1-", "R2+", "R2-", "R3", "R4", "R5", "R6")
RIGID_KINDS = ALL_KINDS[:-1]


@dataclass(frozen=True)
class Pattern:
    sites: tuple[Site, ...]
    pairs: tuple[tuple[int, int], ...]   # internal edges
    ports: tuple[tuple[str, int], ...]   # label -> dangling half-edge
    direct: tuple[tuple[str, str], ...] = ()  # ports joined straight through

    def port_map(self) -> dict[str, int]:
        return dict(self.ports)


@dataclass(frozen=True)
class MoveSite:
    """A located move.

    ``location`` is a tuple of plain values that :func:`apply_move` replays on
    the same diagram; ``direction`` is ``+1`` when the move adds crossings or
    is the forward form of a symmetric move, ``-1`` otherwise.
    """

    kind: str
    location: tuple
    direction: int = 1

    def script(self) -> str:
        return f"{self.kind} {' '.join(map(str, _flatten(self.location)))}"


def _flatten(t):
    for x in t:
        if isinstance(x, tuple):
            yield "("
            yield from _flatten(x)
            yield ")"
        else:
            yield x


class _Ids:
    def __init__(self):
        self.n = 0

    def __call__(self, k=1):
        out = list(range(self.n + 1, self.n + 1 + k))
        self.n += k
        return out if k > 1 else out[0]


# ---------------------------------------------------------------------------
# pattern builders


def _kink(side: int, over: int) -> Pattern:
    new = _Ids()
    p, q, c, d = new(4)
    rot = (p, q, c, d) if side == 0 else (q, p, c, d)
    s = Site.crossing(rot, (rot[1], rot[3]) if over == 0 else (rot[0], rot[2]))
    return Pattern((s,), ((c, d),), (("P", p), ("Q", q)))


def _bigon(over: int) -> Pattern:
    new = _Ids()
    eL, nL, wL, sL, eR, nR, wR, sR = new(8)
    ov = lambda e, n, w, s: (n, s) if over == 0 else (e, w)
    L = Site.crossing((eL, nL, wL, sL), ov(eL, nL, wL, sL))
    R = Site.crossing((eR, nR, wR, sR), ov(eR, nR, wR, sR))
    return Pattern((L, R), ((nL, nR), (wR, eL)),
                   (("p", sL), ("p'", sR), ("q", eR), ("q'", wL)))


def _triangle(config: int, heights: tuple[int, int, int]) -> Pattern:
    """Three chords E_k -- E_{k+3} (k = 0, 1, 2) around a disk with ends
    E_0..E_5 counterclockwise.  ``config`` picks which of the two small
    triangles the chords bound; ``heights`` orders the chords (higher is over)."""
    new = _Ids()
    # along chord k from E_k the other chords are met in increasing index
    # order (config 0) or decreasing (config 1); these are the two planar triangles
    order = {}
    for k in range(3):
        others = [j for j in range(3) if j != k]
        order[k] = others if config == 0 else others[::-1]
    # half-edge of crossing {j,k} on chord k pointing to its start / end
    he = {}
    for j, k in itertools.combinations(range(3), 2):
        for ch in (j, k):
            he[(frozenset((j, k)), ch, "s")] = new()
            he[(frozenset((j, k)), ch, "e")] = new()
    sites = []
    for j, k in itertools.combinations(range(3), 2):
        key = frozenset((j, k))
        dirs = []
        for ch in (j, k):
            dirs.append((60 * ch, he[(key, ch, "s")]))
            dirs.append((60 * (ch + 3), he[(key, ch, "e")]))
        rot = tuple(h for _, h in sorted(dirs))
        top = j if heights[j] > heights[k] else k
        sites.append(Site.crossing(rot, (he[(key, top, "s")], he[(key, top, "e")])))
    pairs, ports = [], []
    for k in range(3):
        x1, x2 = (frozenset((k, o)) for o in order[k])
        ports.append((f"E{k}", he[(x1, k, "s")]))
        pairs.append((he[(x1, k, "e")], he[(x2, k, "s")]))
        ports.append((f"E{k + 3}", he[(x2, k, "e")]))
    return Pattern(tuple(sites), tuple(pairs), tuple(sorted(ports)))


def _vertex_strand(k: int, start: int, m: int, over: int, sa: str = "Sa", sb: str = "Sb") -> Pattern:
    """Flat vertex of degree ``k`` with a strand crossing the edges at
    rotation positions ``start .. start+m-1`` (in that order from port ``sa``)."""
    new = _Ids()
    v = new(k) if k > 1 else [new()]
    pairs, ports, sites = [], [], []
    block = [(start + t) % k for t in range(m)]
    prev = None
    for j in range(k):
        if j not in block:
            ports.append((f"E{j}", v[j]))
    for j in block:
        out, to_b, inn, to_a = new(4)
        sites.append(Site.crossing((out, to_b, inn, to_a), (to_b, to_a) if over == 0 else (out, inn)))
        pairs.append((inn, v[j]))
        ports.append((f"E{j}", out))
        if prev is None:
            ports.append((sa, to_a))
        else:
            pairs.append((prev, to_a))
        prev = to_b
    direct = ()
    if prev is None:
        direct = ((sa, sb),)
    else:
        ports.append((sb, prev))
    vs = Site(FLAT, tuple(v))
    return Pattern((vs, *sites), tuple(pairs), tuple(sorted(ports)), direct)


def _braid(word, inputs, new):
    """Crossings of a braid word on strands fed by ``inputs`` (left to right).

    Each generator is ``(i, eps)`` crossing positions ``i, i+1`` (0-based);
    ``eps = +1`` puts the strand rising to the right on top.  Returns
    ``(sites, pairs, outputs)`` with outputs left to right.
    """
    cur = list(inputs)
    sites, pairs = [], []
    for i, eps in word:
        ne, nw, sw, se = new(4)
        sites.append(Site.crossing((ne, nw, sw, se), (ne, sw) if eps > 0 else (nw, se)))
        pairs += [(sw, cur[i]), (se, cur[i + 1])]
        cur[i], cur[i + 1] = nw, ne
    return sites, pairs, cur


def _half_twist(m, eps):
    return [(i, eps) for top in range(m - 1, 0, -1) for i in range(top)]


def _twisted_vertex(k: int, m: int, eps_top: int, eps_bot: int) -> tuple[Pattern, Pattern]:
    """Rigid flip: vertex whose first ``m`` edges pass through a half twist and
    the other ``k - m`` through another, versus the plain reversed vertex."""
    new = _Ids()
    v = new(k) if k > 1 else [new()]
    top_in = [v[j] for j in range(m - 1, -1, -1)]
    bot_in = [v[j] for j in range(k - 1, m - 1, -1)]
    s1, p1, top_out = _braid(_half_twist(m, eps_top), top_in, new)
    s2, p2, bot_out = _braid(_half_twist(k - m, eps_bot), bot_in, new)
    # internal pairs from braids connect crossing half-edges to vertex half-edges
    ports = [(f"T{j + 1}", h) for j, h in enumerate(top_out)]
    ports += [(f"U{j + 1}", h) for j, h in enumerate(bot_out)]
    lhs = Pattern((Site(FLAT, tuple(v)), *s1, *s2), tuple(p1 + p2), tuple(sorted(ports)))
    new2 = _Ids()
    order = [f"T{j}" for j in range(m, 0, -1)] + [f"U{j}" for j in range(k - m, 0, -1)]
    w = new2(k) if k > 1 else [new2()]
    rhs = Pattern((Site(FLAT, tuple(w)),), (), tuple(sorted(zip(order, w))))
    return lhs, rhs


def _vertex_swap(k: int, eps: int) -> tuple[Pattern, Pattern]:
    """Two adjacent edges at a vertex crossing once, versus swapped without crossing."""
    new = _Ids()
    v = new(k)
    s, p, (t1, t2) = _braid([(0, eps)], [v[1], v[0]], new)
    ports = [("T1", t1), ("T2", t2)] + [(f"E{j}", v[j]) for j in range(2, k)]
    lhs = Pattern((Site(FLAT, tuple(v)), *s), tuple(p), tuple(sorted(ports)))
    new2 = _Ids()
    w = new2(k)
    order = ["T2", "T1"] + [f"E{j}" for j in range(2, k)]
    rhs = Pattern((Site(FLAT, tuple(w)),), (), tuple(sorted(zip(order, w))))
    return lhs, rhs


# sign pair of the two half twists produced by flipping a vertex disk; the
# other pairing does not preserve R and is not a move
R5_SIGNS = ((1, -1), (-1, 1))


@lru_cache(maxsize=None)
def _rules(kind: str, degree: int | None = None):
    """List of ``(name, lhs, rhs, direction)`` rewrite rules of a kind."""
    out = []
    if kind == "R1-":
        for side in (0, 1):
            for over in (0, 1):
                lhs = _kink(side, over)
                out.append(((side, over), lhs, Pattern((), (), (), (("P", "Q"),)), -1))
    elif kind == "R2-":
        for over in (0, 1):
            out.append(((over,), _bigon(over),
                        Pattern((), (), (), (("p", "p'"), ("q", "q'"))), -1))
    elif kind == "R3":
        for config in (0, 1):
            for hs in itertools.permutations(range(3)):
                out.append(((config, hs), _triangle(config, hs), _triangle(1 - config, hs), 1))
    elif kind == "R4":
        k = degree
        for m in range(1, k + 1):
            for over in (0, 1):
                lhs = _vertex_strand(k, 0, m, over)
                rhs = _vertex_strand(k, m % k if k else 0, k - m, over, sa="Sb", sb="Sa")
                out.append(((m, over), lhs, rhs, 1 if k - m > m else -1))
    elif kind == "R5":
        k = degree
        for m in range(0, k + 1):
            for et, eb in R5_SIGNS:
                if _r5_allowed(k, m):
                    lhs, rhs = _twisted_vertex(k, m, et, eb)
                    out.append(((m, et, eb, "untwist"), lhs, rhs, -1))
                    out.append(((m, et, eb, "twist"), rhs, lhs, 1))
    elif kind == "R6":
        k = degree
        if k >= 2:
            for eps in (1, -1):
                lhs, rhs = _vertex_swap(k, eps)
                out.append(((eps, "untwist"), lhs, rhs, -1))
                out.append(((eps, "twist"), rhs, lhs, 1))
    return out


def _r5_allowed(k: int, m: int) -> bool:
    # balanced splits: both half twists carry the same number of crossings
    if k < 3:
        return False
    a, b = m * (m - 1) // 2, (k - m) * (k - m - 1) // 2
    return a == b and a > 0


# ---------------------------------------------------------------------------
# matching


def _match(d: GraphoidDiagram, pat: Pattern, anchor_site: int, offset: int):
    """Map pattern site 0 onto ``anchor_site`` rotated by ``offset`` and
    propagate along internal edges.  Returns the half-edge map or None."""
    if not pat.sites:
        return None
    p_where = {h: (i, j) for i, s in enumerate(pat.sites) for j, h in enumerate(s.rot)}
    p_partner = {}
    for a, b in pat.pairs:
        p_partner[a] = b
        p_partner[b] = a
    site_map: dict[int, tuple[int, int]] = {}
    used = set()

    def bind(pi, di, off):
        ps, ds = pat.sites[pi], d.sites[di]
        if ps.kind != ds.kind or ps.degree != ds.degree:
            return False
        if ps.kind == CROSSING and off % 2:
            return False
        if pi in site_map:
            return site_map[pi] == (di, off % max(ds.degree, 1))
        if di in used:
            return False
        site_map[pi] = (di, off % max(ds.degree, 1))
        used.add(di)
        return True

    if not bind(0, anchor_site, offset):
        return None
    hmap = {}
    queue = [0]
    while queue:
        pi = queue.pop()
        di, off = site_map[pi]
        ps, ds = pat.sites[pi], d.sites[di]
        n = ps.degree
        for j, ph in enumerate(ps.rot):
            dh = ds.rot[(j + off) % n]
            hmap[ph] = dh
            if ph in p_partner:
                pq = p_partner[ph]
                qi, qj = p_where[pq]
                dq = d.partner[dh]
                ti, tj = d.where(dq)
                known = qi in site_map
                if not bind(qi, ti, tj - qj):
                    return None
                if not known:
                    queue.append(qi)
    if len(site_map) != len(pat.sites):
        return None
    # internal edges must land on diagram edges (checked by propagation), ports are free
    for a, b in pat.pairs:
        if d.partner[hmap[a]] != hmap[b]:
            return None
    return site_map, hmap


def _vertex_slots(pat: Pattern) -> list[str] | None:
    """Port label reached from each slot of the pattern's only flat vertex,
    going straight through crossings; None unless there is exactly one."""
    flats = [s for s in pat.sites if s.kind == FLAT]
    if len(flats) != 1:
        return None
    port = {h: lab for lab, h in pat.ports}
    partner = {}
    for a, b in pat.pairs:
        partner[a], partner[b] = b, a
    where = {h: (s, j) for s in pat.sites for j, h in enumerate(s.rot)}
    out = []
    for h in flats[0].rot:
        while h not in port:
            s, j = where[partner[h]]
            h = s.rot[(j + 2) % 4]
        out.append(port[h])
    return out


def _rewrite(d: GraphoidDiagram, lhs: Pattern, rhs: Pattern, hmap: dict, site_map: dict) -> GraphoidDiagram:
    drop = [di for di, _ in site_map.values()]
    old_port = {lab: hmap[h] for lab, h in lhs.ports}
    if lhs.direct:
        raise DiagramError("bad-pattern", "left-hand sides cannot have direct ports")
    start = None
    ls, rs = _vertex_slots(lhs), _vertex_slots(rhs)
    if ls is not None and rs is not None:
        # keep the vertex's first slot on the same strand so rigid vertices stay framed
        vi = next(i for i, x in enumerate(lhs.sites) if x.kind == FLAT)
        k = lhs.sites[vi].degree
        off = site_map[vi][1]
        start = rs.index(ls[-off % k])
    return _glue(d, drop, old_port, rhs, cut=(), vertex_start=start)


def _glue(d, drop, old_port, rhs: Pattern, cut, vertex_start=None):
    shift = max([0, *d.half_edges(), *d.partner])
    ren = lambda h: h + shift
    new_sites = []
    for x in rhs.sites:
        rot = tuple(ren(h) for h in x.rot)
        if x.kind == FLAT and vertex_start:
            rot = rot[vertex_start:] + rot[:vertex_start]
        new_sites.append(Site(x.kind, rot))
    joins = [(ren(a), ren(b)) for a, b in rhs.pairs]
    for lab, h in rhs.ports:
        joins.append((old_port[lab], ren(h)))
    for a, b in rhs.direct:
        joins.append((old_port[a], old_port[b]))
    return d.splice(drop=drop, new_sites=new_sites, joins=joins, cut=cut)


# ---------------------------------------------------------------------------
# enumeration


def _pattern_moves(d: GraphoidDiagram, kind: str):
    seen = set()
    if kind in ("R4", "R5", "R6"):
        degrees = sorted({s.degree for s in d.sites if s.kind == FLAT})
        rule_sets = [(_rules(kind, k), k) for k in degrees]
    else:
        rule_sets = [(_rules(kind), None)]
    for rules, k in rule_sets:
        for ri, (name, lhs, rhs, direction) in enumerate(rules):
            if not lhs.sites:
                continue
            a_kind, a_deg = lhs.sites[0].kind, lhs.sites[0].degree
            for i, s in enumerate(d.sites):
                if s.kind != a_kind or s.degree != a_deg:
                    continue
                for off in range(max(a_deg, 1)):
                    m = _match(d, lhs, i, off)
                    if m is None:
                        continue
                    site_map, hmap = m
                    # symmetric patterns match one spot several ways; keep one per outcome
                    try:
                        out = _rewrite(d, lhs, rhs, hmap, site_map).canonical()
                    except DiagramError:
                        continue
                    key = (frozenset(di for di, _ in site_map.values()), out)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield MoveSite(kind, ("match", k, ri, i, off), direction)


def _r1_insertions(d: GraphoidDiagram):
    for a, b in d.edges():
        for h in (a, b):
            for side in (0, 1):
                for over in (0, 1):
                    yield MoveSite("R1+", ("edge", h, side, over), 1)


def _r2_insertions(d: GraphoidDiagram):
    fd = faces(d)
    for walk in fd.walks:
        for x, y in itertools.permutations(walk, 2):
            if d.edge_id(x) == d.edge_id(y):
                continue
            for over in (0, 1):
                yield MoveSite("R2+", ("darts", x, y, over), 1)


def _r4_insertions(d: GraphoidDiagram):
    fd = faces(d)
    fof = face_of_dart(fd.walks)
    for vi, s in enumerate(d.sites):
        if s.kind != FLAT or s.degree < 2:
            continue
        for pos, hv in enumerate(s.rot):
            walk = fd.walks[fof[hv]]
            for g in walk:
                for over in (0, 1):
                    yield MoveSite("R4", ("corner", vi, pos, g, over), 1)


def enumerate_moves(d: GraphoidDiagram, kinds=ALL_KINDS) -> list[MoveSite]:
    """All applicable move sites of the requested kinds."""
    out = []
    kinds = set(kinds)
    if "R1+" in kinds:
        out.extend(_r1_insertions(d))
    if "R2+" in kinds:
        out.extend(_r2_insertions(d))
    if "R4" in kinds:
        out.extend(_r4_insertions(d))
    for kind in ("R1-", "R2-", "R3", "R4", "R5", "R6"):
        if kind in kinds:
            out.extend(_pattern_moves(d, kind))
    return out


def kink_shape(m: MoveSite) -> tuple[int, int]:
    """``(side, over)`` of the kink an R1 move inserts or removes."""
    if m.kind == "R1+":
        return tuple(m.location[2:])
    if m.kind == "R1-":
        return _rules("R1-")[m.location[2]][0]
    raise ValueError(f"{m.kind} is not an R1 move")


# ---------------------------------------------------------------------------
# application


def apply_move(d: GraphoidDiagram, m: MoveSite) -> GraphoidDiagram:
    loc = m.location
    try:
        tag = loc[0]
        if tag == "match":
            _, k, ri, i, off = loc
            name, lhs, rhs, _ = _rules(m.kind, k)[ri]
            got = _match(d, lhs, i, off)
            if got is None:
                raise DiagramError("inapplicable-move", f"{m.kind} does not match at site {i}")
            site_map, hmap = got
            return _rewrite(d, lhs, rhs, hmap, site_map)
        if tag == "edge" and m.kind == "R1+":
            _, h, side, over = loc
            g = d.partner[h]
            return _glue(d, [], {"P": h, "Q": g}, _kink(side, over), cut=[(h, g)])
        if tag == "darts" and m.kind == "R2+":
            _, x, y, over = loc
            fd = faces(d)
            fof = face_of_dart(fd.walks)
            if fof[x] != fof[y] or d.edge_id(x) == d.edge_id(y):
                raise DiagramError("inapplicable-move", "darts not on a common face")
            px, py = d.partner[x], d.partner[y]
            ports = {"p": px, "p'": x, "q": py, "q'": y}
            return _glue(d, [], ports, _bigon(over), cut=[(x, px), (y, py)])
        if tag == "corner" and m.kind == "R4":
            _, vi, pos, g, over = loc
            s = d.sites[vi]
            if s.kind != FLAT:
                raise DiagramError("inapplicable-move", "R4 needs a flat vertex")
            fd = faces(d)
            fof = face_of_dart(fd.walks)
            if fof[g] != fof[s.rot[pos]]:
                raise DiagramError("inapplicable-move", "strand not on the corner face")
            k = s.degree
            rhs = _vertex_strand(k, 0, k, over, sa="Sb", sb="Sa")
            # pattern slot j is the vertex's slot pos + j; the vertex keeps its first slot
            old_port = {f"E{j}": s.rot[(pos + j) % k] for j in range(k)}
            old_port.update({"Sb": g, "Sa": d.partner[g]})
            return _glue(d, [vi], old_port, rhs, cut=[(g, d.partner[g])], vertex_start=-pos % k)
    except (KeyError, IndexError, ValueError) as exc:
        if isinstance(exc, DiagramError):
            raise
        raise DiagramError("inapplicable-move", f"{m.kind} at {loc}: {exc}") from None
    raise DiagramError("inapplicable-move", f"unknown move location {loc!r}")


def random_move(d: GraphoidDiagram, rng: random.Random, kinds=ALL_KINDS) -> tuple[MoveSite, GraphoidDiagram] | None:
    ms = enumerate_moves(d, kinds)
    if not ms:
        return None
    m = rng.choice(ms)
    return m, apply_move(d, m)


# ---------------------------------------------------------------------------
# search


@dataclass
class SearchVerdict:
    verdict: str                 # "equivalent-with-path" | "not-found"
    reason: str                  # "path", "budget-exhausted", "search-space-exhausted", "invariant-distinguishes"
    path: list[MoveSite] | None = None
    explored: int = 0

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "path": None if self.path is None else [m.script() for m in self.path],
            "explored": self.explored,
        }


def _invariant_obstruction(d1, d2, kinds) -> bool:
    from .yamada import yamada

    if "R6" in kinds and any(s.kind == FLAT and s.degree >= 4 for s in (*d1.sites, *d2.sites)):
        return False
    try:
        r1, r2 = yamada(d1), yamada(d2)
    except Exception:
        return False
    return r1.unit_normalized() != r2.unit_normalized()


def search_equivalent(d1: GraphoidDiagram, d2: GraphoidDiagram, max_crossings: int = 4,
                      max_steps: int = 4, kinds=ALL_KINDS, max_nodes: int = 20000) -> SearchVerdict:
    """Bidirectional breadth-first search through the move graph.

    ``max_steps`` bounds the path length, ``max_crossings`` every
    intermediate diagram, ``max_nodes`` the number of visited diagrams.  A
    ``not-found`` verdict is never a proof of inequivalence unless its
    reason is ``invariant-distinguishes``.
    """
    kinds = tuple(kinds)
    if d1.canonical() == d2.canonical():
        return SearchVerdict("equivalent-with-path", "path", [], 1)
    if _invariant_obstruction(d1, d2, kinds):
        return SearchVerdict("not-found", "invariant-distinguishes", None, 0)
    # each side stores diagram keyed by canonical form -> (parent key, move, diagram)
    sides = [{d1.canonical(): (None, None, d1)}, {d2.canonical(): (None, None, d2)}]
    fronts = [[d1.canonical()], [d2.canonical()]]
    depth = [0, 0]
    explored = 2
    exhausted = False
    while depth[0] + depth[1] < max_steps:
        s = 0 if len(fronts[0]) <= len(fronts[1]) else 1
        if not fronts[s]:
            s = 1 - s
            if not fronts[s]:
                return SearchVerdict("not-found", "search-space-exhausted", None, explored)
        nxt = []
        for key in fronts[s]:
            d = sides[s][key][2]
            for m in enumerate_moves(d, kinds):
                if m.kind in ("R1+", "R2+") or (m.kind == "R4" and m.location[0] == "corner"):
                    extra = {"R1+": 1, "R2+": 2}.get(m.kind) or d.sites[m.location[1]].degree
                    if d.crossing_count + extra > max_crossings:
                        continue
                try:
                    e = apply_move(d, m)
                except DiagramError:
                    continue
                if e.crossing_count > max_crossings:
                    continue
                ek = e.canonical()
                if ek in sides[s]:
                    continue
                sides[s][ek] = (key, m, e)
                explored += 1
                if ek in sides[1 - s]:
                    return SearchVerdict("equivalent-with-path", "path",
                                         _join_paths(sides, ek, s), explored)
                nxt.append(ek)
                if explored >= max_nodes:
                    exhausted = True
                    break
            if exhausted:
                break
        if exhausted:
            return SearchVerdict("not-found", "budget-exhausted", None, explored)
        fronts[s] = nxt
        depth[s] += 1
    return SearchVerdict("not-found", "budget-exhausted", None, explored)


def _join_paths(sides, meet, s):
    def chain(side, key):
        out = []
        while True:
            parent, m, _ = side[key]
            if parent is None:
                return out
            out.append((parent, m, key))
            key = parent

    a = chain(sides[0], meet)[::-1]
    b = chain(sides[1], meet)
    path = [m for _, m, _ in a]
    # moves found from the d2 side are replayed backwards: find inverse moves
    cur_key = meet
    cur = sides[0][meet][2] if meet in sides[0] else sides[1][meet][2]
    for parent, m, key in b:
        target = sides[1][parent][2]
        inv = _find_move_to(cur, target)
        if inv is None:
            raise RuntimeError(f"could not invert {m} on the return path")
        path.append(inv)
        cur = apply_move(cur, inv)
        cur_key = parent
    del cur_key
    return path


def _find_move_to(d: GraphoidDiagram, target: GraphoidDiagram):
    tk = target.canonical()
    for m in enumerate_moves(d):
        try:
            if apply_move(d, m).canonical() == tk:
                return m
        except DiagramError:
            continue
    return None


def replay(d: GraphoidDiagram, path: list[MoveSite]) -> GraphoidDiagram:
    for m in path:
        d = apply_move(d, m)
    return d


def parse_script(line: str) -> MoveSite:
    """Inverse of :meth:`MoveSite.script`."""
    toks = line.split()
    kind = toks[0]

    def conv(t):
        try:
            return int(t)
        except ValueError:
            return t

    stack = [[]]
    for t in toks[1:]:
        if t == "(":
            stack.append([])
        elif t == ")":
            inner = tuple(stack.pop())
            stack[-1].append(inner)
        else:
            stack[-1].append(conv(t))
    loc = tuple(stack[0])
    if loc and loc[0] == "match" and loc[1] == "None":
        loc = (loc[0], None, *loc[2:])
    return MoveSite(kind, loc)
