"""Abstract graphoid diagrams: ribbon graphs with crossing decorations.

A diagram is a set of *sites* (flat vertices, classical crossings, the head,
the tail, and free ends created by local replacements) whose half-edges are
listed in counterclockwise rotation order, together with a perfect matching
of half-edges into edges.  Virtual crossings are never stored: the rotation
system already records the surface the diagram lives on.

Vertexless closed curves (which arise from smoothings and closures) are kept
as a bare counter ``loops``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

FLAT, CROSSING, HEAD, TAIL, END = "V", "X", "H", "T", "E"
ENDPOINT_KINDS = (HEAD, TAIL, END)


class DiagramError(ValueError):
    """Invalid diagram; ``code`` is a stable machine-readable tag."""

    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


@dataclass(frozen=True)
class Site:
    kind: str
    rot: tuple[int, ...]

    @staticmethod
    def crossing(rot: Sequence[int], over_pair: Iterable[int]) -> "Site":
        """Build a crossing; ``over_pair`` names the two over half-edges.

        The stored rotation is shifted so the over-strand sits at positions
        1 and 3 (the ``X(a,b,c,d)`` convention: a-c under, b-d over).
        """
        rot = tuple(rot)
        over = set(over_pair)
        if len(rot) != 4 or len(over) != 2 or not over <= set(rot):
            raise DiagramError("bad-over-pair", f"{rot} / {sorted(over)}")
        if over == {rot[1], rot[3]}:
            return Site(CROSSING, rot)
        if over == {rot[0], rot[2]}:
            return Site(CROSSING, rot[1:] + rot[:1])
        raise DiagramError("bad-over-pair", f"{sorted(over)} is not an opposite pair of {rot}")

    @property
    def degree(self) -> int:
        return len(self.rot)

    @property
    def over_pair(self) -> tuple[int, int]:
        return (self.rot[1], self.rot[3])

    @property
    def under_pair(self) -> tuple[int, int]:
        return (self.rot[0], self.rot[2])


class GraphoidDiagram:
    """Immutable abstract diagram.

    Parameters
    ----------
    sites : sequence of Site
    pairs : iterable of (h, h') half-edge pairs forming the edges
    loops : number of vertexless circle components
    """

    __slots__ = ("sites", "partner", "loops", "name", "_where", "_canon")

    def __init__(self, sites: Sequence[Site], pairs: Iterable[tuple[int, int]], loops: int = 0,
                 name: str = ""):
        self.sites = tuple(sites)
        partner: dict[int, int] = {}
        for a, b in pairs:
            if a in partner or b in partner or a == b:
                raise DiagramError("duplicate-half-edge", f"half-edge in two edges: {a}, {b}")
            partner[a] = b
            partner[b] = a
        self.partner = partner
        self.loops = int(loops)
        self.name = name
        where: dict[int, tuple[int, int]] = {}
        for i, s in enumerate(self.sites):
            for j, h in enumerate(s.rot):
                if h in where:
                    raise DiagramError("duplicate-half-edge", f"half-edge {h} appears twice")
                where[h] = (i, j)
        self._where = where
        self._canon = None

    # basic queries
    def where(self, h: int) -> tuple[int, int]:
        return self._where[h]

    def site_of(self, h: int) -> Site:
        return self.sites[self._where[h][0]]

    def succ(self, h: int) -> int:
        """Counterclockwise successor of ``h`` at its site."""
        i, j = self._where[h]
        rot = self.sites[i].rot
        return rot[(j + 1) % len(rot)]

    def pred(self, h: int) -> int:
        i, j = self._where[h]
        rot = self.sites[i].rot
        return rot[(j - 1) % len(rot)]

    def opposite(self, h: int) -> int:
        i, j = self._where[h]
        rot = self.sites[i].rot
        return rot[(j + 2) % 4]

    def half_edges(self) -> list[int]:
        return [h for s in self.sites for h in s.rot]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a, b in self.partner.items() if a < b)

    def edge_id(self, h: int) -> int:
        return min(h, self.partner[h])

    def indices(self, kind: str) -> list[int]:
        return [i for i, s in enumerate(self.sites) if s.kind == kind]

    @property
    def crossing_count(self) -> int:
        return sum(1 for s in self.sites if s.kind == CROSSING)

    @property
    def has_endpoints(self) -> bool:
        return any(s.kind in (HEAD, TAIL) for s in self.sites)

    def head(self) -> int | None:
        for i, s in enumerate(self.sites):
            if s.kind == HEAD:
                return i
        return None

    def tail(self) -> int | None:
        for i, s in enumerate(self.sites):
            if s.kind == TAIL:
                return i
        return None

    def fresh(self, n: int, avoid: Iterable[int] = ()) -> list[int]:
        top = max([0, *self._where, *self.partner, *avoid])
        return list(range(top + 1, top + 1 + n))

    def __len__(self):
        return len(self.sites)

    def __repr__(self):
        from .codec import serialize

        return f"GraphoidDiagram({serialize(self, header=False)!r})"

    # validation
    def validate(self, allow_free_ends: bool = False) -> None:
        for h in self._where:
            if h not in self.partner:
                raise DiagramError("unmatched-half-edge", f"half-edge {h} has no partner")
        for h in self.partner:
            if h not in self._where:
                raise DiagramError("unmatched-half-edge", f"paired half-edge {h} belongs to no site")
        for s in self.sites:
            if s.kind == CROSSING:
                if len(s.rot) != 4:
                    raise DiagramError("bad-over-pair", f"crossing with rotation {s.rot}")
            elif s.kind in ENDPOINT_KINDS:
                if len(s.rot) != 1:
                    raise DiagramError("endpoint-count", f"endpoint of degree {len(s.rot)}")
            elif s.kind != FLAT:
                raise DiagramError("bad-site", f"unknown site kind {s.kind!r}")
        nh = sum(1 for s in self.sites if s.kind == HEAD)
        nt = sum(1 for s in self.sites if s.kind == TAIL)
        if (nh, nt) not in ((0, 0), (1, 1)):
            raise DiagramError("endpoint-count", f"{nh} heads and {nt} tails")
        if not allow_free_ends and any(s.kind == END for s in self.sites):
            raise DiagramError("endpoint-count", "free ends are only allowed in multi-graphoids")

    # rewriting
    def splice(self, drop: Iterable[int] = (), new_sites: Sequence[Site] = (),
               joins: Iterable[tuple[int, int]] = (), cut: Iterable[tuple[int, int]] = (),
               name: str | None = None) -> "GraphoidDiagram":
        """Remove sites, add sites, and reconnect.

        Every half-edge of a dropped site (and any id mentioned only in
        ``joins``) becomes a connector.  Links are the old edges (minus
        ``cut``) plus ``joins``; each maximal chain of links between two
        half-edges of surviving sites becomes an edge, and closed chains made
        only of connectors become free loops.
        """
        drop = set(drop)
        kept = [s for i, s in enumerate(self.sites) if i not in drop] + list(new_sites)
        alive = {h for s in kept for h in s.rot}
        cutset = {frozenset(c) for c in cut}
        adj: dict[int, list[int]] = defaultdict(list)
        for a, b in self.partner.items():
            if a < b and frozenset((a, b)) not in cutset:
                adj[a].append(b)
                adj[b].append(a)
        for a, b in joins:
            adj[a].append(b)
            adj[b].append(a)
        seen: set[int] = set()
        pairs = []
        for h in sorted(alive):
            if h in seen:
                continue
            if len(adj[h]) != 1:
                raise DiagramError("unmatched-half-edge", f"half-edge {h} has {len(adj[h])} links")
            seen.add(h)
            prev, cur = h, adj[h][0]
            while cur not in alive:
                if len(adj[cur]) != 2:
                    raise DiagramError("unmatched-half-edge", f"connector {cur} has {len(adj[cur])} links")
                seen.add(cur)
                a, b = adj[cur]
                nxt = b if a == prev else a
                if a == b == prev:
                    nxt = a
                prev, cur = cur, nxt
            seen.add(cur)
            pairs.append((h, cur))
        loops = self.loops
        for h in list(adj):
            if h in seen or h in alive:
                continue
            comp, stack, cyc = set(), [h], True
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                if len(adj[x]) != 2:
                    cyc = False
                stack.extend(adj[x])
            seen |= comp
            if cyc:
                loops += 1
        return GraphoidDiagram(kept, pairs, loops, self.name if name is None else name)

    def with_loops(self, loops: int) -> "GraphoidDiagram":
        return GraphoidDiagram(self.sites, self.edges(), loops, self.name)

    def loops_as_vertices(self) -> "GraphoidDiagram":
        """Replace each free circle by a degree-2 flat vertex carrying a loop."""
        if not self.loops:
            return self
        ids = self.fresh(2 * self.loops)
        sites = list(self.sites)
        pairs = self.edges()
        for k in range(self.loops):
            a, b = ids[2 * k], ids[2 * k + 1]
            sites.append(Site(FLAT, (a, b)))
            pairs.append((a, b))
        return GraphoidDiagram(sites, pairs, 0, self.name)

    def relabeled(self) -> "GraphoidDiagram":
        """Same diagram with half-edges renumbered 1..2E in site order."""
        m = {h: k + 1 for k, h in enumerate(self.half_edges())}
        sites = [Site(s.kind, tuple(m[h] for h in s.rot)) for s in self.sites]
        return GraphoidDiagram(sites, [(m[a], m[b]) for a, b in self.edges()], self.loops, self.name)

    def mirror_surface(self) -> "GraphoidDiagram":
        """Reverse every rotation (orientation-reversing map of the surface)."""
        sites = []
        for s in self.sites:
            if s.kind == CROSSING:
                sites.append(Site.crossing(tuple(reversed(s.rot)), s.over_pair))
            else:
                sites.append(Site(s.kind, tuple(reversed(s.rot))))
        return GraphoidDiagram(sites, self.edges(), self.loops, self.name)

    def crossing_mirror(self) -> "GraphoidDiagram":
        """Switch over and under at every crossing."""
        sites = [Site.crossing(s.rot, s.under_pair) if s.kind == CROSSING else s for s in self.sites]
        return GraphoidDiagram(sites, self.edges(), self.loops, self.name)

    def disjoint_union(self, other: "GraphoidDiagram") -> "GraphoidDiagram":
        shift = max([0, *self._where])
        sites = list(self.sites) + [Site(s.kind, tuple(h + shift for h in s.rot)) for s in other.sites]
        pairs = self.edges() + [(a + shift, b + shift) for a, b in other.edges()]
        return GraphoidDiagram(sites, pairs, self.loops + other.loops)

    def normalized(self) -> "GraphoidDiagram":
        """Remove degree-2 flat vertices (an edge with a bivalent vertex is the same edge)."""
        drop = [i for i, s in enumerate(self.sites) if s.kind == FLAT and s.degree == 2]
        if not drop:
            return self
        joins = [self.sites[i].rot for i in drop]
        return self.splice(drop=drop, joins=joins)

    # canonical form
    def canonical(self) -> tuple:
        """Canonical code; equal iff the diagrams are isomorphic.

        Isomorphisms map sites to sites of the same kind, preserve the
        pairing, and preserve every rotation up to cyclic shift (and the
        over-strand at crossings).  Orientation of the surface is kept.
        """
        if self._canon is None:
            comps = _components(self)
            codes = sorted(_component_code(self, comp) for comp in comps)
            self._canon = (self.loops, tuple(codes))
        return self._canon

    def __eq__(self, other):
        return isinstance(other, GraphoidDiagram) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())


def _components(d: GraphoidDiagram) -> list[list[int]]:
    parent = list(range(len(d.sites)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in d.partner.items():
        ra, rb = find(d.where(a)[0]), find(d.where(b)[0])
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[int]] = defaultdict(list)
    for i in range(len(d.sites)):
        groups[find(i)].append(i)
    return list(groups.values())


def _site_tag(s: Site, offset: int) -> str:
    if s.kind == CROSSING:
        return "X%d" % ((1 - offset) % 2)
    return s.kind + str(s.degree)


def _component_code(d: GraphoidDiagram, comp: list[int]) -> tuple:
    # candidate starts: sites with the rarest tag in the component
    tags = defaultdict(list)
    for i in comp:
        tags[(d.sites[i].kind, d.sites[i].degree)].append(i)
    starts = min(tags.values(), key=lambda v: (len(v), d.sites[v[0]].kind, d.sites[v[0]].degree))
    best = None
    for s0 in starts:
        deg = d.sites[s0].degree
        for off in range(max(deg, 1)):
            code = _bfs_code(d, s0, off)
            if best is None or code < best:
                best = code
    return best


def _bfs_code(d: GraphoidDiagram, s0: int, off0: int) -> tuple:
    order = {s0: 0}
    offs = {s0: off0}
    queue = [s0]
    out = []
    k = 0
    while k < len(queue):
        i = queue[k]
        k += 1
        s = d.sites[i]
        off = offs[i]
        n = s.degree
        row = [_site_tag(s, off)]
        for t in range(n):
            h = s.rot[(off + t) % n]
            p = d.partner[h]
            j, pos = d.where(p)
            if j not in order:
                order[j] = len(queue)
                offs[j] = pos
                queue.append(j)
            nj = d.sites[j].degree
            row.append((order[j], (pos - offs[j]) % nj))
        out.append(tuple(row))
    return tuple(out)


def isomorphic(d1: GraphoidDiagram, d2: GraphoidDiagram, allow_reflection: bool = False) -> bool:
    if d1.canonical() == d2.canonical():
        return True
    return allow_reflection and d1.mirror_surface().canonical() == d2.canonical()


def validate(d: GraphoidDiagram) -> None:
    d.validate()


# ---------------------------------------------------------------------------
# abstract multigraphs


class AbstractGraph:
    """Multigraph on vertices ``0..n-1``; loops and parallel edges allowed."""

    __slots__ = ("n", "edges", "tags")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), tags: dict | None = None):
        self.n = n
        self.edges = [tuple(e) for e in edges]
        self.tags = dict(tags or {})
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")

    def __repr__(self):
        return f"AbstractGraph(n={self.n}, edges={self.edges})"

    def add_vertex(self, tag=None) -> int:
        self.n += 1
        if tag is not None:
            self.tags[self.n - 1] = tag
        return self.n - 1

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def subgraph(self, edge_indices: Iterable[int]) -> "AbstractGraph":
        return AbstractGraph(self.n, [self.edges[i] for i in edge_indices], self.tags)

    def euler_characteristic(self) -> int:
        return self.n - len(self.edges)


def components(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Union-find labels for each vertex."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return [find(x) for x in range(n)]


def betti(g: AbstractGraph) -> tuple[int, int]:
    b0 = len(set(components(g.n, g.edges)))
    return b0, len(g.edges) - g.n + b0


def _strand_graph(d: GraphoidDiagram, vertex_sites: list[int], through: dict[int, int],
                  extra_vertices: int = 0) -> AbstractGraph:
    """Graph whose vertices are ``vertex_sites`` and whose edges are the chains
    of diagram edges joined by the ``through`` links of dissolved sites.
    Closed chains become a fresh vertex with a loop."""
    vid = {i: k for k, i in enumerate(vertex_sites)}
    g = AbstractGraph(len(vertex_sites) + extra_vertices)
    seen = set()
    for i in vertex_sites:
        for h in d.sites[i].rot:
            if h in seen:
                continue
            seen.add(h)
            cur = d.partner[h]
            while d.where(cur)[0] not in vid:
                seen.add(cur)
                nxt = through[cur]
                seen.add(nxt)
                cur = d.partner[nxt]
            seen.add(cur)
            g.edges.append((vid[i], vid[d.where(cur)[0]]))
    for h in through:
        if h in seen:
            continue
        cur = h
        while cur not in seen:
            seen.add(cur)
            nxt = through[cur]
            seen.add(nxt)
            cur = d.partner[nxt]
        v = g.add_vertex()
        g.edges.append((v, v))
    for _ in range(d.loops):
        v = g.add_vertex()
        g.edges.append((v, v))
    return g


def underlying_graph(d: GraphoidDiagram) -> AbstractGraph:
    """Graph of the diagram with every crossing dissolved into two strands."""
    vs = [i for i, s in enumerate(d.sites) if s.kind != CROSSING]
    through = {}
    for s in d.sites:
        if s.kind == CROSSING:
            a, b, c, e = s.rot
            through.update({a: c, c: a, b: e, e: b})
    return _strand_graph(d, vs, through)


def shadow_graph(d: GraphoidDiagram) -> AbstractGraph:
    """Projection graph: crossings become 4-valent vertices."""
    return _strand_graph(d, list(range(len(d.sites))), {})


# ---------------------------------------------------------------------------
# ribbon surface


@dataclass
class FaceData:
    walks: list[list[int]]
    vertices: int
    edges: int
    faces: int
    components: int

    @property
    def euler_characteristic(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def genus(self) -> int:
        return (2 * self.components - self.euler_characteristic) // 2


def _trace(d: GraphoidDiagram, allowed: set[int] | None) -> list[list[int]]:
    """Boundary walks of the ribbon graph on the half-edges in ``allowed``.

    A walk leaves a site along a half-edge, arrives at its partner, and
    leaves that site by the next allowed half-edge counterclockwise.
    """
    def nxt(h):
        p = d.partner[h]
        q = d.succ(p)
        while allowed is not None and q not in allowed:
            q = d.succ(q)
        return q

    darts = d.half_edges() if allowed is None else [h for h in d.half_edges() if h in allowed]
    seen = set()
    walks = []
    for h in darts:
        if h in seen:
            continue
        walk = []
        cur = h
        while cur not in seen:
            seen.add(cur)
            walk.append(cur)
            cur = nxt(cur)
        walks.append(walk)
    return walks


def faces(d: GraphoidDiagram) -> FaceData:
    """Face tracing of the rotation system.

    Vertices are the sites; each free circle counts as one vertex with one
    loop (an annulus, two faces); an isolated site contributes one face.
    """
    walks = _trace(d, None)
    isolated = sum(1 for s in d.sites if s.degree == 0)
    return FaceData(
        walks=walks,
        vertices=len(d.sites) + d.loops,
        edges=len(d.partner) // 2 + d.loops,
        faces=len(walks) + isolated + 2 * d.loops,
        components=len(_components(d)) + d.loops,
    )


def genus(d: GraphoidDiagram) -> int:
    return faces(d).genus


def boundary_components(d: GraphoidDiagram, marked: Iterable[int] | None = None) -> int:
    """Boundary components of the ribbon surface made of all site disks and
    the bands of the ``marked`` edges (given by either half-edge id).

    ``marked=None`` keeps every edge.  Free circles count as annuli.
    """
    if marked is None:
        allowed = None
    else:
        allowed = set()
        for h in marked:
            allowed.add(h)
            allowed.add(d.partner[h])
    walks = _trace(d, allowed)
    bare = sum(1 for s in d.sites if allowed is None and s.degree == 0
               or allowed is not None and not any(h in allowed for h in s.rot))
    return len(walks) + bare + 2 * d.loops


def face_of_dart(walks: list[list[int]]) -> dict[int, int]:
    return {h: k for k, w in enumerate(walks) for h in w}


def bridges(g: AbstractGraph) -> set[int]:
    """Indices of cut edges of a multigraph (iterative Tarjan; loops never qualify)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for k, (u, v) in enumerate(g.edges):
        if u == v:
            continue
        adj[u].append((v, k))
        adj[v].append((u, k))
    pre = [-1] * g.n
    low = [0] * g.n
    out: set[int] = set()
    cnt = 0
    for root in range(g.n):
        if pre[root] != -1:
            continue
        pre[root] = low[root] = cnt
        cnt += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for w, k in it:
                if k == via:
                    continue
                if pre[w] == -1:
                    pre[w] = low[w] = cnt
                    cnt += 1
                    stack.append((w, k, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], pre[w])
            if not advanced:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > pre[u]:
                        out.add(via)
    return out
