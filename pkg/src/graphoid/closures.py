"""Joining the head to the tail: virtual, underpass and overpass closures."""

from __future__ import annotations

from collections import deque

from .diagram import DiagramError, GraphoidDiagram, Site, face_of_dart, faces


def _endpoints(d: GraphoidDiagram) -> tuple[int, int]:
    h, t = d.head(), d.tail()
    if h is None or t is None:
        raise DiagramError("already-closed", "diagram has no head/tail to close")
    return h, t


def virtual_closure(d: GraphoidDiagram) -> GraphoidDiagram:
    """Delete head and tail and pair their half-edges.

    In the ribbon encoding the connecting arc needs no virtual crossings, so
    the result does not depend on how the arc would be drawn.
    """
    h, t = _endpoints(d)
    return d.splice(drop=[h, t], joins=[(d.sites[h].rot[0], d.sites[t].rot[0])])


def closed(d: GraphoidDiagram) -> GraphoidDiagram:
    """Virtual closure of a graphoid; closed diagrams pass through."""
    return virtual_closure(d) if d.has_endpoints else d


def dual_paths(d: GraphoidDiagram):
    """All shortest face paths from the head's face to the tail's face.

    Yields lists of darts; each dart ``x`` is crossed from the face on its
    right (the face containing ``x``) to the face containing ``partner(x)``.
    """
    h, t = _endpoints(d)
    fd = faces(d)
    if fd.genus > 0:
        raise DiagramError("not-classical-planar", f"rotation system has genus {fd.genus}")
    fof = face_of_dart(fd.walks)
    src = fof[d.sites[h].rot[0]]
    dst = fof[d.sites[t].rot[0]]
    nbrs: dict[int, list[tuple[int, int]]] = {}
    for x, f in sorted(fof.items()):
        g = fof[d.partner[x]]
        if g != f:
            nbrs.setdefault(f, []).append((x, g))
    dist = {src: 0}
    q = deque([src])
    while q:
        f = q.popleft()
        for _, g in nbrs.get(f, []):
            if g not in dist:
                dist[g] = dist[f] + 1
                q.append(g)

    def walk(f, acc):
        if f == dst:
            yield list(acc)
            return
        for x, g in nbrs.get(f, []):
            if dist.get(g) == dist[f] + 1 and dist[g] <= dist[dst]:
                acc.append(x)
                yield from walk(g, acc)
                acc.pop()

    yield from walk(src, [])


def _shortcut(d: GraphoidDiagram, path: list[int], under: bool) -> GraphoidDiagram:
    h, t = _endpoints(d)
    hh, th = d.sites[h].rot[0], d.sites[t].rot[0]
    n = len(path)
    ids = d.fresh(4 * n)
    new_sites, joins, cut = [], [], []
    prev = hh
    for k, x in enumerate(path):
        sc_in, over_y, sc_out, over_x = ids[4 * k: 4 * k + 4]
        rot = (sc_in, over_y, sc_out, over_x)
        over = (over_y, over_x) if under else (sc_in, sc_out)
        new_sites.append(Site.crossing(rot, over))
        y = d.partner[x]
        cut.append((x, y))
        joins += [(x, over_x), (y, over_y), (prev, sc_in)]
        prev = sc_out
    joins.append((prev, th))
    return d.splice(drop=[h, t], new_sites=new_sites, joins=joins, cut=cut)


def underpass_closure(d: GraphoidDiagram, path: list[int] | None = None) -> GraphoidDiagram:
    """Close by a shortcut passing under every strand it meets.

    ``path`` is a dual path as produced by :func:`dual_paths`; by default the
    first shortest path in the deterministic enumeration order.
    """
    if path is None:
        path = next(dual_paths(d))
    return _shortcut(d, path, under=True)


def overpass_closure(d: GraphoidDiagram, path: list[int] | None = None) -> GraphoidDiagram:
    if path is None:
        path = next(dual_paths(d))
    return _shortcut(d, path, under=False)


def close(d: GraphoidDiagram, mode: str = "virtual") -> GraphoidDiagram:
    if mode == "virtual":
        return virtual_closure(d)
    if mode == "under":
        return underpass_closure(d)
    if mode == "over":
        return overpass_closure(d)
    raise ValueError(f"unknown closure mode {mode!r}")
