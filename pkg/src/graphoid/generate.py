"""Random and exhaustive diagram generation for tests and experiments.

Diagrams come from a random (or every) perfect matching of the half-edges
of a chosen multiset of sites, so in general they are virtual: the genus of
the ribbon surface is whatever the matching produces.
"""

from __future__ import annotations

import itertools
import random
import re

from .diagram import CROSSING, FLAT, HEAD, TAIL, GraphoidDiagram, Site, genus
from .moves import ALL_KINDS, apply_move, enumerate_moves


def _sites(crossings: int, degrees, endpoints: bool):
    sites, nxt = [], 1
    for _ in range(crossings):
        sites.append(Site(CROSSING, tuple(range(nxt, nxt + 4))))
        nxt += 4
    for k in degrees:
        sites.append(Site(FLAT, tuple(range(nxt, nxt + k))))
        nxt += k
    if endpoints:
        sites += [Site(HEAD, (nxt,)), Site(TAIL, (nxt + 1,))]
        nxt += 2
    return sites, list(range(1, nxt))


def _matchings(items):
    if not items:
        yield []
        return
    a, rest = items[0], items[1:]
    for i, b in enumerate(rest):
        for m in _matchings(rest[:i] + rest[i + 1:]):
            yield [(a, b), *m]


def random_diagram(rng: random.Random, crossings: int = 2, degrees=(), endpoints: bool = False,
                   loops: int = 0) -> GraphoidDiagram:
    """Uniform random pairing of the half-edges of the given sites."""
    if (4 * crossings + sum(degrees) + 2 * endpoints) % 2:
        raise ValueError("odd number of half-edges")
    sites, hs = _sites(crossings, degrees, endpoints)
    rng.shuffle(hs)
    d = GraphoidDiagram(sites, zip(hs[::2], hs[1::2]), loops)
    d.validate()
    return d


def random_small(rng: random.Random, max_crossings: int = 3, max_vertices: int = 2,
                 max_degree: int = 4, endpoints: bool | None = None, planar: bool = False,
                 tries: int = 200) -> GraphoidDiagram:
    """A random diagram with parameters drawn uniformly within the limits."""
    for _ in range(tries):
        c = rng.randint(0, max_crossings)
        degrees = [rng.randint(1, max_degree) for _ in range(rng.randint(0, max_vertices))]
        ends = rng.random() < 0.5 if endpoints is None else endpoints
        if (sum(degrees) + 2 * ends) % 2:
            degrees.append(1) if len(degrees) < max_vertices else degrees.pop()
        if (sum(degrees) + 2 * ends) % 2 or 4 * c + sum(degrees) + 2 * ends == 0:
            continue
        d = random_diagram(rng, c, degrees, ends, loops=rng.random() < 0.1)
        if not planar or genus(d) == 0:
            return d
    raise RuntimeError("no diagram found within the tries")


def random_planar(rng: random.Random, seeds, steps: int = 5, max_crossings: int = 4,
                  kinds=ALL_KINDS) -> GraphoidDiagram:
    """Random walk of legal moves from a planar seed; moves keep the genus."""
    from .codec import parse

    d = parse(rng.choice(seeds)) if isinstance(seeds, (list, tuple)) else seeds
    for _ in range(steps):
        ms = enumerate_moves(d, kinds)
        if not ms:
            break
        e = apply_move(d, rng.choice(ms))
        if e.crossing_count <= max_crossings:
            d = e
    return d


def exhaustive(max_crossings: int = 3, max_vertices: int = 2, max_edges: int = 6,
               min_degree: int = 2, endpoints=(False, True)):
    """Every diagram up to isomorphism within the limits (no free loops).

    Yields diagrams with at least one site, ordered by size.
    """
    seen = set()
    for ends in endpoints:
        for c in range(max_crossings + 1):
            for nv in range(max_vertices + 1):
                room = 2 * max_edges - 4 * c - 2 * ends
                for degrees in itertools.combinations_with_replacement(range(min_degree, room + 1), nv):
                    total = 4 * c + sum(degrees) + 2 * ends
                    if total == 0 and not nv or total > 2 * max_edges or total % 2:
                        continue
                    sites, hs = _sites(c, degrees, ends)
                    for m in _matchings(hs):
                        d = GraphoidDiagram(sites, m)
                        key = d.canonical()
                        if key not in seen:
                            seen.add(key)
                            yield d


def _replace_last(text: str, label: str, new: str) -> str:
    hits = list(re.finditer(rf"(?<=[(,]){re.escape(label)}(?=[,)])", text))
    m = hits[-1]
    return text[:m.start()] + new + text[m.end():]


def with_virtual_crossings(text: str, rng: random.Random, count: int) -> str:
    """Reroute ``count`` random pairs of segments through new ``P`` records.

    The result parses to the same abstract diagram as ``text``.
    """
    fresh = 0
    for _ in range(count):
        labels = re.findall(r"[A-Za-z0-9_]+(?=[,)])", text)
        if not labels:
            break
        x, y = rng.choice(labels), rng.choice(labels)
        if x == y:
            continue
        fresh += 1
        x2, y2 = f"vx{fresh}", f"vy{fresh}"
        text = _replace_last(text, x, x2)
        text = _replace_last(text, y, y2)
        a, b, c, d = (x, y, x2, y2) if rng.random() < 0.5 else (y, x2, y2, x)
        text += f" P({a},{b},{c},{d})"
    return text
