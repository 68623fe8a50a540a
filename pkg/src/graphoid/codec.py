"""GPD: a PD-style text format for graphoid diagrams.

Grammar (whitespace and newlines are insignificant, ``#`` starts a comment)::

    document := [header] record*
    header   := "GPD" version [name]
    record   := KIND "(" [label ("," label)*] ")"
    KIND     := "V" | "X" | "P" | "H" | "T" | "E" | "O"
    label    := [A-Za-z0-9_]+

``V`` is a flat vertex with its labels in counterclockwise order, ``X(a,b,c,d)``
a classical crossing (a-c under, b-d over), ``P(a,b,c,d)`` a virtual crossing
(a-c and b-d are the two strands), ``H``/``T`` the head and tail, ``E`` a free
end of a multi-graphoid, and ``O()`` a vertexless circle.  Every label occurs
exactly twice.  Virtual crossings are erased on ingest.
"""

from __future__ import annotations

import re

from .diagram import (CROSSING, END, FLAT, HEAD, TAIL, DiagramError, GraphoidDiagram, Site)

FORMAT_VERSION = "1"

_TOKEN = re.compile(r"\s*(?:(#[^\n]*)|([A-Za-z0-9_.]+)|(\()|(\))|(,))")


class GpdSyntaxError(DiagramError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__("syntax-error", f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


def _tokens(text: str):
    pos = 0
    line, line_start = 1, 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                return
            # skip leading whitespace to report the right column
            k = pos
            while k < n and text[k].isspace():
                k += 1
            line = text.count("\n", 0, k) + 1
            col = k - (text.rfind("\n", 0, k) + 1) + 1
            raise GpdSyntaxError(f"unexpected character {text[k]!r}", line, col)
        start = m.start(m.lastindex)
        line = text.count("\n", 0, start) + 1
        col = start - (text.rfind("\n", 0, start) + 1) + 1
        pos = m.end()
        if m.group(1):
            continue
        yield m.group(m.lastindex), line, col
    del line_start


def parse(text: str, allow_free_ends: bool = False) -> GraphoidDiagram:
    """Parse GPD text into a validated diagram (virtual crossings erased)."""
    toks = list(_tokens(text))
    k = 0
    name = ""
    if toks and toks[0][0] == "GPD":
        if len(toks) < 2 or toks[1][0] in "(),":
            raise GpdSyntaxError("header needs a version", toks[0][1], toks[0][2])
        k = 2
        if k < len(toks) and k + 1 < len(toks) and toks[k + 1][0] != "(":
            name = toks[k][0]
            k += 1
        elif k < len(toks) and k + 1 >= len(toks):
            name = toks[k][0]
            k += 1
    records = []
    while k < len(toks):
        kind, line, col = toks[k]
        if kind not in ("V", "X", "P", "H", "T", "E", "O"):
            raise GpdSyntaxError(f"unknown record {kind!r}", line, col)
        if k + 1 >= len(toks) or toks[k + 1][0] != "(":
            raise GpdSyntaxError("expected '('", line, col + len(kind))
        k += 2
        labels = []
        expect_label = True
        while True:
            if k >= len(toks):
                raise GpdSyntaxError("unterminated record", line, col)
            tok, tl, tc = toks[k]
            if tok == ")":
                if expect_label and labels:
                    raise GpdSyntaxError("dangling ','", tl, tc)
                k += 1
                break
            if expect_label:
                if tok in "(,":
                    raise GpdSyntaxError(f"expected label, got {tok!r}", tl, tc)
                labels.append(tok)
                expect_label = False
            else:
                if tok != ",":
                    raise GpdSyntaxError(f"expected ',' or ')', got {tok!r}", tl, tc)
                expect_label = True
            k += 1
        arity = {"X": 4, "P": 4, "H": 1, "T": 1, "E": 1, "O": 0}.get(kind)
        if arity is not None and len(labels) != arity:
            raise GpdSyntaxError(f"{kind} record takes {arity} labels, got {len(labels)}", line, col)
        records.append((kind, labels, line, col))

    counts: dict[str, int] = {}
    for _, labels, _, _ in records:
        for lab in labels:
            counts[lab] = counts.get(lab, 0) + 1
    over = sorted(lab for lab, c in counts.items() if c > 2)
    if over:
        raise DiagramError("duplicate-half-edge", f"labels used more than twice: {over}")
    single = sorted(lab for lab, c in counts.items() if c == 1)
    if single:
        raise DiagramError("unmatched-half-edge", f"labels used only once: {single}")
    nh = sum(1 for r in records if r[0] == "H")
    nt = sum(1 for r in records if r[0] == "T")
    if (nh, nt) not in ((0, 0), (1, 1)):
        raise DiagramError("endpoint-count", f"{nh} H records and {nt} T records")

    # one half-edge per label slot; labels pair slots
    hid = 0
    slots: dict[str, list[int]] = {}
    sites, virtual = [], []
    loops = 0
    for kind, labels, _, _ in records:
        ids = []
        for lab in labels:
            hid += 1
            ids.append(hid)
            slots.setdefault(lab, []).append(hid)
        if kind == "X":
            sites.append(Site.crossing(ids, (ids[1], ids[3])))
        elif kind == "P":
            virtual.append(ids)
        elif kind == "O":
            loops += 1
        else:
            sites.append(Site({"V": FLAT, "H": HEAD, "T": TAIL, "E": END}[kind], tuple(ids)))
    pairs = [tuple(v) for v in slots.values()]
    if virtual:
        placeholder = GraphoidDiagram([*sites, *(Site(FLAT, tuple(v)) for v in virtual)], pairs, loops, name)
        drop = range(len(sites), len(sites) + len(virtual))
        joins = [(v[0], v[2]) for v in virtual] + [(v[1], v[3]) for v in virtual]
        d = placeholder.splice(drop=drop, joins=joins)
    else:
        d = GraphoidDiagram(sites, pairs, loops, name)
    d.validate(allow_free_ends=allow_free_ends)
    return d


def serialize(d: GraphoidDiagram, header: bool = False, name: str | None = None) -> str:
    """Write ``d`` as GPD.  Labels are integers numbered by first use."""
    label: dict[int, int] = {}
    nxt = 1
    parts = []
    for s in d.sites:
        labs = []
        for h in s.rot:
            e = d.edge_id(h)
            if e not in label:
                label[e] = nxt
                nxt += 1
            labs.append(str(label[e]))
        tag = {FLAT: "V", CROSSING: "X", HEAD: "H", TAIL: "T", END: "E"}[s.kind]
        parts.append(f"{tag}({','.join(labs)})")
    parts.extend("O()" for _ in range(d.loops))
    body = " ".join(parts)
    if header:
        nm = name if name is not None else d.name
        head = f"GPD {FORMAT_VERSION}" + (f" {nm}" if nm else "")
        return head + "\n" + body + "\n"
    return body


def load(path, allow_free_ends: bool = False) -> GraphoidDiagram:
    with open(path) as fh:
        d = parse(fh.read(), allow_free_ends=allow_free_ends)
    if not d.name:
        import os

        d.name = os.path.splitext(os.path.basename(str(path)))[0]
    return d
