"""Command-line front-end.

Every subcommand reads GPD from the given files (``-`` or nothing means
stdin).  Reports are JSON with sorted keys; ``--json`` switches to compact
one-line JSON, and text-native outputs (GPD, presentations, move scripts)
to JSON objects.  Exit status: 0 success, 1 computation error, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import budget as _budget
from .codec import parse, serialize
from .diagram import DiagramError, faces

BATCH_OPS = ("validate", "yamada", "gyamada", "nonclassical", "adequacy", "pi1")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_help(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


class ComputationError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers


def _read(src: str) -> tuple[str, str]:
    if src == "-":
        return "<stdin>", sys.stdin.read()
    return src, Path(src).read_text()


def _load(src: str, allow_free_ends: bool = False):
    name, text = _read(src)
    d = parse(text, allow_free_ends=allow_free_ends)
    if not d.name and src != "-":
        d.name = Path(src).stem
    return name, d


def _emit(obj, args) -> None:
    if isinstance(obj, str):
        print(obj)
    elif args.json:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(json.dumps(obj, sort_keys=True, indent=2))


def _inputs(args) -> list[str]:
    return args.inputs or ["-"]


def _each(args, fn, allow_free_ends=False) -> None:
    for src in _inputs(args):
        name, d = _load(src, allow_free_ends)
        out = fn(d)
        if isinstance(out, dict):
            out = {"file": name, **out}
        _emit(out, args)


def _apply_budget_flags(args) -> None:
    extra = []
    if getattr(args, "budget_crossings", None) is not None:
        extra.append(f"crossings={args.budget_crossings}")
    if getattr(args, "budget_edges", None) is not None:
        extra.append(f"flow_edges={args.budget_edges}")
    if extra:
        old = os.environ.get("GRAPHOID_BUDGET", "").strip()
        os.environ["GRAPHOID_BUDGET"] = ",".join(([old] if old else []) + extra)
        _budget.current()  # fail fast on a malformed variable


def _workers(args) -> int:
    return args.workers if args.workers else (os.cpu_count() or 1)


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args):
    for src in _inputs(args):
        name, d = _load(src, args.allow_free_ends)
        fd = faces(d)
        _emit({"file": name, "valid": True, "sites": len(d.sites), "crossings": d.crossing_count,
               "genus": fd.genus, "faces": fd.faces, "closed": not d.has_endpoints,
               "gpd": serialize(d)}, args)


def cmd_yamada(args):
    from .yamada import yamada_report

    def run(d):
        kw = {"workers": _workers(args)} if args.route in ("statesum", "both") else {}
        try:
            rep = yamada_report(d, route=args.route, **kw)
        except AssertionError as exc:
            raise ComputationError(str(exc)) from None
        return {"route": args.route, **rep.to_json()}

    _each(args, run)


def cmd_gyamada(args):
    from .gyamada import nonclassicality_test

    _each(args, lambda d: nonclassicality_test(d).to_json())


def cmd_nonclassical(args):
    cmd_gyamada(args)


def _parse_augment(text: str):
    if text == "auto":
        return None
    chords = []
    for part in text.split(";"):
        nums = [int(x) for x in part.replace(":", ",").replace("-", ",").split(",") if x.strip()]
        if len(nums) != 4:
            raise _UsageError(f"chord {part!r} needs four integers site,corner,site,corner")
        chords.append(tuple(nums))
    return chords


def cmd_adequacy(args):
    from . import adequacy as aq

    if args.action == "report":
        _each(args, lambda d: aq.adequacy_report(d).to_json())
    elif args.action == "dual":
        _each(args, lambda d: aq.dual_graph(d)[1].to_json())
    else:
        aug = _parse_augment(args.augment)
        _each(args, lambda d: aq.checkerboard_bound(d, aug).to_json())


def cmd_close(args):
    from .closures import close

    def run(d):
        c = close(d, args.mode)
        return {"mode": args.mode, "gpd": serialize(c)} if args.json else serialize(c)

    _each(args, run)


def cmd_pi1(args):
    from .pi1 import abelianization, count_homs, wirtinger

    def run(d):
        p = wirtinger(d)
        if args.action == "present":
            return p.to_json() if args.json else str(p)
        if args.action == "abelian":
            rank, torsion = abelianization(p)
            return {"rank": rank, "torsion": torsion}
        return {"target": args.target, "homs": count_homs(p, args.target)}

    _each(args, run)


def cmd_constituents(args):
    from .constituents import constituent_bounds, constituent_list

    def run(d):
        items = constituent_list(d, adjacent_only=args.adjacent_only)
        if args.action == "list":
            return {"constituents": items}
        data = json.loads(Path(args.data).read_text())
        cross = [_lookup(data.get("crossing", {}), it["id"]) for it in items]
        height = [_lookup(data.get("height", {}), it["id"]) for it in items]
        mcc, mch, chosen = constituent_bounds([it["support"] for it in items], cross, height)
        return {"mcc": mcc, "mch": mch, "chosen": chosen, "constituents": items}

    _each(args, run)


def _lookup(table, key):
    if isinstance(table, list):
        return table[key] if key < len(table) else None
    return table.get(str(key))


def cmd_tangle(args):
    from .constituents import tangle_insert

    def run(d):
        out = serialize(tangle_insert(d, args.vertex, args.pattern))
        return {"pattern": args.pattern, "gpd": out} if args.json else out

    _each(args, run)


def cmd_moves(args):
    from .moves import ALL_KINDS, apply_move, enumerate_moves, parse_script

    kinds = tuple(args.kinds.split(",")) if args.kinds else ALL_KINDS
    bad = [k for k in kinds if k not in ALL_KINDS]
    if bad:
        raise DiagramError("bad-move-kind", ", ".join(bad))

    def run(d):
        if args.action == "enumerate":
            scripts = [m.script() for m in enumerate_moves(d, kinds)]
            return {"moves": scripts} if args.json else "\n".join(scripts)
        for line in args.move:
            d = apply_move(d, parse_script(line))
        return {"gpd": serialize(d)} if args.json else serialize(d)

    _each(args, run, allow_free_ends=True)


def cmd_equiv(args):
    from .moves import ALL_KINDS, RIGID_KINDS, search_equivalent

    if len(args.inputs) != 2:
        raise _UsageError("equiv search needs exactly two input files")
    (n1, d1), (n2, d2) = (_load(s) for s in args.inputs)
    kinds = RIGID_KINDS if args.rigid else ALL_KINDS
    v = search_equivalent(d1, d2, max_crossings=args.max_crossings, max_steps=args.max_steps,
                          kinds=kinds, max_nodes=args.max_nodes)
    _emit({"files": [n1, n2], **v.to_json()}, args)


def _batch_one(job):
    path, ops = job
    row: dict = {"file": str(path)}
    failed = False
    try:
        _, d = _load(str(path))
    except (DiagramError, OSError) as exc:
        return {**row, "error": str(exc)}, True
    for op in ops:
        try:
            row[op] = _batch_op(op, d)
        except (DiagramError, _budget.BudgetExceeded, ArithmeticError, AssertionError) as exc:
            row[op] = {"error": str(exc)}
            failed = True
    return row, failed


def _batch_op(op, d):
    if op == "validate":
        return {"valid": True, "genus": faces(d).genus, "crossings": d.crossing_count}
    if op == "yamada":
        from .yamada import yamada

        return str(yamada(d))
    if op in ("gyamada", "nonclassical"):
        from .gyamada import nonclassicality_test

        v = nonclassicality_test(d)
        return str(v.gyamada) if op == "gyamada" else v.verdict
    if op == "adequacy":
        from .adequacy import adequacy_report

        r = adequacy_report(d, with_polynomial=False)
        return {"A_adequate": r.A_adequate, "B_adequate": r.B_adequate, "adequate": r.adequate}
    if op == "pi1":
        from .pi1 import abelianization, wirtinger

        rank, torsion = abelianization(wirtinger(d))
        return {"rank": rank, "torsion": torsion}
    raise ValueError(op)


def cmd_batch(args):
    ops = [o for o in args.ops.split(",") if o]
    bad = [o for o in ops if o not in BATCH_OPS]
    if bad:
        raise _UsageError(f"unknown ops {bad}; choose from {', '.join(BATCH_OPS)}")
    files: list[Path] = []
    for src in args.inputs:
        p = Path(src)
        files.extend(sorted(p.glob("*.gpd")) if p.is_dir() else [p])
    jobs = [(f, ops) for f in files]
    w = _workers(args)
    if w > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=w) as ex:
            results = list(ex.map(_batch_one, jobs))
    else:
        results = [_batch_one(j) for j in jobs]
    for row, _ in results:
        print(json.dumps(row, sort_keys=True, separators=(",", ":")))
    return 1 if any(f for _, f in results) else 0


class _UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="compact machine-readable JSON")
    common.add_argument("--budget-crossings", type=int, metavar="N", help="state-sum crossing budget")
    common.add_argument("--budget-edges", type=int, metavar="N", help="flow brute-force edge budget")
    common.add_argument("--workers", type=int, metavar="N", help="worker processes (default: all cores)")

    top = _Parser(prog="graphoid", description="Invariants of virtual graphoids and spatial graphs.")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, inputs=True, parent=sub):
        p = parent.add_parser(name, parents=[common], help=help_, description=help_)
        if inputs:
            p.add_argument("inputs", nargs="*", help="GPD files ('-' for stdin)")
        p.set_defaults(func=fn, parser=p)
        return p

    p = add("validate", cmd_validate, "parse and check diagrams")
    p.add_argument("--allow-free-ends", action="store_true")

    p = add("yamada", cmd_yamada, "Yamada polynomial report")
    p.add_argument("--route", choices=("skein", "statesum", "both"), default="skein")

    add("gyamada", cmd_gyamada, "generalized Yamada polynomial R(G;A,1) with the non-classicality verdict")

    p = sub.add_parser("nonclassical", help="non-classicality certificate")
    ns = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    add("test", cmd_nonclassical, "compare R with the calibrated R(G;A,1)", parent=ns)

    p = sub.add_parser("adequacy", help="adequacy certificates and crossing bounds")
    ns = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    add("report", cmd_adequacy, "subgraph counts, adequacy and span identity", parent=ns)
    add("dual", cmd_adequacy, "dual graph and its bounds", parent=ns)
    q = add("checkerboard", cmd_adequacy, "checkerboard bound", parent=ns)
    q.add_argument("--augment", default="auto",
                   help="'auto' or chords 'site,corner,site,corner;...' closing odd vertices")

    p = add("close", cmd_close, "close a graphoid into a spatial graph")
    p.add_argument("--mode", choices=("virtual", "under", "over"), default="virtual")

    p = sub.add_parser("pi1", help="Wirtinger presentation and finite quotients")
    ns = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    add("present", cmd_pi1, "print the presentation", parent=ns)
    add("abelian", cmd_pi1, "abelianization rank and torsion", parent=ns)
    q = add("homs", cmd_pi1, "count homomorphisms into a finite group", parent=ns)
    q.add_argument("--target", default="S3", help="S3, D4, A4, Zn or trivial")

    p = sub.add_parser("constituents", help="constituent decompositions")
    ns = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, help_ in (("list", "distinct constituents with edge supports"),
                        ("bounds", "mcc/mch lower bounds from supplied values")):
        q = add(name, cmd_constituents, help_, parent=ns)
        q.add_argument("--adjacent-only", action="store_true", help="only rotation-adjacent replacements")
    q.add_argument("--data", required=True,
                   help='JSON {"crossing": {id: n}, "height": {id: n}} keyed by constituent id')

    p = sub.add_parser("tangle", help="rigid-vertex tangle insertion")
    ns = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = add("insert", cmd_tangle, "replace a vertex by a crossingless tangle", parent=ns)
    q.add_argument("--vertex", type=int, required=True, help="site index of the vertex")
    q.add_argument("--pattern", choices=("plat", "braid"), default="plat")

    p = sub.add_parser("moves", help="Reidemeister move engine")
    ns = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = add("enumerate", cmd_moves, "list legal move sites as replayable scripts", parent=ns)
    q.add_argument("--kinds", help="comma-separated move kinds (default: all)")
    q = add("apply", cmd_moves, "apply move scripts in order", parent=ns)
    q.add_argument("--move", action="append", required=True, help="move script (repeatable)")
    q.set_defaults(kinds=None)

    p = sub.add_parser("equiv", help="bounded equivalence search")
    ns = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = add("search", cmd_equiv, "search for a move path between two diagrams", parent=ns)
    q.add_argument("--max-crossings", type=int, default=4)
    q.add_argument("--max-steps", type=int, default=4)
    q.add_argument("--max-nodes", type=int, default=20000)
    q.add_argument("--rigid", action="store_true", help="exclude the vertex-twist move")

    p = add("batch", cmd_batch, "run several invariants over files or directories")
    p.add_argument("--ops", default="yamada", help=f"comma-separated from {', '.join(BATCH_OPS)}")
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if extra:
        (getattr(args, "parser", None) or parser).error(f"unrecognized arguments: {' '.join(extra)}")
    try:
        _apply_budget_flags(args)
        rc = args.func(args)
    except _UsageError as exc:
        args.parser.print_help(sys.stderr)
        print(f"graphoid: error: {exc}", file=sys.stderr)
        return 2
    except (DiagramError, ComputationError, _budget.BudgetExceeded, OSError, ValueError,
            json.JSONDecodeError) as exc:
        code = getattr(exc, "code", type(exc).__name__)
        print(json.dumps({"error": code, "message": str(exc)}, sort_keys=True))
        return 1
    sys.stdout.flush()
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
