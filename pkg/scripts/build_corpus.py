"""Regenerate ``corpus/``: hand-written entries plus seeded random walks.

Run from the repository root: ``python3 scripts/build_corpus.py``.
"""

import random
from pathlib import Path

from graphoid import genus, parse, serialize
from graphoid.moves import enumerate_moves, apply_move

HAND = {
    # name: (gpd, comment)
    "trivial": ("H(1) T(1)", "trivial knotoid"),
    "empty": ("", "empty diagram"),
    "vertex": ("V()", "single isolated vertex"),
    "unknot": ("O()", "crossingless circle"),
    "kink_closed": ("X(1,1,2,2)", "one-crossing kink on a circle"),
    "kink_knotoid": ("H(1) X(1,2,3,4) X(4,3,5,2) T(5)", "two-crossing knotoid"),
    "loop_around_head": ("H(1) X(1,2,3,2) T(3)", "planar knotoid whose loop encircles the head"),
    "theta": ("V(1,2,3) V(3,2,1)", "planar theta graph"),
    "theta_graphoid": ("H(1) V(1,2,3) V(2,4,3) T(4)", "graphoid with a double edge"),
    "handcuff": ("V(1,1,2) V(2,3,3)", "handcuff graph (has a bridge, R = 0)"),
    "bouquet": ("V(1,1,2,2)", "bouquet of two circles"),
    "trefoil": ("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)", "trefoil, adequate"),
    "figure_eight": ("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)", "figure-eight knot, adequate"),
    "hopf": ("X(4,1,3,2) X(2,3,1,4)", "Hopf link, adequate"),
    "virtual_trefoil": ("X(1,2,3,4) X(3,4,1,2)", "genus-one two-crossing knot, adequate"),
    "twisted_unknot": ("X(1,2,3,4) X(3,2,1,4)", "two-crossing unknot diagram, not adequate"),
    "adequate_genus_two": (
        "V(1,2,3) V(4,1,5) X(6,7,3,8) X(9,10,7,6) X(2,8,4,11) X(10,9,5,11)",
        "genus-two graph diagram with a1 = 1 and b_k = C(4,k)",
    ),
    "vertex_kink_graphoid": (
        "H(1) V(1,2,3,4) X(2,4,5,3) T(5)",
        "vertexed graphoid with a non-classical constituent",
    ),
    "two_crossing_vertex_graphoid": (
        "H(1) V(1,2,3,4) X(5,3,6,2) X(6,4,7,5) T(7)",
        "graphoid with one rigid degree-4 vertex",
    ),
    "virtual_kink_vertex": ("V(1,2,3) X(1,4,2,4) V(3,5,5)", "flat vertices joined through a virtual kink"),
}

SEEDS = ["H(1) T(1)", "H(1) V(1,2,3) V(2,4,3) T(4)", "H(1) V(1,2,2,3) T(3)",
         "V(1,2,3) V(3,2,1)", "O()"]
KINDS = ["R1+", "R2+", "R3", "R4", "R5", "R2-", "R1-"]


def walks(n, max_crossings=4, seed=7):
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < n:
        d = parse(rng.choice(SEEDS))
        for _ in range(rng.randint(2, 6)):
            ms = enumerate_moves(d, KINDS)
            if not ms:
                break
            e = apply_move(d, rng.choice(ms))
            if e.crossing_count <= max_crossings:
                d = e
        if d.crossing_count == 0 or d.canonical() in seen:
            continue
        seen.add(d.canonical())
        out.append(d)
    return out


def main():
    root = Path(__file__).resolve().parent.parent / "corpus"
    root.mkdir(exist_ok=True)
    for name, (text, note) in HAND.items():
        d = parse(text)
        (root / f"{name}.gpd").write_text(f"GPD 1 {name}\n# {note}\n{serialize(d)}\n")
    for k, d in enumerate(walks(24)):
        name = f"walk_{k:02d}"
        note = f"random move walk, genus {genus(d)}"
        (root / f"{name}.gpd").write_text(f"GPD 1 {name}\n# {note}\n{serialize(d)}\n")


if __name__ == "__main__":
    main()
