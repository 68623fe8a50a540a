"""Random moves, replayable scripts and a bounded equivalence search."""

import random

from graphoid import parse, serialize, yamada
from graphoid.moves import parse_script, random_move, replay, search_equivalent

rng = random.Random(1)
start = parse("H(1) V(1,2,3) V(2,4,3) T(4)")
d, scripts = start, []
for _ in range(3):
    m, d = random_move(d, rng, ["R1+", "R2+", "R3", "R4"])
    scripts.append(m.script())
    print(f"{m.script():32s} -> {serialize(d)}")

assert replay(start, [parse_script(s) for s in scripts]) == d
print("R before:", yamada(start))
print("R after: ", yamada(d))

v = search_equivalent(start, d, max_crossings=d.crossing_count + 1, max_steps=4)
print("search:", v.verdict, [m.script() for m in v.path or []])
