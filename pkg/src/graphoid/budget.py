"""Default computation budgets, overridable through ``GRAPHOID_BUDGET``.

The variable holds comma-separated ``key=value`` pairs, e.g.
``GRAPHOID_BUDGET="crossings=10,flow_edges=18"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Budgets:
    crossings: int = 14        # state sum enumerates 3**c states
    flow_edges: int = 16       # brute-force subset sum over 2**E edge sets
    gyamada_edges: int = 18    # delete-or-mark expansion per resolved state
    subsets: int = 20          # adequacy subgraph enumeration
    hom_group_order: int = 24
    hom_nodes: int = 5_000_000
    replacements: int = 4096   # constituent choice vectors


def from_env(base: Budgets | None = None) -> Budgets:
    b = base or Budgets()
    raw = os.environ.get("GRAPHOID_BUDGET", "").strip()
    if not raw:
        return b
    names = {f.name for f in fields(Budgets)}
    updates = {}
    for item in raw.split(","):
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in names:
            raise ValueError(f"unknown budget {key!r} in GRAPHOID_BUDGET")
        updates[key] = int(val)
    return replace(b, **updates)


def current() -> Budgets:
    return from_env()
