"""Brute-force planarity deciders: the ground truth for small instances.

Both oracles enumerate the full combinatorial drawing space (linear orders
per level, or cyclic orders plus reference flags) and accept as soon as a
zero-crossing state appears.  Enumeration order is deterministic, so the
witness drawing and the examined-state count are reproducible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial

from .constraints import ReferenceSets, gap_edge_classes
from .drawing import LevelDrawing, RadialDrawing, count_crossings_level, count_crossings_radial
from .graphs import LevelGraph, require_valid

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV_VAR = "PLANARITY_HT_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    return int(raw) if raw else DEFAULT_BUDGET


class BudgetExceededError(RuntimeError):
    def __init__(self, needed: int, budget: int):
        super().__init__(f"enumeration needs {needed} states, budget is {budget}")
        self.needed = needed
        self.budget = budget


@dataclass(frozen=True)
class OracleResult:
    planar: bool
    witness: LevelDrawing | RadialDrawing | None
    states_examined: int


def brute_level(g: LevelGraph, budget: int | None = None) -> OracleResult:
    """Try every per-level vertex order; planar iff some combination is crossing-free."""
    require_valid(g, proper=True)
    budget = default_budget() if budget is None else budget
    levels = [g.on_level(i) for i in range(1, g.k + 1)]
    needed = 1
    for vs in levels:
        needed *= factorial(len(vs))
    if needed > budget:
        raise BudgetExceededError(needed, budget)
    states = 0
    for combo in product(*(permutations(vs) for vs in levels)):
        states += 1
        d = LevelDrawing({i + 1: order for i, order in enumerate(combo)})
        if count_crossings_level(d, g).planar:
            return OracleResult(True, d, states)
    return OracleResult(False, None, states)


def brute_radial(g: LevelGraph, refs: ReferenceSets, budget: int | None = None) -> OracleResult:
    """Try every cyclic order per level and every flag combination.

    Cyclic orders are enumerated with each level's smallest vertex pinned
    first, which visits every cyclic order exactly once.
    """
    require_valid(g, proper=True)
    budget = default_budget() if budget is None else budget
    levels = [g.on_level(i) for i in range(1, g.k + 1)]
    if any(not vs for vs in levels):
        raise ValueError("radial enumeration needs every level nonempty")
    flagged = []
    for i in range(1, g.k):
        _, _, plus_adj, minus_adj = gap_edge_classes(g, refs, i)
        flagged.extend(plus_adj + minus_adj)
    needed = 2 ** len(flagged)
    for vs in levels:
        needed *= factorial(len(vs) - 1)
    if needed > budget:
        raise BudgetExceededError(needed, budget)
    states = 0
    cyclic_choices = [[(vs[0], *rest) for rest in permutations(vs[1:])] for vs in levels]
    for combo in product(*cyclic_choices):
        for bits in product((False, True), repeat=len(flagged)):
            states += 1
            d = RadialDrawing({i + 1: order for i, order in enumerate(combo)}, dict(zip(flagged, bits)))
            if count_crossings_radial(d, g, refs).planar:
                return OracleResult(True, d, states)
    return OracleResult(False, None, states)
