"""End-to-end decision pipelines.

A check properizes the input, builds the star form and its proper
subdivision, assembles the reduced constraint system on the subdivision, and
solves it over GF(2).  On the satisfiable side the solution is realized as a
drawing whose smoothed form passes the even-crossings verification; that
drawing is the returned witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import xorsat
from .constraints import (
    Assignment,
    ConstraintSystem,
    ReferenceSets,
    build_level_full,
    build_level_reduced,
    build_radial_full,
    build_radial_reduced,
    choose_reference_sets,
)
from .drawing import (
    CrossingReport,
    LevelContext,
    LevelDrawing,
    RadialContext,
    RadialDrawing,
    drawing_from_assignment_level,
    drawing_from_assignment_radial,
    lift_assignment_level,
    lift_assignment_radial,
    make_level_context,
    make_radial_context,
    star_report_level,
    star_report_radial,
)
from .graphs import LevelGraph, properize, require_valid


def to_xor_system(system: ConstraintSystem) -> xorsat.XorSystem:
    rows = [([system.index[v] for v in eq.vars], eq.parity) for eq in system.xors]
    return xorsat.XorSystem.build(len(system.variables), rows)


def solve_reduced(system: ConstraintSystem) -> Assignment | None:
    """One satisfying assignment of a pure-XOR system, or None."""
    if system.transitivity:
        raise ValueError("only reduced systems are solvable as XOR systems")
    result = xorsat.solve(to_xor_system(system))
    if isinstance(result, xorsat.Unsat):
        return None
    return {v: bool(result.assignment[i]) for v, i in system.index.items()}


@dataclass
class CheckResult:
    mode: str
    planar: bool
    variables: int
    equations: int
    witness: LevelDrawing | RadialDrawing | None = None
    witness_report: CrossingReport | None = None
    refs: ReferenceSets | None = None


def level_context(g: LevelGraph) -> LevelContext:
    require_valid(g)
    proper, _ = properize(g)
    return make_level_context(proper)


def radial_context(g: LevelGraph, *, largest: bool = False) -> RadialContext:
    require_valid(g)
    proper, _ = properize(g)
    refs, augmented = choose_reference_sets(proper, largest=largest)
    return make_radial_context(augmented, refs)


def check_level(g: LevelGraph, *, witness: bool = False) -> CheckResult:
    ctx = level_context(g)
    system = build_level_reduced(ctx.pg.graph)
    phi_plus = solve_reduced(system)
    result = CheckResult("level", phi_plus is not None, len(system.variables), len(system.xors))
    if phi_plus is not None and witness:
        # witness path: solve the input-stage system and lift it to the subdivision
        phi = solve_reduced(build_level_reduced(ctx.base))
        assert phi is not None, "stage decisions diverged"
        d = drawing_from_assignment_level(lift_assignment_level(phi, ctx), ctx)
        report = star_report_level(d, ctx)
        if report.ht_violations:
            raise AssertionError(f"witness drawing failed verification: {report.ht_violations[0]}")
        result.witness = d
        result.witness_report = report
    return result


def check_radial(g: LevelGraph, *, witness: bool = False) -> CheckResult:
    ctx = radial_context(g)
    system = build_radial_reduced(ctx.pg.graph, ctx.plus_refs)
    phi_plus = solve_reduced(system)
    result = CheckResult("radial", phi_plus is not None, len(system.variables), len(system.xors), refs=ctx.refs)
    if phi_plus is not None and witness:
        phi = solve_reduced(build_radial_reduced(ctx.base, ctx.refs))
        assert phi is not None, "stage decisions diverged"
        d = drawing_from_assignment_radial(lift_assignment_radial(phi, ctx), ctx)
        report = star_report_radial(d, ctx)
        if report.ht_violations:
            raise AssertionError(f"witness drawing failed verification: {report.ht_violations[0]}")
        result.witness = d
        result.witness_report = report
    return result


def level_system_for_stage(g: LevelGraph, stage: str, reduced: bool = True) -> ConstraintSystem:
    require_valid(g)
    proper, _ = properize(g)
    if stage == "G":
        target = proper
    elif stage == "Gplus":
        target = make_level_context(proper).pg.graph
    else:
        raise ValueError(f"unknown stage {stage!r}")
    system = build_level_full(target)
    return system.reduced() if reduced else system


def radial_system_for_stage(g: LevelGraph, stage: str, reduced: bool = True) -> ConstraintSystem:
    require_valid(g)
    proper, _ = properize(g)
    refs, augmented = choose_reference_sets(proper)
    if stage == "G":
        system = build_radial_full(augmented, refs)
    elif stage == "Gplus":
        ctx = make_radial_context(augmented, refs)
        system = build_radial_full(ctx.pg.graph, ctx.plus_refs)
    else:
        raise ValueError(f"unknown stage {stage!r}")
    return system.reduced() if reduced else system
