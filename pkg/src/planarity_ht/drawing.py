"""Combinatorial drawings, crossing counting, and assignment conversions.

A level drawing is a linear vertex order per level; a radial drawing is a
cyclic order per level plus a left/right flag for every edge sharing an
endpoint with its gap's reference edge.  Crossings follow the standard
two-layer model: within one gap a pair of independent edges crosses at most
once, adjacent edges never cross, and a reference edge is never crossed.

The conversion operations translate between satisfying assignments of the
reduced constraint systems and drawings of the subdivided star form, in both
directions and in both the level and the radial setting.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .constraints import (
    Assignment,
    ConstraintSystem,
    FlagVar,
    PairVar,
    ReferenceSets,
    TripleVar,
    build_level_reduced,
    build_radial_reduced,
    evaluate,
    gap_edge_classes,
    validate_reference_sets,
)
from .graphs import Edge, LevelGraph, VertexId, independent
from .starform import BetaMaps, PlusGraph, StarForm, build_betas, build_plus, build_star_level, build_star_radial


class NotHananiTutteError(ValueError):
    """The drawing has an independent edge pair with an odd crossing count."""

    def __init__(self, pair: tuple[Edge, Edge], count: int):
        super().__init__(f"independent edges {pair[0]} and {pair[1]} cross {count} times")
        self.pair = pair
        self.count = count


class UnsatisfyingAssignmentError(ValueError):
    def __init__(self, system: ConstraintSystem, violated):
        super().__init__(f"assignment violates {len(violated)} constraints of {system.meta}, first: {violated[0]}")
        self.violated = violated


def require_satisfying(system: ConstraintSystem, a: Assignment) -> None:
    bad = evaluate(system, a)
    if bad:
        raise UnsatisfyingAssignmentError(system, bad)


# ---------------------------------------------------------------------------
# Drawings


@dataclass(frozen=True)
class LevelDrawing:
    """Linear vertex order per level; index 0 is the leftmost vertex."""

    orders: dict[int, tuple[VertexId, ...]]

    def positions(self, i: int) -> dict[VertexId, int]:
        return {v: p for p, v in enumerate(self.orders[i])}


@dataclass(frozen=True)
class RadialDrawing:
    """Clockwise cyclic order per level plus left flags for reference-adjacent edges."""

    cyclic: dict[int, tuple[VertexId, ...]]
    left_flag: dict[Edge, bool]

    def positions(self, i: int) -> dict[VertexId, int]:
        return {v: p for p, v in enumerate(self.cyclic[i])}

    def clockwise(self, i: int, a: VertexId, u: VertexId, v: VertexId) -> bool:
        pos = self.positions(i)
        n = len(self.cyclic[i])
        return (pos[u] - pos[a]) % n < (pos[v] - pos[a]) % n

    def cut_after(self, i: int, a: VertexId) -> dict[VertexId, int]:
        """Linearize the circle starting at a; a gets position 0."""
        pos = self.positions(i)
        n = len(self.cyclic[i])
        return {v: (p - pos[a]) % n for v, p in pos.items()}


def check_drawing_covers(orders: dict[int, tuple[VertexId, ...]], g: LevelGraph) -> list[str]:
    problems = []
    for i in range(1, g.k + 1):
        want = set(g.on_level(i))
        got = orders.get(i, ())
        if set(got) != want or len(got) != len(want):
            problems.append(f"level {i} order is not a permutation of the level's vertices")
    return problems


@dataclass
class CrossingReport:
    per_pair: dict[tuple[Edge, Edge], int]
    ht_violations: list[tuple[Edge, Edge]]
    planar: bool

    def count(self, e: Edge, f: Edge) -> int:
        return self.per_pair.get(_pair_key(e, f), 0)

    def total(self) -> int:
        return sum(self.per_pair.values())


def _pair_key(e: Edge, f: Edge) -> tuple[Edge, Edge]:
    return (e, f) if e <= f else (f, e)


def verify_hanani_tutte(report: CrossingReport, independent_fn=independent) -> list[tuple[Edge, Edge]]:
    """Independent pairs with odd crossing counts; empty means the drawing passes."""
    return [pair for pair, c in sorted(report.per_pair.items()) if c % 2 and independent_fn(*pair)]


# ---------------------------------------------------------------------------
# Crossing counting, level


def gap_crossing_pairs_level(d: LevelDrawing, g: LevelGraph, i: int) -> list[tuple[Edge, Edge]]:
    """Segment pairs that cross between levels i and i+1: independent and inverted."""
    lo = d.positions(i)
    hi = d.positions(i + 1)
    out = []
    for e, f in combinations(g.gap_edges(i), 2):
        if not independent(e, f):
            continue
        if (lo[e[0]] < lo[f[0]]) != (hi[e[1]] < hi[f[1]]):
            out.append((e, f))
    return out


def _build_report(crossing_pairs, aggregate: dict[Edge, Edge] | None, independent_fn) -> CrossingReport:
    per_pair: dict[tuple[Edge, Edge], int] = {}
    for e, f in crossing_pairs:
        if aggregate is not None:
            e, f = aggregate[e], aggregate[f]
            if e == f:
                continue
        key = _pair_key(e, f)
        per_pair[key] = per_pair.get(key, 0) + 1
    violations = [pair for pair, c in sorted(per_pair.items()) if c % 2 and independent_fn(*pair)]
    return CrossingReport(per_pair, violations, planar=not per_pair)


def count_crossings_level(d: LevelDrawing, g: LevelGraph,
                          aggregate: dict[Edge, Edge] | None = None,
                          independent_fn=independent) -> CrossingReport:
    """Per-pair crossing counts; with `aggregate`, counts roll up to pre-image edges."""
    problems = check_drawing_covers(d.orders, g)
    if problems:
        raise ValueError("; ".join(problems))
    pairs = []
    for i in range(1, g.k):
        pairs.extend(gap_crossing_pairs_level(d, g, i))
    return _build_report(pairs, aggregate, independent_fn)


# ---------------------------------------------------------------------------
# Crossing counting, radial


def gap_crossing_pairs_radial(d: RadialDrawing, g: LevelGraph, refs: ReferenceSets, i: int) -> list[tuple[Edge, Edge]]:
    """Crossing segment pairs in gap i.

    The gap's annulus is cut along the reference edge, which itself is never
    crossed.  Plain edges cross when the cut linearizations invert them; two
    reference-adjacent edges on opposite ends cross when their flags agree; a
    reference-adjacent edge crosses a plain edge when its flag disagrees with
    the plain edge's position relative to the adjacent edge's free endpoint.
    """
    eps, plain, plus_adj, minus_adj = gap_edge_classes(g, refs, i)
    for e in plus_adj + minus_adj:
        if e not in d.left_flag:
            raise ValueError(f"drawing lacks a left flag for reference-adjacent edge {e}")
    lo = d.cut_after(i, eps[0])
    hi = d.cut_after(i + 1, eps[1])
    out = []
    for e, f in combinations(plain, 2):
        if not independent(e, f):
            continue
        if (lo[e[0]] < lo[f[0]]) != (hi[e[1]] < hi[f[1]]):
            out.append((e, f))
    for e in plus_adj:
        for f in minus_adj:
            if d.left_flag[e] == d.left_flag[f]:
                out.append((e, f))
    for e in plus_adj:
        for f in plain:
            if independent(e, f) and d.left_flag[e] != (hi[f[1]] < hi[e[1]]):
                out.append((e, f))
    for e in minus_adj:
        for f in plain:
            if independent(e, f) and d.left_flag[e] != (lo[f[0]] < lo[e[0]]):
                out.append((e, f))
    return out


def count_crossings_radial(d: RadialDrawing, g: LevelGraph, refs: ReferenceSets,
                           aggregate: dict[Edge, Edge] | None = None,
                           independent_fn=independent) -> CrossingReport:
    problems = check_drawing_covers(d.cyclic, g)
    if problems:
        raise ValueError("; ".join(problems))
    pairs = []
    for i in range(1, g.k):
        pairs.extend(gap_crossing_pairs_radial(d, g, refs, i))
    return _build_report(pairs, aggregate, independent_fn)


# ---------------------------------------------------------------------------
# Contexts bundling the star form machinery for one input graph


@dataclass(frozen=True)
class LevelContext:
    base: LevelGraph
    pg: PlusGraph

    @property
    def star_form(self) -> StarForm:
        return self.pg.star_form

    def segment_origin(self) -> dict[Edge, Edge]:
        return {seg: star_edge for star_edge, path in self.pg.prov.paths.items()
                for seg in zip(path, path[1:])}


def make_level_context(g: LevelGraph) -> LevelContext:
    return LevelContext(g, build_plus(build_star_level(g)))


@dataclass(frozen=True)
class RadialContext:
    base: LevelGraph            # proper input, reference edges already inserted
    refs: ReferenceSets
    pg: PlusGraph
    betas: BetaMaps
    plus_refs: ReferenceSets    # the beta maps viewed as reference sets of the subdivision

    @property
    def star_form(self) -> StarForm:
        return self.pg.star_form

    def segment_origin(self) -> dict[Edge, Edge]:
        return {seg: star_edge for star_edge, path in self.pg.prov.paths.items()
                for seg in zip(path, path[1:])}


def make_radial_context(g: LevelGraph, refs: ReferenceSets) -> RadialContext:
    sf = build_star_radial(g, refs.alpha_plus, refs.alpha_minus)
    pg = build_plus(sf)
    betas = build_betas(pg, refs.alpha_plus, refs.alpha_minus)
    plus_refs = ReferenceSets(dict(betas.plus), dict(betas.minus))
    problems = validate_reference_sets(pg.graph, plus_refs)
    if problems:
        raise AssertionError(f"internal error: beta maps are not valid reference sets: {problems}")
    return RadialContext(g, refs, pg, betas, plus_refs)


def star_report_level(d: LevelDrawing, ctx: LevelContext) -> CrossingReport:
    return count_crossings_level(d, ctx.pg.graph, aggregate=ctx.segment_origin())


def star_report_radial(d: RadialDrawing, ctx: RadialContext) -> CrossingReport:
    return count_crossings_radial(d, ctx.pg.graph, ctx.plus_refs, aggregate=ctx.segment_origin())


# ---------------------------------------------------------------------------
# Level conversions


def induced_pair_assignment(d: LevelDrawing) -> Assignment:
    """Pair-order values read straight off the positions of a level drawing."""
    out: Assignment = {}
    for i, order in d.orders.items():
        pos = {v: p for p, v in enumerate(order)}
        for u, w in permutations(order, 2):
            out[PairVar(u, w)] = pos[u] < pos[w]
    return out


def _limit_point(pg: PlusGraph, star_edge: Edge, lv: int) -> VertexId:
    return pg.point_at(star_edge, lv)


def assignment_from_drawing_level(d: LevelDrawing, ctx: LevelContext) -> tuple[Assignment, Assignment]:
    """Repair a Hanani-Tutte drawing's induced assignment into satisfying ones.

    The drawing's raw assignment need not satisfy the planarity equations.
    Every pair of subdivision vertices instead copies the raw value at the
    pair's limits: independent edge pairs copy at the bottom of their shared
    window, edges sharing a tail copy at their heads' window, edges sharing a
    head at their tails'.  The result satisfies the subdivision's reduced
    system and projects through the stretch edges to one for the input graph.
    """
    pg, sf = ctx.pg, ctx.star_form
    psi = induced_pair_assignment(d)
    report = star_report_level(d, ctx)
    if report.ht_violations:
        pair = report.ht_violations[0]
        raise NotHananiTutteError(pair, report.count(*pair))
    star_level = sf.star.level
    phi_plus: Assignment = {}
    for j in range(1, pg.graph.k + 1):
        vs = pg.graph.on_level(j)
        for x, y in permutations(vs, 2):
            if x in sf.owner or y in sf.owner:
                val = psi[PairVar(x, y)]
            else:
                e1, e2 = pg.edge_of[x], pg.edge_of[y]
                if independent(e1, e2):
                    lv = max(star_level[e1[0]], star_level[e2[0]])
                elif e1[0] == e2[0]:
                    lv = min(star_level[e1[1]], star_level[e2[1]])
                elif e1[1] == e2[1]:
                    lv = max(star_level[e1[0]], star_level[e2[0]])
                else:
                    raise AssertionError(f"edges {e1}, {e2} share a level but meet head to tail")
                val = psi[PairVar(_limit_point(pg, e1, lv), _limit_point(pg, e2, lv))]
            phi_plus[PairVar(x, y)] = val
    phi: Assignment = {}
    for i in range(1, ctx.base.k + 1):
        for u, w in permutations(ctx.base.on_level(i), 2):
            su, sw = sf.stretch[u], sf.stretch[w]
            lv = max(star_level[su[0]], star_level[sw[0]])
            phi[PairVar(u, w)] = phi_plus[PairVar(_limit_point(pg, su, lv), _limit_point(pg, sw, lv))]
    require_satisfying(build_level_reduced(pg.graph), phi_plus)
    require_satisfying(build_level_reduced(ctx.base), phi)
    return phi_plus, phi


def lift_assignment_level(phi: Assignment, ctx: LevelContext) -> Assignment:
    """Extend a satisfying assignment of the input graph to its subdivision.

    Vertices inherit the order of their origins; two subdivision points of
    edges leaving the same origin copy their heads' order, of edges entering
    the same origin their tails' order.
    """
    pg, sf = ctx.pg, ctx.star_form
    require_satisfying(build_level_reduced(ctx.base), phi)
    rev_star = {img: orig for orig, img in sf.star_edge.items()}
    phi_plus: Assignment = {}
    for j in range(1, pg.graph.k + 1):
        vs = pg.graph.on_level(j)
        for x, y in permutations(vs, 2):
            a, b = pg.origin[x], pg.origin[y]
            if a != b:
                val = phi[PairVar(a, b)]
            else:
                e1 = rev_star.get(pg.edge_of.get(x, ("", "")))
                e2 = rev_star.get(pg.edge_of.get(y, ("", "")))
                assert e1 is not None and e2 is not None, "origin collision off the star edges"
                if e1[0] == e2[0]:
                    val = phi[PairVar(e1[1], e2[1])]
                else:
                    assert e1[1] == e2[1], f"edges {e1}, {e2} collide without a shared endpoint"
                    val = phi[PairVar(e1[0], e2[0])]
            phi_plus[PairVar(x, y)] = val
    require_satisfying(build_level_reduced(pg.graph), phi_plus)
    return phi_plus


def drawing_from_assignment_level(phi_plus: Assignment, ctx: LevelContext) -> LevelDrawing:
    """Place each level's lone stretched vertex as pivot; order others by their bit."""
    pg, sf = ctx.pg, ctx.star_form
    require_satisfying(build_level_reduced(pg.graph), phi_plus)
    orders: dict[int, tuple[VertexId, ...]] = {}
    for j in range(1, pg.graph.k + 1):
        vs = pg.graph.on_level(j)
        pivots = [v for v in vs if v in sf.owner]
        assert len(pivots) == 1, f"level {j} of the plain subdivision must hold one stretched vertex"
        pivot = pivots[0]
        left = [v for v in vs if v != pivot and not phi_plus[PairVar(pivot, v)]]
        right = [v for v in vs if v != pivot and phi_plus[PairVar(pivot, v)]]
        orders[j] = (*left, pivot, *right)
    return LevelDrawing(orders)


# ---------------------------------------------------------------------------
# Radial conversions


def induced_radial_assignment(d: RadialDrawing, g: LevelGraph, refs: ReferenceSets) -> Assignment:
    """Anchored triple and flag values read straight off a radial drawing."""
    out: Assignment = {}
    for i in range(1, g.k + 1):
        vs = g.on_level(i)
        for a in refs.anchors(i):
            others = [v for v in vs if v != a]
            for u, v in permutations(others, 2):
                out[TripleVar(a, u, v)] = d.clockwise(i, a, u, v)
    for i in range(1, g.k):
        _, _, plus_adj, minus_adj = gap_edge_classes(g, refs, i)
        for e in plus_adj + minus_adj:
            out[FlagVar(*e)] = d.left_flag[e]
    return out


def _psi_gap_order(phi: Assignment, refs: ReferenceSets, i: int, e: Edge, f: Edge) -> bool:
    """Order of two distinct non-reference gap edges around the reference edge.

    Several clauses of the defining case split may apply at once; they must
    agree for a satisfying assignment, so any disagreement is a hard error.
    """
    ap = refs.alpha_plus[i]
    am_next = refs.alpha_minus[i + 1]
    (u, u1), (v, v1) = e, f
    vals = []
    if len({ap, u, v}) == 3:
        vals.append(phi[TripleVar(ap, u, v)])
    if len({am_next, u1, v1}) == 3:
        vals.append(phi[TripleVar(am_next, u1, v1)])
    if (ap == v and v != u) or (am_next == v1 and v1 != u1):
        vals.append(phi[FlagVar(*f)])
    if (ap == u and u != v) or (am_next == u1 and u1 != v1):
        vals.append(not phi[FlagVar(*e)])
    if not vals:
        raise AssertionError(f"no ordering rule applies to {e}, {f} in gap {i}")
    if len(set(vals)) != 1:
        raise AssertionError(f"ordering rules disagree for {e}, {f} in gap {i}: {vals}")
    return vals[0]


def lift_assignment_radial(phi: Assignment, ctx: RadialContext) -> Assignment:
    """Extend a satisfying radial assignment of the input to its subdivision."""
    pg, sf = ctx.pg, ctx.star_form
    require_satisfying(build_radial_reduced(ctx.base, ctx.refs), phi)
    rev_star = {img: orig for orig, img in sf.star_edge.items()}
    phi_plus: Assignment = {}
    for j in range(1, pg.graph.k + 1):
        vs = pg.graph.on_level(j)
        for x in ctx.plus_refs.anchors(j):
            others = [v for v in vs if v != x]
            ox = pg.origin[x]
            for y, z in permutations(others, 2):
                oy, oz = pg.origin[y], pg.origin[z]
                if len({ox, oy, oz}) == 3:
                    val = phi[TripleVar(ox, oy, oz)]
                else:
                    assert oy == oz and ox != oy, "origin collision must pair two subdivision points"
                    e = rev_star[pg.edge_of[y]]
                    f = rev_star[pg.edge_of[z]]
                    val = _psi_gap_order(phi, ctx.refs, ctx.base.level[e[0]], e, f)
                phi_plus[TripleVar(x, y, z)] = val
    for j in range(1, pg.graph.k):
        _, _, plus_adj, minus_adj = gap_edge_classes(pg.graph, ctx.plus_refs, j)
        for seg in plus_adj + minus_adj:
            phi_plus[FlagVar(*seg)] = phi[FlagVar(pg.origin[seg[0]], pg.origin[seg[1]])]
    require_satisfying(build_radial_reduced(pg.graph, ctx.plus_refs), phi_plus)
    return phi_plus


def drawing_from_assignment_radial(phi_plus: Assignment, ctx: RadialContext) -> RadialDrawing:
    """Realize a satisfying assignment of the subdivision as a radial drawing.

    On a split middle level the two anchors frame the circle and every other
    vertex picks its arc; elsewhere the lone stretched vertex is placed
    against the level's anchor.  Residual order inside an arc is ascending id.
    """
    pg, sf = ctx.pg, ctx.star_form
    require_satisfying(build_radial_reduced(pg.graph, ctx.plus_refs), phi_plus)
    cyclic: dict[int, tuple[VertexId, ...]] = {}
    for j in range(1, pg.graph.k + 1):
        vs = pg.graph.on_level(j)
        bm, bp = ctx.betas.minus[j], ctx.betas.plus[j]
        if bm != bp:
            between = [v for v in vs if v not in (bm, bp) and phi_plus[TripleVar(bm, v, bp)]]
            outside = [v for v in vs if v not in (bm, bp) and not phi_plus[TripleVar(bm, v, bp)]]
            cyclic[j] = (bm, *between, bp, *outside)
        else:
            stars = pg.star_vertices_on(j)
            xi = stars[0] if stars else None
            if xi is None or xi == bm:
                cyclic[j] = tuple(vs)
            else:
                after = [v for v in vs if v not in (bm, xi) and phi_plus[TripleVar(bm, xi, v)]]
                before = [v for v in vs if v not in (bm, xi) and not phi_plus[TripleVar(bm, xi, v)]]
                cyclic[j] = (bm, *before, xi, *after)
    left_flag: dict[Edge, bool] = {}
    for j in range(1, pg.graph.k):
        _, _, plus_adj, minus_adj = gap_edge_classes(pg.graph, ctx.plus_refs, j)
        for seg in plus_adj + minus_adj:
            left_flag[seg] = phi_plus[FlagVar(*seg)]
    return RadialDrawing(cyclic, left_flag)


def assignment_from_drawing_radial(d: RadialDrawing, ctx: RadialContext) -> Assignment:
    """Extract a satisfying assignment from a radial Hanani-Tutte drawing.

    Raw clockwise values are corrected by the parity of the crossings that
    the involved subdivision paths accumulate below the level in question;
    edges leaving a shared vertex with an odd total crossing count carry an
    extra phantom crossing at that vertex so that every pair ends up even.
    """
    pg = ctx.pg
    report = star_report_radial(d, ctx)
    if report.ht_violations:
        pair = report.ht_violations[0]
        raise NotHananiTutteError(pair, report.count(*pair))
    origin_seg = ctx.segment_origin()
    # crossings of each star edge pair, bucketed by the gap's lower level
    by_gap: dict[tuple[Edge, Edge], dict[int, int]] = {}
    for j in range(1, pg.graph.k):
        for s1, s2 in gap_crossing_pairs_radial(d, pg.graph, ctx.plus_refs, j):
            e1, e2 = origin_seg[s1], origin_seg[s2]
            if e1 == e2:
                continue
            bucket = by_gap.setdefault(_pair_key(e1, e2), {})
            bucket[j] = bucket.get(j, 0) + 1

    def pcr_prefix(e1: Edge | None, e2: Edge | None, j: int) -> int:
        if e1 is None or e2 is None or e1 == e2:
            return 0
        gaps = by_gap.get(_pair_key(e1, e2), {})
        total = sum(gaps.values())
        below = sum(c for g_, c in gaps.items() if g_ + 1 <= j)
        phantom = 1 if e1[0] == e2[0] and total % 2 else 0
        return below + phantom

    phi: Assignment = {}
    for j in range(1, pg.graph.k + 1):
        vs = pg.graph.on_level(j)
        for x in ctx.plus_refs.anchors(j):
            ex = pg.edge_of.get(x)
            for y, z in permutations([v for v in vs if v != x], 2):
                ey, ez = pg.edge_of.get(y), pg.edge_of.get(z)
                psi = d.clockwise(j, x, y, z)
                parity = (pcr_prefix(ex, ey, j) + pcr_prefix(ex, ez, j) + pcr_prefix(ey, ez, j)) % 2
                phi[TripleVar(x, y, z)] = psi != bool(parity)
    for j in range(1, pg.graph.k):
        _, _, plus_adj, minus_adj = gap_edge_classes(pg.graph, ctx.plus_refs, j)
        for seg in plus_adj + minus_adj:
            phi[FlagVar(*seg)] = d.left_flag[seg]
    require_satisfying(build_radial_reduced(pg.graph, ctx.plus_refs), phi)
    return phi
