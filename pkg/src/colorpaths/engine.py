"""Constructive recoloring procedures and the solve drivers.

The drivers check the coloring after every move and stop as soon as every
vertex starts a colorful path, so the order in which moves are tried only
affects the trace, never correctness of a returned solution.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from .certify import certify_all, verify_solution
from .digraph import (
    build_dc,
    find_oriented_cycle,
    initial_recolor,
    level_partition,
    nice_levels,
    reachable_to,
    switch_recolor,
    terminal_recolor,
    to_dot,
)
from .graph import (
    Coloring,
    Graph,
    LimitExceeded,
    chromatic_number,
    cycle_order,
    find_cycle4,
    find_proper_coloring,
    find_twins,
    is_c7,
    is_connected,
    is_cycle_graph,
    is_proper,
)

SOLVED = "solved"
EXCEPTION_C7 = "exception-c7"
UNSUPPORTED = "unsupported"


class C7Exception(ValueError):
    """The 7-cycle has no coloring in which every vertex starts a colorful path."""


class PreconditionError(ValueError):
    pass


class DriverFailure(RuntimeError):
    def __init__(self, message: str, trace: list["StepRecord"]):
        super().__init__(message)
        self.trace = trace


@dataclass
class StepRecord:
    move: str
    detail: str
    height: int | None
    uncertified: int
    graph: Graph | None = field(default=None, repr=False, compare=False)
    coloring: Coloring | None = field(default=None, repr=False, compare=False)
    nice: bool = False

    def line(self, k: int) -> str:
        h = "-" if self.height is None else self.height
        arg = self.detail.replace(" ", "") or "-"
        return f"step={k} move={self.move} arg={arg} height={h} B={self.uncertified}"


@dataclass
class SolveOutcome:
    status: str
    coloring: Coloring | None = None
    trace: list[StepRecord] = field(default_factory=list)
    message: str = ""

    def trace_text(self) -> str:
        return "".join(rec.line(k) + "\n" for k, rec in enumerate(self.trace))


class _Trace:
    def __init__(self) -> None:
        self.records: list[StepRecord] = []

    def record(self, g: Graph, move: str, detail: str, c: Coloring) -> StepRecord:
        d = build_dc(g, c)
        height = None if find_oriented_cycle(d) else level_partition(d).height
        rec = StepRecord(
            move, detail, height, len(certify_all(g, c, d).uncertified),
            graph=g, coloring=c, nice=nice_levels(d) is not None,
        )
        self.records.append(rec)
        return rec


def _fmt(xs: Iterable[int]) -> str:
    return "{" + ",".join(str(v) for v in sorted(xs)) + "}"


def _all_certified(g: Graph, c: Coloring) -> bool:
    return not certify_all(g, c).uncertified


# ---------------------------------------------------------------- general moves


def reachable_set_coloring(g: Graph, c: Coloring, xs: Iterable[int]) -> Coloring:
    """Recolor outside ``xs`` until every vertex has an oriented path into ``xs``."""
    xs = frozenset(xs)
    if not xs:
        raise ValueError("target set must be nonempty")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    everything = frozenset(range(g.n))
    while True:
        ys = reachable_to(build_dc(g, c), xs)
        if ys == everything:
            return c
        zs = everything - ys
        for _ in range(c.chi):
            c = terminal_recolor(g, c, zs)
            d = build_dc(g, c)
            if any(b in ys for z in zs for b in d.out[z]):
                break
        else:  # pragma: no cover - ruled out by connectivity
            raise AssertionError("no arc into the reachable set after a full color turn")


def certify_via_cycle(g: Graph, c: Coloring, cycle: list[int]) -> Coloring:
    d = build_dc(g, c)
    k = len(cycle)
    if k < 2 or len(set(cycle)) != k or not all(
        d.has_arc(cycle[i], cycle[(i + 1) % k]) for i in range(k)
    ):
        raise PreconditionError("not an oriented cycle of the coloring's orientation")
    new = reachable_set_coloring(g, c, cycle)
    ok, report = verify_solution(g, new)
    if not ok:
        raise AssertionError(f"cycle certification failed: {report.problems}")
    return new


def _path_out(d, src: int, dst: int) -> list[int]:
    parent = {src: src}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for u in d.out[v]:
            if u not in parent:
                parent[u] = v
                queue.append(u)
    path = [dst]
    while path[-1] != src:
        path.append(parent[path[-1]])
    return path[::-1]


def nice_coloring(g: Graph, c: Coloring, v: int) -> tuple[Coloring, list[int] | None]:
    """A nice coloring with unique sink ``v``, or a coloring plus an oriented cycle.

    The cycle passes through ``v`` when ``v`` keeps an out-arc; the recoloring
    can also close a cycle elsewhere, which is returned instead.
    """
    new = reachable_set_coloring(g, c, {v})
    d = build_dc(g, new)
    if not d.out[v]:
        return new, find_oriented_cycle(d)
    w = d.out[v][0]
    return new, [v] + _path_out(d, w, v)[:-1]


def odd_cycle_coloring(length: int) -> Coloring:
    """Three-coloring of the cycle ``0-1-...-(length-1)-0`` certifying every vertex.

    Position 0 plays v0, positions ``1..k`` walk one side and positions
    ``length-1`` down to ``k+1`` walk the other side, meeting at the far edge.
    """
    if length == 7:
        raise C7Exception("the 7-cycle admits no such coloring")
    if length < 5 or length % 2 == 0:
        raise ValueError("cycle length must be odd and at least 5")
    k = (length - 1) // 2
    to3 = lambda x: x % 3 or 3  # noqa: E731
    cols = [0] * length
    cols[0] = 3
    for i in range(1, k):
        cols[i] = cols[length - i] = to3(i)
    cols[k] = to3(k)
    cols[k + 1] = to3(k + 1)
    return Coloring(3, tuple(cols))


def color_cycle_graph(g: Graph) -> Coloring:
    order = cycle_order(g, 0)
    base = odd_cycle_coloring(len(order))
    cols = [0] * g.n
    for pos, v in enumerate(order):
        cols[v] = base[pos]
    return Coloring(3, tuple(cols))


# ---------------------------------------------------------------- twins


# C7 on 0..6 plus vertex 7 twinned with 0; derived by exhaustive search
# (scripts/derive_twinned_c7.py), the lexicographically first witness.
TWINNED_C7_EDGES = tuple((i, (i + 1) % 7) for i in range(7)) + ((7, 1), (7, 6))
TWINNED_C7_COLORING = (1, 2, 1, 3, 1, 3, 2, 3)


def twinned_c7() -> Graph:
    return Graph.from_edges(8, TWINNED_C7_EDGES)


@dataclass(frozen=True)
class TwinReduction:
    original: Graph
    reduced: Graph
    kept: int
    removed: int

    def extend(self, c: Coloring) -> Coloring:
        """Lift a coloring of the reduced graph; the removed twin copies its sibling."""
        cols = list(c.colors)
        cols.insert(self.removed, c[self.kept])
        return Coloring(c.chi, tuple(cols))

    def twinned_c7_coloring(self) -> Coloring:
        """The embedded witness transported onto ``original`` (requires ``reduced`` to be C7)."""
        if not is_c7(self.reduced):
            raise PreconditionError("reduced graph is not the 7-cycle")
        order = cycle_order(self.reduced, self.kept)
        lift = lambda r: r + 1 if r >= self.removed else r  # noqa: E731
        cols = [0] * 8
        for pos, r in enumerate(order):
            cols[lift(r)] = TWINNED_C7_COLORING[pos]
        cols[self.removed] = TWINNED_C7_COLORING[7]
        return Coloring(3, tuple(cols))


def twin_reduce(g: Graph) -> TwinReduction | None:
    pair = find_twins(g)
    if pair is None:
        return None
    x, y = pair
    return TwinReduction(g, g.without_vertex(y), x, y)


# ---------------------------------------------------------------- three colors


def _structure(g: Graph, c: Coloring):
    d = build_dc(g, c)
    lp = nice_levels(d)
    if lp is None:
        raise PreconditionError("coloring is not nice")
    return d, lp, certify_all(g, c).uncertified


def maximize_height(
    g: Graph, c: Coloring, on_switch: Callable[[int, Coloring], None] | None = None
) -> Coloring:
    """Switch on uncertified vertices while that raises the height."""
    if c.chi != 3:
        raise PreconditionError("height maximisation needs three colors")
    while True:
        d, lp, unc = _structure(g, c)
        raising = [b for b in sorted(unc) if not lp.top <= set(d.inn[b])]
        if not raising:
            return c
        c = switch_recolor(g, c, raising[0])
        if on_switch is not None:
            on_switch(raising[0], c)


def _require_height_maximal(d, lp, unc) -> None:
    if not unc:
        raise PreconditionError("every vertex is already certified")
    if any(not lp.top <= set(d.inn[b]) for b in unc):
        raise PreconditionError("a switch would still raise the height")


def claim4_recolor(g: Graph, c: Coloring, x: int, y: int) -> Coloring:
    """Initial recoloring of ``y`` and its in-neighbours, for a top vertex ``x``
    and a next-to-top vertex ``y`` that are not adjacent."""
    d, lp, unc = _structure(g, c)
    _require_height_maximal(d, lp, unc)
    h = lp.height
    if x not in lp.top or y not in lp.level(h - 1):
        raise PreconditionError("x must be in the top level and y in the level below")
    if g.has_edge(x, y):
        raise PreconditionError(f"{x} and {y} are adjacent")
    ins = set(d.inn[y])
    if not ins & lp.top:
        raise PreconditionError(f"{y} has no in-neighbour in the top level")
    return initial_recolor(g, c, ins | {y})


def claim6_recolor(g: Graph, c: Coloring, b: int, u: int) -> Coloring:
    """Initial recoloring of the two highest levels, given an uncertified ``b``
    with an in-neighbour ``u`` below the top level."""
    d, lp, unc = _structure(g, c)
    _require_height_maximal(d, lp, unc)
    h = lp.height
    top, below = lp.top, lp.level(h - 1)
    if any(not g.has_edge(x, y) for x in top for y in below):
        raise PreconditionError("top two levels are not completely joined")
    if b not in unc:
        raise PreconditionError(f"{b} is certified")
    if u not in d.inn[b]:
        raise PreconditionError(f"{u} is not an in-neighbour of {b}")
    if u in top:
        raise PreconditionError(f"{u} lies in the top level")
    return initial_recolor(g, c, top | below)


def _fail(msg: str, trace: _Trace) -> DriverFailure:
    return DriverFailure(msg, trace.records)


def _solve_twin_free(g: Graph, trace: _Trace, seed: int, start: Coloring | None) -> Coloring:
    n = g.n
    c = start if start is not None else find_proper_coloring(g, 3, seed)
    if c is None:
        raise _fail("graph is not 3-colorable", trace)
    trace.record(g, "initial", "", c)
    if _all_certified(g, c):
        return c
    cyc = find_oriented_cycle(build_dc(g, c))
    if cyc:
        c = certify_via_cycle(g, c, cyc)
        trace.record(g, "cycle", _fmt(cyc), c)
        return c
    c, cyc = nice_coloring(g, c, 0)
    if cyc:
        c = certify_via_cycle(g, c, cyc)
        trace.record(g, "cycle", _fmt(cyc), c)
        return c
    trace.record(g, "nice", "sink=0", c)
    return improve_nice(g, c, trace)


def improve_nice(g: Graph, c: Coloring, trace: _Trace | None = None) -> Coloring:
    """From a nice 3-coloring of a twin-free graph, apply switches and the two
    completion recolorings until every vertex is certified."""
    trace = trace if trace is not None else _Trace()
    n = g.n
    budget = 8 * n * n
    steps = 0
    stalls = 0
    done = []

    def on_switch(b: int, new: Coloring) -> None:
        nonlocal steps
        steps += 1
        rec = trace.record(g, "switch-raise", f"b={b}", new)
        if rec.uncertified == 0:
            done.append(new)
            raise _Done

    while True:
        if steps > budget:
            raise _fail(f"step budget {budget} exhausted", trace)
        try:
            c = maximize_height(g, c, on_switch)
        except _Done:
            return done[0]
        d, lp, unc = _structure(g, c)
        if not unc:
            return c
        steps += 1
        h = lp.height
        top, below = lp.top, lp.level(h - 1)
        missing = [(x, y) for x in sorted(top) for y in sorted(below) if not g.has_edge(x, y)]
        usable = [(x, y) for x, y in missing if set(d.inn[y]) & top]
        if usable:
            x, y = usable[0]
            new = claim4_recolor(g, c, x, y)
            rec = trace.record(g, "claim4", f"x={x} y={y}", new)
            if rec.uncertified == 0:
                return new
        if not missing:
            extra = [(b, u) for b in sorted(unc) for u in d.inn[b] if u not in top]
            if extra:
                b, u = extra[0]
                new = claim6_recolor(g, c, b, u)
                rec = trace.record(g, "claim6", f"b={b} u={u}", new)
                if rec.uncertified == 0:
                    return new
            elif is_cycle_graph(g):
                c = color_cycle_graph(g)
                trace.record(g, "odd-cycle", f"length={n}", c)
                return c
            else:
                stalls += 1
                if stalls > n:
                    raise _fail("final switch sequence did not close a cycle", trace)
        b = min(unc)
        before = h
        c = switch_recolor(g, c, b)
        rec = trace.record(g, "switch", f"b={b}", c)
        if rec.uncertified == 0:
            return c
        if rec.height is not None and rec.height > before:
            stalls = 0


class _Done(Exception):
    pass


def solve_3chromatic(
    g: Graph, check_chi: bool = True, seed: int = 0, initial: Coloring | None = None
) -> SolveOutcome:
    """Driver for connected 3-chromatic graphs.

    ``initial`` (a proper 3-coloring using all three colors) replaces the
    searched starting coloring; it is restricted along any twin reductions.
    """
    trace = _Trace()
    if initial is not None and (initial.chi != 3 or len(initial) != g.n or not is_proper(g, initial)):
        raise PreconditionError("initial coloring must be a proper 3-coloring of the graph")
    if g.n == 0 or not is_connected(g):
        return SolveOutcome(UNSUPPORTED, message="graph must be connected and nonempty")
    if check_chi:
        try:
            chi = chromatic_number(g, limit=3)
        except LimitExceeded:
            chi = None
        if chi != 3:
            return SolveOutcome(UNSUPPORTED, message="graph is not 3-chromatic")
    if is_c7(g):
        return SolveOutcome(EXCEPTION_C7, message="C7 admits no such coloring")

    reductions: list[TwinReduction] = []
    h = g
    c = None
    while (red := twin_reduce(h)) is not None:
        if is_c7(red.reduced):
            c = red.twinned_c7_coloring()
            trace.record(h, "twinned-c7", f"x={red.kept} y={red.removed}", c)
            break
        reductions.append(red)
        trace.records.append(StepRecord("twin-reduce", f"x={red.kept} y={red.removed}", None, 0))
        h = red.reduced
        if initial is not None:
            cols = list(initial.colors)
            del cols[red.removed]
            initial = Coloring(3, tuple(cols))
    if c is None:
        c = _solve_twin_free(h, trace, seed, initial)
    for red in reversed(reductions):
        c = red.extend(c)
        trace.record(red.original, "twin-extend", f"y={red.removed}", c)
    ok, report = verify_solution(g, c)
    if not ok:
        raise _fail(f"driver produced an uncertified coloring: {report.problems}", trace)
    return SolveOutcome(SOLVED, c, trace.records)


# ---------------------------------------------------------------- four colors


def _colors_on(c: Coloring, cyc4) -> int:
    return len({c[v] for v in cyc4})


def _rename(c: Coloring, order: list[int]) -> Coloring:
    """Rename so the colors in ``order`` become 1, 2, ... and the rest follow."""
    perm: dict[int, int] = {}
    for col in order + list(range(1, c.chi + 1)):
        if col not in perm:
            perm[col] = len(perm) + 1
    return c.renamed(perm)


def _c4_step(g: Graph, c: Coloring, cyc4) -> tuple[str, Coloring]:
    x1, x2, x3, x4 = cyc4
    k = _colors_on(c, cyc4)
    if k == 4:
        return "c4-rename", _rename(c, [c[x1], c[x2], c[x3], c[x4]])
    if k == 3:
        if c[x1] == c[x3]:
            x1, x2, x3, x4 = x2, x3, x4, x1
        c = _rename(c, [c[x1], c[x2], c[x3]])
        d = build_dc(g, c)
        if find_oriented_cycle(d):
            return "c4-rename", c
        s2 = reachable_to(d, {x2})
        assert x3 not in s2
        if x4 not in s2:
            return "c4-recolor", initial_recolor(g, c, s2)
        s4 = reachable_to(d, {x4})
        assert x2 not in s4 and x3 not in s4
        return "c4-recolor", initial_recolor(g, c, s4)
    if k == 2:
        c = _rename(c, [c[x1], c[x2]])
        d = build_dc(g, c)
        if find_oriented_cycle(d):
            return "c4-rename", c
        s1 = reachable_to(d, {x1})
        assert x2 not in s1 and x4 not in s1
        if x3 not in s1:
            return "c4-recolor", initial_recolor(g, c, s1)
        s3 = reachable_to(d, {x3})
        assert x1 not in s3
        return "c4-recolor", initial_recolor(g, c, s3)
    raise AssertionError("a 4-cycle carries at least two colors")


def solve_4chromatic_c4(g: Graph, check_chi: bool = True, seed: int = 0) -> SolveOutcome:
    trace = _Trace()
    if g.n == 0 or not is_connected(g):
        return SolveOutcome(UNSUPPORTED, message="graph must be connected and nonempty")
    if check_chi:
        try:
            chi = chromatic_number(g, limit=4)
        except LimitExceeded:
            chi = None
        if chi != 4:
            return SolveOutcome(UNSUPPORTED, message="graph is not 4-chromatic")
    cyc4 = find_cycle4(g)
    if cyc4 is None:
        return SolveOutcome(UNSUPPORTED, message="graph has no 4-cycle")
    c = find_proper_coloring(g, 4, seed)
    if c is None:
        raise _fail("graph is not 4-colorable", trace)
    trace.record(g, "initial", f"H={cyc4}", c)
    for _ in range(8):
        cyc = find_oriented_cycle(build_dc(g, c))
        if cyc:
            c = certify_via_cycle(g, c, cyc)
            trace.record(g, "cycle", _fmt(cyc), c)
            return SolveOutcome(SOLVED, c, trace.records)
        before = _colors_on(c, cyc4)
        move, c = _c4_step(g, c, cyc4)
        if move == "c4-recolor" and _colors_on(c, cyc4) <= before:
            raise _fail("recoloring did not add a color to the 4-cycle", trace)
        trace.record(g, move, f"colors_on_H={_colors_on(c, cyc4)}", c)
    raise _fail("no oriented cycle after raising the 4-cycle to four colors", trace)


# ---------------------------------------------------------------- dispatch


def _two_coloring(g: Graph) -> Coloring:
    cols = [0] * g.n
    cols[0] = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if not cols[u]:
                cols[u] = 3 - cols[v]
                queue.append(u)
    return Coloring(2, tuple(cols))


def solve(g: Graph, chi: int | None = None, seed: int = 0) -> SolveOutcome:
    """Dispatch on the chromatic number; ``chi`` skips recomputing it."""
    if g.n == 0:
        raise ValueError("graph is empty")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    if chi is None:
        try:
            chi = chromatic_number(g, limit=4)
        except LimitExceeded:
            return SolveOutcome(UNSUPPORTED, message="chromatic number above 4 is not supported")
    # the 3- and 4-color drivers verify before returning
    if chi == 3:
        return solve_3chromatic(g, check_chi=False, seed=seed)
    if chi == 4:
        if find_cycle4(g) is None:
            return SolveOutcome(UNSUPPORTED, message="4-chromatic graph without a 4-cycle is not supported")
        return solve_4chromatic_c4(g, check_chi=False, seed=seed)
    if chi > 4:
        return SolveOutcome(UNSUPPORTED, message=f"chromatic number {chi} is not supported")
    c = Coloring(1, (1,) * g.n) if chi == 1 else _two_coloring(g)
    ok, report = verify_solution(g, c)
    if not ok:
        raise DriverFailure(f"unverified solution: {report.problems}", [])
    return SolveOutcome(SOLVED, c)


def write_trace(outcome: SolveOutcome, directory: str | Path, dot: bool = True) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "trace.txt").write_text(outcome.trace_text())
    if not dot:
        return
    for k, rec in enumerate(outcome.trace):
        if rec.graph is not None and rec.coloring is not None:
            text = to_dot(build_dc(rec.graph, rec.coloring), name=f"step{k}")
            (directory / f"step_{k:03d}.dot").write_text(text)
