"""The color orientation of a properly colored graph and its recolorings.

For a coloring ``c`` with ``chi`` colors the orientation has an arc
``a -> b`` whenever ``{a, b}`` is an edge and ``c(b) = c(a) + 1`` (mod chi,
values kept in ``1..chi``).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .graph import Coloring, Graph, is_proper


class NotProper(ValueError):
    pass


class NotASection(ValueError):
    pass


class CyclicOrientation(ValueError):
    pass


@dataclass(frozen=True)
class ColorDigraph:
    graph: Graph
    coloring: Coloring
    out: tuple[tuple[int, ...], ...]
    inn: tuple[tuple[int, ...], ...]

    @cached_property
    def _out_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(o) for o in self.out)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def chi(self) -> int:
        return self.coloring.chi

    def has_arc(self, a: int, b: int) -> bool:
        return b in self._out_sets[a]

    def arcs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in self.out[a]]

    def sinks(self) -> list[int]:
        return [v for v in range(self.n) if not self.out[v]]

    def sources(self) -> list[int]:
        return [v for v in range(self.n) if not self.inn[v]]


def build_dc(g: Graph, c: Coloring) -> ColorDigraph:
    if not is_proper(g, c):
        raise NotProper("coloring is not proper")
    out: list[list[int]] = [[] for _ in range(g.n)]
    inn: list[list[int]] = [[] for _ in range(g.n)]
    cols, chi = c.colors, c.chi
    for a in range(g.n):
        want = cols[a] % chi + 1
        for b in g.adj[a]:
            if cols[b] == want:
                out[a].append(b)
                inn[b].append(a)
    # in-lists come out sorted because tails are visited in increasing order
    return ColorDigraph(g, c, tuple(map(tuple, out)), tuple(map(tuple, inn)))


def _peel(d: ColorDigraph) -> tuple[list[list[int]], set[int]]:
    """Repeated sink removal; returns the levels and the stranded vertices."""
    remaining_out = [len(o) for o in d.out]
    level = [v for v in range(d.n) if remaining_out[v] == 0]
    levels: list[list[int]] = []
    while level:
        levels.append(level)
        nxt = []
        for v in level:
            for u in d.inn[v]:
                remaining_out[u] -= 1
                if remaining_out[u] == 0:
                    nxt.append(u)
        level = sorted(nxt)
    stranded = {v for v in range(d.n) if remaining_out[v] > 0}
    return levels, stranded


def find_oriented_cycle(d: ColorDigraph) -> list[int] | None:
    _, stranded = _peel(d)
    if not stranded:
        return None
    # every stranded vertex keeps an out-arc into the stranded set
    walk = [min(stranded)]
    index = {walk[0]: 0}
    while True:
        nxt = min(u for u in d.out[walk[-1]] if u in stranded)
        if nxt in index:
            cyc = walk[index[nxt]:]
            assert len(cyc) % d.chi == 0, "oriented cycle length must be a multiple of chi"
            return cyc
        index[nxt] = len(walk)
        walk.append(nxt)


@dataclass(frozen=True)
class LevelPartition:
    levels: tuple[frozenset[int], ...]
    height_of: tuple[int, ...]

    @property
    def height(self) -> int:
        return len(self.levels)

    def level(self, i: int) -> frozenset[int]:
        """Level ``i`` counted from 1; out-of-range indices give the empty set."""
        if 1 <= i <= len(self.levels):
            return self.levels[i - 1]
        return frozenset()

    @property
    def top(self) -> frozenset[int]:
        return self.levels[-1]


def level_partition(d: ColorDigraph) -> LevelPartition:
    levels, stranded = _peel(d)
    if stranded:
        raise CyclicOrientation("orientation contains an oriented cycle")
    height_of = [0] * d.n
    for i, lev in enumerate(levels, 1):
        for v in lev:
            height_of[v] = i
    return LevelPartition(tuple(frozenset(lv) for lv in levels), tuple(height_of))


def is_initial_section(d: ColorDigraph, xs: Iterable[int]) -> bool:
    xs = set(xs)
    return not any(a not in xs for b in xs for a in d.inn[b])


def is_terminal_section(d: ColorDigraph, xs: Iterable[int]) -> bool:
    xs = set(xs)
    return not any(b not in xs for a in xs for b in d.out[a])


def reachable_to(d: ColorDigraph, xs: Iterable[int]) -> frozenset[int]:
    """Vertices with an oriented path (possibly trivial) ending in ``xs``."""
    seen = set(xs)
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for u in d.inn[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


def reachable_from(d: ColorDigraph, xs: Iterable[int]) -> frozenset[int]:
    seen = set(xs)
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for u in d.out[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


def initial_recolor(g: Graph, c: Coloring, xs: Iterable[int]) -> Coloring:
    """Subtract one from every color in the initial section ``xs``."""
    xs = frozenset(xs)
    d = build_dc(g, c)
    if not is_initial_section(d, xs):
        raise NotASection("set is not an initial section")
    new = c.shifted(xs, -1)
    if __debug__:
        d2 = build_dc(g, new)
        assert not any(b not in xs for a in xs for b in d2.out[a]), "arc leaves recolored section"
    return new


def terminal_recolor(g: Graph, c: Coloring, xs: Iterable[int]) -> Coloring:
    """Add one to every color in the terminal section ``xs``."""
    xs = frozenset(xs)
    d = build_dc(g, c)
    if not is_terminal_section(d, xs):
        raise NotASection("set is not a terminal section")
    new = c.shifted(xs, 1)
    if __debug__:
        d2 = build_dc(g, new)
        assert not any(a not in xs for b in xs for a in d2.inn[b]), "arc enters recolored section"
    return new


def nice_levels(d: ColorDigraph) -> LevelPartition | None:
    """Level partition if the orientation is acyclic with a unique sink, else None."""
    levels, stranded = _peel(d)
    if stranded or not levels or len(levels[0]) != 1:
        return None
    return level_partition(d)


def is_nice(g: Graph, c: Coloring) -> bool:
    return nice_levels(build_dc(g, c)) is not None


def switch_recolor(g: Graph, c: Coloring, b: int) -> Coloring:
    """Initial recoloring of ``{b}`` plus the in-neighbours of ``b``.

    Only defined for three colors, a nice coloring and an uncertified ``b``.
    """
    from .certify import certify_all

    if c.chi != 3:
        raise ValueError("switch recoloring needs exactly three colors")
    d = build_dc(g, c)
    if nice_levels(d) is None:
        raise ValueError("switch recoloring needs a nice coloring")
    if b not in certify_all(g, c).uncertified:
        raise ValueError(f"vertex {b} has a certifying path")
    new = initial_recolor(g, c, {b, *d.inn[b]})
    if __debug__:
        failed = [k for k, ok in switch_properties(g, c, b, new).items() if not ok]
        assert not failed, f"switch on {b} violates properties {failed}"
    return new


def switch_properties(g: Graph, c: Coloring, b: int, new: Coloring) -> dict[str, bool]:
    """Evaluate the five structural facts about a switch from ``c`` to ``new`` on ``b``."""
    from .certify import certify_all

    d = build_dc(g, c)
    lp = level_partition(d)
    h = lp.height
    (r,) = lp.level(1)
    nb = frozenset(d.inn[b])
    d2 = build_dc(g, new)
    lp2 = nice_levels(d2)
    if lp2 is None:
        return {k: False for k in "abcde"}
    props = {"a": d2.sinks() == [b]}
    shape = lp2.level(2) == nb | {r} and lp2.level(3) == lp.level(2) - {b}
    for i in range(4, h + 2):
        want = lp.level(i - 1) - nb if i % 3 == 1 else lp.level(i - 1)
        shape = shape and lp2.level(i) == want
    props["b"] = shape and lp2.height <= h + 1
    props["c"] = not (lp.top - nb) or lp2.height == h + 1
    props["d"] = not (lp.top <= nb) or lp2.height == h
    props["e"] = certify_all(g, new).uncertified <= nb
    return props


PALETTE = ("#e41a1c", "#4daf4a", "#377eb8", "#ffd92f")


def to_dot(d: ColorDigraph, name: str = "Dc") -> str:
    lp = None if find_oriented_cycle(d) else level_partition(d)
    lines = [f"digraph {name} {{", "  node [style=filled];"]
    for v in range(d.n):
        col = d.coloring[v]
        fill = PALETTE[(col - 1) % len(PALETTE)]
        lines.append(f'  {v} [label="v{v}/c{col}", fillcolor="{fill}"];')
    if lp is not None:
        for i, lev in enumerate(lp.levels, 1):
            members = " ".join(str(v) for v in sorted(lev))
            lines.append(f"  {{ rank=same; {members} }}  // level {i}")
    for a, b in d.arcs():
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
