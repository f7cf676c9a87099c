"""Simple undirected graphs, colorings, I/O and exact coloring search.

Vertices are the integers ``0..n-1``. DIMACS files are 1-based and are
shifted on the way in and out.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Malformed graph or coloring text; ``line`` is 1-based (0 if unknown)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class LimitExceeded(Exception):
    """Chromatic number is larger than the caller's limit."""


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    _sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbours of {v} not sorted and distinct")
            for u in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency at {v}-{u}")
        object.__setattr__(self, "_sets", tuple(frozenset(a) for a in self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def neighbors(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def without_vertex(self, y: int) -> "Graph":
        """Delete ``y``; vertices above it shift down by one."""
        relabel = lambda v: v - 1 if v > y else v  # noqa: E731
        edges = [(relabel(u), relabel(v)) for u, v in self.edges() if y not in (u, v)]
        return Graph.from_edges(self.n - 1, edges)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges()) + list(extra))


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color in ``1..chi``. Properness is not enforced here."""

    chi: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.chi < 1:
            raise ValueError("chi must be positive")
        object.__setattr__(self, "colors", tuple(self.colors))
        for v, col in enumerate(self.colors):
            if not 1 <= col <= self.chi:
                raise ValueError(f"color {col} of vertex {v} outside 1..{self.chi}")

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def succ(self, col: int) -> int:
        return col % self.chi + 1

    def pred(self, col: int) -> int:
        return (col - 2) % self.chi + 1

    def shifted(self, vertices: Iterable[int], delta: int) -> "Coloring":
        """Add ``delta`` (mod chi, kept in 1..chi) to the colors of ``vertices``."""
        cols = list(self.colors)
        for v in set(vertices):
            cols[v] = (cols[v] - 1 + delta) % self.chi + 1
        return Coloring(self.chi, tuple(cols))

    def renamed(self, perm: dict[int, int]) -> "Coloring":
        return Coloring(self.chi, tuple(perm[col] for col in self.colors))

    def used(self) -> set[int]:
        return set(self.colors)


# ---------------------------------------------------------------- parsing


def _lines(text: bytes | str) -> list[str]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return text.splitlines()


def parse_graph(text: bytes | str, format: str = "dimacs") -> Graph:
    if format == "dimacs":
        return _parse_dimacs(text)
    if format == "edge-list":
        return _parse_edge_list(text)
    raise ValueError(f"unknown graph format {format!r}")


def _parse_dimacs(text: bytes | str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(_lines(text), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n, _ = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer header field", lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(parts) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("non-integer vertex id", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop on vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognised line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    return Graph.from_edges(n, edges)


def _parse_edge_list(text: bytes | str) -> Graph:
    edges: list[tuple[int, int]] = []
    n = 0
    for lineno, line in enumerate(_lines(text), 1):
        parts = line.split()
        if not parts or parts[0].startswith("#"):
            continue
        if len(parts) != 2:
            raise ParseError("expected 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("non-integer vertex id", lineno) from None
        if u < 0 or v < 0:
            raise ParseError("negative vertex id", lineno)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", lineno)
        edges.append((u, v))
        n = max(n, u + 1, v + 1)
    return Graph.from_edges(n, edges)


def to_dimacs(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"c {line}" for line in comment.splitlines())
    out.append(f"p edge {g.n} {g.m}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


# ---------------------------------------------------------------- basic predicates


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


def is_proper(g: Graph, c: Coloring) -> bool:
    if len(c) != g.n:
        raise ValueError(f"coloring covers {len(c)} vertices, graph has {g.n}")
    cols = c.colors
    return all(cols[u] != cols[v] for u, nbrs in enumerate(g.adj) for v in nbrs)


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and all(len(a) == 2 for a in g.adj) and is_connected(g)


def is_c7(g: Graph) -> bool:
    return g.n == 7 and is_cycle_graph(g)


def cycle_order(g: Graph, start: int = 0) -> list[int]:
    """Vertices of a cycle graph in walking order from ``start`` (towards the smaller neighbour)."""
    if not is_cycle_graph(g):
        raise ValueError("graph is not a cycle")
    order = [start]
    prev, cur = start, g.adj[start][0]
    while cur != start:
        order.append(cur)
        a, b = g.adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return order


# ---------------------------------------------------------------- coloring search


def _greedy_clique(g: Graph) -> int:
    best = 1 if g.n else 0
    for v in range(g.n):
        clique = [v]
        for u in sorted(g.adj[v], key=lambda w: -g.degree(w)):
            if all(g.has_edge(u, w) for w in clique):
                clique.append(u)
        best = max(best, len(clique))
    return best


def _dsatur_greedy(g: Graph) -> list[int]:
    colors = [0] * g.n
    sat: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max((w for w in range(g.n) if not colors[w]),
                key=lambda w: (len(sat[w]), g.degree(w), -w))
        col = 1
        while col in sat[v]:
            col += 1
        colors[v] = col
        for u in g.adj[v]:
            sat[u].add(col)
    return colors


def _k_color(g: Graph, k: int, rng: random.Random | None = None) -> list[int] | None:
    """DSATUR backtracking; new colors are opened in order, so colorings are
    explored up to renaming unless ``rng`` shuffles the branch order."""
    n = g.n
    colors = [0] * n
    counts = [[0] * (k + 1) for _ in range(n)]  # counts[v][col]: neighbours of v with col
    tiebreak = list(range(n))
    if rng is not None:
        rng.shuffle(tiebreak)

    def saturation(v: int) -> int:
        return sum(1 for col in range(1, k + 1) if counts[v][col])

    def assign(v: int, col: int, delta: int) -> None:
        for u in g.adj[v]:
            counts[u][col] += delta

    def rec(done: int, top: int) -> bool:
        if done == n:
            return True
        v = max((w for w in range(n) if not colors[w]),
                key=lambda w: (saturation(w), g.degree(w), -tiebreak[w]))
        options = [col for col in range(1, min(top + 1, k) + 1) if not counts[v][col]]
        if rng is not None:
            rng.shuffle(options)
        for col in options:
            colors[v] = col
            assign(v, col, 1)
            if rec(done + 1, max(top, col)):
                return True
            assign(v, col, -1)
            colors[v] = 0
        return False

    if k < 1:
        return None if n else []
    return colors if rec(0, 0) else None


def find_proper_coloring(g: Graph, k: int, seed: int = 0) -> Coloring | None:
    rng = random.Random(seed) if seed else None
    found = _k_color(g, k, rng)
    return None if found is None else Coloring(k, tuple(found))


def chromatic_number(g: Graph, limit: int = 8) -> int:
    if g.n == 0:
        raise ValueError("empty graph")
    if limit < 1:
        raise ValueError("limit must be at least 1")
    lower = _greedy_clique(g)
    upper = max(_dsatur_greedy(g))
    if lower > limit:
        raise LimitExceeded(f"chromatic number at least {lower} > {limit}")
    for k in range(lower, min(upper - 1, limit) + 1):
        if _k_color(g, k) is not None:
            return k
    if upper > limit:
        raise LimitExceeded(f"chromatic number exceeds {limit}")
    return upper


# ---------------------------------------------------------------- small structures


def find_twins(g: Graph) -> tuple[int, int] | None:
    seen: dict[frozenset[int], int] = {}
    best = None
    for v in range(g.n):
        key = g.neighbors(v)
        if key in seen:
            pair = (seen[key], v)
            if best is None or pair < best:
                best = pair
        else:
            seen[key] = v
    return best


def find_cycle4(g: Graph) -> tuple[int, int, int, int] | None:
    """Lexicographically least ``(x1, x2, x3, x4)`` spanning a 4-cycle; chords allowed."""
    for x1 in range(g.n):
        for x2 in g.adj[x1]:
            for x3 in g.adj[x2]:
                if x3 == x1:
                    continue
                for x4 in g.adj[x3]:
                    if x4 in (x1, x2) or not g.has_edge(x4, x1):
                        continue
                    return (x1, x2, x3, x4)
    return None


# ---------------------------------------------------------------- generators


@dataclass(frozen=True)
class GraphSpec:
    kind: str
    n: int = 0
    m: int = 0
    chi: int = 3
    p: float = 0.3
    seed: int = 0
    triangle_free: bool = False
    max_retries: int = 2000

    def __post_init__(self) -> None:
        if self.kind == "cycle" and self.n < 3:
            raise ValueError("cycle needs n >= 3")
        if self.kind == "complete" and self.n < 1:
            raise ValueError("complete graph needs n >= 1")
        if self.kind == "complete-bipartite" and (self.n < 1 or self.m < 1):
            raise ValueError("complete-bipartite needs both sides >= 1")
        if self.kind == "random-chromatic":
            if not 1 <= self.chi <= self.n:
                raise ValueError("random-chromatic needs 1 <= chi <= n")
            if not 0.0 < self.p <= 1.0:
                raise ValueError("edge probability must lie in (0, 1]")
        if self.kind not in ("cycle", "complete", "complete-bipartite", "random-chromatic"):
            raise ValueError(f"unknown graph kind {self.kind!r}")


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _planted(spec: GraphSpec, rng: random.Random) -> Graph:
    """Random graph whose vertices are split into ``chi`` independent classes.

    A random tree across classes is laid down first so sparse samples are
    still usually connected.
    """
    n, k = spec.n, spec.chi
    part = [i % k for i in range(n)]
    rng.shuffle(part)
    nbrs: list[set[int]] = [set() for _ in range(n)]

    def add(u: int, v: int) -> None:
        nbrs[u].add(v)
        nbrs[v].add(u)

    order = list(range(n))
    rng.shuffle(order)
    for i, v in enumerate(order[1:], 1):
        options = [u for u in order[:i] if part[u] != part[v]]
        if options:
            add(v, rng.choice(options))
    pairs = [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]]
    rng.shuffle(pairs)
    for u, v in pairs:
        if v in nbrs[u] or rng.random() >= spec.p:
            continue
        if spec.triangle_free and nbrs[u] & nbrs[v]:
            continue
        add(u, v)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def generate(spec: GraphSpec) -> Graph:
    if spec.kind == "cycle":
        return cycle(spec.n)
    if spec.kind == "complete":
        return complete(spec.n)
    if spec.kind == "complete-bipartite":
        return complete_bipartite(spec.n, spec.m)
    rng = random.Random(spec.seed)
    for _ in range(spec.max_retries):
        g = _planted(spec, rng)
        if not is_connected(g):
            continue
        try:
            if chromatic_number(g, limit=spec.chi) == spec.chi:
                return g
        except LimitExceeded:
            continue
    raise GenerationError(f"no connected {spec.chi}-chromatic graph after {spec.max_retries} tries")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
