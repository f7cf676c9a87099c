"""Colorful paths: which vertices start one, and whole-solution verification."""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Coloring,
    Graph,
    LimitExceeded,
    ParseError,
    _lines,
    chromatic_number,
    is_proper,
)


@dataclass(frozen=True)
class ColorfulPath:
    vertices: tuple[int, ...]
    direction: str  # "forward", "backward" or "mixed"

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.vertices)


def path_direction(c: Coloring, vertices: tuple[int, ...]) -> str:
    steps = list(zip(vertices, vertices[1:]))
    if all(c[b] == c.succ(c[a]) for a, b in steps):
        return "forward"
    if all(c[b] == c.pred(c[a]) for a, b in steps):
        return "backward"
    return "mixed"


def is_colorful_path(g: Graph, c: Coloring, vertices: tuple[int, ...]) -> bool:
    return (
        len(vertices) == c.chi
        and len(set(vertices)) == c.chi
        and {c[v] for v in vertices} == set(range(1, c.chi + 1))
        and all(g.has_edge(a, b) for a, b in zip(vertices, vertices[1:]))
    )


def find_colorful_path(g: Graph, c: Coloring, v: int) -> ColorfulPath | None:
    """Lexicographically least colorful path starting at ``v``, by backtracking."""
    chi = c.chi
    path = [v]
    seen_colors = 1 << c[v]

    def rec() -> bool:
        nonlocal seen_colors
        if len(path) == chi:
            return True
        for u in g.adj[path[-1]]:
            bit = 1 << c[u]
            if seen_colors & bit:
                continue  # also rules out revisiting a vertex
            path.append(u)
            seen_colors |= bit
            if rec():
                return True
            seen_colors &= ~bit
            path.pop()
        return False

    if not rec():
        return None
    found = tuple(path)
    return ColorfulPath(found, path_direction(c, found))


def _three_color_witness(out, inn, c: Coloring, v: int) -> ColorfulPath | None:
    # with three colors every colorful path is an oriented 2-path leaving or entering v
    fwd = next(((v, a, out[a][0]) for a in out[v] if out[a]), None)
    bwd = next(((v, a, inn[a][0]) for a in inn[v] if inn[a]), None)
    if fwd is None and bwd is None:
        return None
    if bwd is None or (fwd is not None and fwd < bwd):
        return ColorfulPath(fwd, "forward")
    return ColorfulPath(bwd, "backward")


@dataclass(frozen=True)
class CertificationReport:
    certified: dict[int, ColorfulPath | None]
    uncertified: frozenset[int]
    problems: tuple[str, ...] = field(default=())

    def render(self) -> str:
        lines = []
        for v in sorted(self.certified):
            path = self.certified[v]
            if path is None:
                lines.append(f"{v + 1}: UNCERTIFIED")
            else:
                lines.append(f"{v + 1}: " + " ".join(str(u + 1) for u in path.vertices))
        lines.extend(f"problem: {p}" for p in self.problems)
        return "\n".join(lines) + "\n"


def certify_all(g: Graph, c: Coloring, d=None) -> CertificationReport:
    """Witness per vertex; ``d`` may pass an already built orientation of ``c``."""
    if c.chi == 3:
        from .digraph import build_dc

        d = d if d is not None else build_dc(g, c)
        paths = {v: _three_color_witness(d.out, d.inn, c, v) for v in range(g.n)}
    else:
        paths = {v: find_colorful_path(g, c, v) for v in range(g.n)}
    missing = frozenset(v for v, p in paths.items() if p is None)
    return CertificationReport(paths, missing)


def verify_solution(
    g: Graph, c: Coloring, check_chromatic: bool = False
) -> tuple[bool, CertificationReport]:
    problems = []
    if len(c) != g.n:
        problems.append(f"coloring covers {len(c)} vertices, graph has {g.n}")
        return False, CertificationReport({}, frozenset(), tuple(problems))
    proper = is_proper(g, c)
    if not proper:
        bad = [(u, v) for u, v in g.edges() if c[u] == c[v]]
        problems.extend(f"monochromatic edge {u + 1}-{v + 1}" for u, v in bad)
    missing = set(range(1, c.chi + 1)) - c.used()
    if missing:
        problems.append(f"colors never used: {sorted(missing)}")
    if check_chromatic and g.n:
        try:
            chi = chromatic_number(g, limit=c.chi)
        except LimitExceeded:
            problems.append(f"chromatic number exceeds the {c.chi} colors used")
        else:
            if chi != c.chi:
                problems.append(f"uses {c.chi} colors but the chromatic number is {chi}")
    if not proper:
        paths = {v: find_colorful_path(g, c, v) for v in range(g.n)}
        report = CertificationReport(paths, frozenset(v for v, p in paths.items() if p is None))
    else:
        report = certify_all(g, c)
    if report.uncertified:
        problems.append(f"{len(report.uncertified)} vertices without a colorful path")
    report = CertificationReport(report.certified, report.uncertified, tuple(problems))
    return not problems, report


# ---------------------------------------------------------------- coloring files


def parse_coloring(text: bytes | str, n: int | None = None, chi: int | None = None) -> Coloring:
    """Read ``v <id> <color>`` lines (1-based ids); ``chi`` defaults to the largest color."""
    found: dict[int, int] = {}
    for lineno, line in enumerate(_lines(text), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] != "v" or len(parts) != 3:
            raise ParseError("expected 'v <vertex> <color>'", lineno)
        try:
            v, col = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError("non-integer field", lineno) from None
        if v < 1 or (n is not None and v > n):
            raise ParseError(f"vertex {v} out of range", lineno)
        if col < 1:
            raise ParseError(f"color {col} must be positive", lineno)
        if v - 1 in found:
            raise ParseError(f"vertex {v} colored twice", lineno)
        found[v - 1] = col
    size = n if n is not None else (max(found) + 1 if found else 0)
    absent = [v + 1 for v in range(size) if v not in found]
    if absent:
        raise ParseError(f"vertices without a color: {absent[:10]}")
    if set(found) - set(range(size)):
        raise ParseError("coloring names vertices outside the graph")
    k = chi if chi is not None else max(found.values(), default=1)
    return Coloring(k, tuple(found[v] for v in range(size)))


def format_coloring(c: Coloring, comment: str | None = None) -> str:
    out = [f"c {line}" for line in comment.splitlines()] if comment else []
    out.extend(f"v {v + 1} {col}" for v, col in enumerate(c.colors))
    return "\n".join(out) + "\n"
