"""Brute-force ground truth, kept independent of the orientation machinery.

Nothing here imports :mod:`colorpaths.digraph` or :mod:`colorpaths.certify`'s
path search; path checks walk plain adjacency sets.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .graph import Coloring, Graph


class OracleSizeError(ValueError):
    """Instance too large for exhaustive enumeration."""


MAX_ORACLE_VERTICES = 14


@dataclass(frozen=True)
class OracleVerdict:
    graph_id: str
    exists_certifying_coloring: bool
    witness: Coloring | None
    colorings_examined: int


def independent_path_check(g: Graph, c: Coloring, v: int) -> bool:
    """True iff some simple path on ``chi`` vertices from ``v`` meets every color."""
    chi = c.chi
    nbrs = [set(a) for a in g.adj]

    def extend(path: list[int], colors: set[int]) -> bool:
        if len(path) == chi:
            return len(colors) == chi
        for u in nbrs[path[-1]]:
            if u in path or c[u] in colors:
                continue
            if extend(path + [u], colors | {c[u]}):
                return True
        return False

    return extend([v], {c[v]})


def _all_certified(g: Graph, c: Coloring) -> bool:
    return all(independent_path_check(g, c, v) for v in range(g.n))


def proper_colorings(g: Graph, chi: int, up_to_renaming: bool = False):
    """Yield every proper coloring with colors ``1..chi`` (vertex order 0..n-1).

    With ``up_to_renaming`` only the representative opening colors in
    increasing order is produced, which divides the count by ``chi!`` when all
    colors are used.
    """
    n = g.n
    cols = [0] * n
    earlier = [[u for u in g.adj[v] if u < v] for v in range(n)]

    def rec(v: int, top: int):
        if v == n:
            yield Coloring(chi, tuple(cols))
            return
        limit = min(top + 1, chi) if up_to_renaming else chi
        for col in range(1, limit + 1):
            if any(cols[u] == col for u in earlier[v]):
                continue
            cols[v] = col
            yield from rec(v + 1, max(top, col))
        cols[v] = 0

    yield from rec(0, 0)


def exhaustive_certifying_search(
    g: Graph,
    chi: int,
    graph_id: str = "",
    up_to_renaming: bool = True,
    max_vertices: int = MAX_ORACLE_VERTICES,
) -> OracleVerdict:
    if g.n > max_vertices:
        raise OracleSizeError(f"{g.n} vertices exceeds oracle guard of {max_vertices}")
    examined = 0
    for c in proper_colorings(g, chi, up_to_renaming):
        examined += 1
        if len(set(c.colors)) == chi and _all_certified(g, c):
            return OracleVerdict(graph_id, True, c, examined)
    return OracleVerdict(graph_id, False, None, examined)


# ---------------------------------------------------------------- labeled sweep


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _masks(n: int, bits: int, pairs) -> list[int]:
    adj = [0] * n
    for i, (u, v) in enumerate(pairs):
        if bits >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def _connected(adj: list[int], n: int) -> bool:
    full = (1 << n) - 1
    seen = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


def _colorable(adj: list[int], n: int, k: int) -> bool:
    cols = [0] * n

    def rec(v: int, top: int) -> bool:
        if v == n:
            return True
        for col in range(1, min(top + 1, k) + 1):
            m = adj[v] & ((1 << v) - 1)
            clash = False
            while m:
                low = m & -m
                if cols[low.bit_length() - 1] == col:
                    clash = True
                    break
                m ^= low
            if clash:
                continue
            cols[v] = col
            if rec(v + 1, max(top, col)):
                return True
        cols[v] = 0
        return False

    return rec(0, 0)


def mask_chromatic_number(adj: list[int], n: int) -> int:
    k = 1
    while not _colorable(adj, n, k):
        k += 1
    return k


def _is_labeled_cycle(adj: list[int], n: int) -> bool:
    return n >= 3 and all(bin(a).count("1") == 2 for a in adj)


@dataclass
class SweepSummary:
    n_max: int
    chi_target: int
    examined: int = 0
    connected: int = 0
    chi_matched: int = 0
    solved: int = 0
    exceptions: int = 0
    unsupported: int = 0
    oracle_negative: int = 0
    discrepancies: int = 0
    per_n: dict[int, dict[str, int]] = field(default_factory=dict)
    discrepancy_cases: list[str] = field(default_factory=list)

    _COUNTERS = ("examined", "connected", "chi_matched", "solved", "exceptions",
                 "unsupported", "oracle_negative", "discrepancies")

    def merge(self, other: "SweepSummary") -> None:
        for key in self._COUNTERS:
            setattr(self, key, getattr(self, key) + getattr(other, key))
        for n, counts in other.per_n.items():
            mine = self.per_n.setdefault(n, {})
            for key, val in counts.items():
                mine[key] = mine.get(key, 0) + val
        self.discrepancy_cases.extend(other.discrepancy_cases)

    def text(self) -> str:
        lines = [f"sweep n<={self.n_max} chi={self.chi_target}"]
        for key in self._COUNTERS:
            lines.append(f"{key}={getattr(self, key)}")
        for n in sorted(self.per_n):
            row = " ".join(f"{k}={v}" for k, v in sorted(self.per_n[n].items()))
            lines.append(f"n={n} {row}")
        lines.extend(f"discrepancy {case}" for case in self.discrepancy_cases)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = asdict(self)
        data["per_n"] = {str(k): v for k, v in self.per_n.items()}
        return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _sweep_chunk(args: tuple[int, int, int, int]) -> SweepSummary:
    from .certify import verify_solution
    from .engine import solve

    n, chi_target, start, stop = args
    pairs = _pairs(n)
    out = SweepSummary(n_max=n, chi_target=chi_target)
    counts = {"examined": 0, "connected": 0, "chi_matched": 0, "solved": 0, "exceptions": 0}
    for bits in range(start, stop):
        counts["examined"] += 1
        adj = _masks(n, bits, pairs)
        if not _connected(adj, n):
            continue
        counts["connected"] += 1
        if mask_chromatic_number(adj, n) != chi_target:
            continue
        counts["chi_matched"] += 1
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
        error = ""
        try:
            outcome = solve(g, chi=chi_target)
        except Exception as exc:  # a crash is itself a finding
            outcome = None
            error = f"{type(exc).__name__}: {exc}"
        label = f"n={n} edges={bits:#x}"
        if outcome is not None and outcome.status == "solved":
            ok, _ = verify_solution(g, outcome.coloring)
            if ok:
                counts["solved"] += 1
                continue
            out.discrepancy_cases.append(f"{label} solved-but-unverified")
            out.discrepancies += 1
            continue
        verdict = exhaustive_certifying_search(g, chi_target, graph_id=label)
        if not verdict.exists_certifying_coloring:
            out.oracle_negative += 1
        if outcome is not None and outcome.status == "exception-c7":
            counts["exceptions"] += 1
            if verdict.exists_certifying_coloring or not _is_labeled_cycle(adj, n) or n != 7:
                out.discrepancy_cases.append(f"{label} false-c7-exception")
                out.discrepancies += 1
            continue
        if outcome is not None and outcome.status == "unsupported":
            out.unsupported += 1
        if verdict.exists_certifying_coloring:
            reason = error if outcome is None else outcome.status
            out.discrepancy_cases.append(f"{label} {reason}")
            out.discrepancies += 1
        else:
            out.discrepancy_cases.append(f"{label} oracle-negative-non-c7")
            out.discrepancies += 1
    for key in ("examined", "connected", "chi_matched", "solved", "exceptions"):
        setattr(out, key, counts[key])
    out.per_n = {n: dict(counts)}
    return out


def _chunks(n_max: int, chi_target: int, parts: int) -> list[tuple[int, int, int, int]]:
    tasks = []
    for n in range(1, n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        # partition by the high bits of the edge mask, i.e. an adjacency-matrix prefix
        k = max(1, min(parts, total))
        step = -(-total // k)
        for start in range(0, total, step):
            tasks.append((n, chi_target, start, min(total, start + step)))
    return tasks


def sweep_small_graphs(n_max: int, chi_target: int = 3, jobs: int = 1) -> SweepSummary:
    if n_max > 7:
        raise OracleSizeError("labeled sweep is limited to n <= 7")
    tasks = _chunks(n_max, chi_target, max(1, jobs) * 8)
    summary = SweepSummary(n_max=n_max, chi_target=chi_target)
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            results = pool.map(_sweep_chunk, tasks)
    else:
        results = map(_sweep_chunk, tasks)
    for part in results:
        summary.merge(part)
    return summary
