"""Colorings in which every vertex starts a colorful path."""
from .certify import (
    CertificationReport,
    ColorfulPath,
    certify_all,
    find_colorful_path,
    format_coloring,
    parse_coloring,
    verify_solution,
)
from .digraph import (
    ColorDigraph,
    LevelPartition,
    build_dc,
    find_oriented_cycle,
    initial_recolor,
    is_initial_section,
    is_terminal_section,
    level_partition,
    reachable_to,
    switch_recolor,
    terminal_recolor,
)
from .engine import SolveOutcome, StepRecord, odd_cycle_coloring, solve, twin_reduce
from .graph import (
    Coloring,
    Graph,
    GraphSpec,
    chromatic_number,
    find_cycle4,
    find_proper_coloring,
    find_twins,
    generate,
    is_connected,
    is_proper,
    parse_graph,
    to_dimacs,
)
from .oracle import exhaustive_certifying_search, independent_path_check, sweep_small_graphs

__version__ = "0.1.0"
