import json

import pytest

from colorpaths.graph import Graph, complete, cycle
from colorpaths.oracle import (
    OracleSizeError,
    exhaustive_certifying_search,
    independent_path_check,
    proper_colorings,
    sweep_small_graphs,
)
from colorpaths.certify import verify_solution

from conftest import col


def test_c7_has_no_certifying_coloring():
    v = exhaustive_certifying_search(cycle(7), 3, "C7", up_to_renaming=False)
    assert not v.exists_certifying_coloring and v.witness is None
    # proper 3-colorings of C_n: 2^n + 2(-1)^n
    assert v.colorings_examined == 2 ** 7 - 2


def test_c5_and_triangle_have_witnesses():
    for g in (cycle(5), complete(3)):
        v = exhaustive_certifying_search(g, 3)
        assert v.exists_certifying_coloring
        assert verify_solution(g, v.witness)[0]


def test_counts_match_chromatic_polynomial():
    for n in (4, 5, 6, 9):
        assert sum(1 for _ in proper_colorings(cycle(n), 3)) == 2 ** n + 2 * (-1) ** n
    assert sum(1 for _ in proper_colorings(complete(4), 3)) == 0
    assert sum(1 for _ in proper_colorings(complete(3), 3, up_to_renaming=True)) == 1


def test_size_guard():
    with pytest.raises(OracleSizeError):
        exhaustive_certifying_search(cycle(15), 3)
    with pytest.raises(OracleSizeError):
        sweep_small_graphs(8)


def test_independent_path_check():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    c = col(1, 2, 3)
    assert independent_path_check(p3, c, 0)
    assert independent_path_check(p3, c, 2)
    # the middle vertex only reaches paths on two vertices
    assert not independent_path_check(p3, c, 1)


def test_small_sweep():
    s = sweep_small_graphs(5, 3)
    assert s.discrepancies == 0
    assert s.exceptions == 0
    assert s.solved == s.chi_matched > 0
    # every labeled graph is examined once
    assert s.examined == sum(2 ** (n * (n - 1) // 2) for n in range(1, 6))
    data = json.loads(s.to_json())
    assert data["per_n"]["5"]["examined"] == 1024
    assert "discrepancies=0" in s.text()
