import random

import pytest

from colorpaths.certify import (
    certify_all,
    find_colorful_path,
    format_coloring,
    is_colorful_path,
    parse_coloring,
    verify_solution,
)
from colorpaths.graph import Coloring, ParseError, complete, complete_bipartite, cycle, find_proper_coloring
from colorpaths.digraph import build_dc, level_partition, nice_levels
from colorpaths.oracle import independent_path_check, proper_colorings

from conftest import col, path_graph, random_chromatic, random_connected


def test_triangle_every_vertex_certified():
    rep = certify_all(complete(3), col(1, 2, 3))
    assert not rep.uncertified
    assert all(is_colorful_path(complete(3), col(1, 2, 3), p.vertices) for p in rep.certified.values())


def test_c5_example_path():
    # 0,1,2 walk one side, 4,3 the other: v0 v1 v2 v2' v1'
    c = col(3, 1, 2, 3, 1)
    p = find_colorful_path(cycle(5), c, 3)
    assert p.vertices == (3, 2, 1)
    assert [c[v] for v in p.vertices] == [3, 2, 1]


def test_bipartite_all_certified():
    g = complete_bipartite(2, 3)
    c = Coloring(2, (1, 1, 2, 2, 2))
    assert not certify_all(g, c).uncertified
    assert verify_solution(g, c)[0]


def test_c7_periodic_coloring_leaves_a_vertex():
    g, c = cycle(7), col(1, 2, 3, 1, 2, 3, 2)
    rep = certify_all(g, c)
    expect = {v for v in range(7) if not independent_path_check(g, c, v)}
    assert rep.uncertified == expect and expect


def test_every_c7_coloring_fails():
    g = cycle(7)
    for c in proper_colorings(g, 3):
        assert certify_all(g, c).uncertified


def test_witness_paths_are_valid_and_directed():
    for seed in range(40):
        g = random_chromatic(seed, 3, 6, 12)
        c = find_proper_coloring(g, 3, seed)
        for v, p in certify_all(g, c).certified.items():
            if p is None:
                continue
            assert p.vertices[0] == v
            assert is_colorful_path(g, c, p.vertices)
            assert p.direction in ("forward", "backward")


def test_uncertified_vertices_sit_on_level_two():
    hits = 0
    for seed in range(200):
        g = random_chromatic(seed, 3, 6, 9)
        for c in proper_colorings(g, 3, up_to_renaming=True):
            lp = nice_levels(build_dc(g, c))
            if lp is None:
                continue
            unc = certify_all(g, c).uncertified
            hits += bool(unc)
            assert unc <= lp.level(2)
        if hits > 50:
            break
    assert hits


def test_general_search_agrees_with_shortcut():
    rng = random.Random(3)
    for seed in range(60):
        g = random_chromatic(seed, 3, 5, 10)
        c = find_proper_coloring(g, 3, rng.randrange(1000))
        fast = certify_all(g, c).uncertified
        slow = frozenset(v for v in range(g.n) if find_colorful_path(g, c, v) is None)
        assert fast == slow


def test_four_colors_use_general_search():
    g = complete(4)
    c = Coloring(4, (1, 2, 3, 4))
    rep = certify_all(g, c)
    assert not rep.uncertified
    assert rep.certified[0].vertices == (0, 1, 2, 3)


def test_verify_solution_problems():
    k3 = complete(3)
    ok, rep = verify_solution(k3, col(1, 1, 2))
    assert not ok and any("monochromatic" in p for p in rep.problems)
    ok, rep = verify_solution(path_graph(2), col(1, 2))
    assert not ok and any("never used" in p for p in rep.problems)
    ok, rep = verify_solution(k3, col(1, 2))
    assert not ok
    # proper, certified, but more colors than needed
    c6, c = cycle(6), col(1, 2, 3, 1, 2, 3)
    assert verify_solution(c6, c)[0]
    ok, rep = verify_solution(c6, c, check_chromatic=True)
    assert not ok and any("chromatic number is 2" in p for p in rep.problems)
    ok, rep = verify_solution(complete(4), col(1, 2, 3, 1), check_chromatic=True)
    assert not ok


def test_render():
    ok, rep = verify_solution(cycle(7), col(1, 2, 3, 1, 2, 3, 2))
    text = rep.render()
    assert "UNCERTIFIED" in text and "problem:" in text
    assert text.splitlines()[0].startswith("1: ")


def test_coloring_file_round_trip():
    c = col(3, 1, 2, 3, 1)
    assert parse_coloring(format_coloring(c, comment="five")) == c
    assert parse_coloring("v 1 1\nv 2 2\n", chi=3).chi == 3


@pytest.mark.parametrize("text", [
    "v 1\n", "v 1 x\n", "v 0 1\n", "v 1 0\n", "v 1 1\nv 1 2\n", "v 2 1\n", "w 1 1\n",
])
def test_coloring_file_errors(text):
    with pytest.raises(ParseError):
        parse_coloring(text)


def test_coloring_file_range():
    with pytest.raises(ParseError):
        parse_coloring("v 1 1\nv 2 2\nv 3 1\n", n=2)
    with pytest.raises(ValueError):
        parse_coloring("v 1 4\n", chi=3)


def test_level_two_bound_on_nice_colorings_random():
    for seed in range(30):
        g = random_connected(random.Random(seed), 8, 0.3)
        c = find_proper_coloring(g, 3, seed)
        if c is None:
            continue
        lp = nice_levels(build_dc(g, c))
        if lp is not None:
            assert certify_all(g, c).uncertified <= lp.level(2)
            assert lp.height == level_partition(build_dc(g, c)).height
