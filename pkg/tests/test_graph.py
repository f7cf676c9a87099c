import random

import pytest

from colorpaths.graph import (
    Coloring,
    Graph,
    GenerationError,
    GraphSpec,
    LimitExceeded,
    ParseError,
    chromatic_number,
    complete,
    complete_bipartite,
    cycle,
    cycle_order,
    find_cycle4,
    find_proper_coloring,
    find_twins,
    generate,
    is_c7,
    is_connected,
    is_proper,
    parse_graph,
    petersen,
    to_dimacs,
    to_edge_list,
)
from colorpaths.oracle import _masks, _pairs, mask_chromatic_number

from conftest import col, random_connected


def test_parse_triangle():
    g = parse_graph(b"p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == complete(3)


def test_parse_c7_with_comments():
    text = "c seven cycle\np edge 7 7\n" + "".join(f"e {i + 1} {(i + 1) % 7 + 1}\n" for i in range(7))
    assert parse_graph(text) == cycle(7)


def test_parse_self_loop_names_line():
    with pytest.raises(ParseError) as err:
        parse_graph("p edge 2 1\ne 1 1\n")
    assert err.value.line == 2


@pytest.mark.parametrize("text, line", [
    ("e 1 2\n", 1),
    ("p edge x 1\n", 1),
    ("p edge 3 1\ne 1 4\n", 2),
    ("p edge 3 1\np edge 3 1\n", 2),
    ("p edge 3 1\ne 1\n", 2),
    ("p edge 3 1\nq 1 2\n", 2),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_graph(text)
    assert err.value.line == line


def test_parse_missing_header():
    with pytest.raises(ParseError):
        parse_graph("c nothing\n")


def test_duplicate_edges_collapse():
    g = parse_graph("p edge 2 3\ne 1 2\ne 2 1\ne 1 2\n")
    assert g.m == 1


def test_edge_list_format():
    g = parse_graph("0 1\n1 2\n# comment\n2 0\n", "edge-list")
    assert g == complete(3)
    with pytest.raises(ParseError):
        parse_graph("3 3\n", "edge-list")


def test_round_trip_generated():
    for seed in range(20):
        g = random_connected(random.Random(seed), 9, 0.3)
        assert parse_graph(to_dimacs(g, comment="x")) == g
        assert parse_graph(to_edge_list(g), "edge-list") == g


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(2, ((1,), ()))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, ((1, 1), (0,)))


def test_is_connected():
    assert is_connected(complete(3))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(cycle(7))
    assert is_connected(Graph(0, ()))
    assert is_connected(Graph(1, ((),)))


def test_is_proper():
    k3 = complete(3)
    assert is_proper(k3, col(1, 2, 3))
    assert not is_proper(k3, col(1, 1, 2))
    assert is_proper(cycle(5), col(3, 1, 2, 3, 1))
    with pytest.raises(ValueError):
        is_proper(k3, col(1, 2))


def test_coloring_range_checked():
    with pytest.raises(ValueError):
        Coloring(3, (1, 4))
    c = col(1, 2, 3)
    assert c.shifted([0], -1).colors == (3, 2, 3)
    assert c.shifted([2], 1).colors == (1, 2, 1)
    assert c.succ(3) == 1 and c.pred(1) == 3


def test_chromatic_number_examples():
    assert chromatic_number(complete(4)) == 4
    assert chromatic_number(cycle(7)) == 3
    assert chromatic_number(petersen()) == 3


def test_petersen_chi_matches_independent_solver():
    g = petersen()
    adj = [sum(1 << u for u in g.adj[v]) for v in range(g.n)]
    assert mask_chromatic_number(adj, g.n) == 3


def test_chromatic_number_limit():
    with pytest.raises(LimitExceeded):
        chromatic_number(complete(5), limit=4)
    assert chromatic_number(complete(5), limit=5) == 5


def test_chromatic_number_agrees_with_mask_solver():
    for n in range(1, 7):
        pairs = _pairs(n)
        rng = random.Random(n)
        for _ in range(40):
            bits = rng.getrandbits(len(pairs)) if pairs else 0
            g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
            assert chromatic_number(g) == mask_chromatic_number(_masks(n, bits, pairs), n)


def test_find_proper_coloring():
    for seed in range(5):
        c = find_proper_coloring(cycle(7), 3, seed)
        assert c is not None and is_proper(cycle(7), c)
        assert find_proper_coloring(complete(4), 3, seed) is None
        k3 = find_proper_coloring(complete(3), 3, seed)
        assert sorted(k3.colors) == [1, 2, 3]


def test_find_proper_coloring_at_chromatic_number():
    for seed in range(30):
        g = random_connected(random.Random(seed), 10, 0.35)
        k = chromatic_number(g)
        assert find_proper_coloring(g, k, seed) is not None


def test_find_twins():
    assert find_twins(cycle(4)) == (0, 2)
    assert find_twins(cycle(5)) is None
    g = Graph.from_edges(
        8, [(i, (i + 1) % 7) for i in range(7)] + [(7, 1), (7, 6)])
    assert find_twins(g) == (0, 7)


def test_find_twins_none_when_neighbourhoods_distinct():
    for seed in range(50):
        g = random_connected(random.Random(seed), 8, 0.4)
        hoods = [g.neighbors(v) for v in range(g.n)]
        distinct = len(set(hoods)) == len(hoods)
        assert (find_twins(g) is None) == distinct


def test_find_cycle4():
    assert find_cycle4(cycle(4)) == (0, 1, 2, 3)
    x1, x2, x3, x4 = find_cycle4(complete(4))
    k4 = complete(4)
    assert all(k4.has_edge(a, b) for a, b in [(x1, x2), (x2, x3), (x3, x4), (x4, x1)])
    assert find_cycle4(cycle(5)) is None
    assert find_cycle4(petersen()) is None


def test_generate_basic_kinds():
    assert generate(GraphSpec("cycle", n=7)) == cycle(7)
    assert generate(GraphSpec("complete", n=4)) == complete(4)
    assert generate(GraphSpec("complete-bipartite", n=2, m=3)) == complete_bipartite(2, 3)


def test_generate_random_chromatic():
    g = generate(GraphSpec("random-chromatic", n=12, chi=3, seed=7))
    assert is_connected(g)
    adj = [sum(1 << u for u in g.adj[v]) for v in range(g.n)]
    assert mask_chromatic_number(adj, g.n) == 3


def test_generate_deterministic():
    spec = GraphSpec("random-chromatic", n=14, chi=4, p=0.4, seed=3)
    assert generate(spec) == generate(spec)


def test_generate_validation():
    with pytest.raises(ValueError):
        GraphSpec("cycle", n=2)
    with pytest.raises(ValueError):
        GraphSpec("wheel", n=5)
    with pytest.raises(GenerationError):
        generate(GraphSpec("random-chromatic", n=4, chi=4, p=0.01, seed=1, max_retries=3))


def test_cycle_helpers():
    assert is_c7(cycle(7)) and not is_c7(cycle(5))
    assert cycle_order(cycle(5), 2) == [2, 1, 0, 4, 3]
