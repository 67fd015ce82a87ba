from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from necvc.graph_core import (
    Cover,
    DimacsError,
    DuplicateEdgeWarning,
    Graph,
    complement,
    format_cover,
    gen_bipartite,
    gen_complete,
    gen_cycle,
    gen_hamming,
    gen_johnson,
    gen_path,
    gen_petersen,
    gen_random_gnm,
    gen_random_gnp,
    parse_cover,
    parse_dimacs,
    parse_edge_list,
    read_dimacs,
    to_dimacs,
)

from .conftest import graphs


def test_parse_basic():
    g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3")
    assert g.n == 3
    assert g.edge_list() == [(0, 1), (1, 2)]


def test_parse_collapses_duplicates_with_warning():
    with pytest.warns(DuplicateEdgeWarning):
        g = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1")
    assert g.edge_list() == [(0, 1)]


def test_parse_comments_and_col_synonym():
    g = parse_dimacs("c a comment\nc another\np col 4 1\n\ne 4 1\n")
    assert g.edge_list() == [(0, 3)]


@pytest.mark.parametrize(
    "text, match",
    [
        ("p edge 2 1\ne 1 1", "self-loop"),
        ("e 1 2\np edge 2 1", "before problem"),
        ("p edge 2 1\np edge 2 1\ne 1 2", "duplicate problem"),
        ("p edge 2 1\ne 1 3", "out of range"),
        ("p edge 2 1\ne 0 1", "out of range"),
        ("p edge 2 1\ne 1 x", "expected integer"),
        ("p edge 2 1\ne 1 2 3", "malformed edge"),
        ("p clique 2 1", "malformed problem"),
        ("c nothing", "missing problem"),
        ("p edge 2 1\nq 1 2", "unknown line"),
    ],
)
def test_parse_errors(text, match):
    with pytest.raises(DimacsError, match=match):
        parse_dimacs(text)


def test_parse_error_reports_line():
    with pytest.raises(DimacsError) as exc:
        parse_dimacs("c x\np edge 3 1\ne 1 1\n")
    assert exc.value.lineno == 3


def test_edge_list_keeps_raw_pairs():
    el = parse_edge_list("p edge 3 2\ne 2 1\ne 3 2\n")
    assert el.n == 3 and el.pairs == ((2, 1), (3, 2)) and el.declared_m == 2


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_graph_is_read_only():
    g = gen_complete(4)
    with pytest.raises(ValueError):
        g.edges[0, 0] = 3
    with pytest.raises(ValueError):
        g.degree[0] = 0


def test_adjacency_sorted_and_symmetric():
    g = Graph(5, [(4, 0), (2, 0), (3, 1), (0, 1)])
    assert g.neighbors(0).tolist() == [1, 2, 4]
    for v in range(g.n):
        nb = g.neighbors(v).tolist()
        assert nb == sorted(nb)
        for u in nb:
            assert v in g.neighbors(u).tolist()


def test_to_dimacs_exact_bytes():
    assert to_dimacs(Graph(3)) == "p edge 3 0\n"
    assert to_dimacs(Graph(3, [(1, 2), (0, 1)])) == "p edge 3 2\ne 1 2\ne 2 3\n"


def test_round_trip_k5():
    g = gen_complete(5)
    assert parse_dimacs(to_dimacs(g)) == g


@given(graphs())
def test_round_trip_property(g):
    assert parse_dimacs(to_dimacs(g)) == g


def _complement_by_enumeration(g):
    present = set(g.edge_list())
    return sorted(p for p in combinations(range(g.n), 2) if p not in present)


def test_complement_examples():
    assert complement(gen_complete(5)).m == 0
    k4 = complement(Graph(4))
    assert k4.m == 6 and k4 == gen_complete(4)
    assert complement(gen_path(3)).edge_list() == [(0, 2)]


@given(graphs())
def test_complement_matches_enumeration(g):
    c = complement(g)
    assert c.edge_list() == _complement_by_enumeration(g)
    assert c.m == g.n * (g.n - 1) // 2 - g.m
    assert complement(c) == g


@given(graphs())
def test_handshake(g):
    for h in (g, complement(g)):
        assert int(h.degree.sum()) == 2 * h.m
        assert [len(h.neighbors(v)) for v in range(h.n)] == h.degree.tolist()


def test_gen_complete():
    k5 = gen_complete(5)
    assert k5.m == 10 and set(k5.degree.tolist()) == {4}
    assert gen_complete(1).m == 0 and gen_complete(1).n == 1
    assert gen_complete(10).m == 45
    with pytest.raises(ValueError):
        gen_complete(0)


def test_gen_bipartite():
    g = gen_bipartite(5, 3)
    assert g.m == 15
    assert g.degree[:5].tolist() == [3] * 5
    assert g.degree[5:].tolist() == [5] * 3
    assert all(u < 5 <= v for u, v in g.edge_list())
    assert gen_bipartite(1, 1).edge_list() == [(0, 1)]
    star = gen_bipartite(4, 1)
    assert star.degree[4] == 4 and star.m == 4
    with pytest.raises(ValueError):
        gen_bipartite(0, 3)


@pytest.mark.parametrize("seed", [0, 1, 7, 2**63 + 5, -3])
def test_gen_gnm(seed):
    g = gen_random_gnm(14, 16, seed)
    assert g.n == 14 and g.m == 16
    assert gen_random_gnm(5, 10, seed) == gen_complete(5)
    assert gen_random_gnm(5, 0, seed).m == 0
    assert to_dimacs(gen_random_gnm(14, 16, seed)) == to_dimacs(g)


def test_gen_gnm_range():
    with pytest.raises(ValueError):
        gen_random_gnm(5, 11, 0)
    with pytest.raises(ValueError):
        gen_random_gnm(5, -1, 0)


def test_gen_gnp():
    assert gen_random_gnp(20, 0.0, 3).m == 0
    assert gen_random_gnp(20, 1.0, 3) == gen_complete(20)
    a, b = gen_random_gnp(16, 0.5, 11), gen_random_gnp(16, 0.5, 11)
    assert to_dimacs(a) == to_dimacs(b)
    assert gen_random_gnp(16, 0.5, 12) != a
    for bad in (-0.1, 1.5):
        with pytest.raises(ValueError):
            gen_random_gnp(5, bad, 0)


def test_gnp_edge_density_is_plausible():
    g = gen_random_gnp(200, 0.3, 5)
    pairs = 200 * 199 // 2
    assert abs(g.m / pairs - 0.3) < 0.02


@settings(max_examples=30)
@given(st.integers(1, 30), st.integers(0, 2**64 - 1), st.data())
def test_gnm_deterministic(n, seed, data):
    m = data.draw(st.integers(0, n * (n - 1) // 2))
    assert to_dimacs(gen_random_gnm(n, m, seed)) == to_dimacs(gen_random_gnm(n, m, seed))
    assert gen_random_gnm(n, m, seed).m == m


def test_small_families():
    assert gen_cycle(5).m == 5 and set(gen_cycle(5).degree.tolist()) == {2}
    p = gen_petersen()
    assert p.n == 10 and p.m == 15 and set(p.degree.tolist()) == {3}


def test_read_dimacs(tmp_path):
    f = tmp_path / "x.clq"
    f.write_text("c hi\np edge 4 2\ne 1 2\ne 3 4\n")
    assert read_dimacs(f).edge_list() == [(0, 1), (2, 3)]


def test_cover_file_round_trip():
    c = Cover((4, 0, 2))
    text = format_cover(c)
    assert text == "1\n3\n5\n"
    assert parse_cover("c comment\n" + text, n=5).as_set() == c.as_set()
    with pytest.raises(DimacsError):
        parse_cover("6\n", n=5)
    with pytest.raises(DimacsError):
        parse_cover("0\n")


def test_cover_rejects_repeats_and_checks_range():
    with pytest.raises(ValueError):
        Cover((1, 1))
    with pytest.raises(ValueError):
        Cover((5,)).mask(3)
    assert Cover((2, 0)).mask(3).tolist() == [True, False, True]
    assert np.array_equal(Cover(()).mask(2), [False, False])


@pytest.mark.parametrize(
    "g, n, m",
    [
        # every string has C(bits, 0) + C(bits, 1) vertices within distance 1
        (lambda: gen_hamming(6, 2), 64, 64 * (64 - 1 - 6) // 2),
        (lambda: gen_hamming(8, 2), 256, 256 * (256 - 1 - 8) // 2),
        # distance >= 4 between 2-subsets means disjoint
        (lambda: gen_johnson(8, 2, 4), 28, 28 * 15 // 2),
        # 4-subsets of 8 at distance >= 4 share at most 2 points
        (lambda: gen_johnson(8, 4, 4), 70, 70 * (1 + 16 + 36) // 2),
    ],
)
def test_clique_family_sizes(g, n, m):
    g = g()
    assert g.n == n and g.m == m
