from itertools import combinations

import pytest
from hypothesis import given, settings

from necvc.baselines import (
    BudgetExhausted,
    brute_force_mvc,
    exact_mvc,
    greedy_degree,
    matching_2approx,
    matching_lower_bound,
)
from necvc.evaluation import verify_cover
from necvc.graph_core import (
    Graph,
    gen_bipartite,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_random_gnm,
    gen_random_gnp,
)

from .conftest import graphs


def maximal_matching_sizes(g):
    """Sizes of every maximal matching, by enumerating edge subsets."""
    edges = g.edge_list()
    sizes = set()
    for k in range(len(edges) + 1):
        for sub in combinations(edges, k):
            used = [x for e in sub for x in e]
            if len(used) != len(set(used)):
                continue
            if all(u in used or v in used for u, v in edges):
                sizes.add(k)
    return sizes


def test_match2_examples():
    assert matching_2approx(Graph(2, [(0, 1)]), 0).sorted() == [0, 1]
    assert matching_2approx(Graph(4), 0).size == 0
    assert maximal_matching_sizes(gen_complete(5)) == {2}
    for seed in range(50):
        assert matching_2approx(gen_complete(5), seed).size == 4


def test_match2_seeded():
    g = gen_random_gnp(30, 0.2, 1)
    assert matching_2approx(g, 5) == matching_2approx(g, 5)
    assert len({matching_2approx(g, s).vertices for s in range(10)}) > 1


@settings(max_examples=100)
@given(graphs(max_n=10))
def test_match2_properties(g):
    c = matching_2approx(g, 3)
    assert verify_cover(g, c).valid
    assert c.size % 2 == 0
    if g.m <= 12:
        assert c.size // 2 in maximal_matching_sizes(g)
    assert c.size <= 2 * brute_force_mvc(g).size


def test_greedy_examples():
    assert greedy_degree(gen_bipartite(4, 1)).sorted() == [4]
    assert greedy_degree(gen_bipartite(5, 3)).size == 3
    assert greedy_degree(gen_path(5)).size == 2
    assert brute_force_mvc(gen_path(5)).size == 2


def test_greedy_trace_bipartite():
    # degree-5 side exhausted first, in index order
    assert greedy_degree(gen_bipartite(5, 3)).vertices == (5, 6, 7)


def test_greedy_trace_p5():
    # 1 (first of degree 2), then 3 (the only degree-2 vertex left)
    assert greedy_degree(gen_path(5)).vertices == (1, 3)


@settings(max_examples=100)
@given(graphs(max_n=11))
def test_greedy_valid(g):
    assert verify_cover(g, greedy_degree(g)).valid


@pytest.mark.parametrize(
    "g, size",
    [
        (gen_cycle(5), 3),
        (gen_bipartite(3, 3), 3),
        (gen_petersen(), 6),
        (gen_complete(7), 6),
        (Graph(5), 0),
    ],
)
def test_exact_examples(g, size):
    assert brute_force_mvc(g).size == size
    c = exact_mvc(g)
    assert c.size == size and verify_cover(g, c).valid


@pytest.mark.parametrize("k", [2, 3, 10, 25])
def test_exact_complete(k):
    assert exact_mvc(gen_complete(k)).size == k - 1


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=11))
def test_exact_matches_brute_force(g):
    c = exact_mvc(g)
    assert verify_cover(g, c).valid
    assert c.size == brute_force_mvc(g).size


def test_exact_sparse_sixty():
    g = gen_random_gnm(60, 90, 2)
    c = exact_mvc(g)
    assert verify_cover(g, c).valid
    assert matching_lower_bound(g) <= c.size <= greedy_degree(g).size


def test_exact_budget_reports_unknown():
    g = gen_random_gnp(40, 0.5, 1)
    with pytest.raises(BudgetExhausted) as exc:
        exact_mvc(g, budget=5)
    err = exc.value
    assert verify_cover(g, err.best).valid
    assert err.lower_bound <= err.best.size


def test_brute_force_limit():
    with pytest.raises(ValueError):
        brute_force_mvc(Graph(30))


def test_lower_bound_examples():
    assert matching_lower_bound(gen_complete(5)) == 2
    assert matching_lower_bound(Graph(4)) == 0
    assert matching_lower_bound(Graph(2, [(0, 1)])) == 1


@settings(max_examples=100)
@given(graphs(max_n=11))
def test_lower_bound_sandwich(g):
    lb = matching_lower_bound(g)
    opt = brute_force_mvc(g).size
    assert lb <= opt <= 2 * lb
