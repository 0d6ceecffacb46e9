import itertools
import random

import pytest
from helpers import (
    all_maos_from,
    chain_violation,
    component,
    corpus,
    forests_by_definition,
    is_forest,
    mao_predicate,
    naive_mcs,
)

from maopaths import (
    MaoOrdering,
    PreconditionError,
    check_tree_system,
    compute_mao,
    forest_decomposition,
    random_graph,
    tree_system,
    verify_mao,
)


def order_of(ordering):
    return list(ordering.vert[1:])


def test_k4_and_p3_orders(k4, p3):
    assert order_of(compute_mao(k4, 1)) == [1, 2, 3, 4]
    assert order_of(compute_mao(p3, 1)) == [1, 2, 3]


def test_c4_order_is_the_tie_broken_mao(c4):
    valid = all_maos_from(c4, 1)
    assert [1, 2, 3, 4] in valid
    # Min-ID tie-breaking picks the lexicographically smallest valid MAO.
    assert order_of(compute_mao(c4, 1)) == min(valid) == [1, 2, 3, 4]


def test_start_out_of_range(k4):
    with pytest.raises(PreconditionError):
        compute_mao(k4, 5)
    with pytest.raises(PreconditionError):
        compute_mao(k4, 0)


def test_ordering_roundtrip():
    o = MaoOrdering.from_vertices([3, 1, 2])
    assert o.pos[3] == 1 and o.vert[2] == 1 and o.n == 3
    assert o.to_ids([1, 2, 3]) == [3, 1, 2]


def test_verify_mao_complete_graph_any_permutation(k4):
    for perm in itertools.permutations(range(1, 5)):
        assert verify_mao(k4, MaoOrdering.from_vertices(perm))


def test_verify_mao_star_rejects_two_leaves_first(star):
    v = verify_mao(star, MaoOrdering.from_vertices([2, 3, 1, 4]))
    assert not v
    assert v.where == (2, 3)


def test_verify_mao_c4_matches_predicate(c4):
    for perm in itertools.permutations(range(1, 5)):
        o = MaoOrdering.from_vertices(perm)
        assert bool(verify_mao(c4, o)) == (mao_predicate(c4, list(perm)) is None)
    # 1,3,2,4: vertex 3 enters with no placed neighbor while 2 and 4 have one.
    assert not verify_mao(c4, MaoOrdering.from_vertices([1, 3, 2, 4]))


@pytest.mark.parametrize("graph, start", [(g, rng.randint(1, g.n)) for g, rng in corpus(150, 14, (0.2, 0.5, 0.8), 11)])
def test_compute_mao_matches_naive_search(graph, start):
    assert order_of(compute_mao(graph, start)) == naive_mcs(graph, start)


def test_verify_mao_agrees_with_predicate_on_random_orders():
    rng = random.Random(5)
    for i in range(300):
        g = random_graph(rng.randint(2, 8), rng.choice((0.3, 0.6)), i)
        if rng.random() < 0.5:
            order = order_of(compute_mao(g, rng.randint(1, g.n)))
        else:
            order = rng.sample(range(1, g.n + 1), g.n)
        verdict = verify_mao(g, MaoOrdering.from_vertices(order))
        assert bool(verdict) == (mao_predicate(g, order) is None), (g, order)


def positional_forests(g, o):
    return {i: set(es) for i, es in forest_decomposition(g, o).forests().items()}


def test_forests_examples(k4, c4, p3):
    o = compute_mao(k4, 1)
    assert positional_forests(k4, o) == {
        1: {(1, 2), (1, 3), (1, 4)}, 2: {(2, 3), (2, 4)}, 3: {(3, 4)}}
    o = compute_mao(c4, 1)
    assert positional_forests(c4, o) == {1: {(1, 2), (2, 3), (1, 4)}, 2: {(3, 4)}}
    o = compute_mao(p3, 1)
    assert positional_forests(p3, o) == {1: {(1, 2), (2, 3)}}


def test_forest_index_lookup(c4):
    fd = forest_decomposition(c4, compute_mao(c4, 1))
    assert fd.forest_index(4, 3) == 2
    assert fd.left_degree(4) == 2
    with pytest.raises(KeyError):
        fd.forest_index(1, 3)


@pytest.mark.parametrize("seed", range(40))
def test_forests_match_definition_and_are_acyclic(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(2, 25), rng.choice((0.1, 0.3, 0.7)), seed)
    o = compute_mao(g, rng.randint(1, g.n))
    fd = forest_decomposition(g, o)
    expected = forests_by_definition(g, order_of(o))
    got = {e: i for i, es in fd.forests().items() for e in es}
    assert got == expected
    for es in fd.forests().values():
        assert is_forest(es)


def test_tree_system_k4(k4):
    o = compute_mao(k4, 1)
    ts = tree_system(k4, o, forest_decomposition(k4, o), 4, 3)
    assert ts.roots == (1, 2, 3)
    assert ts.span(3) == (3, 4)
    assert ts.left_of(4, 3) == 3


def test_tree_system_c4(c4):
    o = compute_mao(c4, 1)
    ts = tree_system(c4, o, forest_decomposition(c4, o), 4, 2)
    assert ts.roots == (1, 3)
    assert ts.span(1) == (1, 4) and ts.span(2) == (3, 4)
    assert (ts.left_of(4, 2), ts.left_of(4, 1), ts.left_of(3, 1), ts.left_of(2, 1)) == (3, 1, 2, 1)
    assert ts.union_size == 4
    assert ts.tree_index(3, 4) == 2 and ts.tree_index(1, 3) is None


def test_tree_system_errors(k4):
    o = compute_mao(k4, 1)
    fd = forest_decomposition(k4, o)
    with pytest.raises(PreconditionError, match="left-degree of s=4"):
        tree_system(k4, o, fd, 4, 4)
    with pytest.raises(PreconditionError):
        tree_system(k4, o, fd, 1, 1)
    with pytest.raises(PreconditionError):
        tree_system(k4, o, fd, 4, 0)


def test_tree_system_rejects_non_mao(c4):
    # 1,3,2,4 is not a MAO of C4; the interval structure breaks for T_1 at s=4.
    o = MaoOrdering.from_vertices([1, 3, 2, 4])
    with pytest.raises(AssertionError):
        tree_system(c4, o, forest_decomposition(c4, o), 4, 2)


@pytest.mark.parametrize("seed", range(60))
def test_tree_system_matches_components(seed):
    """Each T_i as computed by BFS over F_i equals the reported interval."""
    rng = random.Random(100 + seed)
    g = random_graph(rng.randint(3, 30), rng.choice((0.1, 0.3, 0.7)), 100 + seed)
    o = compute_mao(g, rng.randint(1, g.n))
    fd = forest_decomposition(g, o)
    forests = fd.forests()
    for s in range(2, g.n + 1):
        d = fd.left_degree(s)
        if d == 0:
            continue
        ts = tree_system(g, o, fd, s, d)
        assert check_tree_system(ts)
        for i in range(1, d + 1):
            comp = component(forests.get(i, []), s)
            r, top = ts.span(i)
            assert comp == set(range(r, top + 1))
            assert min(comp) == r and fd.left_degree(r) == i - 1
        assert list(ts.roots) == sorted(set(ts.roots))
        assert ts.roots[-1] < s
        assert chain_violation(ts) is None
