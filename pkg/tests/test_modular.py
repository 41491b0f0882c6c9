from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphs.core import Graph
from graphs.errors import GraphError, PreconditionError
from graphs.modular import (
    HomogeneousSet,
    decompose_by_homogeneous_set,
    find_proper_homogeneous_set,
    is_homogeneous,
    is_prime,
    substitute,
    substitution_order,
)
from strategies import graphs
from toolkit.enumeration import iter_graphs


def brute_homogeneous(g: Graph, subset) -> bool:
    """Her dış köşe kümeye ya tam ya anti-tam"""
    for v in set(g.vertices()) - set(subset):
        hits = {g.has_edge(v, u) for u in subset}
        if len(hits) > 1:
            return False
    return True


def proper_subsets(g: Graph):
    for size in range(2, g.n):
        yield from combinations(range(g.n), size)


def test_square_has_diagonal_module():
    assert find_proper_homogeneous_set(Graph.cycle(4)) == HomogeneousSet(frozenset({0, 2}))


def test_complete_graph_module_is_inclusion_maximal():
    assert find_proper_homogeneous_set(Graph.complete(4)).members == frozenset({0, 1, 2})
    assert find_proper_homogeneous_set(Graph.empty(3)).members == frozenset({0, 1})


@pytest.mark.parametrize("g", [Graph.path(4), Graph.path(5), Graph.cycle(5), Graph.empty(2), Graph.empty(1)])
def test_prime_graphs(g):
    assert is_prime(g)


def test_substitute_labeling():
    result = substitute(Graph.path(4), 2, Graph.complete(2))
    assert result.edges() == [(0, 1), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    with pytest.raises(GraphError):
        substitute(Graph.path(4), 4, Graph.complete(2))
    with pytest.raises(GraphError):
        substitute(Graph.path(4), 0, Graph.empty(0))


def test_decompose_by_homogeneous_set_inverts_substitute():
    g = substitute(Graph.path(4), 2, Graph.complete(2))
    inner, outer, x = decompose_by_homogeneous_set(g, {3, 4})
    assert inner == Graph.complete(2)
    assert outer.edges() == [(0, 1), (1, 3), (2, 3)]
    assert x == 3
    assert substitute(outer, x, inner).relabel(substitution_order(g, {3, 4})) == g


def test_precondition_reasons():
    g = Graph.path(4)
    with pytest.raises(PreconditionError) as info:
        decompose_by_homogeneous_set(g, {0})
    assert info.value.reason == "not-proper"
    with pytest.raises(PreconditionError) as info:
        decompose_by_homogeneous_set(g, {0, 1, 2, 3})
    assert info.value.reason == "not-proper"
    with pytest.raises(PreconditionError) as info:
        decompose_by_homogeneous_set(g, {0, 1})
    assert info.value.reason == "not-homogeneous"
    assert info.value.certificate == (2,)


def test_homogeneous_set_violations():
    g = Graph.path(4)
    assert [v.clause for v in HomogeneousSet(frozenset({0, 1})).violations(g)] == ["homogeneous"]
    assert [v.clause for v in HomogeneousSet(frozenset({0})).violations(g)] == ["proper"]
    assert HomogeneousSet(frozenset({0, 2})).violations(Graph.cycle(4)) == []


@pytest.mark.parametrize("n", range(6))
def test_module_search_matches_brute_force(n):
    for g in iter_graphs(n):
        found = find_proper_homogeneous_set(g)
        exists = any(brute_homogeneous(g, s) for s in proper_subsets(g))
        assert (found is not None) == exists
        if found is not None:
            assert found.is_valid(g)
            for w in set(g.vertices()) - found.members:
                bigger = found.members | {w}
                assert len(bigger) == g.n or not brute_homogeneous(g, bigger)


@given(graphs(max_n=9))
def test_decomposition_round_trip(g):
    module = find_proper_homogeneous_set(g)
    if module is None:
        return
    assert is_homogeneous(g, module.members)
    inner, outer, x = decompose_by_homogeneous_set(g, module)
    assert inner.n < g.n and outer.n < g.n
    assert substitute(outer, x, inner).relabel(substitution_order(g, module)) == g


@given(graphs(min_n=2, max_n=6), graphs(min_n=2, max_n=5), st.data())
def test_substitution_round_trip(outer, inner, data):
    x = data.draw(st.integers(min_value=0, max_value=outer.n - 1))
    g = substitute(outer, x, inner)
    planted = range(outer.n - 1, g.n)
    assert is_homogeneous(g, planted)
    assert find_proper_homogeneous_set(g) is not None

    inner2, outer2, x2 = decompose_by_homogeneous_set(g, planted)
    assert inner2 == inner
    assert x2 == outer.n - 1
    moved = [v if v < x else v - 1 for v in range(outer.n)]
    moved[x] = outer.n - 1
    assert outer2 == outer.relabel(moved)
    assert substitute(outer2, x2, inner2) == g
    assert substitution_order(g, planted) == list(range(g.n))
