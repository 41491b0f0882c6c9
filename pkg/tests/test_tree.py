import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from decomposition.divide import Side, validate_composable_pair
from decomposition.tree import (
    MEMBER_PATTERNS,
    PentagonLeaf,
    RecognitionResult,
    SplitLeaf,
    SubstitutionNode,
    UnifyNode,
    check_tree,
    complement_tree,
    decompose,
    decompose_perfect,
    pair_of,
    reconstruct,
    recognize,
    recognize_perfect,
)
from graphs.core import Graph
from graphs.detect import Pattern, SplitPartition, is_free
from graphs.errors import TreeError
from strategies import graphs
from toolkit.enumeration import brute_force_free, iter_graphs
from toolkit.generator import KINDS, GraphGenerator

STAR = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


def leaves(t):
    if isinstance(t, (SplitLeaf, PentagonLeaf)):
        return [t]
    if isinstance(t, SubstitutionNode):
        return leaves(t.outer) + leaves(t.inner)
    return leaves(t.left) + leaves(t.right)


def test_pentagon_is_a_leaf(pentagon):
    result = decompose(pentagon)
    assert result.tree == PentagonLeaf((0, 1, 2, 3, 4))
    assert reconstruct(result.tree) == pentagon


def test_path_is_rejected_with_witness(p5):
    result = decompose(p5)
    assert not result.is_member
    assert result.witness.pattern is Pattern.P5
    assert result.witness.vertices == (0, 1, 2, 3, 4)


def test_single_vertex_and_empty_graph():
    for g in (Graph.empty(0), Graph.empty(1)):
        result = decompose(g)
        assert isinstance(result.tree, SplitLeaf)
        assert reconstruct(result.tree) == g


def test_square_uses_substitution():
    g = Graph.cycle(4)
    tree = decompose(g).tree
    assert isinstance(tree, SubstitutionNode)
    assert check_tree(tree) == []
    assert reconstruct(tree) == g


@pytest.mark.parametrize("g", [Graph.complete(4), Graph.complete(6), STAR, Graph.path(4)])
def test_split_graphs_are_leaves(g):
    tree = decompose(g).tree
    assert isinstance(tree, SplitLeaf)
    assert tree.partition.violations(g) == []
    assert reconstruct(tree) == g

    perfect = decompose_perfect(g).tree
    assert isinstance(perfect, SplitLeaf)


def test_unify_roots(g7, g10):
    tree7 = decompose(g7).tree
    assert isinstance(tree7, UnifyNode) and tree7.side is Side.IN_G
    assert reconstruct(tree7) == g7
    assert validate_composable_pair(pair_of(tree7)) == []

    tree10 = decompose(g10).tree
    assert isinstance(tree10, UnifyNode) and tree10.side is Side.IN_COMPLEMENT
    assert reconstruct(tree10) == g10
    assert validate_composable_pair(pair_of(tree10)) == []


def test_perfect_subclass(pentagon, g7):
    result = decompose_perfect(pentagon)
    assert not result.is_member
    assert result.witness.pattern is Pattern.C5
    assert recognize(pentagon) and not recognize_perfect(pentagon)

    tree = decompose_perfect(g7).tree
    assert all(isinstance(leaf, SplitLeaf) for leaf in leaves(tree))
    assert reconstruct(tree) == g7


def test_result_requires_exactly_one_alternative():
    with pytest.raises(ValueError):
        RecognitionResult()


def test_check_tree_reports_paths():
    leaf = SplitLeaf(Graph.complete(2), SplitPartition(frozenset({0, 1}), frozenset()))
    bad = SubstitutionNode(leaf, 0, leaf, (0, 0, 1))
    assert [v.clause for v in check_tree(bad)] == ["root:substitution"]

    broken_leaf = SplitLeaf(Graph.complete(2), SplitPartition(frozenset(), frozenset({0, 1})))
    nested = SubstitutionNode(leaf, 1, broken_leaf, (0, 1, 2))
    assert [v.clause for v in check_tree(nested)] == ["root.inner:split-leaf"]


def test_reconstruct_rejects_bad_nodes():
    with pytest.raises(TreeError):
        reconstruct(PentagonLeaf((0, 1, 2, 3, 3)))
    leaf = SplitLeaf(Graph.complete(2), SplitPartition(frozenset({0, 1}), frozenset()))
    with pytest.raises(TreeError):
        reconstruct(SubstitutionNode(leaf, 5, leaf, (0, 1, 2)))


def test_complement_tree_of_pentagon(pentagon):
    tree = complement_tree(decompose(pentagon).tree)
    assert tree == PentagonLeaf((0, 2, 4, 1, 3))
    assert reconstruct(tree) == pentagon.complement()


@pytest.mark.parametrize("n", range(6))
def test_recognition_matches_brute_force(n):
    for g in iter_graphs(n):
        result = decompose(g)
        assert result.is_member == brute_force_free(g)
        if result.is_member:
            assert check_tree(result.tree) == []
            assert reconstruct(result.tree) == g
        else:
            assert result.witness.is_valid(g)


@settings(deadline=None)
@given(graphs(max_n=9))
def test_random_graph_trees_rebuild_exactly(g):
    result = decompose(g)
    assert result.is_member == is_free(g, MEMBER_PATTERNS)[0]
    if result.is_member:
        assert check_tree(result.tree) == []
        assert reconstruct(result.tree) == g
        assert reconstruct(complement_tree(result.tree)) == g.complement()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(KINDS), st.integers(min_value=1, max_value=14), st.integers(min_value=0, max_value=10_000))
def test_generated_members_decompose(kind, size, seed):
    graph, _ = GraphGenerator(seed=seed).generate(kind, size)
    tree = decompose(graph).tree
    assert tree is not None
    assert reconstruct(tree) == graph
    assert recognize(graph.complement())
