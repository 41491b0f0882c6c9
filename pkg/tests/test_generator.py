import pytest

from decomposition.divide import unify_pair, validate_composable_pair
from decomposition.tree import check_tree, reconstruct, recognize
from toolkit.generator import KINDS, GraphGenerator


@pytest.mark.parametrize("kind", KINDS)
def test_every_kind_and_size_is_a_member(kind):
    generator = GraphGenerator(seed=7)
    for size in range(1, 13):
        graph, tree = generator.generate(kind, size)
        assert graph.n == size
        assert recognize(graph)
        assert recognize(graph.complement())
        assert check_tree(tree) == []
        assert reconstruct(tree) == graph


@pytest.mark.parametrize("kind", KINDS)
def test_same_seed_same_output(kind):
    first = [GraphGenerator(seed=42).generate(kind, size) for size in (5, 9, 13)]
    second = [GraphGenerator(seed=42).generate(kind, size) for size in (5, 9, 13)]
    assert first == second


def test_split_leaf_is_split():
    graph, tree = GraphGenerator(seed=3).split_leaf(8)
    assert tree.partition.violations(graph) == []


def test_composable_pairs():
    generator = GraphGenerator(seed=11)
    for size in range(5, 15):
        pair, tree1, tree2 = generator.composable_pair(size)
        assert validate_composable_pair(pair) == []
        assert reconstruct(tree1) == pair.g1
        assert reconstruct(tree2) == pair.g2
        assert unify_pair(pair).n == size
    with pytest.raises(ValueError):
        generator.composable_pair(4)


@pytest.mark.parametrize("kind, size", [("tree", 5), ("split", 0), ("mixed", -1)])
def test_invalid_requests(kind, size):
    with pytest.raises(ValueError):
        GraphGenerator().generate(kind, size)


def test_leaf_mean_must_be_positive():
    with pytest.raises(ValueError):
        GraphGenerator(leaf_mean=0.5)
