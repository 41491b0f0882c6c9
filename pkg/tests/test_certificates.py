import copy
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from config.settings import SCHEMA_VERSION
from decomposition.divide import find_split_divide
from decomposition.structure import build_structure_partition
from decomposition.tree import RecognitionResult, decompose
from graphs.core import Graph
from graphs.detect import is_split
from toolkit.certificates import (
    CertificateError,
    divide_document,
    dumps,
    loads,
    recognition_document,
    recognition_from_document,
    structure_document,
    structure_from_doc,
    tree_from_doc,
    tree_to_doc,
    verify_certificate,
)
from toolkit.generator import KINDS, GraphGenerator


def reload(doc):
    return loads(dumps(doc))


def test_recognition_document_shape(pentagon):
    doc = recognition_document(decompose(pentagon))
    assert doc["schema"] == SCHEMA_VERSION
    assert doc["kind"] == "recognition"
    assert doc["member"] is True
    assert doc["witness"] is None
    assert doc["tree"] == {"type": "pentagon_leaf", "n": 5, "order": [0, 1, 2, 3, 4]}


def test_member_certificates_verify(g7, g10):
    for g in (g7, g10, Graph.cycle(4), Graph.complete(3)):
        doc = reload(recognition_document(decompose(g)))
        assert verify_certificate(g, doc) == []
        assert recognition_from_document(doc) == decompose(g)


def test_witness_certificate_verifies(p5, pentagon):
    doc = reload(recognition_document(decompose(p5)))
    assert doc["member"] is False
    assert doc["witness"] == {"pattern": "P5", "vertices": [0, 1, 2, 3, 4]}
    assert verify_certificate(p5, doc) == []
    assert [v.clause for v in verify_certificate(pentagon, doc)] == ["adjacency"]


def test_tree_certificate_for_other_graph_fails(g7, g6):
    doc = recognition_document(decompose(g7))
    assert [v.clause for v in verify_certificate(g6, doc)] == ["tree"]

    other = Graph.from_edges(7, g7.edges()[1:])
    assert [v.clause for v in verify_certificate(other, doc)] == ["tree"]


def test_tampered_member_flag(pentagon):
    doc = recognition_document(decompose(pentagon))
    doc["member"] = False
    assert [v.clause for v in verify_certificate(pentagon, doc)] == ["member"]


def test_non_refuting_witness_is_rejected(pentagon):
    doc = {
        "schema": SCHEMA_VERSION, "kind": "recognition", "member": False, "tree": None,
        "witness": {"pattern": "C5", "vertices": [0, 1, 2, 3, 4]},
    }
    assert [v.clause for v in verify_certificate(pentagon, doc)] == ["witness"]


def test_divide_documents(g7, g10):
    for g in (g7, g10):
        doc = reload(divide_document(find_split_divide(g)))
        assert doc["split_partition"] is None
        assert verify_certificate(g, doc) == []

    doc = divide_document(find_split_divide(g7))
    assert doc["divide"] == {"side": "in_g", "a": [0, 1], "b": [5], "c": [2, 3], "l": [4], "t": [6], "a0": 0, "c0": 2}
    tampered = copy.deepcopy(doc)
    tampered["divide"]["b"] = [5, 6]
    tampered["divide"]["t"] = []
    assert "a-complete-b" in {v.clause for v in verify_certificate(g7, tampered)}


@pytest.mark.parametrize("name, value, clause", [
    ("a0", -1, "a0-complete-l"),
    ("a0", 99, "a0-complete-l"),
    ("c0", -1, "c0-complete-b"),
    ("c0", 4, "c0-complete-b"),
])
def test_distinguished_vertex_outside_its_set(g7, name, value, clause):
    doc = reload(divide_document(find_split_divide(g7)))
    doc["divide"][name] = value
    assert clause in {v.clause for v in verify_certificate(g7, doc)}


def test_split_partition_document():
    g = Graph.path(4)
    doc = reload(divide_document(None, is_split(g)))
    assert doc["divide"] is None
    assert doc["split_partition"] == {"clique": [1, 2], "stable": [0, 3]}
    assert verify_certificate(g, doc) == []
    assert [v.clause for v in verify_certificate(Graph.cycle(4), doc)] == ["stable"]


def test_structure_documents(g7, g10):
    doc = reload(structure_document(build_structure_partition(g10)))
    assert doc["partition"]["mixed_attach"] == [{"z": [6, 7], "x_z": [8]}]
    assert doc["partition"]["pivot"] == [6, 7]
    assert structure_from_doc(doc["partition"]) == build_structure_partition(g10)
    assert verify_certificate(g10, doc) == []

    doc = structure_document(build_structure_partition(g7))
    doc["partition"]["ys"] = [[4], [], [5]]
    assert "(ii)" in {v.clause for v in verify_certificate(g7, doc)}

    doc["partition"]["ys"] = [[], [4], []]
    assert [v.clause for v in verify_certificate(g7, doc)] == ["partition"]


@pytest.mark.parametrize("text", [
    "not json",
    json.dumps({"schema": "other/1", "kind": "recognition"}),
    json.dumps({"schema": SCHEMA_VERSION, "kind": "unknown"}),
    json.dumps([1, 2, 3]),
])
def test_loads_rejects_bad_documents(text):
    with pytest.raises(CertificateError):
        loads(text)


def test_malformed_tree_documents(pentagon):
    with pytest.raises(CertificateError):
        tree_from_doc({"type": "tree_of_life", "n": 1})
    with pytest.raises(CertificateError):
        tree_from_doc({"type": "pentagon_leaf", "n": 6, "order": [0, 1, 2, 3, 4]})
    with pytest.raises(CertificateError):
        tree_from_doc({"type": "split_leaf", "n": 2, "graph": {"n": 2, "edges": [[0, "1"]]},
                       "partition": {"clique": [0, 1], "stable": []}})
    doc = recognition_document(decompose(pentagon))
    del doc["tree"]["order"]
    with pytest.raises(CertificateError):
        verify_certificate(pentagon, doc)


def test_broken_tree_is_reported_not_raised(pentagon):
    doc = recognition_document(decompose(pentagon))
    doc["tree"]["order"] = [0, 1, 2, 3, 3]
    violations = verify_certificate(pentagon, doc)
    assert [v.clause for v in violations] == ["root:pentagon-leaf"]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(KINDS), st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=10_000))
def test_generated_certificates_round_trip(kind, size, seed):
    graph, tree = GraphGenerator(seed=seed).generate(kind, size)
    doc = reload(recognition_document(RecognitionResult(tree=tree)))
    assert tree_from_doc(doc["tree"]) == tree
    assert tree_to_doc(tree_from_doc(doc["tree"])) == doc["tree"]
    assert verify_certificate(graph, doc) == []
