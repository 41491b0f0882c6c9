"""
JSON sertifika belgeleri: tanıma sonucu, ayrıştırma ağacı, split bölücü ve yapı bölüşü
"""
import json
import logging
from typing import Any, Dict, List, Optional, Union

from config.settings import SCHEMA_VERSION
from decomposition.divide import PairRoles, Side, SplitDivide, validate_split_divide
from decomposition.structure import StructurePartition, validate_structure_partition
from decomposition.tree import (
    DecompTree,
    PentagonLeaf,
    RecognitionResult,
    SplitLeaf,
    SubstitutionNode,
    UnifyNode,
    check_tree,
    reconstruct,
)
from graphs.core import Graph
from graphs.detect import ForbiddenWitness, Pattern, SplitPartition
from graphs.errors import GraphError, TreeError, Violation

logger = logging.getLogger(__name__)

Document = Dict[str, Any]

ROLE_FIELDS = ("a", "b1", "l1", "t1", "b2", "c", "l2", "t2")
ROLE_VERTICES = ("c_star", "a0", "a_star", "c0")


class CertificateError(ValueError):
    """Şema uyuşmazlığı veya bozuk sertifika belgesi"""


def _ints(values: Any, name: str) -> List[int]:
    if not isinstance(values, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise CertificateError(f"'{name}' alanı tamsayı listesi olmalı")
    return list(values)


def _int(value: Any, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise CertificateError(f"'{name}' alanı tamsayı olmalı")
    return value


def _field(doc: Document, name: str) -> Any:
    if not isinstance(doc, dict):
        raise CertificateError(f"'{name}' beklenirken nesne olmayan değer bulundu")
    if name not in doc:
        raise CertificateError(f"'{name}' alanı eksik")
    return doc[name]


# Graf ve yapı taşları

def graph_to_doc(g: Graph) -> Document:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_doc(doc: Document) -> Graph:
    n = _int(_field(doc, "n"), "n")
    edges = _field(doc, "edges")
    if not isinstance(edges, list):
        raise CertificateError("'edges' alanı liste olmalı")
    pairs = []
    for edge in edges:
        if not isinstance(edge, list) or len(edge) != 2:
            raise CertificateError(f"Geçersiz kenar: {edge}")
        u, v = _ints(edge, "edges")
        pairs.append((u, v))
    try:
        return Graph.from_edges(n, pairs)
    except GraphError as e:
        raise CertificateError(f"Geçersiz graf: {e}") from e


def witness_to_doc(w: ForbiddenWitness) -> Document:
    return {"pattern": w.pattern.value, "vertices": list(w.vertices)}


def witness_from_doc(doc: Document) -> ForbiddenWitness:
    try:
        pattern = Pattern(_field(doc, "pattern"))
    except ValueError as e:
        raise CertificateError(f"Bilinmeyen kalıp: {doc.get('pattern')}") from e
    return ForbiddenWitness(pattern, tuple(_ints(_field(doc, "vertices"), "vertices")))


def partition_to_doc(p: SplitPartition) -> Document:
    return {"clique": sorted(p.clique), "stable": sorted(p.stable)}


def partition_from_doc(doc: Document) -> SplitPartition:
    return SplitPartition(
        frozenset(_ints(_field(doc, "clique"), "clique")),
        frozenset(_ints(_field(doc, "stable"), "stable")),
    )


def roles_to_doc(r: PairRoles) -> Document:
    doc: Document = {name: list(getattr(r, name)) for name in ROLE_FIELDS}
    doc.update({name: getattr(r, name) for name in ROLE_VERTICES})
    return doc


def roles_from_doc(doc: Document) -> PairRoles:
    values: Dict[str, Any] = {name: tuple(_ints(_field(doc, name), name)) for name in ROLE_FIELDS}
    values.update({name: _int(_field(doc, name), name) for name in ROLE_VERTICES})
    return PairRoles(**values)


def _side(value: Any) -> Side:
    try:
        return Side(value)
    except ValueError as e:
        raise CertificateError(f"Bilinmeyen taraf: {value}") from e


# Ağaç

def tree_to_doc(t: DecompTree) -> Document:
    """Ayrıştırma ağacını iç içe belgeye çevir"""
    if isinstance(t, SplitLeaf):
        return {"type": "split_leaf", "n": t.n, "graph": graph_to_doc(t.graph), "partition": partition_to_doc(t.partition)}
    if isinstance(t, PentagonLeaf):
        return {"type": "pentagon_leaf", "n": 5, "order": list(t.order)}
    if isinstance(t, SubstitutionNode):
        return {
            "type": "substitution",
            "n": t.n,
            "x": t.x,
            "labels": list(t.labels),
            "outer": tree_to_doc(t.outer),
            "inner": tree_to_doc(t.inner),
        }
    if isinstance(t, UnifyNode):
        return {
            "type": "unify",
            "n": t.n,
            "side": t.side.value,
            "roles": roles_to_doc(t.roles),
            "labels": list(t.labels),
            "left": tree_to_doc(t.left),
            "right": tree_to_doc(t.right),
        }
    raise CertificateError(f"Bilinmeyen düğüm türü: {type(t).__name__}")


def tree_from_doc(doc: Document) -> DecompTree:
    """
    Belgeden ağacı geri kur

    Raises:
        CertificateError: Düğüm türü bilinmiyorsa, alan eksikse veya n tutarsızsa
    """
    kind = _field(doc, "type")
    if kind == "split_leaf":
        tree: DecompTree = SplitLeaf(graph_from_doc(_field(doc, "graph")), partition_from_doc(_field(doc, "partition")))
    elif kind == "pentagon_leaf":
        tree = PentagonLeaf(tuple(_ints(_field(doc, "order"), "order")))
    elif kind == "substitution":
        tree = SubstitutionNode(
            outer=tree_from_doc(_field(doc, "outer")),
            x=_int(_field(doc, "x"), "x"),
            inner=tree_from_doc(_field(doc, "inner")),
            labels=tuple(_ints(_field(doc, "labels"), "labels")),
        )
    elif kind == "unify":
        tree = UnifyNode(
            side=_side(_field(doc, "side")),
            roles=roles_from_doc(_field(doc, "roles")),
            left=tree_from_doc(_field(doc, "left")),
            right=tree_from_doc(_field(doc, "right")),
            labels=tuple(_ints(_field(doc, "labels"), "labels")),
        )
    else:
        raise CertificateError(f"Bilinmeyen düğüm türü: {kind}")
    if _int(_field(doc, "n"), "n") != tree.n:
        raise CertificateError(f"{kind} düğümünde n={doc['n']}, beklenen {tree.n}")
    return tree


# Üst düzey belgeler

def _envelope(kind: str) -> Document:
    return {"schema": SCHEMA_VERSION, "kind": kind}


def recognition_document(result: RecognitionResult) -> Document:
    doc = _envelope("recognition")
    doc["member"] = result.is_member
    doc["tree"] = tree_to_doc(result.tree) if result.tree is not None else None
    doc["witness"] = witness_to_doc(result.witness) if result.witness is not None else None
    return doc


def recognition_from_document(doc: Document) -> RecognitionResult:
    _check_envelope(doc, "recognition")
    tree_doc, witness_doc = doc.get("tree"), doc.get("witness")
    try:
        return RecognitionResult(
            tree=tree_from_doc(tree_doc) if tree_doc is not None else None,
            witness=witness_from_doc(witness_doc) if witness_doc is not None else None,
        )
    except ValueError as e:
        if isinstance(e, CertificateError):
            raise
        raise CertificateError(str(e)) from e


def divide_to_doc(d: SplitDivide) -> Document:
    return {
        "side": d.side.value,
        "a": sorted(d.a), "b": sorted(d.b), "c": sorted(d.c), "l": sorted(d.l), "t": sorted(d.t),
        "a0": d.a0, "c0": d.c0,
    }


def divide_from_doc(doc: Document) -> SplitDivide:
    sets = {name: frozenset(_ints(_field(doc, name), name)) for name in ("a", "b", "c", "l", "t")}
    return SplitDivide(
        side=_side(_field(doc, "side")),
        a0=_int(_field(doc, "a0"), "a0"),
        c0=_int(_field(doc, "c0"), "c0"),
        **sets,
    )


def divide_document(d: Optional[SplitDivide], split: Optional[SplitPartition] = None) -> Document:
    """Bölücü belgesi; graf split ise bölücü yerine split bölüşü taşınır"""
    doc = _envelope("divide")
    doc["divide"] = divide_to_doc(d) if d is not None else None
    doc["split_partition"] = partition_to_doc(split) if split is not None else None
    return doc


def structure_to_doc(sp: StructurePartition) -> Document:
    attach = sorted(sp.mixed_attach.items(), key=lambda item: min(item[0]))
    return {
        "xs": [sorted(s) for s in sp.xs],
        "ys": [sorted(s) for s in sp.ys],
        "mixed_attach": [{"z": sorted(z), "x_z": sorted(xz)} for z, xz in attach],
        "pivot": sorted(sp.pivot) if sp.pivot is not None else None,
    }


def structure_from_doc(doc: Document) -> StructurePartition:
    entries = _field(doc, "mixed_attach")
    if not isinstance(entries, list):
        raise CertificateError("'mixed_attach' alanı liste olmalı")
    pivot = _field(doc, "pivot")
    return StructurePartition(
        xs=tuple(frozenset(_ints(s, "xs")) for s in _field(doc, "xs")),
        ys=tuple(frozenset(_ints(s, "ys")) for s in _field(doc, "ys")),
        mixed_attach={
            frozenset(_ints(_field(e, "z"), "z")): frozenset(_ints(_field(e, "x_z"), "x_z")) for e in entries
        },
        pivot=frozenset(_ints(pivot, "pivot")) if pivot is not None else None,
    )


def structure_document(sp: StructurePartition) -> Document:
    doc = _envelope("structure")
    doc["partition"] = structure_to_doc(sp)
    return doc


def _check_envelope(doc: Document, kind: Optional[str] = None) -> str:
    if not isinstance(doc, dict):
        raise CertificateError("Sertifika bir JSON nesnesi olmalı")
    schema = doc.get("schema")
    if schema != SCHEMA_VERSION:
        raise CertificateError(f"Şema uyuşmuyor: {schema!r}, beklenen {SCHEMA_VERSION!r}")
    found = doc.get("kind")
    if found not in ("recognition", "divide", "structure"):
        raise CertificateError(f"Bilinmeyen belge türü: {found!r}")
    if kind is not None and found != kind:
        raise CertificateError(f"Belge türü {found!r}, beklenen {kind!r}")
    return found


def dumps(doc: Document) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2)


def loads(text: Union[str, bytes]) -> Document:
    """
    JSON metnini belgeye çevir

    Raises:
        CertificateError: JSON geçersizse veya şema uyuşmuyorsa
    """
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise CertificateError(f"Geçersiz JSON: {e}") from e
    _check_envelope(doc)
    return doc


def verify_certificate(g: Graph, doc: Document) -> List[Violation]:
    """
    Sertifikanın verilen graf için geçerli olup olmadığını denetle

    Ağaç belgeleri yapısal olarak denetlenip yeniden kurulur ve g ile etiketli
    eşitlik aranır; tanık belgeleri g içinde kalıbı indüklemelidir.

    Returns:
        List[Violation]: Boşsa sertifika g için geçerlidir

    Raises:
        CertificateError: Şema uyuşmazlığı veya bozuk belge
    """
    kind = _check_envelope(doc)
    if kind == "recognition":
        result = recognition_from_document(doc)
        if doc.get("member") is not result.is_member:
            return [Violation("member", "'member' alanı içerikle çelişiyor")]
        if result.witness is not None:
            witness = result.witness
            if witness.pattern not in (Pattern.P5, Pattern.CO_P5):
                return [Violation("witness", f"{witness.pattern.value} üyeliği çürütmez")]
            return witness.violations(g)
        try:
            found = check_tree(result.tree)
            if found:
                return found
            rebuilt = reconstruct(result.tree)
        except (TreeError, GraphError) as e:
            return [Violation("tree", str(e))]
        if rebuilt != g:
            return [Violation("tree", f"Ağaç farklı bir graf üretiyor (n={rebuilt.n}, m={rebuilt.edge_count})")]
        return []

    try:
        if kind == "divide":
            if doc.get("divide") is not None:
                return validate_split_divide(g, divide_from_doc(doc["divide"]))
            if doc.get("split_partition") is None:
                raise CertificateError("Bölücü belgesi boş")
            return partition_from_doc(doc["split_partition"]).violations(g)
        return validate_structure_partition(g, structure_from_doc(_field(doc, "partition")))
    except GraphError as e:
        return [Violation("partition", str(e))]
