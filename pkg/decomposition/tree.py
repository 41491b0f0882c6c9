"""
Ayrıştırma ağacı: tanıma, sertifika üretimi ve yeniden kurma

Yaprakları split graflar ve beşgenler, iç düğümleri yerine koyma ve (tümleyende)
split birleştirme olan ağaçlar. Her düğüm, yeniden kurmanın etiketli eşitlik
vermesi için bir etiket haritası saklar.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from decomposition.divide import (
    ComposablePair,
    PairRoles,
    Side,
    find_split_divide,
    split_into_pair,
    unify_pair,
)
from graphs.core import Graph
from graphs.detect import ForbiddenWitness, Pattern, SplitPartition, find_induced, is_free, is_split
from graphs.errors import ConsistencyError, GraphError, PreconditionError, TreeError, Violation
from graphs.modular import decompose_by_homogeneous_set, find_proper_homogeneous_set, substitute, substitution_order

logger = logging.getLogger(__name__)

MEMBER_PATTERNS = (Pattern.P5, Pattern.CO_P5)
PERFECT_PATTERNS = (Pattern.P5, Pattern.CO_P5, Pattern.C5)


@dataclass(frozen=True)
class SplitLeaf:
    graph: Graph
    partition: SplitPartition

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class PentagonLeaf:
    """order[i] ile order[i+1 mod 5] komşu olan 5 köşeli döngü"""

    order: Tuple[int, ...]

    @property
    def n(self) -> int:
        return 5


@dataclass(frozen=True)
class SubstitutionNode:
    """substitute(outer, x, inner).relabel(labels)"""

    outer: "DecompTree"
    x: int
    inner: "DecompTree"
    labels: Tuple[int, ...]

    @property
    def n(self) -> int:
        return self.outer.n - 1 + self.inner.n


@dataclass(frozen=True)
class UnifyNode:
    """
    Split birleştirme düğümü

    side=IN_G iken düğüm unify(left, right).relabel(labels) grafıdır. side=IN_COMPLEMENT
    iken çocuklar asıl grafın indüklenmiş alt graflarıdır; birleştirme çocukların
    tümleyenlerine uygulanır ve sonuç yeniden tümlenir.
    """

    side: Side
    roles: PairRoles
    left: "DecompTree"
    right: "DecompTree"
    labels: Tuple[int, ...]

    @property
    def n(self) -> int:
        return self.roles.size


DecompTree = Union[SplitLeaf, PentagonLeaf, SubstitutionNode, UnifyNode]


@dataclass(frozen=True)
class RecognitionResult:
    """Ya bir ayrıştırma ağacı ya da yasak alt graf tanığı"""

    tree: Optional[DecompTree] = None
    witness: Optional[ForbiddenWitness] = None

    def __post_init__(self):
        if (self.tree is None) == (self.witness is None):
            raise ValueError("RecognitionResult tam olarak bir alternatif taşımalı")

    @property
    def is_member(self) -> bool:
        return self.tree is not None


def _pentagon(order: Sequence[int]) -> Graph:
    return Graph.from_edges(5, [(order[i], order[(i + 1) % 5]) for i in range(5)])


def _build(g: Graph, allow_pentagon: bool) -> DecompTree:
    # Split graflar asal olsun olmasın yapraktır
    split = is_split(g)
    if isinstance(split, SplitPartition):
        return SplitLeaf(g, split)

    module = find_proper_homogeneous_set(g)
    if module is not None:
        inner, outer, x = decompose_by_homogeneous_set(g, module)
        logger.debug(f"n={g.n}: yerine koyma, modül boyutu {inner.n}")
        return SubstitutionNode(
            outer=_build(outer, allow_pentagon),
            x=x,
            inner=_build(inner, allow_pentagon),
            labels=tuple(substitution_order(g, module)),
        )

    if allow_pentagon:
        cycle = find_induced(g, Pattern.C5)
        if cycle is not None:
            if g.n != 5:
                raise ConsistencyError(f"Asal graf C5 içeriyor ama {g.n} köşeli")
            logger.debug("Beşgen yaprak")
            return PentagonLeaf(cycle.vertices)

    divide = find_split_divide(g, verify=False)
    if divide is None:
        raise ConsistencyError("Split olmayan asal graf için bölücü bulunamadı")
    pair = split_into_pair(g, divide)
    left, right = pair.g1, pair.g2
    if divide.side is Side.IN_COMPLEMENT:
        left, right = left.complement(), right.complement()
    if not (left.n < g.n and right.n < g.n):
        raise ConsistencyError(f"Parçalar küçülmedi: {left.n}, {right.n} >= {g.n}")
    logger.debug(f"n={g.n}: split birleştirme ({divide.side.value}), parçalar {left.n} + {right.n}")
    return UnifyNode(
        side=divide.side,
        roles=pair.roles,
        left=_build(left, allow_pentagon),
        right=_build(right, allow_pentagon),
        labels=tuple(divide.unification_order()),
    )


def decompose(g: Graph) -> RecognitionResult:
    """
    {P5, co-P5}-serbest grafı ayrıştır ya da yasak alt graf tanığı döndür

    Dallar sırasıyla: split ise split yaprak, asal değilse yerine koyma, C5
    içeriyorsa beşgen yaprak, aksi halde split bölücü ile birleştirme düğümü.

    Args:
        g: Herhangi bir basit graf

    Returns:
        RecognitionResult: Ağaç veya P5 / co-P5 tanığı
    """
    free, witness = is_free(g, MEMBER_PATTERNS)
    if not free:
        return RecognitionResult(witness=witness)
    return RecognitionResult(tree=_build(g, allow_pentagon=True))


def decompose_perfect(g: Graph) -> RecognitionResult:
    """
    {P5, co-P5, C5}-serbest graflar için ayrıştırma (yalnızca split yapraklar)

    Returns:
        RecognitionResult: Ağaç veya P5 / co-P5 / C5 tanığı
    """
    free, witness = is_free(g, PERFECT_PATTERNS)
    if not free:
        return RecognitionResult(witness=witness)
    return RecognitionResult(tree=_build(g, allow_pentagon=False))


def recognize(g: Graph) -> bool:
    return decompose(g).is_member


def recognize_perfect(g: Graph) -> bool:
    return decompose_perfect(g).is_member


def _relabel(graph: Graph, labels: Sequence[int]) -> Graph:
    try:
        return graph.relabel(labels)
    except GraphError as e:
        raise TreeError(f"Geçersiz etiket haritası: {e}") from e


def reconstruct(t: DecompTree) -> Graph:
    """
    Ağacı aşağıdan yukarı yeniden oynatarak grafı kur

    Raises:
        TreeError: Düğüm bozuksa (rol kümeleri çocuk graflarla uyuşmuyorsa)
    """
    if isinstance(t, SplitLeaf):
        return t.graph
    if isinstance(t, PentagonLeaf):
        if sorted(t.order) != list(range(5)):
            raise TreeError(f"Beşgen sırası 0..4 permütasyonu değil: {list(t.order)}")
        return _pentagon(t.order)
    if isinstance(t, SubstitutionNode):
        outer, inner = reconstruct(t.outer), reconstruct(t.inner)
        try:
            graph = substitute(outer, t.x, inner)
        except GraphError as e:
            raise TreeError(f"Yerine koyma düğümü bozuk: {e}") from e
        return _relabel(graph, t.labels)
    if isinstance(t, UnifyNode):
        left, right = reconstruct(t.left), reconstruct(t.right)
        if t.side is Side.IN_COMPLEMENT:
            left, right = left.complement(), right.complement()
        try:
            graph = unify_pair(ComposablePair(left, right, t.roles))
        except (PreconditionError, GraphError, IndexError) as e:
            raise TreeError(f"Birleştirme düğümü bozuk: {e}") from e
        if t.side is Side.IN_COMPLEMENT:
            graph = graph.complement()
        return _relabel(graph, t.labels)
    raise TreeError(f"Bilinmeyen düğüm türü: {type(t).__name__}")


def complement_tree(t: DecompTree) -> DecompTree:
    """complement(reconstruct(t)) grafının ağacı"""
    if isinstance(t, SplitLeaf):
        return SplitLeaf(t.graph.complement(), SplitPartition(t.partition.stable, t.partition.clique))
    if isinstance(t, PentagonLeaf):
        o = t.order
        return PentagonLeaf((o[0], o[2], o[4], o[1], o[3]))
    if isinstance(t, SubstitutionNode):
        return SubstitutionNode(complement_tree(t.outer), t.x, complement_tree(t.inner), t.labels)
    if isinstance(t, UnifyNode):
        return UnifyNode(t.side.flipped, t.roles, complement_tree(t.left), complement_tree(t.right), t.labels)
    raise TreeError(f"Bilinmeyen düğüm türü: {type(t).__name__}")


def _is_permutation(labels: Iterable[int], n: int) -> bool:
    return sorted(labels) == list(range(n))


def check_tree(t: DecompTree, path: str = "root") -> List[Violation]:
    """
    Ağacın yapısal denetimi

    Yaprak değişmezleri, iç düğümlerde kesin küçülme ve rol kümelerinin çocuk
    boyutlarıyla tutarlılığı denetlenir. İhlaller düğüm yolunu taşır.

    Returns:
        List[Violation]: Boşsa ağaç yapısal olarak geçerlidir
    """
    found: List[Violation] = []
    if isinstance(t, SplitLeaf):
        for v in t.partition.violations(t.graph):
            found.append(Violation(f"{path}:split-leaf", str(v), v.witness))
    elif isinstance(t, PentagonLeaf):
        if not _is_permutation(t.order, 5):
            found.append(Violation(f"{path}:pentagon-leaf", "Sıra 0..4 permütasyonu değil", tuple(t.order)))
    elif isinstance(t, SubstitutionNode):
        n = t.n
        if not 0 <= t.x < t.outer.n:
            found.append(Violation(f"{path}:substitution", f"x={t.x} dış graf dışında"))
        if not (t.outer.n < n and t.inner.n < n):
            found.append(Violation(f"{path}:substitution", "Çocuklar kesin küçük değil"))
        if not _is_permutation(t.labels, n):
            found.append(Violation(f"{path}:substitution", "Etiketler permütasyon değil"))
        found += check_tree(t.outer, f"{path}.outer")
        found += check_tree(t.inner, f"{path}.inner")
    elif isinstance(t, UnifyNode):
        r = t.roles
        n = t.n
        if sorted(r.a + r.shared1 + (r.c_star,)) != list(range(t.left.n)):
            found.append(Violation(f"{path}:unify", "G1 rol kümeleri sol çocukla uyuşmuyor"))
        if sorted(r.c + r.shared2 + (r.a_star,)) != list(range(t.right.n)):
            found.append(Violation(f"{path}:unify", "G2 rol kümeleri sağ çocukla uyuşmuyor"))
        if not (t.left.n < n and t.right.n < n):
            found.append(Violation(f"{path}:unify", "Çocuklar kesin küçük değil"))
        if not _is_permutation(t.labels, n):
            found.append(Violation(f"{path}:unify", "Etiketler permütasyon değil"))
        found += check_tree(t.left, f"{path}.left")
        found += check_tree(t.right, f"{path}.right")
    else:
        found.append(Violation(f"{path}:unknown", f"Bilinmeyen düğüm türü: {type(t).__name__}"))
    return found


def pair_of(t: UnifyNode) -> ComposablePair:
    """Düğümün taraf grafındaki birleştirilebilir çifti"""
    left, right = reconstruct(t.left), reconstruct(t.right)
    if t.side is Side.IN_COMPLEMENT:
        left, right = left.complement(), right.complement()
    return ComposablePair(left, right, t.roles)