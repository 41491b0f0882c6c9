"""
Tohumlu {P5, co-P5}-serbest graf üreteci

Graflar rastgele split ve beşgen yapraklardan yerine koyma, split birleştirme ve
tümleyende split birleştirme uygulanarak kurulur; her graf kuruluş ağacıyla
birlikte döner ve yayımlanmadan önce denetlenir.
"""
import logging
import random
from typing import Dict, List, Sequence, Tuple

from config.settings import DEFAULT_SEED, GENERATOR_EDGE_PROB, GENERATOR_LEAF_MEAN
from decomposition.divide import ComposablePair, PairRoles, Side, unify_pair
from decomposition.tree import (
    MEMBER_PATTERNS,
    DecompTree,
    PentagonLeaf,
    SplitLeaf,
    SubstitutionNode,
    UnifyNode,
    check_tree,
    complement_tree,
    decompose,
    reconstruct,
)
from graphs.core import Graph
from graphs.detect import SplitPartition, is_free
from graphs.errors import ConsistencyError
from graphs.modular import substitute

logger = logging.getLogger(__name__)

KINDS = ("split", "pentagon-sub", "unified", "mixed")

Built = Tuple[Graph, DecompTree]


def _positions(owner: Sequence[str], *names: str) -> Tuple[int, ...]:
    return tuple(i for i, name in enumerate(owner) if name in names)


class GraphGenerator:
    """Tohumlu rastgele sınıf üyesi üreteci"""

    def __init__(self, seed: int = DEFAULT_SEED, leaf_mean: float = GENERATOR_LEAF_MEAN,
                 edge_prob: float = GENERATOR_EDGE_PROB):
        """
        GraphGenerator sınıfını başlat

        Args:
            seed: Rastgelelik tohumu; aynı tohum aynı çıktıyı verir
            leaf_mean: Yaprak boyutu dağılımının (geometrik) ortalaması
            edge_prob: Split yapraklarda klik-bağımsız küme kenar olasılığı
        """
        if leaf_mean < 1:
            raise ValueError(f"Yaprak ortalaması en az 1 olmalı: {leaf_mean}")
        self.seed = seed
        self.leaf_mean = leaf_mean
        self.edge_prob = edge_prob
        self.rng = random.Random(seed)

    def generate(self, kind: str, size: int) -> Built:
        """
        Verilen türde ve boyutta bir graf ve kuruluş ağacı üret

        Args:
            kind: split, pentagon-sub, unified veya mixed
            size: Köşe sayısı (>= 1)

        Returns:
            Tuple[Graph, DecompTree]: Graf ve onu yeniden kuran ağaç

        Raises:
            ValueError: Tür bilinmiyorsa veya boyut < 1 ise
            ConsistencyError: Öz denetim başarısız olursa
        """
        if kind not in KINDS:
            raise ValueError(f"Bilinmeyen tür: {kind} (seçenekler: {', '.join(KINDS)})")
        if size < 1:
            raise ValueError(f"Boyut en az 1 olmalı: {size}")

        if kind == "split" or (kind in ("pentagon-sub", "unified") and size < 5):
            graph, tree = self.split_leaf(size)
        elif kind == "pentagon-sub":
            graph, tree = self._pentagon_with_substitutions(size)
        elif kind == "unified":
            graph, tree = self._unify(size)
        else:
            graph, tree = self._member(size)

        self._audit(graph, tree)
        logger.debug(f"{kind} üretildi: n={graph.n}, m={graph.edge_count}")
        return graph, tree

    def _audit(self, graph: Graph, tree: DecompTree) -> None:
        free, witness = is_free(graph, MEMBER_PATTERNS)
        if not free:
            raise ConsistencyError(f"Üretilen graf {witness.pattern.value} içeriyor: {list(witness.vertices)}")
        problems = check_tree(tree)
        if problems:
            raise ConsistencyError("Üretilen ağaç yapısal olarak bozuk", problems)
        if reconstruct(tree) != graph:
            raise ConsistencyError("Üretilen ağaç grafı yeniden kurmuyor")

    # Yapraklar

    def _permutation(self, n: int) -> List[int]:
        return self.rng.sample(range(n), n)

    def _leaf_size(self) -> int:
        p = 1.0 / self.leaf_mean
        k = 1
        while self.rng.random() >= p:
            k += 1
        return k

    def split_leaf(self, size: int) -> Built:
        """Rastgele klik boyutlu, rastgele etiketli split graf"""
        perm = self._permutation(size)
        k = self.rng.randint(0, size)
        clique, stable = perm[:k], perm[k:]
        edges = [(clique[i], clique[j]) for i in range(k) for j in range(i + 1, k)]
        edges += [(s, c) for s in stable for c in clique if self.rng.random() < self.edge_prob]
        graph = Graph.from_edges(size, edges)
        return graph, SplitLeaf(graph, SplitPartition(frozenset(clique), frozenset(stable)))

    def pentagon_leaf(self) -> Built:
        tree = PentagonLeaf(tuple(self._permutation(5)))
        return reconstruct(tree), tree

    # Bileşim işlemleri

    def _substitute(self, outer: Built, x: int, inner: Built, labels: Sequence[int]) -> Built:
        graph = substitute(outer[0], x, inner[0]).relabel(labels)
        return graph, SubstitutionNode(outer[1], x, inner[1], tuple(labels))

    def _pentagon_with_substitutions(self, size: int) -> Built:
        counts = [1] * 5
        for _ in range(size - 5):
            counts[self.rng.randrange(5)] += 1
        built = self.pentagon_leaf()
        targets = [x for x in range(4, -1, -1) if counts[x] > 1]
        for i, x in enumerate(targets):
            n = built[0].n - 1 + counts[x]
            labels = self._permutation(n) if i == len(targets) - 1 else list(range(n))
            built = self._substitute(built, x, self.split_leaf(counts[x]), labels)
        return built

    def _member(self, size: int) -> Built:
        if size <= self._leaf_size():
            if size == 5 and self.rng.random() < 0.5:
                return self.pentagon_leaf()
            return self.split_leaf(size)
        operations = []
        if size >= 3:
            operations.append("substitution")
        if size >= 5:
            operations += ["unify", "co_unify"]
        if not operations:
            return self.split_leaf(size)

        operation = self.rng.choice(operations)
        if operation == "substitution":
            k = self.rng.randint(2, size - 1)
            outer = self._member(k)
            inner = self._member(size - k + 1)
            return self._substitute(outer, self.rng.randrange(k), inner, self._permutation(size))
        if operation == "unify":
            return self._unify(size)
        graph, tree = self._unify(size)
        return graph.complement(), complement_tree(tree)

    def _inflate(self, quotient: Graph, names: List[str], pieces: Dict[str, Built]) -> Tuple[Graph, DecompTree, List[str]]:
        """Bölüm grafının köşelerine parçaları yerleştir; her köşenin sahibini izle"""
        result = decompose(quotient)
        if result.tree is None:
            raise ConsistencyError(f"Bölüm grafı sınıf dışında: {quotient!r}")
        graph, tree, owner = quotient, result.tree, list(names)
        for name, (piece, piece_tree) in pieces.items():
            if piece.n < 2:
                continue
            x = owner.index(name)
            graph = substitute(graph, x, piece)
            tree = SubstitutionNode(tree, x, piece_tree, tuple(range(graph.n)))
            owner = owner[:x] + owner[x + 1:] + [name] * piece.n
        return graph, tree, owner

    def composable_pair(self, size: int) -> Tuple[ComposablePair, DecompTree, DecompTree]:
        """
        Birleştirmesi size köşeli olan rastgele bir birleştirilebilir çift

        A iki parçadan (biri L'ye tam, diğeri L'ye anti-tam), B ve C birer parçadan
        oluşur; L tek köşe, T en fazla bir köşedir. Parçalar sınıf üyesidir.

        Returns:
            Tuple[ComposablePair, DecompTree, DecompTree]: Çift ve G1, G2 ağaçları
        """
        if size < 5:
            raise ValueError(f"Birleştirme en az 5 köşe ister: {size}")
        has_t = size >= 6 and self.rng.random() < 0.5
        has_c2 = size - has_t >= 6 and self.rng.random() < 0.5
        counts = {"p": 1, "q": 1, "b": 0, "c": 2}
        for _ in range(size - 5 - has_t - has_c2):
            counts[self.rng.choice(["p", "q", "b", "c"])] += 1
        has_b = counts["b"] > 0
        t_to_l = has_t and self.rng.random() < 0.5
        t_to_b = has_t and has_b and self.rng.random() < 0.5
        c_to_c2 = has_c2 and self.rng.random() < 0.5

        names1 = ["p", "q", "l", "c*"] + ["b"] * has_b + ["t"] * has_t
        edges1 = [("p", "l"), ("l", "c*")]
        names2 = ["a*", "l", "c"] + ["c2"] * has_c2 + ["b"] * has_b + ["t"] * has_t
        edges2 = [("a*", "l"), ("l", "c")]
        if has_c2:
            edges2.append(("l", "c2"))
        if c_to_c2:
            edges2.append(("c", "c2"))
        if has_b:
            edges1 += [("b", "p"), ("b", "q"), ("b", "l"), ("b", "c*")]
            edges2 += [("b", "a*"), ("b", "l"), ("b", "c")]
        for flag, edge in ((t_to_l, ("t", "l")), (t_to_b, ("t", "b"))):
            if flag:
                edges1.append(edge)
                edges2.append(edge)

        def quotient(names: List[str], edges: List[Tuple[str, str]]) -> Graph:
            index = {name: i for i, name in enumerate(names)}
            return Graph.from_edges(len(names), [(index[u], index[v]) for u, v in edges])

        pieces = {name: self._member(counts[name]) for name in ("p", "q", "b", "c") if counts[name] >= 2}
        g1, tree1, owner1 = self._inflate(
            quotient(names1, edges1), names1, {k: v for k, v in pieces.items() if k in ("p", "q", "b")}
        )
        g2, tree2, owner2 = self._inflate(
            quotient(names2, edges2), names2, {k: v for k, v in pieces.items() if k in ("c", "b")}
        )
        roles = PairRoles(
            a=_positions(owner1, "p", "q"),
            b1=_positions(owner1, "b"),
            l1=_positions(owner1, "l"),
            t1=_positions(owner1, "t"),
            c_star=owner1.index("c*"),
            a0=_positions(owner1, "p")[0],
            b2=_positions(owner2, "b"),
            c=_positions(owner2, "c", "c2"),
            l2=_positions(owner2, "l"),
            t2=_positions(owner2, "t"),
            a_star=owner2.index("a*"),
            c0=_positions(owner2, "c")[0],
        )
        return ComposablePair(g1, g2, roles), tree1, tree2

    def _unify(self, size: int) -> Built:
        pair, tree1, tree2 = self.composable_pair(size)
        labels = self._permutation(size)
        graph = unify_pair(pair).relabel(labels)
        return graph, UnifyNode(Side.IN_G, pair.roles, tree1, tree2, tuple(labels))
