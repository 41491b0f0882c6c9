"""
Etiketli basit graf gösterimi ve küme ilişkisi yüklemleri

Komşuluklar köşe başına bir bit maskesi olarak saklanır; tam/anti-tam
testleri tek bir tamsayı işlemine indirgenir.
"""
import logging
from enum import Enum
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple, Union

from graphs.errors import GraphError

logger = logging.getLogger(__name__)

VertexSet = FrozenSet[int]


def iter_bits(mask: int) -> Iterator[int]:
    """Maskedeki köşeleri artan sırada üret"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_count(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    """Maskedeki en küçük köşe (boş maske için -1)"""
    return (mask & -mask).bit_length() - 1


def to_set(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


class Relation(str, Enum):
    """Bir köşenin bir kümeye göre durumu"""

    COMPLETE = "complete"
    ANTICOMPLETE = "anticomplete"
    MIXED = "mixed"

    def swapped(self) -> "Relation":
        """Tümleyen graftaki karşılığı"""
        if self is Relation.COMPLETE:
            return Relation.ANTICOMPLETE
        if self is Relation.ANTICOMPLETE:
            return Relation.COMPLETE
        return self


class Graph:
    """
    {0..n-1} üzerinde etiketli basit graf

    Oluşturulduktan sonra değişmez; tüm işlemler yeni nesne döndürür.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adjacency: Sequence[int] = ()):
        """
        Graph sınıfını başlat

        Args:
            n: Köşe sayısı
            adjacency: Köşe başına komşuluk maskeleri (boşsa kenarsız graf)

        Raises:
            GraphError: Komşuluk simetrik değilse, döngü varsa veya aralık dışına taşıyorsa
        """
        if n < 0:
            raise GraphError(f"Köşe sayısı negatif olamaz: {n}")
        adj = tuple(int(m) for m in adjacency) if adjacency else (0,) * n
        if len(adj) != n:
            raise GraphError(f"{n} köşe için {len(adj)} komşuluk maskesi verildi")
        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full or mask < 0:
                raise GraphError(f"{v} köşesinin komşuluğu aralık dışında")
            if mask >> v & 1:
                raise GraphError(f"{v} köşesinde döngü var")
            for u in iter_bits(mask):
                if not adj[u] >> v & 1:
                    raise GraphError(f"Komşuluk simetrik değil: {v}-{u}")
        self._n = n
        self._adj = adj

    @classmethod
    def _trusted(cls, n: int, adjacency: Sequence[int]) -> "Graph":
        """Doğrulama yapmadan oluştur (yalnızca iç kullanım)"""
        graph = cls.__new__(cls)
        graph._n = n
        graph._adj = tuple(adjacency)
        return graph

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Kenar listesinden graf oluştur

        Args:
            n: Köşe sayısı
            edges: (u, v) çiftleri; tekrarlar yok sayılır

        Returns:
            Graph: Oluşturulan graf
        """
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Kenar aralık dışında: ({u}, {v}), n={n}")
            if u == v:
                raise GraphError(f"Döngü kenarı: ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls._trusted(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls._trusted(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError(f"Döngü en az 3 köşe ister: {n}")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    # Temel erişimciler

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def vertices(self) -> range:
        return range(self._n)

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return to_set(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bit_count(self._adj[v])

    def edges(self) -> List[Tuple[int, int]]:
        """Kenarlar, u < v olacak şekilde sıralı"""
        return [(u, v) for u in range(self._n) for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(bit_count(m) for m in self._adj) // 2

    def mask_of(self, vertices: Union[Iterable[int], int]) -> int:
        """
        Köşe kümesini maskeye çevir

        Raises:
            GraphError: Aralık dışında köşe varsa
        """
        if isinstance(vertices, int):
            if vertices & ~self.full_mask or vertices < 0:
                raise GraphError(f"Maske {self._n} köşenin dışına taşıyor")
            return vertices
        mask = 0
        for v in vertices:
            self._check_vertex(v)
            mask |= 1 << v
        return mask

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"Köşe aralık dışında: {v} (n={self._n})")

    # Graf dönüşümleri

    def complement(self) -> "Graph":
        """Tümleyen graf; kendi tersidir"""
        full = self.full_mask
        return Graph._trusted(self._n, [full & ~m & ~(1 << v) for v, m in enumerate(self._adj)])

    def induced(self, vertices: Union[Iterable[int], int]) -> Tuple["Graph", Tuple[int, ...]]:
        """
        Köşe kümesinin indüklediği alt graf

        Args:
            vertices: Köşe kümesi (küme veya maske)

        Returns:
            Tuple[Graph, Tuple[int, ...]]: Artan sırayla 0..k-1 olarak etiketlenmiş alt graf
            ve yeni etiketten eski etikete harita
        """
        mask = self.mask_of(vertices)
        labels = tuple(iter_bits(mask))
        position = {v: i for i, v in enumerate(labels)}
        adj = []
        for v in labels:
            row = 0
            for u in iter_bits(self._adj[v] & mask):
                row |= 1 << position[u]
            adj.append(row)
        return Graph._trusted(len(labels), adj), labels

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """
        Köşeleri yeniden etiketle: eski i köşesi yeni mapping[i] köşesi olur

        Raises:
            GraphError: mapping bir permütasyon değilse
        """
        if sorted(mapping) != list(range(self._n)):
            raise GraphError(f"Geçersiz yeniden etiketleme: {list(mapping)}")
        adj = [0] * self._n
        for u in range(self._n):
            row = 0
            for v in iter_bits(self._adj[u]):
                row |= 1 << mapping[v]
            adj[mapping[u]] = row
        return Graph._trusted(self._n, adj)

    # Bileşenler

    def component_masks(self, mask: int) -> List[int]:
        """Maske içindeki bağlı bileşenler, en küçük elemana göre sıralı"""
        return self._split(mask, complemented=False)

    def anticomponent_masks(self, mask: int) -> List[int]:
        """Maske içindeki anti-bileşenler (tümleyende bileşenler)"""
        return self._split(mask, complemented=True)

    def _split(self, mask: int, complemented: bool) -> List[int]:
        parts = []
        remaining = mask
        while remaining:
            start = remaining & -remaining
            part = start
            frontier = start
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= ~self._adj[v] if complemented else self._adj[v]
                reach &= remaining & ~part
                part |= reach
                frontier = reach
            remaining &= ~part
            parts.append(part)
        return parts

    def components(self, vertices: Union[Iterable[int], int]) -> List[VertexSet]:
        """
        Kümeyi, indüklenen alt grafın bağlı bileşenlerine böl

        Returns:
            List[VertexSet]: En küçük elemana göre sıralı bileşenler (boş küme için boş liste)
        """
        return [to_set(m) for m in self.component_masks(self.mask_of(vertices))]

    def anticomponents(self, vertices: Union[Iterable[int], int]) -> List[VertexSet]:
        """Kümeyi anti-bileşenlerine böl"""
        return [to_set(m) for m in self.anticomponent_masks(self.mask_of(vertices))]

    # Küme ilişkileri

    def relation_mask(self, v: int, mask: int) -> Relation:
        hit = self._adj[v] & mask
        if hit == mask:
            return Relation.COMPLETE
        if not hit:
            return Relation.ANTICOMPLETE
        return Relation.MIXED

    def relation(self, v: int, vertices: Union[Iterable[int], int]) -> Relation:
        """
        v köşesinin kümeye göre durumu

        Raises:
            GraphError: v kümedeyse veya küme boşsa
        """
        self._check_vertex(v)
        mask = self.mask_of(vertices)
        if not mask:
            raise GraphError("İlişki boş küme için tanımsız")
        if mask >> v & 1:
            raise GraphError(f"{v} köşesi kümenin içinde")
        return self.relation_mask(v, mask)

    def is_mixed_on(self, v: int, mask: int) -> bool:
        hit = self._adj[v] & mask
        return bool(hit) and hit != mask

    def is_complete_to(self, source: int, target: int) -> bool:
        """source maskesindeki her köşe target maskesine tam mı"""
        return all(self._adj[v] & target == target for v in iter_bits(source))

    def is_anticomplete_to(self, source: int, target: int) -> bool:
        return all(not self._adj[v] & target for v in iter_bits(source))

    def set_relation(self, source: Iterable[int], target: Iterable[int]) -> Relation:
        """İki ayrık küme arasındaki ilişki"""
        s, t = self.mask_of(source), self.mask_of(target)
        if s & t:
            raise GraphError("Kümeler ayrık değil")
        if self.is_complete_to(s, t):
            return Relation.COMPLETE
        if self.is_anticomplete_to(s, t):
            return Relation.ANTICOMPLETE
        return Relation.MIXED

    def is_clique(self, vertices: Union[Iterable[int], int]) -> bool:
        mask = self.mask_of(vertices)
        return all(self._adj[v] & mask == mask & ~(1 << v) for v in iter_bits(mask))

    def is_stable(self, vertices: Union[Iterable[int], int]) -> bool:
        mask = self.mask_of(vertices)
        return all(not self._adj[v] & mask for v in iter_bits(mask))

    def is_connected(self, vertices: Union[Iterable[int], int, None] = None) -> bool:
        mask = self.full_mask if vertices is None else self.mask_of(vertices)
        return len(self.component_masks(mask)) <= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"
