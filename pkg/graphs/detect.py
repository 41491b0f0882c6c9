"""
İndüklenmiş alt graf tanığı arama ve split graf tanıma
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple, Union

from graphs.core import Graph, VertexSet, iter_bits
from graphs.errors import ConsistencyError, Violation

logger = logging.getLogger(__name__)


class Pattern(str, Enum):
    """Aranan yasak alt graf kalıpları"""

    P4 = "P4"
    P5 = "P5"
    CO_P5 = "CoP5"
    C5 = "C5"
    C4 = "C4"
    CO_C4 = "CoC4"

    @property
    def complement(self) -> "Pattern":
        return _COMPLEMENTS[self]

    @property
    def size(self) -> int:
        return 4 if self in (Pattern.P4, Pattern.C4, Pattern.CO_C4) else 5

    @property
    def template(self) -> Tuple[Tuple[bool, ...], ...]:
        """
        Sıralı tanık için komşuluk şablonu

        Yol ve döngülerde ardışık pozisyonlar komşudur; tümleyen kalıplarda
        aynı özellik tümleyen grafta geçerlidir.
        """
        return _TEMPLATES[self]


_COMPLEMENTS = {
    Pattern.P4: Pattern.P4,
    Pattern.P5: Pattern.CO_P5,
    Pattern.CO_P5: Pattern.P5,
    Pattern.C5: Pattern.C5,
    Pattern.C4: Pattern.CO_C4,
    Pattern.CO_C4: Pattern.C4,
}

# is_free için sabit arama sırası
PATTERN_ORDER = (Pattern.P4, Pattern.P5, Pattern.CO_P5, Pattern.C5, Pattern.C4, Pattern.CO_C4)


def _build_template(size: int, closed: bool, complemented: bool) -> Tuple[Tuple[bool, ...], ...]:
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            consecutive = abs(i - j) == 1 or (closed and abs(i - j) == size - 1)
            row.append(i != j and consecutive != complemented)
        rows.append(tuple(row))
    return tuple(rows)


_TEMPLATES = {
    Pattern.P4: _build_template(4, closed=False, complemented=False),
    Pattern.P5: _build_template(5, closed=False, complemented=False),
    Pattern.CO_P5: _build_template(5, closed=False, complemented=True),
    Pattern.C5: _build_template(5, closed=True, complemented=False),
    Pattern.C4: _build_template(4, closed=True, complemented=False),
    Pattern.CO_C4: _build_template(4, closed=True, complemented=True),
}


@dataclass(frozen=True)
class ForbiddenWitness:
    """Bir kalıbı tam olarak indükleyen sıralı köşe dizisi"""

    pattern: Pattern
    vertices: Tuple[int, ...]

    def violations(self, g: Graph) -> List[Violation]:
        """
        Tanığın gerçekten kalıbı indüklediğini doğrula

        Returns:
            List[Violation]: Boşsa tanık geçerlidir
        """
        found = []
        if len(self.vertices) != self.pattern.size:
            return [Violation("size", f"{self.pattern.value} için {self.pattern.size} köşe gerekir", self.vertices)]
        if len(set(self.vertices)) != len(self.vertices):
            return [Violation("distinct", "Tanık köşeleri farklı olmalı", self.vertices)]
        if any(not 0 <= v < g.n for v in self.vertices):
            return [Violation("range", "Tanık köşesi graf dışında", self.vertices)]
        template = self.pattern.template
        for i, u in enumerate(self.vertices):
            for j in range(i + 1, len(self.vertices)):
                v = self.vertices[j]
                if g.has_edge(u, v) != template[i][j]:
                    found.append(Violation("adjacency", f"{u}-{v} komşuluğu kalıba uymuyor", (u, v)))
        return found

    def is_valid(self, g: Graph) -> bool:
        return not self.violations(g)


@dataclass(frozen=True)
class SplitPartition:
    """Klik + bağımsız küme bölüşü"""

    clique: VertexSet
    stable: VertexSet

    def violations(self, g: Graph) -> List[Violation]:
        found = []
        if self.clique & self.stable or (self.clique | self.stable) != frozenset(g.vertices()):
            found.append(Violation("partition", "Parçalar V(g)'yi bölmüyor"))
            return found
        clique, stable = g.mask_of(self.clique), g.mask_of(self.stable)
        for v in iter_bits(clique):
            missing = clique & ~g.neighbor_mask(v) & ~(1 << v)
            if missing:
                found.append(Violation("clique", "Klik parçasında komşu olmayan çift", (v, min(iter_bits(missing)))))
                break
        for v in iter_bits(stable):
            inside = stable & g.neighbor_mask(v)
            if inside:
                found.append(Violation("stable", "Bağımsız parçada kenar", (v, min(iter_bits(inside)))))
                break
        return found

    def is_valid(self, g: Graph) -> bool:
        return not self.violations(g)


def find_induced(g: Graph, pattern: Pattern) -> Optional[ForbiddenWitness]:
    """
    Kalıbın indüklenmiş bir kopyasını ara

    Sıralı demetler artan köşe sırasıyla derinlemesine taranır; her pozisyonun aday
    kümesi önceki seçimlerin komşuluk maskeleriyle kesilir. Bulunan ilk demet
    sözlük sırasında en küçük tanıktır.

    Args:
        g: Ev sahibi graf
        pattern: Aranacak kalıp

    Returns:
        Optional[ForbiddenWitness]: Tanık veya kalıp yoksa None
    """
    size = pattern.size
    if g.n < size:
        return None
    template = pattern.template
    adj = g.adjacency
    full = g.full_mask
    chosen: List[int] = []

    def extend(used: int) -> bool:
        position = len(chosen)
        if position == size:
            return True
        candidates = full & ~used
        row = template[position]
        for j, u in enumerate(chosen):
            candidates &= adj[u] if row[j] else ~adj[u]
        for v in iter_bits(candidates):
            chosen.append(v)
            if extend(used | 1 << v):
                return True
            chosen.pop()
        return False

    if extend(0):
        return ForbiddenWitness(pattern, tuple(chosen))
    return None


def is_free(g: Graph, patterns: Iterable[Pattern]) -> Tuple[bool, Optional[ForbiddenWitness]]:
    """
    Graf verilen kalıpların hiçbirini içermiyor mu

    Returns:
        Tuple[bool, Optional[ForbiddenWitness]]: (serbest mi, serbest değilse bir tanık)
    """
    wanted = set(patterns)
    for pattern in PATTERN_ORDER:
        if pattern not in wanted:
            continue
        witness = find_induced(g, pattern)
        if witness is not None:
            return False, witness
    return True, None


def is_split(g: Graph) -> Union[SplitPartition, ForbiddenWitness]:
    """
    Split graf tanıma (derece dizisi testi)

    Dereceler azalan sırada d1 >= ... >= dn iken m = max{i : di >= i-1} olsun;
    graf ancak ve ancak ilk m derecenin toplamı m(m-1) + kalan derecelerin toplamı
    ise split'tir ve bu durumda ilk m köşe bir klik, kalanlar bağımsız kümedir.

    Returns:
        Union[SplitPartition, ForbiddenWitness]: Bölüş veya C4 / co-C4 / C5 tanığı
    """
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    degrees = [g.degree(v) for v in order]
    m = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            m = i
    if sum(degrees[:m]) == m * (m - 1) + sum(degrees[m:]):
        partition = SplitPartition(frozenset(order[:m]), frozenset(order[m:]))
        return partition

    for pattern in (Pattern.C4, Pattern.CO_C4, Pattern.C5):
        witness = find_induced(g, pattern)
        if witness is not None:
            return witness
    raise ConsistencyError(f"Derece testi split değil dedi ama yasak alt graf bulunamadı: {g!r}")
