"""
Homojen küme (modül) arama, asallık testi ve yerine koyma (substitution) işlemi
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple, Union

from graphs.core import Graph, VertexSet, bit_count, iter_bits, lowest, to_set
from graphs.errors import GraphError, PreconditionError, Violation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomogeneousSet:
    """Dışındaki her köşenin tam ya da anti-tam olduğu köşe kümesi"""

    members: VertexSet

    def violations(self, g: Graph) -> List[Violation]:
        """
        Kümenin g içinde uygun (proper) bir homojen küme olup olmadığını denetle

        Returns:
            List[Violation]: Boşsa küme geçerlidir
        """
        found = []
        mask = g.mask_of(self.members)
        size = bit_count(mask)
        if not 2 <= size < g.n:
            found.append(Violation("proper", f"Boyut {size}, 2 <= |S| < {g.n} olmalı", tuple(sorted(self.members))))
        splitter = find_splitter(g, mask)
        if splitter is not None:
            found.append(Violation("homogeneous", f"{splitter} köşesi kümede karışık", (splitter,)))
        return found

    def is_valid(self, g: Graph) -> bool:
        return not self.violations(g)


def find_splitter(g: Graph, mask: int) -> Optional[int]:
    """Kümede karışık olan en küçük dış köşe (yoksa None)"""
    for v in iter_bits(g.full_mask & ~mask):
        if g.is_mixed_on(v, mask):
            return v
    return None


def is_homogeneous(g: Graph, vertices: Union[Iterable[int], int]) -> bool:
    mask = g.mask_of(vertices)
    return bool(mask) and find_splitter(g, mask) is None


def _closure(g: Graph, mask: int) -> int:
    """mask'ı içeren en küçük homojen küme: karışık köşeler eklenerek büyütülür"""
    adj = g.adjacency
    outside = g.full_mask & ~mask
    while True:
        splitters = 0
        for v in iter_bits(outside):
            hit = adj[v] & mask
            if hit and hit != mask:
                splitters |= 1 << v
        if not splitters:
            return mask
        mask |= splitters
        outside &= ~splitters


def _sort_key(mask: int) -> Tuple[int, int, Tuple[int, ...]]:
    return (-bit_count(mask), lowest(mask), tuple(iter_bits(mask)))


def find_proper_homogeneous_set(g: Graph) -> Optional[HomogeneousSet]:
    """
    Uygun bir homojen küme bul

    Her köşe çifti karışık köşeler eklenerek kapatılır. Uygun kalan kapanışlar
    arasından en büyüğü (eşitlikte en küçük minimum elemanlı olan) seçilir, sonra
    tek köşe eklenerek kapsama göre maksimal olana kadar büyütülür.

    Args:
        g: İncelenecek graf

    Returns:
        Optional[HomogeneousSet]: Graf asal ise None
    """
    full = g.full_mask
    best = 0
    covered: List[int] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            pair = 1 << u | 1 << v
            if any(pair & c == pair for c in covered):
                continue
            closure = _closure(g, pair)
            if closure == full:
                continue
            covered.append(closure)
            if not best or _sort_key(closure) < _sort_key(best):
                best = closure
    if not best:
        return None

    grown = True
    while grown:
        grown = False
        for w in iter_bits(full & ~best):
            candidate = _closure(g, best | 1 << w)
            if candidate != full:
                best = candidate
                grown = True
                break

    logger.debug(f"Homojen küme bulundu: {list(iter_bits(best))}")
    return HomogeneousSet(to_set(best))


def is_prime(g: Graph) -> bool:
    return find_proper_homogeneous_set(g) is None


def substitute(outer: Graph, x: int, inner: Graph) -> Graph:
    """
    outer içindeki x köşesinin yerine inner grafını koy

    Etiketleme: outer köşeleri x çıkarılmış olarak sıralarını korur, inner köşeleri
    sona eklenir. inner'ın her köşesi x'in komşularına bağlanır.

    Raises:
        GraphError: x aralık dışındaysa veya inner boşsa
    """
    if not 0 <= x < outer.n:
        raise GraphError(f"Yerine koyma köşesi aralık dışında: {x} (n={outer.n})")
    if inner.n == 0:
        raise GraphError("Boş graf yerine konamaz")

    kept = outer.n - 1
    n = kept + inner.n
    image = [v if v < x else v - 1 for v in range(outer.n)]
    inner_block = ((1 << inner.n) - 1) << kept
    adj = [0] * n
    for v in range(outer.n):
        if v == x:
            continue
        row = 0
        for u in iter_bits(outer.neighbor_mask(v) & ~(1 << x)):
            row |= 1 << image[u]
        if outer.has_edge(v, x):
            row |= inner_block
        adj[image[v]] = row
    attach = 0
    for u in iter_bits(outer.neighbor_mask(x)):
        attach |= 1 << image[u]
    for j in range(inner.n):
        adj[kept + j] = inner.neighbor_mask(j) << kept | attach
    return Graph._trusted(n, adj)


def _check_module(g: Graph, h: Union[HomogeneousSet, Iterable[int]]) -> int:
    members = h.members if isinstance(h, HomogeneousSet) else h
    mask = g.mask_of(members)
    size = bit_count(mask)
    if not 2 <= size < g.n:
        raise PreconditionError("not-proper", f"Küme uygun değil: boyut {size}, n={g.n}", to_set(mask))
    splitter = find_splitter(g, mask)
    if splitter is not None:
        raise PreconditionError("not-homogeneous", f"{splitter} köşesi kümede karışık", (splitter,))
    return mask


def decompose_by_homogeneous_set(
    g: Graph, h: Union[HomogeneousSet, Iterable[int]]
) -> Tuple[Graph, Graph, int]:
    """
    Grafı homojen küme boyunca iç ve dış grafa ayır

    Args:
        g: Ayrıştırılacak graf
        h: Uygun homojen küme

    Returns:
        Tuple[Graph, Graph, int]: (inner = G[h], outer = G[(V ∖ h) ∪ {min h}], outer içinde min h'nin etiketi)

    Raises:
        PreconditionError: h uygun değilse veya homojen değilse
    """
    mask = _check_module(g, h)
    inner, _ = g.induced(mask)
    representative = lowest(mask)
    outer, labels = g.induced(g.full_mask & ~mask | 1 << representative)
    return inner, outer, labels.index(representative)


def substitution_order(g: Graph, h: Union[HomogeneousSet, Iterable[int]]) -> List[int]:
    """
    substitute(outer, x, inner) köşelerinin g'deki karşılıkları

    substitute(outer, x, inner).relabel(order) == g olur.
    """
    members = h.members if isinstance(h, HomogeneousSet) else h
    mask = g.mask_of(members)
    return list(iter_bits(g.full_mask & ~mask)) + list(iter_bits(mask))
