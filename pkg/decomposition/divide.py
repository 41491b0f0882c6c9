"""
Split bölücü (split divide) bulma, G1/G2 ayrıştırması ve split birleştirme

Tümleyende bulunan bölücüler tümleyen graf saklanmadan side=IN_COMPLEMENT ile
tutulur; tüm doğrulayıcılar maddeleri bildirilen taraftaki grafta yorumlar.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from decomposition.structure import CLASS_PATTERNS, build_structure_partition
from graphs.core import Graph, Relation, VertexSet, bit_count, iter_bits, to_set
from graphs.detect import Pattern, SplitPartition, find_induced, is_free, is_split
from graphs.errors import ConsistencyError, GraphError, PreconditionError, Violation
from graphs.modular import find_proper_homogeneous_set

logger = logging.getLogger(__name__)


class Side(str, Enum):
    """Bölücünün geçerli olduğu graf"""

    IN_G = "in_g"
    IN_COMPLEMENT = "in_complement"

    @property
    def flipped(self) -> "Side":
        return Side.IN_COMPLEMENT if self is Side.IN_G else Side.IN_G

    def graph_of(self, g: Graph) -> Graph:
        return g if self is Side.IN_G else g.complement()


@dataclass(frozen=True)
class SplitDivide:
    """(A, B, C, L, T) bölüşü, taraf bayrağı ve ayırt edilmiş a0, c0 köşeleri"""

    side: Side
    a: VertexSet
    b: VertexSet
    c: VertexSet
    l: VertexSet
    t: VertexSet
    a0: int
    c0: int

    def unification_order(self) -> List[int]:
        """
        unify_pair(split_into_pair(g, d)) köşelerinin taraf grafındaki karşılıkları

        A, sonra B ∪ L ∪ T, sonra C; her blok artan sırada.
        """
        return sorted(self.a) + sorted(self.b | self.l | self.t) + sorted(self.c)


@dataclass(frozen=True)
class PairRoles:
    """
    Birleştirilebilir çiftin rol kümeleri (yerel etiketlerle, artan sırada)

    b1[k], l1[k], t1[k] köşeleri G1'de; b2[k], l2[k], t2[k] köşeleri G2'de aynı
    paylaşılan köşeyi temsil eder.
    """

    a: Tuple[int, ...]
    b1: Tuple[int, ...]
    l1: Tuple[int, ...]
    t1: Tuple[int, ...]
    c_star: int
    a0: int
    b2: Tuple[int, ...]
    c: Tuple[int, ...]
    l2: Tuple[int, ...]
    t2: Tuple[int, ...]
    a_star: int
    c0: int

    @property
    def shared1(self) -> Tuple[int, ...]:
        return self.b1 + self.l1 + self.t1

    @property
    def shared2(self) -> Tuple[int, ...]:
        return self.b2 + self.l2 + self.t2

    @property
    def size(self) -> int:
        return len(self.a) + len(self.shared2) + len(self.c)


@dataclass(frozen=True)
class ComposablePair:
    g1: Graph
    g2: Graph
    roles: PairRoles


def _partition_masks(g: Graph, d: SplitDivide) -> Tuple[int, int, int, int, int]:
    masks = tuple(g.mask_of(s) for s in (d.a, d.b, d.c, d.l, d.t))
    union = 0
    for mask in masks:
        if union & mask:
            raise GraphError("Bölücü kümeleri ayrık değil")
        union |= mask
    if union != g.full_mask:
        raise GraphError("Bölücü kümeleri V(g)'yi kapsamıyor")
    return masks


def validate_split_divide(g: Graph, d: SplitDivide) -> List[Violation]:
    """
    Bölücü koşullarını bildirilen taraftaki grafta denetle

    Returns:
        List[Violation]: Boşsa bölücü geçerlidir

    Raises:
        GraphError: Kümeler V(g)'yi bölmüyorsa
    """
    a, b, c, l, t = _partition_masks(g, d)
    h = d.side.graph_of(g)
    found: List[Violation] = []

    if bit_count(a) < 2:
        found.append(Violation("a-size", "|A| < 2", tuple(iter_bits(a))))
    if not h.is_complete_to(a, b):
        found.append(Violation("a-complete-b", "A, B'ye tam değil", tuple(iter_bits(a | b))))
    if not h.is_anticomplete_to(a, c | t):
        found.append(Violation("a-anticomplete-ct", "A, C ∪ T'ye anti-tam değil", tuple(iter_bits(a | c | t))))
    if d.a0 not in d.a:
        found.append(Violation("a0-complete-l", f"a0={d.a0} A içinde değil", (d.a0,)))
    elif h.neighbor_mask(d.a0) & l != l:
        found.append(Violation("a0-complete-l", f"a0={d.a0} L'ye tam değil", (d.a0,)))

    if not l:
        found.append(Violation("l-nonempty", "L boş"))
    elif not h.is_clique(l):
        found.append(Violation("l-clique", "L klik değil", tuple(iter_bits(l))))
    for v in iter_bits(l):
        if not h.is_mixed_on(v, a):
            found.append(Violation("l-mixed-a", f"{v} köşesi A üzerinde karışık değil", (v,)))
    if not h.is_complete_to(l, b | c):
        found.append(Violation("l-complete-bc", "L, B ∪ C'ye tam değil", tuple(iter_bits(l))))

    if bit_count(c) < 2:
        found.append(Violation("c-size", "|C| < 2", tuple(iter_bits(c))))
    if d.c0 not in d.c:
        found.append(Violation("c0-complete-b", f"c0={d.c0} C içinde değil", (d.c0,)))
    elif h.neighbor_mask(d.c0) & b != b:
        found.append(Violation("c0-complete-b", f"c0={d.c0} B'ye tam değil", (d.c0,)))
    for anti in h.anticomponent_masks(b):
        for v in iter_bits(c):
            if h.is_mixed_on(v, anti):
                found.append(Violation("c-mixed-b", f"{v} köşesi bir B anti-bileşeninde karışık", (v,) + tuple(iter_bits(anti))))

    if not h.is_stable(t):
        found.append(Violation("t-stable", "T bağımsız değil", tuple(iter_bits(t))))
    if not h.is_anticomplete_to(t, c):
        found.append(Violation("t-anticomplete-c", "T, C'ye anti-tam değil", tuple(iter_bits(t))))
    return found


def _least_complete(h: Graph, source: int, target: int) -> int:
    for v in iter_bits(source):
        if h.neighbor_mask(v) & target == target:
            return v
    raise ConsistencyError(f"Kümede {list(iter_bits(target))} kümesine tam köşe yok")


def find_split_divide(g: Graph, verify: bool = True) -> Optional[SplitDivide]:
    """
    Asal {P5, co-P5, C5}-serbest bir grafta split bölücü bul

    Graf split ise None döner. Aksi halde gerekirse tümleyene geçilerek co-C4
    içeren tarafta yapı bölüşü kurulur; Y klik ise bölücü aynı tarafta, değilse
    tümleyen tarafta pivot anti-bileşenden oluşturulur.

    Args:
        g: İncelenecek graf
        verify: Sınıf üyeliği ve asallık ön koşullarını denetle

    Returns:
        Optional[SplitDivide]: Geçerli bölücü veya split graf için None

    Raises:
        PreconditionError: not-class-member veya not-prime
    """
    if verify:
        free, witness = is_free(g, CLASS_PATTERNS)
        if not free:
            raise PreconditionError("not-class-member", f"Graf {witness.pattern.value} içeriyor", witness)
        module = find_proper_homogeneous_set(g)
        if module is not None:
            raise PreconditionError("not-prime", "Graf asal değil", module)

    if isinstance(is_split(g), SplitPartition):
        return None

    if find_induced(g, Pattern.CO_C4) is not None:
        work, work_side = g, Side.IN_G
    else:
        work, work_side = g.complement(), Side.IN_COMPLEMENT
        if find_induced(work, Pattern.CO_C4) is None:
            raise ConsistencyError("Split olmayan graf ve tümleyeni co-C4 içermiyor")

    sp = build_structure_partition(work, verify=False)
    xs = [work.mask_of(s) for s in sp.xs]
    ys = [work.mask_of(s) for s in sp.ys]
    m = sp.m
    y_all = 0
    for part in ys:
        y_all |= part

    if sp.pivot is None:
        side = work_side
        a_mask, l_mask = xs[1], ys[1]
        b_mask = y_all & ~ys[1]
        c_mask = 0
        for part in xs[2:]:
            c_mask |= part
        t_mask = xs[0]
        logger.debug("Y klik: bölücü aynı tarafta")
    else:
        side = work_side.flipped
        z = work.mask_of(sp.pivot)
        xz = work.mask_of(sp.mixed_attach[sp.pivot])
        home = next(i for i in range(m + 1) if ys[i] & z == z)
        i = home or 1
        a_mask, l_mask = z, xz
        b_mask = c_prime = 0
        for v in iter_bits(xs[i] | xs[0] & ~xz):
            relation = work.relation_mask(v, z)
            if relation is Relation.ANTICOMPLETE:
                b_mask |= 1 << v
            elif relation is Relation.COMPLETE:
                c_prime |= 1 << v
            else:
                raise ConsistencyError(f"{v} köşesi pivot anti-bileşende karışık")
        singletons = 0
        for anti in work.anticomponent_masks(y_all):
            if bit_count(anti) == 1:
                singletons |= anti
        t_mask = 0
        for k in iter_bits(singletons):
            if work.neighbor_mask(k) & xz:
                t_mask |= 1 << k
        c_mask = c_prime | y_all & ~(z | t_mask)
        for j in range(1, m + 1):
            if j != i:
                c_mask |= xs[j]
        logger.debug(f"Y klik değil: pivot={sorted(sp.pivot)}, bölücü {side.value} tarafında")

    h = side.graph_of(g)
    a0 = _least_complete(h, a_mask, l_mask)
    c0 = _least_complete(h, c_mask, b_mask)
    divide = SplitDivide(
        side=side,
        a=to_set(a_mask), b=to_set(b_mask), c=to_set(c_mask), l=to_set(l_mask), t=to_set(t_mask),
        a0=a0, c0=c0,
    )
    violations = validate_split_divide(g, divide)
    if violations:
        raise ConsistencyError("Bulunan bölücü geçersiz", violations)
    return divide


def split_into_pair(g: Graph, d: SplitDivide) -> ComposablePair:
    """
    Bölücüyü taraf grafının iki indüklenmiş alt grafına ayır

    G1 = H[A ∪ B ∪ {c0} ∪ L ∪ T], G2 = H[{a0} ∪ B ∪ C ∪ L ∪ T]; c0, G1'de c*
    rolünü, a0 ise G2'de a* rolünü üstlenir.

    Raises:
        PreconditionError: Bölücü geçersizse (invalid-divide)
    """
    violations = validate_split_divide(g, d)
    if violations:
        raise PreconditionError("invalid-divide", "Bölücü geçersiz", violations)
    h = d.side.graph_of(g)
    a, b, c, l, t = (h.mask_of(s) for s in (d.a, d.b, d.c, d.l, d.t))
    shared = b | l | t
    g1, labels1 = h.induced(a | shared | 1 << d.c0)
    g2, labels2 = h.induced(1 << d.a0 | shared | c)
    pos1 = {v: i for i, v in enumerate(labels1)}
    pos2 = {v: i for i, v in enumerate(labels2)}

    def local(pos: Dict[int, int], mask: int) -> Tuple[int, ...]:
        return tuple(pos[v] for v in iter_bits(mask))

    roles = PairRoles(
        a=local(pos1, a), b1=local(pos1, b), l1=local(pos1, l), t1=local(pos1, t),
        c_star=pos1[d.c0], a0=pos1[d.a0],
        b2=local(pos2, b), c=local(pos2, c), l2=local(pos2, l), t2=local(pos2, t),
        a_star=pos2[d.a0], c0=pos2[d.c0],
    )
    return ComposablePair(g1, g2, roles)


def _role_sets_violations(n: int, groups: Sequence[Iterable[int]], name: str) -> List[Violation]:
    seen: List[int] = []
    for group in groups:
        seen.extend(group)
    if sorted(seen) != list(range(n)):
        return [Violation(f"{name}-vertices", f"{name} rol kümeleri köşe kümesini bölmüyor", tuple(sorted(seen)))]
    return []


def validate_composable_pair(p: ComposablePair) -> List[Violation]:
    """
    Birleştirilebilir çift koşullarını denetle (hiç fırlatmaz)

    Returns:
        List[Violation]: Paylaşılan alt graf uyumu dahil tüm ihlaller
    """
    r, g1, g2 = p.roles, p.g1, p.g2
    found = _role_sets_violations(g1.n, [r.a, r.b1, r.l1, r.t1, [r.c_star]], "g1")
    found += _role_sets_violations(g2.n, [r.b2, r.c, r.l2, r.t2, [r.a_star]], "g2")
    if (len(r.b1), len(r.l1), len(r.t1)) != (len(r.b2), len(r.l2), len(r.t2)):
        found.append(Violation("roles-size", "Paylaşılan rol kümelerinin boyutları farklı"))
    if not r.a:
        found.append(Violation("a-nonempty", "A boş"))
    if not r.c:
        found.append(Violation("c-nonempty", "C boş"))
    if found:
        return found

    a, b1, l1, t1 = (g1.mask_of(s) for s in (r.a, r.b1, r.l1, r.t1))
    b2, c, l2, t2 = (g2.mask_of(s) for s in (r.b2, r.c, r.l2, r.t2))

    if not g1.is_clique(l1):
        found.append(Violation("l-clique", "L klik değil", r.l1))
    if not g1.is_stable(t1):
        found.append(Violation("t-stable", "T bağımsız değil", r.t1))
    if not g1.is_complete_to(a, b1):
        found.append(Violation("a-complete-b", "A, B'ye tam değil", r.a))
    if not g1.is_anticomplete_to(a, t1):
        found.append(Violation("a-anticomplete-t", "A, T'ye anti-tam değil", r.a))
    if r.a0 not in r.a:
        found.append(Violation("a0-complete-l", f"a0={r.a0} A içinde değil", (r.a0,)))
    elif g1.neighbor_mask(r.a0) & l1 != l1:
        found.append(Violation("a0-complete-l", f"a0={r.a0} L'ye tam değil", (r.a0,)))
    star = g1.neighbor_mask(r.c_star)
    if star & (b1 | l1) != b1 | l1 or star & (a | t1):
        found.append(Violation("c-star", "c* B ∪ L'ye tam ve A ∪ T'ye anti-tam değil", (r.c_star,)))

    shared1, shared2 = r.shared1, r.shared2
    for i in range(len(shared1)):
        for j in range(i + 1, len(shared1)):
            if g1.has_edge(shared1[i], shared1[j]) != g2.has_edge(shared2[i], shared2[j]):
                found.append(Violation(
                    "shared-agreement", "G1[B ∪ L ∪ T] ile G2[B ∪ L ∪ T] uyuşmuyor", (shared1[i], shared1[j])
                ))
    if not g2.is_anticomplete_to(t2, c):
        found.append(Violation("t-anticomplete-c", "T, C'ye anti-tam değil", r.t2))
    if not g2.is_complete_to(l2, b2 | c):
        found.append(Violation("l-complete-bc", "L, B ∪ C'ye tam değil", r.l2))
    star = g2.neighbor_mask(r.a_star)
    if star & (b2 | l2) != b2 | l2 or star & (c | t2):
        found.append(Violation("a-star", "a* B ∪ L'ye tam ve C ∪ T'ye anti-tam değil", (r.a_star,)))
    if r.c0 not in r.c:
        found.append(Violation("c0-complete-b", f"c0={r.c0} C içinde değil", (r.c0,)))
    elif g2.neighbor_mask(r.c0) & b2 != b2:
        found.append(Violation("c0-complete-b", f"c0={r.c0} B'ye tam değil", (r.c0,)))
    for anti in g2.anticomponent_masks(b2):
        for v in iter_bits(c):
            if g2.is_mixed_on(v, anti):
                found.append(Violation("c-mixed-b", f"{v} köşesi bir B anti-bileşeninde karışık", (v,)))
    return found


def unify_pair(p: ComposablePair) -> Graph:
    """
    Birleştirilebilir çiftin split birleştirmesi

    Etiketleme: G1 sırasıyla A köşeleri, sonra G2 sırasıyla paylaşılan B ∪ L ∪ T,
    sonra G2 sırasıyla C köşeleri. A, C'ye anti-tamdır.

    Raises:
        PreconditionError: Çift geçersizse (invalid-pair)
    """
    violations = validate_composable_pair(p)
    if violations:
        raise PreconditionError("invalid-pair", "Çift birleştirilemez", violations)
    r = p.roles
    shared_order = sorted(r.shared2)
    counterpart = dict(zip(r.shared2, r.shared1))
    pos1: Dict[int, int] = {v: i for i, v in enumerate(sorted(r.a))}
    pos2: Dict[int, int] = {}
    offset = len(pos1)
    for i, v in enumerate(shared_order):
        pos2[v] = offset + i
        pos1[counterpart[v]] = offset + i
    offset += len(shared_order)
    for i, v in enumerate(sorted(r.c)):
        pos2[v] = offset + i

    adj = [0] * r.size
    for source, pos in ((p.g1, pos1), (p.g2, pos2)):
        for u, v in source.edges():
            if u in pos and v in pos:
                adj[pos[u]] |= 1 << pos[v]
                adj[pos[v]] |= 1 << pos[u]
    return Graph._trusted(r.size, adj)
