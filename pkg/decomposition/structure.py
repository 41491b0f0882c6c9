"""
Asal {P5, co-P5, C5}-serbest ve co-C4 içeren graflar için yapı bölüşü

X kümesi bir co-C4 tanığından başlatılıp G[X] en az iki büyük bileşene sahip
kaldıkça açgözlü biçimde büyütülür; kalan köşeler Y kümesini oluşturur.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from graphs.core import Graph, VertexSet, bit_count, iter_bits, lowest, to_set
from graphs.detect import ForbiddenWitness, Pattern, find_induced, is_free
from graphs.errors import ConsistencyError, GraphError, PreconditionError, Violation
from graphs.modular import find_proper_homogeneous_set

logger = logging.getLogger(__name__)

CLASS_PATTERNS = (Pattern.P5, Pattern.CO_P5, Pattern.C5)


@dataclass(frozen=True)
class StructurePartition:
    """
    (X0..Xm, Y0..Ym) bölüşü ve büyük anti-bileşen -> X_Z haritası

    pivot, X_Z kümesi diğer tüm büyük anti-bileşenlere anti-tam olan büyük
    anti-bileşendir (Y klik ise None).
    """

    xs: Tuple[VertexSet, ...]
    ys: Tuple[VertexSet, ...]
    mixed_attach: Dict[VertexSet, VertexSet] = field(default_factory=dict)
    pivot: Optional[VertexSet] = None

    @property
    def m(self) -> int:
        return len(self.xs) - 1

    @property
    def x(self) -> VertexSet:
        return frozenset().union(*self.xs)

    @property
    def y(self) -> VertexSet:
        return frozenset().union(*self.ys)


def _big_components(g: Graph, mask: int) -> List[int]:
    return [c for c in g.component_masks(mask) if bit_count(c) >= 2]


def _big_anticomponents(g: Graph, mask: int) -> List[int]:
    return [c for c in g.anticomponent_masks(mask) if bit_count(c) >= 2]


def lemma_abx(
    g: Graph, a: Iterable[int], b: Iterable[int], t: int, verify: bool = True
) -> int:
    """
    A'nın B'ye tam olan bir köşesini bul

    B'de en çok komşusu olan A köşesi (eşitlikte en küçük etiket) seçilir;
    ön koşullar altında bu köşe B'ye tamdır.

    Args:
        g: {P5, co-P5, C5}-serbest graf
        a: Bağlı, boş olmayan küme
        b: A'dan ayrık, boş olmayan küme; her köşesinin A'da komşusu var
        t: A'ya anti-tam, B'ye tam köşe
        verify: Sınıf üyeliğini de denetle

    Returns:
        int: A'nın B'ye tam köşesi

    Raises:
        PreconditionError: Ön koşullardan biri bozuksa (her biri ayrı neden koduyla)
    """
    a_mask, b_mask = g.mask_of(a), g.mask_of(b)
    if not a_mask:
        raise PreconditionError("a-empty", "A boş")
    if not b_mask:
        raise PreconditionError("b-empty", "B boş")
    if a_mask & b_mask:
        raise PreconditionError("not-disjoint", "A ve B ayrık değil", to_set(a_mask & b_mask))
    g.mask_of([t])
    if (a_mask | b_mask) >> t & 1:
        raise PreconditionError("t-in-sets", f"{t} köşesi A ∪ B içinde", (t,))
    if g.neighbor_mask(t) & a_mask:
        raise PreconditionError("t-not-anticomplete-a", f"{t} köşesinin A'da komşusu var", (t,))
    if g.neighbor_mask(t) & b_mask != b_mask:
        missing = lowest(b_mask & ~g.neighbor_mask(t))
        raise PreconditionError("t-not-complete-b", f"{t} köşesi {missing} ile komşu değil", (t, missing))
    for y in iter_bits(b_mask):
        if not g.neighbor_mask(y) & a_mask:
            raise PreconditionError("b-without-neighbor", f"{y} köşesinin A'da komşusu yok", (y,))
    if not g.is_connected(a_mask):
        raise PreconditionError("a-disconnected", "G[A] bağlı değil", to_set(a_mask))
    if verify:
        free, witness = is_free(g, CLASS_PATTERNS)
        if not free:
            raise PreconditionError("not-class-member", f"Graf {witness.pattern.value} içeriyor", witness)

    best = max(iter_bits(a_mask), key=lambda v: (bit_count(g.neighbor_mask(v) & b_mask), -v))
    if g.neighbor_mask(best) & b_mask != b_mask:
        raise ConsistencyError(f"{best} köşesi B'ye tam değil")
    return best


def _check_preconditions(g: Graph, verify: bool) -> ForbiddenWitness:
    if verify:
        free, witness = is_free(g, CLASS_PATTERNS)
        if not free:
            raise PreconditionError("not-class-member", f"Graf {witness.pattern.value} içeriyor", witness)
        module = find_proper_homogeneous_set(g)
        if module is not None:
            raise PreconditionError("not-prime", "Graf asal değil", module)
    seed = find_induced(g, Pattern.CO_C4)
    if seed is None:
        raise PreconditionError("no-co-c4", "Graf co-C4 içermiyor")
    return seed


def build_structure_partition(g: Graph, verify: bool = True) -> StructurePartition:
    """
    Yapı bölüşünü oluştur

    Args:
        g: Asal, {P5, co-P5, C5}-serbest, co-C4 içeren graf
        verify: Sınıf üyeliği ve asallık ön koşullarını denetle

    Returns:
        StructurePartition: Dokuz özelliğin tümünü sağlayan bölüş

    Raises:
        PreconditionError: not-class-member, not-prime veya no-co-c4
        ConsistencyError: Oluşturulan bölüş doğrulayıcıdan geçmezse
    """
    seed = _check_preconditions(g, verify)
    x_mask = g.mask_of(seed.vertices)

    changed = True
    while changed:
        changed = False
        for v in iter_bits(g.full_mask & ~x_mask):
            if len(_big_components(g, x_mask | 1 << v)) >= 2:
                x_mask |= 1 << v
                changed = True
    logger.debug(f"X maksimal: {list(iter_bits(x_mask))}")

    big = _big_components(g, x_mask)
    x0 = x_mask
    for part in big:
        x0 &= ~part
    x_parts = [x0] + big
    m = len(big)

    y_mask = g.full_mask & ~x_mask
    y_parts = [0] * (m + 1)
    for y in iter_bits(y_mask):
        mixed = [i for i in range(1, m + 1) if g.is_mixed_on(y, x_parts[i])]
        if len(mixed) > 1:
            raise ConsistencyError(f"{y} köşesi birden fazla X_i üzerinde karışık", [
                Violation("(ii)", "Tek karışık indeks kuralı bozuldu", (y,))
            ])
        y_parts[mixed[0] if mixed else 0] |= 1 << y

    attach: Dict[VertexSet, VertexSet] = {}
    anticomponents = _big_anticomponents(g, y_mask)
    for z in anticomponents:
        attach[to_set(z)] = to_set(_mixed_set(g, x0, z))

    pivot = None
    for z in anticomponents:
        xz = g.mask_of(attach[to_set(z)])
        if all(g.is_anticomplete_to(xz, other) for other in anticomponents if other != z):
            pivot = to_set(z)
            break

    partition = StructurePartition(
        xs=tuple(to_set(p) for p in x_parts),
        ys=tuple(to_set(p) for p in y_parts),
        mixed_attach=attach,
        pivot=pivot,
    )
    violations = validate_structure_partition(g, partition)
    if violations:
        raise ConsistencyError("Yapı bölüşü doğrulanamadı", violations)
    logger.debug(f"Yapı bölüşü: m={m}, pivot={sorted(pivot) if pivot else None}")
    return partition


def _mixed_set(g: Graph, source: int, target: int) -> int:
    mixed = 0
    for v in iter_bits(source):
        if g.is_mixed_on(v, target):
            mixed |= 1 << v
    return mixed


def _witness(*masks: int) -> Tuple[int, ...]:
    found = []
    for mask in masks:
        found.extend(iter_bits(mask))
    return tuple(found)


def validate_structure_partition(g: Graph, sp: StructurePartition) -> List[Violation]:
    """
    Bölüşün dokuz özelliğini tek tek denetle

    Returns:
        List[Violation]: Her ihlal "(i)".."(ix)" maddesini ve somut köşeleri içerir

    Raises:
        GraphError: Kümeler V(g)'yi bölmüyorsa
    """
    if len(sp.xs) != len(sp.ys) or not sp.xs:
        raise GraphError("X ve Y aileleri aynı uzunlukta olmalı")
    parts = [g.mask_of(s) for s in sp.xs + sp.ys]
    union = 0
    for part in parts:
        if union & part:
            raise GraphError("Bölüş kümeleri ayrık değil")
        union |= part
    if union != g.full_mask:
        raise GraphError("Bölüş V(g)'yi kapsamıyor")

    xs = parts[:len(sp.xs)]
    ys = parts[len(sp.xs):]
    m = len(xs) - 1
    x_all = 0
    for part in xs:
        x_all |= part
    y_all = g.full_mask & ~x_all
    x_big = x_all & ~xs[0]
    found: List[Violation] = []

    # (i)
    if m < 2:
        found.append(Violation("(i)", f"m = {m}, en az 2 olmalı"))
    for i in range(1, m + 1):
        if bit_count(xs[i]) < 2:
            found.append(Violation("(i)", f"|X{i}| < 2", _witness(xs[i])))
        elif not g.is_connected(xs[i]):
            found.append(Violation("(i)", f"X{i} bağlı değil", _witness(xs[i])))
    if not g.is_stable(xs[0]):
        found.append(Violation("(i)", "X0 bağımsız değil", _witness(xs[0])))
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            if not g.is_anticomplete_to(xs[i], xs[j]):
                found.append(Violation("(i)", f"X{i} ve X{j} anti-tam değil", _witness(xs[i], xs[j])))

    # (ii)
    for i in range(1, m + 1):
        if not ys[i]:
            found.append(Violation("(ii)", f"Y{i} boş"))
        rest = x_big & ~xs[i]
        for y in iter_bits(ys[i]):
            if not g.is_mixed_on(y, xs[i]):
                found.append(Violation("(ii)", f"{y} köşesi X{i} üzerinde karışık değil", (y,)))
            if g.neighbor_mask(y) & rest != rest:
                found.append(Violation("(ii)", f"{y} köşesi X ∖ (X{i} ∪ X0) kümesine tam değil", (y,)))
    for y in iter_bits(ys[0]):
        if g.neighbor_mask(y) & x_big != x_big:
            found.append(Violation("(ii)", f"Y0 köşesi {y} X ∖ X0 kümesine tam değil", (y,)))

    # (iii)
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            if not g.is_complete_to(ys[i], ys[j]):
                found.append(Violation("(iii)", f"Y{i} ve Y{j} tam değil", _witness(ys[i], ys[j])))

    anticomponents = g.anticomponent_masks(y_all)
    big_anti = [z for z in anticomponents if bit_count(z) >= 2]

    # (iv)
    for x in iter_bits(x_big):
        for z in anticomponents:
            if g.is_mixed_on(x, z):
                found.append(Violation("(iv)", f"{x} köşesi bir Y anti-bileşeninde karışık", (x,) + _witness(z)))

    # (v)
    for i in range(1, m + 1):
        if not any(g.neighbor_mask(v) & y_all == y_all for v in iter_bits(xs[i])):
            found.append(Violation("(v)", f"X{i} içinde Y'ye tam köşe yok", _witness(xs[i])))

    # (vi)
    for x in iter_bits(xs[0]):
        mixed_on = [z for z in anticomponents if g.is_mixed_on(x, z)]
        if len(mixed_on) > 1:
            found.append(Violation("(vi)", f"{x} köşesi birden fazla anti-bileşende karışık", (x,)))

    # (vii)
    attach = {z: _mixed_set(g, xs[0], z) for z in big_anti}
    declared = {g.mask_of(z): g.mask_of(xz) for z, xz in sp.mixed_attach.items()}
    if set(declared) != set(attach):
        found.append(Violation("(vii)", "Harita anahtarları büyük anti-bileşenlerle aynı değil"))
    for z, xz in attach.items():
        if not xz:
            found.append(Violation("(vii)", "X_Z boş", _witness(z)))
        if z in declared and declared[z] != xz:
            found.append(Violation("(vii)", "Kayıtlı X_Z hesaplananla uyuşmuyor", _witness(z)))
    for i, z in enumerate(big_anti):
        for other in big_anti[i + 1:]:
            if attach[z] & attach[other]:
                found.append(Violation("(vii)", "X_Z kümeleri ayrık değil", _witness(attach[z] & attach[other])))

    # (viii)
    for z, xz in attach.items():
        if not any(not g.neighbor_mask(v) & xz for v in iter_bits(z)):
            found.append(Violation("(viii)", "Z içinde X_Z'ye anti-tam köşe yok", _witness(z)))

    # (ix)
    def isolates(z: int) -> bool:
        return all(g.is_anticomplete_to(attach[z], other) for other in big_anti if other != z)

    if big_anti:
        if not any(isolates(z) for z in big_anti):
            found.append(Violation("(ix)", "Hiçbir büyük anti-bileşen koşulu sağlamıyor"))
        if sp.pivot is not None:
            pivot = g.mask_of(sp.pivot)
            if pivot not in attach or not isolates(pivot):
                found.append(Violation("(ix)", "Kayıtlı pivot koşulu sağlamıyor", _witness(pivot)))
    elif sp.pivot is not None:
        found.append(Violation("(ix)", "Y klik iken pivot kaydedilmiş", tuple(sorted(sp.pivot))))

    return found
