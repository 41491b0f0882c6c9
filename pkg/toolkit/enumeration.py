"""
Küçük graflar üzerinde kapsamlı sayım ve çapraz doğrulama

n <= n_max için tüm etiketli graflar graph6 kod sırasıyla taranır. Tarama
parçalara bölünür, parçalar bir asyncio kuyruğundan işçilere dağıtılır ve
sonuçlar deterministik olarak birleştirilir.
"""
import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Any, Dict, Iterator, List, Optional, Tuple

from tqdm import tqdm

from config.settings import ENUM_CHUNK_SIZE, ENUM_MAX_N, ENUM_WORKERS
from decomposition.tree import MEMBER_PATTERNS, check_tree, decompose, reconstruct
from graphs.core import Graph
from graphs.detect import Pattern, SplitPartition, is_free, is_split
from toolkit.formats import format_graph6
from utils.logger import LoggingTimer

logger = logging.getLogger(__name__)

MODES = ("agree", "count")

SPLIT_PATTERNS = (Pattern.C4, Pattern.CO_C4, Pattern.C5)

ChunkResult = Tuple[int, int, int, List[Dict[str, str]]]


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def graph_from_code(n: int, code: int) -> Graph:
    """
    Kodun k. biti, graph6 sütun sırasındaki k. köşe çiftinin kenarıdır

    Sıra: j = 1..n-1 için i = 0..j-1 çiftleri (i, j).
    """
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if code >> k & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def iter_graphs(n: int) -> Iterator[Graph]:
    """n köşeli tüm etiketli graflar"""
    for code in range(1 << pair_count(n)):
        yield graph_from_code(n, code)


def _is_p5(g: Graph) -> bool:
    degrees = sorted(g.degree(v) for v in g.vertices())
    return g.edge_count == 4 and degrees == [1, 1, 2, 2, 2] and g.is_connected()


def brute_force_free(g: Graph) -> bool:
    """
    5 köşeli her alt kümeyi derece dizisiyle sınıflandıran bağımsız kahin

    Returns:
        bool: g hem P5 hem co-P5 içermiyorsa True
    """
    for subset in combinations(range(g.n), 5):
        h, _ = g.induced(subset)
        if _is_p5(h) or _is_p5(h.complement()):
            return False
    return True


def _violation(g: Graph, check: str, detail: str) -> Dict[str, str]:
    return {"graph6": format_graph6(g), "check": check, "detail": detail}


def _agree(g: Graph) -> Tuple[bool, List[Dict[str, str]]]:
    found = []
    oracle = brute_force_free(g)
    result = decompose(g)
    if result.is_member != oracle:
        found.append(_violation(g, "recognize", f"recognize={result.is_member}, brute-force={oracle}"))
    if result.is_member:
        problems = check_tree(result.tree)
        if problems:
            found.append(_violation(g, "tree", "; ".join(str(p) for p in problems)))
        elif reconstruct(result.tree) != g:
            found.append(_violation(g, "reconstruct", "Ağaç grafı yeniden kurmuyor"))
    split = isinstance(is_split(g), SplitPartition)
    split_free, _ = is_free(g, SPLIT_PATTERNS)
    if split != split_free:
        found.append(_violation(g, "split", f"is_split={split}, C4/CoC4/C5-free={split_free}"))
    return oracle, found


def _scan_chunk(n: int, start: int, stop: int, mode: str) -> ChunkResult:
    """[start, stop) kod aralığını tara; süreç havuzunda da çalışır"""
    free = 0
    violations: List[Dict[str, str]] = []
    for code in range(start, stop):
        g = graph_from_code(n, code)
        if mode == "count":
            member, _ = is_free(g, MEMBER_PATTERNS)
        else:
            member, found = _agree(g)
            violations += found
        free += member
    return n, stop - start, free, violations


class EnumerationRunner:
    """Kapsamlı sayım çalıştırıcısı"""

    def __init__(self, n_max: int, mode: str = "count", workers: int = ENUM_WORKERS,
                 chunk_size: int = ENUM_CHUNK_SIZE, show_progress: bool = True):
        """
        EnumerationRunner sınıfını başlat

        Args:
            n_max: En büyük köşe sayısı
            mode: count (serbest graf sayımı) veya agree (çapraz doğrulama)
            workers: İşçi sayısı; 1'den büyükse süreç havuzu kullanılır
            chunk_size: Bir işte taranan graf sayısı
            show_progress: tqdm ilerleme çubuğunu göster

        Raises:
            ValueError: n_max, mode veya workers geçersizse
        """
        if not 0 <= n_max <= ENUM_MAX_N:
            raise ValueError(f"n_max 0..{ENUM_MAX_N} aralığında olmalı: {n_max}")
        if mode not in MODES:
            raise ValueError(f"Bilinmeyen kip: {mode} (seçenekler: {', '.join(MODES)})")
        if workers < 1 or chunk_size < 1:
            raise ValueError("İşçi sayısı ve parça boyutu pozitif olmalı")

        self.n_max = n_max
        self.mode = mode
        self.workers = workers
        self.chunk_size = chunk_size
        self.show_progress = show_progress

        self.counts: Dict[int, Dict[str, int]] = {}
        self.violations: List[Dict[str, str]] = []

    def _chunks(self) -> List[Tuple[int, int, int]]:
        chunks = []
        for n in range(self.n_max + 1):
            total = 1 << pair_count(n)
            for start in range(0, total, self.chunk_size):
                chunks.append((n, start, min(start + self.chunk_size, total)))
        return chunks

    async def run(self) -> Dict[str, Any]:
        """
        Taramayı çalıştır

        Returns:
            Dict[str, Any]: mode, n_max, counts ve sıralı violations alanlı rapor
        """
        chunks = self._chunks()
        queue: asyncio.Queue = asyncio.Queue()
        for chunk in chunks:
            queue.put_nowait(chunk)

        self.counts = {n: {"total": 0, "free": 0} for n in range(self.n_max + 1)}
        self.violations = []
        executor = ProcessPoolExecutor(max_workers=self.workers) if self.workers > 1 else None
        progress = tqdm(
            total=sum(stop - start for _, start, stop in chunks),
            desc=f"Sayım ({self.mode})",
            unit="graf",
            disable=not self.show_progress,
        )
        logger.info(f"Sayım başlatıldı: n <= {self.n_max}, kip={self.mode}, {len(chunks)} parça, {self.workers} işçi")

        try:
            with LoggingTimer(logger, f"Sayım n <= {self.n_max}", level=logging.INFO):
                workers = [self.worker(queue, executor, progress, i) for i in range(self.workers)]
                await asyncio.gather(*workers)
        finally:
            progress.close()
            if executor is not None:
                executor.shutdown()

        report = self.report()
        logger.info(f"Sayım tamamlandı: {len(report['violations'])} ihlal")
        return report

    async def worker(self, queue: asyncio.Queue, executor: Optional[ProcessPoolExecutor],
                     progress: tqdm, worker_id: int) -> None:
        """
        Sayım işçisi

        Args:
            queue: (n, start, stop) parçalarının kuyruğu
            executor: Süreç havuzu; None ise parça olay döngüsünde taranır
            progress: İlerleme çubuğu
            worker_id: İşçi ID'si
        """
        logger.debug(f"İşçi {worker_id} başlatıldı")
        loop = asyncio.get_running_loop()

        while True:
            try:
                n, start, stop = queue.get_nowait()
            except asyncio.QueueEmpty:
                break

            try:
                if executor is None:
                    result = _scan_chunk(n, start, stop, self.mode)
                else:
                    result = await loop.run_in_executor(executor, _scan_chunk, n, start, stop, self.mode)
                self._merge(result)
                progress.update(stop - start)
            finally:
                queue.task_done()

        logger.debug(f"İşçi {worker_id} sonlandırıldı")

    def _merge(self, result: ChunkResult) -> None:
        n, total, free, violations = result
        self.counts[n]["total"] += total
        self.counts[n]["free"] += free
        self.violations += violations

    def report(self) -> Dict[str, Any]:
        return {
            "mode": self.mode,
            "n_max": self.n_max,
            "counts": {str(n): dict(self.counts[n]) for n in sorted(self.counts)},
            "violations": sorted(self.violations, key=lambda v: (v["graph6"], v["check"], v["detail"])),
        }
