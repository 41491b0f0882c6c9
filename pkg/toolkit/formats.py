"""
Graf dosya biçimleri: graph6 ve kenar listesi
"""
import logging
from typing import Union

import networkx as nx

from graphs.core import Graph
from graphs.errors import GraphError

logger = logging.getLogger(__name__)

FORMATS = ("graph6", "edgelist")
GRAPH6_HEADER = b">>graph6<<"


class FormatError(ValueError):
    """
    Graf dosyası ayrıştırma hatası

    Args:
        message: Açıklama
        location: Hatalı bayt konumu veya satır numarası ("bayt 3", "satır 2")
    """

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    """0..n-1 etiketli networkx grafından Graph oluştur"""
    n = graph.number_of_nodes()
    if sorted(graph.nodes()) != list(range(n)):
        raise GraphError("networkx grafının düğümleri 0..n-1 olmalı")
    return Graph.from_edges(n, graph.edges())


def parse_graph6(data: Union[bytes, str]) -> Graph:
    """
    Tek satırlık graph6 verisini çöz

    Args:
        data: İsteğe bağlı '>>graph6<<' başlıklı graph6 baytları

    Returns:
        Graph: Çözülen graf

    Raises:
        FormatError: Boş veri, aralık dışı bayt veya eksik/fazla veri
    """
    raw = data.encode("ascii", errors="replace") if isinstance(data, str) else bytes(data)
    raw = raw.strip()
    offset = 0
    if raw.startswith(GRAPH6_HEADER):
        raw = raw[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not raw:
        raise FormatError("graph6 verisi boş")
    newline = raw.find(b"\n")
    if newline >= 0:
        raise FormatError("Dosyada birden fazla graf var", f"bayt {offset + newline}")
    for i, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise FormatError(f"Geçersiz graph6 baytı {byte}", f"bayt {offset + i}")
    try:
        graph = nx.from_graph6_bytes(raw)
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise FormatError(f"graph6 çözülemedi: {e}", f"bayt {offset + len(raw)}") from e
    return from_networkx(graph)


def format_graph6(g: Graph) -> str:
    """Başlıksız graph6 satırı (sonunda yeni satır yok)"""
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def parse_edgelist(text: Union[bytes, str]) -> Graph:
    """
    Kenar listesi metnini çöz

    İlk satır "n m", ardından m adet "u v" satırı (0 tabanlı). Boş satırlar atlanır.

    Raises:
        FormatError: Hatalı satır; mesaj satır numarasını içerir
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise FormatError("Kenar listesi UTF-8 değil", f"bayt {e.start}") from e
    lines = [(i, line.split()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise FormatError("Kenar listesi boş")

    def numbers(lineno: int, fields: list) -> tuple:
        if len(fields) != 2:
            raise FormatError(f"İki tamsayı bekleniyordu, {len(fields)} alan bulundu", f"satır {lineno}")
        try:
            return int(fields[0]), int(fields[1])
        except ValueError as e:
            raise FormatError(f"Tamsayı değil: {' '.join(fields)}", f"satır {lineno}") from e

    lineno, header = lines[0]
    n, m = numbers(lineno, header)
    if n < 0 or m < 0:
        raise FormatError("n ve m negatif olamaz", f"satır {lineno}")
    if len(lines) - 1 != m:
        last = lines[-1][0]
        raise FormatError(f"{m} kenar bildirildi, {len(lines) - 1} bulundu", f"satır {last}")

    edges = set()
    for lineno, fields in lines[1:]:
        u, v = numbers(lineno, fields)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"Köşe aralık dışında: {u} {v} (n={n})", f"satır {lineno}")
        if u == v:
            raise FormatError(f"Döngü kenarı: {u} {v}", f"satır {lineno}")
        key = (min(u, v), max(u, v))
        if key in edges:
            raise FormatError(f"Tekrarlanan kenar: {u} {v}", f"satır {lineno}")
        edges.add(key)
    return Graph.from_edges(n, sorted(edges))


def format_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_graph(data: Union[bytes, str], fmt: str) -> Graph:
    if fmt == "graph6":
        return parse_graph6(data)
    if fmt == "edgelist":
        return parse_edgelist(data)
    raise FormatError(f"Bilinmeyen biçim: {fmt}")


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return format_graph6(g) + "\n"
    if fmt == "edgelist":
        return format_edgelist(g)
    raise FormatError(f"Bilinmeyen biçim: {fmt}")


def read_graph(path: str, fmt: str) -> Graph:
    """
    Dosyadan graf oku

    Raises:
        FormatError: Ayrıştırma hatası
        OSError: Dosya okunamazsa
    """
    with open(path, "rb") as f:
        data = f.read()
    graph = parse_graph(data, fmt)
    logger.debug(f"{path} okundu: n={graph.n}, m={graph.edge_count}")
    return graph
