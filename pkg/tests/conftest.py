"""
Ortak test fikstürleri
"""
import os

# Testler log dosyası oluşturmasın; ayarlar modülü içe aktarılmadan önce
os.environ.setdefault("LOG_FILE", "")

import pytest

from graphs.core import Graph
from strategies import G6_EDGES, G7_EDGES, G10_ADJACENCY


@pytest.fixture
def g7() -> Graph:
    return Graph.from_edges(7, G7_EDGES)


@pytest.fixture
def g6() -> Graph:
    return Graph.from_edges(6, G6_EDGES)


@pytest.fixture
def g10() -> Graph:
    edges = [(u, v) for u, targets in G10_ADJACENCY.items() for v in targets if u < v]
    return Graph.from_edges(10, edges)


@pytest.fixture
def pentagon() -> Graph:
    return Graph.cycle(5)


@pytest.fixture
def p5() -> Graph:
    return Graph.path(5)
