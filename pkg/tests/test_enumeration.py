import asyncio

import pytest

from graphs.core import Graph
from toolkit.enumeration import EnumerationRunner, brute_force_free, graph_from_code, iter_graphs, pair_count

COUNTS_UP_TO_5 = {
    "0": {"total": 1, "free": 1},
    "1": {"total": 1, "free": 1},
    "2": {"total": 2, "free": 2},
    "3": {"total": 8, "free": 8},
    "4": {"total": 64, "free": 64},
    "5": {"total": 1024, "free": 904},
}


def run(**kwargs):
    kwargs.setdefault("show_progress", False)
    return asyncio.run(EnumerationRunner(**kwargs).run())


def test_code_bits_follow_graph6_column_order():
    assert graph_from_code(3, 1).edges() == [(0, 1)]
    assert graph_from_code(3, 2).edges() == [(0, 2)]
    assert graph_from_code(3, 4).edges() == [(1, 2)]
    assert graph_from_code(4, (1 << pair_count(4)) - 1) == Graph.complete(4)


def test_iter_graphs_is_exhaustive():
    graphs = list(iter_graphs(3))
    assert len(graphs) == 8
    assert len({tuple(g.edges()) for g in graphs}) == 8


def test_brute_force_oracle(p5, pentagon):
    assert not brute_force_free(p5)
    assert not brute_force_free(p5.complement())
    assert brute_force_free(pentagon)
    assert brute_force_free(Graph.path(4))


def test_count_up_to_five():
    report = run(n_max=5, mode="count")
    assert report["mode"] == "count"
    assert report["n_max"] == 5
    assert report["counts"] == COUNTS_UP_TO_5
    assert report["violations"] == []


def test_agree_up_to_five():
    report = run(n_max=5, mode="agree")
    assert report["counts"] == COUNTS_UP_TO_5
    assert report["violations"] == []


def test_report_is_independent_of_chunking():
    assert run(n_max=5, chunk_size=1) == run(n_max=5, chunk_size=5000)


def test_process_pool_matches_inline():
    assert run(n_max=4, mode="agree", workers=2, chunk_size=8) == run(n_max=4, mode="agree")


@pytest.mark.parametrize("kwargs", [
    {"n_max": -1},
    {"n_max": 99},
    {"n_max": 3, "mode": "exhaustive"},
    {"n_max": 3, "workers": 0},
    {"n_max": 3, "chunk_size": 0},
])
def test_invalid_runner_arguments(kwargs):
    with pytest.raises(ValueError):
        EnumerationRunner(**kwargs)


@pytest.mark.slow
def test_agree_on_six_vertices():
    report = run(n_max=6, mode="agree")
    assert report["counts"]["6"]["total"] == 1 << 15
    assert report["violations"] == []
