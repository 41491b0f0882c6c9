import asyncio
import json

import pytest

from graphs.core import Graph
from main import EXIT_ERROR, EXIT_OK, EXIT_REJECTED, main
from strategies import G7_EDGES
from toolkit.formats import format_graph


def cli(*argv):
    return asyncio.run(main(list(argv)))


@pytest.fixture
def write_graph(tmp_path):
    def write(name, g, fmt="graph6"):
        path = tmp_path / name
        path.write_text(format_graph(g, fmt))
        return str(path)
    return write


def test_recognize_member(write_graph, capsys):
    path = write_graph("c5.g6", Graph.cycle(5))
    assert cli("recognize", "--input", path, "--quiet") == EXIT_OK
    assert capsys.readouterr().out == "üye: n=5, m=5\n"


def test_recognize_non_member_as_json(write_graph, capsys):
    path = write_graph("p5.txt", Graph.path(5), "edgelist")
    assert cli("recognize", "--input", path, "--format", "edgelist", "--json", "--quiet") == EXIT_REJECTED
    doc = json.loads(capsys.readouterr().out)
    assert doc["member"] is False
    assert doc["witness"] == {"pattern": "P5", "vertices": [0, 1, 2, 3, 4]}


def test_recognize_then_verify(write_graph, tmp_path, capsys):
    g7 = Graph.from_edges(7, G7_EDGES)
    path = write_graph("g7.g6", g7)
    cert = str(tmp_path / "g7.json")
    assert cli("recognize", "--input", path, "--output", cert, "--quiet") == EXIT_OK
    assert cli("verify", "--input", path, "--cert", cert, "--quiet") == EXIT_OK

    other = write_graph("k7.g6", Graph.complete(7))
    capsys.readouterr()
    assert cli("verify", "--input", other, "--cert", cert, "--quiet") == EXIT_REJECTED
    assert capsys.readouterr().out.startswith("geçersiz: 1 ihlal")


@pytest.mark.parametrize("content", ["D\x01c\n", "Dh\n"])
def test_malformed_input(tmp_path, content):
    path = tmp_path / "bad.g6"
    path.write_text(content)
    assert cli("recognize", "--input", str(path), "--quiet") == EXIT_ERROR


def test_missing_files(write_graph, tmp_path):
    assert cli("recognize", "--input", str(tmp_path / "none.g6"), "--quiet") == EXIT_ERROR
    path = write_graph("c5.g6", Graph.cycle(5))
    assert cli("verify", "--input", path, "--cert", str(tmp_path / "none.json"), "--quiet") == EXIT_ERROR


def test_verify_rejects_foreign_schema(write_graph, tmp_path):
    path = write_graph("c5.g6", Graph.cycle(5))
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps({"schema": "other/2", "kind": "recognition"}))
    assert cli("verify", "--input", path, "--cert", str(cert), "--quiet") == EXIT_ERROR


@pytest.mark.parametrize("fmt", ["graph6", "edgelist"])
def test_generate_then_verify(tmp_path, fmt):
    graph = str(tmp_path / "g.out")
    cert = str(tmp_path / "g.json")
    assert cli("generate", "--kind", "mixed", "--n", "11", "--seed", "5", "--format", fmt,
               "--output", graph, "--cert", cert, "--quiet") == EXIT_OK
    assert cli("verify", "--input", graph, "--format", fmt, "--cert", cert, "--quiet") == EXIT_OK
    assert cli("recognize", "--input", graph, "--format", fmt, "--quiet") == EXIT_OK


def test_generate_to_stdout(capsys):
    assert cli("generate", "--kind", "split", "--n", "4", "--seed", "1", "--quiet") == EXIT_OK
    out = capsys.readouterr().out
    assert out.endswith("\n") and len(out.strip()) == 2


def test_enumerate_count(capsys):
    assert cli("enumerate", "--n", "4", "--mode", "count", "--quiet") == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["counts"]["4"] == {"total": 64, "free": 64}
    assert report["violations"] == []


def test_enumerate_limit():
    assert cli("enumerate", "--n", "8", "--quiet") == EXIT_ERROR


def test_divide(write_graph, capsys):
    path = write_graph("g7.g6", Graph.from_edges(7, G7_EDGES))
    assert cli("divide", "--input", path, "--json", "--quiet") == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["divide"]["side"] == "in_g"
    assert doc["divide"]["l"] == [4]

    split = write_graph("p4.g6", Graph.path(4))
    assert cli("divide", "--input", split, "--quiet") == EXIT_OK
    assert capsys.readouterr().out == "split: klik=[1, 2], bağımsız=[0, 3]\n"

    p5 = write_graph("p5.g6", Graph.path(5))
    assert cli("divide", "--input", p5, "--quiet") == EXIT_REJECTED
    assert capsys.readouterr().out == "ön koşul sağlanmadı: not-class-member\n"


def test_structure(write_graph, capsys):
    path = write_graph("g7.g6", Graph.from_edges(7, G7_EDGES))
    assert cli("structure", "--input", path, "--quiet") == EXIT_OK
    assert capsys.readouterr().out.startswith("yapı bölüşü: m=2;")

    p4 = write_graph("p4.g6", Graph.path(4))
    assert cli("structure", "--input", p4, "--quiet") == EXIT_REJECTED


@pytest.mark.parametrize("argv", [[], ["recognize"], ["generate", "--kind", "tree", "--n", "3"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as info:
        cli(*argv)
    assert info.value.code == EXIT_ERROR


def test_verify_divide_with_foreign_a0(write_graph, tmp_path, capsys):
    path = write_graph("g7.g6", Graph.from_edges(7, G7_EDGES))
    assert cli("divide", "--input", path, "--json", "--quiet") == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    doc["divide"]["a0"] = -1
    cert = tmp_path / "divide.json"
    cert.write_text(json.dumps(doc))
    assert cli("verify", "--input", path, "--cert", str(cert), "--quiet") == EXIT_REJECTED
