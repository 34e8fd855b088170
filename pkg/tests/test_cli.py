import json
import os
import subprocess
import sys

import pytest

from cprel.cli import main
from cprel.graphcat import Graph, graph_identity
from cprel.relcore import UNIT, FiniteSet, Relation, standard_set
from cprel.serialize import dumps, graph_from_document, graph_to_document, relation_to_document


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_graph(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(dumps(graph_to_document(g)))
    return str(path)


def state_file(tmp_path, name, edges):
    x = FiniteSet("X", ("x", "y", "z"))
    g = Graph(UNIT, x, [("*", u) for u in "xyz"], [(("*", u), ("*", w)) for u, w in edges])
    return write_graph(tmp_path, name, g)


def test_census_zero(capsys):
    assert run(capsys, "census", "0") == (0, "0 1 1\n", "")


def test_census_five(capsys):
    code, out, _ = run(capsys, "census", "5")
    assert code == 0
    assert out.splitlines() == ["0 1 1", "1 2 2", "2 4 5", "3 8 18", "4 16 113", "5 32 1450"]


def test_census_brute_force(capsys):
    code, out, _ = run(capsys, "census", "3", "--brute-force")
    assert code == 0
    assert out.splitlines()[-1] == "3 8 18 18 ok"


def test_census_usage_errors(capsys):
    assert run(capsys, "census", "-1")[0] == 2
    assert run(capsys, "census", "6", "--brute-force")[0] == 2


def test_compose_worked_example(tmp_path, capsys):
    a = FiniteSet("A", ("a", "a'"))
    b = FiniteSet("B", ("b", "b'", "b''"))
    c = FiniteSet("C", ("c", "c'", "c''"))
    g1 = Graph(a, b, [("a", "b"), ("a'", "b'")], [(("a", "b"), ("a'", "b'"))])
    g2 = Graph(b, c, [("b", "c"), ("b''", "c"), ("b", "c'"), ("b'", "c''")],
               [(("b", "c"), ("b", "c'")), (("b", "c"), ("b'", "c''"))])
    code, out, _ = run(capsys, "compose", write_graph(tmp_path, "g1.json", g1), write_graph(tmp_path, "g2.json", g2))
    assert code == 0
    doc = json.loads(out)
    assert doc["vertices"] == [["a", "c"], ["a", "c'"], ["a'", "c''"]]
    assert doc["edges"] == [[0, 1], [0, 2]]


def test_compose_mismatch_exits_two(tmp_path, capsys):
    f = write_graph(tmp_path, "one.json", graph_identity(standard_set(1)))
    g = write_graph(tmp_path, "two.json", graph_identity(standard_set(2)))
    code, out, err = run(capsys, "compose", f, g)
    assert code == 2 and out == "" and "compose" in err


def test_pure_and_mixed(tmp_path, capsys):
    triangle = state_file(tmp_path, "t.json", [("x", "y"), ("x", "z"), ("y", "z")])
    path = state_file(tmp_path, "p.json", [("x", "y"), ("x", "z")])
    assert run(capsys, "pure", triangle) == (0, "pure\n", "")
    assert run(capsys, "pure", path) == (1, "mixed\n", "")


def test_pure_of_morphism_uses_its_state(tmp_path, capsys):
    assert run(capsys, "pure", write_graph(tmp_path, "id.json", graph_identity(standard_set(2))))[:2] == (0, "pure\n")


def test_join_gives_triangle(tmp_path, capsys):
    left = state_file(tmp_path, "l.json", [("x", "z"), ("x", "y")])
    right = state_file(tmp_path, "r.json", [("x", "z"), ("z", "y")])
    code, out, _ = run(capsys, "join", left, right)
    assert code == 0
    assert json.loads(out)["edges"] == [[0, 1], [0, 2], [1, 2]]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "2")
    docs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(docs) == 5
    assert len({dumps(d) for d in docs}) == 5
    code, out, _ = run(capsys, "enumerate", "2", "--format", "dot")
    assert out.count('graph "G" {') == 5


def test_dagger_tensor_embed_export(tmp_path, capsys):
    x = standard_set(2)
    f = write_graph(tmp_path, "id.json", graph_identity(x))
    assert graph_from_document(json.loads(run(capsys, "dagger", f)[1])) == graph_identity(x)
    tensor = graph_from_document(json.loads(run(capsys, "tensor", f, f)[1]))
    assert len(tensor.vertices) == 4
    rel = tmp_path / "r.json"
    rel.write_text(dumps(relation_to_document(Relation.identity(x))))
    assert graph_from_document(json.loads(run(capsys, "embed", str(rel))[1])) == graph_identity(x)
    assert run(capsys, "export-dot", f)[1] == 'graph "G" {\n  "x0|x0";\n  "x1|x1";\n  "x0|x0" -- "x1|x1";\n}\n'


@pytest.mark.parametrize("text", ["{", "[]", '{"schemaVersion": "1"}'])
def test_malformed_input_exits_two(tmp_path, capsys, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    code, out, err = run(capsys, "dagger", str(path))
    assert code == 2 and out == "" and err


def test_missing_file_exits_two(tmp_path, capsys):
    assert run(capsys, "dagger", str(tmp_path / "nope.json"))[0] == 2


def test_laws_small(capsys):
    code, out, _ = run(capsys, "laws", "--size-bound", "1", "--snake-bound", "2", "--census-max", "3",
                       "--samples", "10")
    assert code == 0
    assert out.startswith("PASS census")
    assert "FAIL" not in out


def test_output_is_byte_identical_across_processes(tmp_path):
    cmd = [sys.executable, "-m", "cprel.cli", "enumerate", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True, env={**os.environ, "PYTHONHASHSEED": "7"}).stdout
    assert first == second
    assert len(first.splitlines()) == 18
