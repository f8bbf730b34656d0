import dataclasses
import json

import jsonschema
import pydot
import pytest

from spingraphs import cli, verify
from spingraphs.divisor import Divisor
from spingraphs.export import JSON_SCHEMA, graph_to_dict, to_dot, to_json
from spingraphs.graphs import exceptional_graph, standard_graph, weierstrass_graph


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestClasses:
    def test_genus_three_table(self, capsys):
        code, out, _ = run(capsys, "classes", "--genus", "3")
        assert code == 0
        rows = [line for line in out.splitlines() if line.startswith("S^")]
        assert len(rows) == 4
        assert out.rstrip().endswith("M=4")

    def test_order_filter(self, capsys):
        code, out, _ = run(capsys, "classes", "--genus", "4", "--order", "2")
        assert code == 0
        assert [line.split()[2] for line in out.splitlines() if line.startswith("S^")] == ["(1,1,3)", "(1,2,2)"]

    def test_json(self, capsys):
        code, out, _ = run(capsys, "classes", "--genus", "2", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert [c["khat"] for c in doc["classes"]] == [[3], [1, 2]]
        assert doc["M"] == 2
        assert doc["classes"][1] == {
            "label": "S^1_1", "r": 1, "s": 1, "khat": [1, 2], "i": 0, "p": [1],
            "branch_number": 2, "vertices": 4,
        }

    @pytest.mark.parametrize("argv", [
        ["classes", "--genus", "1"],
        ["classes", "--genus", "x"],
        ["classes", "--genus", "3", "--order", "3"],
        ["classes", "--genus", "3", "--format", "dot"],
        ["classes"],
        ["nonsense"],
        ["--ceiling", "10", "classes", "--genus", "11"],
    ])
    def test_usage_errors(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 1
        assert out == "" and err


class TestGraph:
    def test_standard_dot(self, capsys):
        code, out, _ = run(capsys, "graph", "--genus", "2", "--standard", "--format", "dot")
        assert code == 0
        (dot,) = pydot.graph_from_dot_data(out)
        assert len(dot.get_nodes()) - len([n for n in dot.get_nodes() if n.get_name() == "node"]) == 6
        edges = dot.get_edges()
        assert len(edges) == 6
        assert all(e.get("dir") == "none" for e in edges)

    def test_partition_json(self, capsys):
        code, out, _ = run(capsys, "graph", "--genus", "3", "--partition", "1,1,2", "--format", "json")
        doc = json.loads(out)
        jsonschema.validate(doc, JSON_SCHEMA)
        assert code == 0
        assert len(doc["vertices"]) == 6
        assert doc["branch_number"] == 2
        assert doc["class"] == {"r": 2, "khat": [1, 1, 2], "i": 0, "p": [0, 1]}

    def test_weierstrass_dot_is_k4(self, capsys):
        code, out, _ = run(capsys, "graph", "--genus", "3", "--weierstrass", "--format", "dot")
        (dot,) = pydot.graph_from_dot_data(out)
        pairs = {frozenset((e.get_source().strip('"'), e.get_destination().strip('"'))) for e in dot.get_edges()}
        assert code == 0
        assert pairs == {frozenset((f"W{a}", f"W{b}")) for a in range(4) for b in range(a + 1, 4)}

    @pytest.mark.parametrize("text", ["1,x", "1,1,1", "4,0", ""])
    def test_malformed_partition(self, capsys, text):
        code, _, err = run(capsys, "graph", "--genus", "3", "--partition", text)
        assert code == 1 and "partition" in err

    def test_needs_one_selector(self, capsys):
        assert run(capsys, "graph", "--genus", "3")[0] == 1
        assert run(capsys, "graph", "--genus", "3", "--standard", "--weierstrass")[0] == 1

    def test_validation_failure_exit(self, capsys, monkeypatch):
        good = standard_graph(3)
        broken = dataclasses.replace(good, vertices=good.vertices[:1] + good.vertices[2:])
        monkeypatch.setattr(cli, "standard_graph", lambda g: broken)
        code, _, err = run(capsys, "graph", "--genus", "3", "--standard")
        assert code == 2 and "validation failed" in err


class TestTypes:
    def test_genus_two(self, capsys):
        code, out, _ = run(capsys, "types", "--genus", "2")
        assert code == 0
        assert [line for line in out.splitlines() if not line.startswith("#")] == ["(2,0)", "(1,2)", "(0,4)"]

    def test_genus_three_flags_unpublished(self, capsys):
        code, out, _ = run(capsys, "types", "--genus", "3", "--check-paper")
        rows = [line for line in out.splitlines() if not line.startswith("#")]
        assert code == 0
        assert len(rows) == 14
        assert sum(r.endswith("  published") for r in rows) == 9
        assert sum(r.endswith("NOT-PUBLISHED") for r in rows) == 5

    def test_genus_three_json(self, capsys):
        code, out, _ = run(capsys, "types", "--genus", "3", "--format", "json", "--check-paper")
        doc = json.loads(out)
        assert (doc["count"], doc["published_count"], doc["unpublished_count"]) == (14, 9, 5)

    def test_genus_four_budget(self, capsys):
        code, out, _ = run(capsys, "types", "--genus", "4", "--format", "json")
        doc = json.loads(out)
        for t in doc["types"]:
            m0, m11, m12, m21, m22, m3 = t["counts"]
            assert 16 == 8 * m0 + 6 * (m11 + m12) + 4 * (m21 + m22) + 2 * m3
            assert "published" not in t


class TestVerify:
    def test_passes(self, capsys):
        code, out, err = run(capsys, "verify", "--max-genus", "8")
        assert code == 0
        assert "checks passed" in out
        assert "published residue table omits" in err

    def test_genus_bound(self, capsys):
        assert run(capsys, "verify", "--max-genus", "1")[0] == 1

    def test_fault_injection(self, capsys, monkeypatch):
        real = verify.exceptional_graph

        def faulty(g, c):
            graph = real(g, c)
            v, d = graph.vertices[-1]
            q = next(iter(d))
            bad = Divisor({**dict(d), q: d[q] + 1})
            return dataclasses.replace(graph, vertices=graph.vertices[:-1] + ((v, bad),))

        monkeypatch.setattr(verify, "exceptional_graph", faulty)
        code, _, err = run(capsys, "verify", "--max-genus", "3")
        assert code == 2
        assert "violation" in err


class TestExport:
    GRAPHS = [standard_graph(3), weierstrass_graph(4), exceptional_graph(5, (1, 2, 3)), exceptional_graph(4, (5,))]

    @pytest.mark.parametrize("graph", GRAPHS, ids=lambda g: g.kind.value)
    def test_json_schema_and_round_trip(self, graph):
        text = to_json(graph)
        doc = json.loads(text)
        jsonschema.validate(doc, JSON_SCHEMA)
        assert doc == graph_to_dict(graph)
        assert json.dumps(doc, indent=2) + "\n" == text
        assert set(doc) == {"genus", "kind", "class", "vertices", "edges", "branch_number"}

    @pytest.mark.parametrize("graph", GRAPHS, ids=lambda g: g.kind.value)
    def test_deterministic(self, graph):
        rebuilt = {
            "standard": lambda: standard_graph(graph.genus),
            "weierstrass": lambda: weierstrass_graph(graph.genus),
            "exceptional": lambda: exceptional_graph(graph.genus, graph.exceptional_class),
        }[graph.kind.value]()
        assert to_dot(rebuilt) == to_dot(graph)
        assert to_json(rebuilt) == to_json(graph)

    def test_dot_arcs(self):
        text = to_dot(exceptional_graph(3, (1, 3)))
        (dot,) = pydot.graph_from_dot_data(text)
        arcs = [e for e in dot.get_edges() if e.get("style") == "dashed"]
        straight = [e for e in dot.get_edges() if e.get("dir") == "none"]
        # P-P1 and Pc-P1c carry arcs of label 2 from the indexed points
        assert sorted((e.get_source().strip('"'), e.get_destination().strip('"'), e.get("label").strip('"'))
                      for e in arcs) == [("P1", "P", "2"), ("P1c", "Pc", "2")]
        assert len(straight) == 3
