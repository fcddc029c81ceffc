"""Tests for the command-line front end: output bytes, exit codes, diagnostics."""

import json

import pytest

from ncomplex.cli import main, parse_complex_file


@pytest.fixture
def edgeless3(tmp_path):
    p = tmp_path / "edgeless3.json"
    p.write_text('{"n": 3, "facets": []}')
    return str(p)


@pytest.fixture
def path3(tmp_path):
    p = tmp_path / "path3.json"
    p.write_text('{"n": 3, "facets": [[1,2],[2,3]]}')
    return str(p)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParseComplexFile:
    def test_happy_path(self, path3):
        c = parse_complex_file(path3)
        assert len(c.faces) == 5

    def test_schema_key_accepted(self, tmp_path):
        p = tmp_path / "c.json"
        p.write_text('{"schema": 1, "n": 2, "facets": []}')
        assert len(parse_complex_file(str(p)).faces) == 2

    def test_diagnostics(self, tmp_path):
        cases = [
            ('{"n": 3, "facets": [[1,4]]}', "vertex 4 exceeds n=3"),
            ('{"n": 0, "facets": []}', "n=0 outside 1..16"),
            ('{"n": 3, "facets": [[1]], "extra": 1}', "unknown key 'extra'"),
            ('{"n": 3}', "required keys"),
            ('{"n": "3", "facets": []}', "'n' must be an integer"),
            ('{"n": 3, "facets": [1]}', "list of vertex lists"),
            ('[1,2]', "top level must be an object"),
            ('{nope', "malformed JSON"),
            ('{"schema": 2, "n": 2, "facets": []}', "unsupported schema"),
        ]
        for body, message in cases:
            p = tmp_path / "bad.json"
            p.write_text(body)
            with pytest.raises(ValueError, match=message.replace("[", "\\[")):
                parse_complex_file(str(p))

    def test_missing_file(self):
        with pytest.raises(ValueError, match="cannot read"):
            parse_complex_file("/nonexistent/x.json")


class TestClosureCommand:
    def test_output(self, capsys, path3):
        code, out, _ = run(capsys, ["closure", "--complex", path3])
        assert code == 0
        assert out == "n=3 dim=1 faces=5\n{1}\n{2}\n{3}\n{1,2}\n{2,3}\n"

    def test_input_error_exit_2(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"n":3,"facets":[[1,4]]}')
        code, _, err = run(capsys, ["closure", "--complex", str(p)])
        assert code == 2
        assert "vertex 4 exceeds n=3" in err


class TestRelationsCommand:
    def test_family_4_documented_invocation(self, capsys):
        code, out, _ = run(capsys, ["relations", "--family", "4", "--n", "2",
                                    "--A", "", "--i", "1", "--j", "2"])
        assert code == 0
        assert out == ("-u({1})*u({2}) + u({2})*u({1})"
                       " + u({1,2})*u({1}) - u({1,2})*u({2})\n")

    def test_family_1(self, capsys):
        code, out, _ = run(capsys, ["relations", "--family", "1", "--n", "2",
                                    "--A", "", "--i", "1", "--j", "2"])
        assert code == 0
        assert out == "z({},1) - z({},2) + z({1},2) - z({2},1)\n"

    def test_family_9_needs_B(self, capsys):
        code, _, err = run(capsys, ["relations", "--family", "9", "--n", "3",
                                    "--A", "3", "--i", "1", "--j", "2"])
        assert code == 2 and "requires --B" in err
        code, out, _ = run(capsys, ["relations", "--family", "9", "--n", "3",
                                    "--A", "3", "--B", "", "--i", "1", "--j", "2"])
        assert code == 0
        assert out == ("u({1})*u({2}) - u({2})*u({1})"
                       " - u({2})*u({1,3}) + u({1,3})*u({2})\n")

    def test_family_theorem(self, capsys, path3):
        code, out, _ = run(capsys, ["relations", "--family", "theorem",
                                    "--complex", path3])
        assert code == 0
        assert len(out.rstrip("\n").split("\n")) == 9

    def test_missing_params(self, capsys):
        code, _, err = run(capsys, ["relations", "--family", "4", "--n", "2"])
        assert code == 2 and "requires" in err

    def test_bad_instance(self, capsys):
        code, _, err = run(capsys, ["relations", "--family", "4", "--n", "2",
                                    "--A", "1", "--i", "1", "--j", "2"])
        assert code == 2 and "lies in" in err


class TestHilbertCommand:
    def test_documented_invocation(self, capsys, edgeless3):
        code, out, _ = run(capsys, ["hilbert", "--complex", edgeless3,
                                    "--max-degree", "2"])
        assert code == 0
        assert out == ('{"schema":1,"label":"QF(n=3,faces={1},{2},{3})",'
                       '"dims":[1,3,6]}\n')
        assert json.loads(out)["dims"] == [1, 3, 6]

    def test_graph_presentation(self, capsys, path3):
        code, out, _ = run(capsys, ["hilbert", "--complex", path3,
                                    "--max-degree", "2",
                                    "--presentation", "graph"])
        assert code == 0
        obj = json.loads(out)
        assert obj["dims"] == [1, 5, 20]
        assert obj["label"].startswith("QGraph")

    def test_graph_presentation_needs_low_dim(self, capsys, tmp_path):
        p = tmp_path / "simplex.json"
        p.write_text('{"n": 3, "facets": [[1,2,3]]}')
        code, _, err = run(capsys, ["hilbert", "--complex", str(p),
                                    "--max-degree", "2",
                                    "--presentation", "graph"])
        assert code == 2 and "dimension 2" in err

    def test_determinism(self, capsys, edgeless3):
        argv = ["hilbert", "--complex", edgeless3, "--max-degree", "2"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2


class TestMembershipCommand:
    def test_member(self, capsys, path3):
        code, out, _ = run(capsys, ["membership", "--complex", path3, "--poly",
                                    "[u({1}),u({3})]", "--max-degree", "2"])
        assert code == 0
        assert out == "member\nremainder: 0\n"

    def test_non_member_with_remainder(self, capsys, path3):
        code, out, _ = run(capsys, ["membership", "--complex", path3, "--poly",
                                    "[u({1,2}),u({3})]", "--max-degree", "2"])
        assert code == 1
        assert out == ("non-member\n"
                       "remainder: -u({3})*u({1,2}) + u({1,2})*u({3})\n")

    def test_inhomogeneous_input_is_split(self, capsys, edgeless3):
        code, out, _ = run(capsys, ["membership", "--complex", edgeless3,
                                    "--poly", "u({1,2}) + [u({1}),u({2})]",
                                    "--max-degree", "2"])
        assert code == 0 and out.startswith("member")

    def test_degree_above_bound(self, capsys, path3):
        code, _, err = run(capsys, ["membership", "--complex", path3, "--poly",
                                    "u({1})*u({2})*u({3})", "--max-degree", "2"])
        assert code == 2 and "degree 3" in err

    def test_parse_error(self, capsys, path3):
        code, _, err = run(capsys, ["membership", "--complex", path3, "--poly",
                                    "u({1}", "--max-degree", "2"])
        assert code == 2 and "parse error" in err


class TestVerifyCommand:
    def test_documented_invocation(self, capsys):
        code, out, _ = run(capsys, ["verify", "--n", "2", "--checks", "corollary"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("PASS corollary n=2")
        assert lines[-1] == "overall PASS (1/1 checks passed)"

    def test_json_format(self, capsys, path3):
        code, out, _ = run(capsys, ["verify", "--complex", path3,
                                    "--checks", "proposition,theorem",
                                    "--format", "json"])
        assert code == 0
        obj = json.loads(out)
        assert obj["schema"] == 1 and obj["overall"] is True
        assert [e["check"] for e in obj["entries"]] == ["proposition", "theorem"]

    def test_complex_default_runs_all_checks(self, capsys, path3):
        code, out, _ = run(capsys, ["verify", "--complex", path3])
        assert code == 0
        assert "overall PASS (7/7 checks passed)" in out

    def test_high_dimensional_complex_skips_graph_checks_by_default(self, capsys, tmp_path):
        p = tmp_path / "simplex.json"
        p.write_text('{"n": 3, "facets": [[1,2,3]]}')
        code, out, _ = run(capsys, ["verify", "--complex", str(p)])
        assert code == 0
        assert "overall PASS (5/5 checks passed)" in out
        code, _, err = run(capsys, ["verify", "--complex", str(p),
                                    "--checks", "theorem"])
        assert code == 2 and "dimension <= 1" in err

    def test_exclusive_inputs(self, capsys, path3):
        code, _, err = run(capsys, ["verify"])
        assert code == 2 and "exactly one" in err
        code, _, err = run(capsys, ["verify", "--n", "2", "--complex", path3])
        assert code == 2 and "exactly one" in err

    def test_unknown_check(self, capsys):
        code, _, err = run(capsys, ["verify", "--n", "2", "--checks", "nope"])
        assert code == 2 and "unknown check" in err

    def test_json_determinism_modulo_millis(self, capsys):
        argv = ["verify", "--n", "2", "--checks", "corollary", "--format", "json"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        o1, o2 = json.loads(out1), json.loads(out2)
        for o in (o1, o2):
            for e in o["entries"]:
                e["millis"] = 0
        assert o1 == o2
