import csv
import io
import json
from importlib.resources import files

import jsonschema
import pytest

from limitshapes import cli

SCHEMA = json.loads(files("limitshapes").joinpath("schema/output.schema.json").read_text())


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(text):
    return list(csv.reader(io.StringIO(text)))


class TestCount:
    def test_bare_number(self, capsys):
        assert run(capsys, "count", "--class", "unrestricted", "--n", "4") == (0, "5\n", "")

    def test_table(self, capsys):
        code, out, _ = run(capsys, "count", "--class", "distinct", "--n", "6", "--table")
        assert code == 0
        assert rows_of(out) == [["n", "count"]] + [[str(n), str(c)] for n, c in enumerate([1, 1, 1, 2, 2, 3, 4])]

    def test_json(self, capsys):
        code, out, _ = run(capsys, "count", "--class", "convex:2", "--n", "10", "--format", "json")
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMA)
        assert doc["rows"] == [[10, 7]]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "distinct", "--n", "6")
    assert code == 0
    assert sorted(out.split()) == sorted(["6", "5,1", "4,2", "3,2,1"])


class TestSample:
    def test_reproducible_bytes(self, capsys):
        argv = ("sample", "--class", "unrestricted", "--n", "60", "--count", "5", "--seed", "17")
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second
        assert all(sum(map(int, line.split(","))) == 60 for line in first[1].split())

    def test_pdc_mode_json(self, capsys):
        code, out, _ = run(capsys, "sample", "--class", "odd", "--n", "25", "--mode", "pdc", "--format", "json")
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMA)
        assert doc["meta"]["mode"] == "pdc"

    def test_infeasible_is_exit_1_with_record(self, capsys):
        code, out, err = run(capsys, "sample", "--class", "parts:list=2", "--n", "3")
        assert code == 1
        record = json.loads(err)
        assert record["status"] == "fail"
        assert record["attempts"] == 0

    def test_unsupported_class_is_usage_error(self, capsys):
        code, _, err = run(capsys, "sample", "--class", "convex:2", "--n", "10")
        assert code == 2
        assert "error" in err


def test_converge(capsys, tmp_path):
    out_file = tmp_path / "conv.csv"
    code, _, _ = run(
        capsys, "converge", "--class", "unrestricted", "--n", "200", "--replicas", "8", "--grid", "0.5:2:0.5", "--out", str(out_file)
    )
    assert code == 0
    table = rows_of(out_file.read_text())
    assert table[0] == ["t", "empirical_mean", "q05", "q95", "theory"]
    assert [r[0] for r in table[1:]] == ["0.5", "1", "1.5", "2"]


def test_converge_json_meta(capsys):
    code, out, _ = run(
        capsys, "converge", "--class", "distinct", "--n", "100", "--replicas", "4", "--grid", "0.5:1:0.5", "--format", "json"
    )
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert {"mean_sup_deviation", "acceptance_rate", "seed", "replicas"} <= set(doc["meta"])


class TestBijection:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (("--name", "glaisher", "--apply", "6,3,1"), "3,3,3,1"),
            (("--name", "glaisher", "--apply", "3,3,3,1", "--inverse"), "6,3,1"),
            (("--name", "hooks", "--apply", "4,3,2,1"), "7,3"),
            (("--name", "stanton", "--r", "1", "--m", "3", "--apply", "3"), "1,1,1"),
            (("--name", "rthdiff", "--apply", "3,1,1"), "4,1"),
            (("--name", "evenparts", "--k", "2", "--apply", "4,2"), "4,2"),
        ],
    )
    def test_apply(self, capsys, argv, expected):
        code, out, _ = run(capsys, "bijection", *argv)
        assert (code, out.strip()) == (0, expected)

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "bijection", "--name", "glaisher", "--verify", "--nmax", "12")
        assert code == 0
        assert all(r[3] == "PASS" for r in rows_of(out)[1:])

    def test_domain_violation_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "bijection", "--name", "glaisher", "--apply", "2,2")
        assert code == 2

    def test_needs_an_action(self, capsys):
        assert run(capsys, "bijection", "--name", "glaisher")[0] == 2


def test_shape(capsys):
    code, out, _ = run(capsys, "shape", "--name", "phi", "--grid", "1:1:1")
    assert code == 0
    t, v = rows_of(out)[1]
    assert float(v) == pytest.approx(0.253246739349, abs=1e-12)
    assert len(v.replace(".", "").lstrip("0")) <= 12


def test_shape_params(capsys):
    code, out, _ = run(capsys, "shape", "--name", "phi-rB", "--param", "r=1", "--param", "B=1", "--grid", "1:1:1")
    assert code == 0
    assert float(rows_of(out)[1][1]) == pytest.approx(0.253246739349, abs=1e-12)


def test_constants(capsys):
    code, out, _ = run(capsys, "constants")
    table = dict(rows_of(out)[1:])
    assert table["d(1,1)"] == "1.28254983016"
    assert table["parts_constant"].startswith("0.5610998")
    assert table["durfee_constant"].startswith("0.4546110")


def test_pipeline_files(capsys, tmp_path):
    prefix = tmp_path / "sc"
    code, out, _ = run(capsys, "pipeline", "--name", "selfconjugate", "--grid", "0.2:2:0.2", "--out", str(prefix))
    assert code == 0
    listed = rows_of(out.split("#")[0])[1:]
    assert listed and all((tmp_path / f.split("/")[-1]).exists() for _, _, f in listed)
    final = rows_of((tmp_path / listed[-1][2].split("/")[-1]).read_text())
    assert final[0][-1] == "target"
    assert float(out.split("sup_error=")[1]) < 1e-6


def test_identities(capsys):
    code, out, _ = run(capsys, "identities", "--nmax", "15")
    assert code == 0
    assert {r[4] for r in rows_of(out)[1:]} == {"PASS"}


def test_identities_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "IDENTITY_PAIRS", (("odd", "unrestricted"),))
    code, out, err = run(capsys, "identities", "--nmax", "5")
    assert code == 1
    record = json.loads(err)
    assert record["pairs"] == ["odd~unrestricted"]
    assert "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("frobnicate",),
        ("count", "--class", "nonsense", "--n", "3"),
        ("count", "--n", "3"),
        ("shape", "--name", "phi", "--grid", "1:0:1"),
        ("shape", "--name", "phi", "--param", "oops"),
        ("identities", "--nmax", "99"),
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_grid_parsing():
    assert list(cli.parse_grid("0.1:0.3:0.1")) == [0.1, 0.2, 0.3]


def test_plot_option(capsys, tmp_path):
    pytest.importorskip("matplotlib")
    png = tmp_path / "phi.png"
    code, _, _ = run(capsys, "shape", "--name", "psi", "--grid", "0.2:2:0.2", "--plot", str(png))
    assert code == 0
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_plot_without_matplotlib_is_usage_error(capsys, tmp_path, monkeypatch):
    import sys

    monkeypatch.setitem(sys.modules, "matplotlib", None)
    code, _, err = run(capsys, "shape", "--name", "psi", "--grid", "0.2:1:0.2", "--plot", str(tmp_path / "x.png"))
    assert code == 2
    assert "matplotlib" in err
