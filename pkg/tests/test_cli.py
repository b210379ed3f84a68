"""CLI behaviour: outputs, formats, and exit codes."""
import csv
import json

import pytest

from midknot.cli import main
from test_datasets import EXP1_X, FC_F, FC_TAU


@pytest.fixture
def fc_files(tmp_path):
    data = tmp_path / "fc.csv"
    rows = "\n".join(f"{t!r},{v!r}" for t, v in zip(FC_TAU, FC_F))
    data.write_text(f"tau,F\n{rows}\n")
    knots = tmp_path / "exp1.json"
    knots.write_text(json.dumps({"x": list(EXP1_X)}))
    return data, knots


class TestFit:
    def test_json_output(self, fc_files, tmp_path):
        data, knots = fc_files
        out = tmp_path / "fit.json"
        code = main(["fit", "--data", str(data), "--knots", str(knots),
                     "--samples", "11", "--out", str(out)])
        assert code == 0
        doc = json.loads(out.read_text())
        assert list(doc) == ["knots", "segments", "samples", "knot_estimates"]
        assert doc["knots"] == list(EXP1_X)
        assert len(doc["segments"]) == 7
        assert len(doc["samples"]) == 11
        assert len(doc["knot_estimates"]) == 7
        xs = [row[0] for row in doc["samples"]]
        assert xs == sorted(xs)
        assert xs[0] == 7.99 and xs[-1] == 20.0
        assert doc["samples"][0][1] == 0.0
        assert doc["samples"][-1][1] == 0.999994

    def test_csv_output(self, fc_files, tmp_path):
        data, knots = fc_files
        out = tmp_path / "fit.csv"
        assert main(["fit", "--data", str(data), "--knots", str(knots),
                     "--samples", "7", "--format", "csv",
                     "--out", str(out)]) == 0
        parsed = list(csv.DictReader(out.open()))
        assert len(parsed) == 7
        assert list(parsed[0]) == ["x", "S", "dS", "d2S"]
        assert float(parsed[0]["x"]) == 7.99

    def test_default_placement_when_no_knot_file(self, fc_files, tmp_path):
        data, _ = fc_files
        out = tmp_path / "fit.json"
        assert main(["fit", "--data", str(data), "--samples", "3",
                     "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        # clamped defaults cover the full data range
        assert doc["knots"][0] == FC_TAU[0]
        assert doc["knots"][-1] == FC_TAU[-1]

    def test_placement_file(self, fc_files, tmp_path):
        data, _ = fc_files
        pl = tmp_path / "pl.json"
        pl.write_text(json.dumps(
            {"alpha2": 1.0, "beta": [0.5] * 6 + [1.0]}))
        out = tmp_path / "fit.json"
        assert main(["fit", "--data", str(data), "--placement", str(pl),
                     "--samples", "3", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["knots"] == list(EXP1_X)

    def test_json_dataset_input(self, tmp_path):
        data = tmp_path / "d.json"
        data.write_text(json.dumps(
            {"tau": [0, 1, 2, 3], "F": [0, 1, 4, 9]}))
        assert main(["fit", "--data", str(data), "--samples", "5",
                     "--out", str(tmp_path / "o.json")]) == 0

    def test_stdout(self, fc_files, capsys):
        data, knots = fc_files
        assert main(["fit", "--data", str(data), "--knots", str(knots),
                     "--samples", "3"]) == 0
        out = capsys.readouterr().out
        assert out.endswith("\n")
        json.loads(out)

    def test_bad_samples(self, fc_files):
        data, knots = fc_files
        assert main(["fit", "--data", str(data), "--knots", str(knots),
                     "--samples", "1"]) == 1


class TestDerivs:
    def test_json(self, fc_files, tmp_path):
        data, knots = fc_files
        out = tmp_path / "d.json"
        assert main(["derivs", "--data", str(data), "--knots", str(knots),
                     "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        ests = doc["knot_estimates"]
        assert [e["i"] for e in ests] == [2, 3, 4, 5, 6, 7, 8]
        assert [e["tau"] for e in ests] == list(FC_TAU[1:-1])
        for e in ests:
            assert set(e) == {"i", "tau", "C1", "C2", "f1_est", "f2_est",
                              "delta1", "delta2_raw", "h_bar"}

    def test_csv(self, fc_files, tmp_path):
        data, knots = fc_files
        out = tmp_path / "d.csv"
        assert main(["derivs", "--data", str(data), "--knots", str(knots),
                     "--format", "csv", "--out", str(out)]) == 0
        parsed = list(csv.DictReader(out.open()))
        assert len(parsed) == 7
        assert float(parsed[0]["tau"]) == 8.09


class TestEoc:
    def test_table_stdout(self, capsys):
        assert main(["eoc", "--mode", "uniform"]) == 0
        out = capsys.readouterr().out
        lines = out.strip().split("\n")
        assert len(lines) == 6
        assert "3.0793e-04" in lines[1]

    def test_json(self, tmp_path):
        out = tmp_path / "e.json"
        assert main(["eoc", "--mode", "ratio", "--format", "json",
                     "--j-range", "5:6", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["function"] == "quartic-sine"
        assert doc["mode"] == "ratio"
        assert doc["ratio"] == 3.0
        assert [r["j"] for r in doc["rows"]] == [5, 6]

    def test_csv(self, capsys):
        assert main(["eoc", "--format", "csv", "--j-range", "5:6"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("j,H,err1,eoc1,")

    def test_unknown_function_exits_2(self, capsys):
        assert main(["eoc", "--function", "no-such"]) == 2
        err = json.loads(capsys.readouterr().err)
        assert err["error"] == "UnknownFunction"

    def test_bad_j_range(self):
        assert main(["eoc", "--j-range", "bogus"]) == 1


class TestErrorPaths:
    def test_knot_out_of_interval_exits_1(self, fc_files, tmp_path, capsys):
        data, _ = fc_files
        bad = tmp_path / "bad.json"
        knots = list(EXP1_X)
        knots[1] = 8.2  # outside (tau_2, tau_3)
        bad.write_text(json.dumps({"x": knots}))
        assert main(["fit", "--data", str(data), "--knots", str(bad)]) == 1
        err = json.loads(capsys.readouterr().err)
        assert err["error"] == "KnotOutOfInterval"
        assert err["index"] == 3

    def test_parse_error_exits_1(self, tmp_path, capsys):
        data = tmp_path / "junk.csv"
        data.write_text("a,b\n1,2\n")
        assert main(["fit", "--data", str(data)]) == 1
        assert json.loads(capsys.readouterr().err)["error"] == "ParseError"

    def test_missing_file_exits_1(self, capsys):
        assert main(["fit", "--data", "/nonexistent/d.csv"]) == 1
        assert json.loads(capsys.readouterr().err)["error"] == "IOError"

    def test_unknown_extension_exits_1(self, tmp_path, capsys):
        data = tmp_path / "d.txt"
        data.write_text("tau,F\n0,0\n1,1\n2,4\n")
        assert main(["fit", "--data", str(data)]) == 1
        assert json.loads(capsys.readouterr().err)["error"] == "ParseError"

    def test_invalid_knots_json_exits_1(self, fc_files, tmp_path, capsys):
        data, _ = fc_files
        bad = tmp_path / "bad.json"
        bad.write_text("{broken")
        assert main(["fit", "--data", str(data), "--knots", str(bad)]) == 1
        assert json.loads(capsys.readouterr().err)["error"] == "ParseError"

    def test_usage_errors_exit_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["fit"])  # --data is required
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["fit", "--data", "x.csv", "--knots", "a", "--placement", "b"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["nope"])
        assert exc.value.code == 2
