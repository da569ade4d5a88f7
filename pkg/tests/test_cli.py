import json
import subprocess
import sys

import numpy as np
import pytest

from zbgof.cli import RunConfig, main, read_data, render
from zbgof.errors import InvalidInput, ParseError
from zbgof.published import TABLE1, TABLE2


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def normal_file(tmp_path):
    p = tmp_path / "x.txt"
    x = np.random.default_rng(3).standard_normal(40)
    p.write_text("\n".join(str(v) for v in x) + "\n")
    return p


class TestReadData:
    def test_plain_and_comments(self, tmp_path):
        p = tmp_path / "d.txt"
        p.write_text("# comment\n1.5\n\n  -2\n3e-1\n")
        np.testing.assert_array_equal(read_data(str(p)), [1.5, -2.0, 0.3])

    def test_header(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text('"value"\n1\n2,\n3\n')
        np.testing.assert_array_equal(read_data(str(p)), [1.0, 2.0, 3.0])

    def test_bad_value_line_number(self, tmp_path):
        p = tmp_path / "d.txt"
        p.write_text("1\n2\n# c\nabc\n")
        with pytest.raises(ParseError) as info:
            read_data(str(p))
        assert info.value.line == 4

    def test_two_columns(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("x\n1,2\n")
        with pytest.raises(ParseError) as info:
            read_data(str(p))
        assert info.value.line == 2

    @pytest.mark.parametrize("text", ["", "# only comments\n\n", "header\n"])
    def test_empty(self, tmp_path, text):
        p = tmp_path / "d.txt"
        p.write_text(text)
        with pytest.raises(ParseError):
            read_data(str(p))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            read_data(str(tmp_path / "nope.txt"))


class TestRunConfig:
    @pytest.mark.parametrize("kw", [
        {"command": "fit"}, {"command": "test", "a": 0.0}, {"command": "test", "alpha": 1.0},
        {"command": "test", "method": "exact"}, {"command": "test", "method": "montecarlo", "replications": 10},
        {"command": "test", "seed": -1}, {"command": "test", "output": "xml"},
    ])
    def test_invalid(self, kw):
        with pytest.raises(InvalidInput):
            RunConfig(**kw)


class TestCommands:
    def test_test_json(self, capsys, normal_file):
        code, out, _ = run(capsys, "test", str(normal_file), "--output", "json")
        assert code == 0
        d = json.loads(out)
        assert d["n"] == 40 and d["a"] == 1.0 and d["method"] == "pearson"
        assert 0 <= d["p_value"] <= 1 and d["reject"] is False
        assert d["provenance"]["family"] == "VI"

    def test_json_round_trip_bytes(self, capsys, normal_file):
        _, out, _ = run(capsys, "test", str(normal_file), "--output", "json")
        assert json.dumps(json.loads(out), sort_keys=True, indent=2) == out.rstrip("\n")

    def test_reruns_identical(self, capsys, normal_file):
        argv = ("test", str(normal_file), "--method", "montecarlo", "--reps", "2000", "--seed", "9", "--output", "json")
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second

    def test_human_and_json_agree(self, capsys, normal_file):
        _, js, _ = run(capsys, "test", str(normal_file), "--output", "json")
        _, hu, _ = run(capsys, "test", str(normal_file))
        d = json.loads(js)
        lines = dict(l.split(" = ", 1) for l in hu.splitlines() if " = " in l and not l.startswith(" "))
        for key in ("statistic", "p_value", "critical_value"):
            assert float(lines[key]) == d[key]

    def test_cumulants(self, capsys):
        code, out, _ = run(capsys, "cumulants", "--a", "1", "--output", "json")
        d = json.loads(out)
        assert code == 0
        got = (d["mean"], d["variance"], d["sqrt_beta1"], d["beta2"])
        np.testing.assert_allclose(got, TABLE1[1.0], atol=5e-5)
        assert d["pearson_criterion"] > 1

    def test_asymptotic_quantiles(self, capsys):
        _, out, _ = run(capsys, "quantiles", "--asymptotic", "--a", "1", "--levels", "0.95", "0.05",
                        "--output", "json")
        d = json.loads(out)
        assert d["quantiles"]["0.95"] == pytest.approx(TABLE2["inf"][1.0][4], rel=0.01)
        assert d["lower_tail_unreliable"] == ["0.05"]

    def test_simulated_quantiles(self, capsys):
        code, out, _ = run(capsys, "quantiles", "--n", "20", "--reps", "2000", "--levels", "0.9", "0.95",
                           "--output", "json")
        d = json.loads(out)
        assert code == 0 and d["replications"] == 2000 and d["quantiles"]["0.9"] < d["quantiles"]["0.95"]

    def test_power(self, capsys):
        code, out, _ = run(capsys, "power", "--alt", "chi2_5", "--n", "50", "--stat", "Z(1)", "--reps", "2000",
                           "--critical-reps", "2000", "--output", "json")
        d = json.loads(out)
        assert code == 0 and d["statistic"] == "Z(1)" and d["rejection_rate"] > 0.5

    def test_power_asymptotic_requires_z(self, capsys):
        code, _, err = run(capsys, "power", "--alt", "t3", "--n", "20", "--stat", "SW", "--critical", "asymptotic")
        assert code == 2 and "error" in err

    def test_delta(self, capsys):
        code, out, _ = run(capsys, "delta", "--alt", "N(2,3)", "--output", "json")
        d = json.loads(out)
        assert code == 0 and d["delta"] == 0.0

    def test_reproduce_table1(self, capsys):
        code, out, _ = run(capsys, "reproduce", "table1", "--output", "json")
        d = json.loads(out)
        assert code == 0 and d["passed"] == d["total"] == 32


class TestExitCodes:
    def test_empty_file(self, capsys, tmp_path):
        p = tmp_path / "empty.txt"
        p.write_text("")
        code, out, err = run(capsys, "test", str(p))
        assert code == 2 and out == "" and "no data" in err

    def test_parse_error_reports_line(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("1\n2\nthree\n")
        code, _, err = run(capsys, "test", str(p))
        assert code == 2 and "line 3" in err

    def test_constant_sample(self, capsys, tmp_path):
        p = tmp_path / "c.txt"
        p.write_text("1\n1\n1\n")
        code, _, _ = run(capsys, "test", str(p))
        assert code == 2

    def test_unknown_alternative(self, capsys):
        code, _, err = run(capsys, "power", "--alt", "Cauchy", "--n", "20")
        assert code == 2 and "Cauchy" in err

    def test_bad_tuning(self, capsys):
        code, _, _ = run(capsys, "cumulants", "--a", "-1")
        assert code == 2

    def test_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["quantiles"])
        assert info.value.code == 2


def test_render_rounding():
    payload = {"x": 0.1 + 0.2, "nested": {"y": [1 / 3]}, "flag": True, "none": None}
    assert json.loads(render(payload, "json")) == {"x": 0.3, "nested": {"y": [0.3333333333]}, "flag": True,
                                                   "none": None}
    assert "x = 0.3" in render(payload, "human")


def test_module_entry_point(normal_file):
    res = subprocess.run([sys.executable, "-m", "zbgof.cli", "test", str(normal_file), "--output", "json"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["n"] == 40
