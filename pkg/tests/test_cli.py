import json
import math

import pytest

from mrcordic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_zero(self, capsys):
        code, out, _ = run(capsys, "eval", "0.0")
        assert code == 0
        value = float(out.splitlines()[1].split()[1])
        assert abs(value - 0.5) <= 2 * 2**-14

    def test_one(self, capsys):
        code, out, _ = run(capsys, "eval", "1.0")
        assert code == 0
        value = float(out.splitlines()[1].split()[1])
        assert abs(value - 0.7310585786) <= 8 * 2**-14

    def test_out_of_range_exits_2(self, capsys):
        code, _, err = run(capsys, "eval", "3.0")
        assert code == 2
        assert "exceeds 1" in err

    def test_clamp_allows_out_of_range(self, capsys):
        code, out, _ = run(capsys, "--clamp", "eval", "3.0")
        assert code == 0


class TestSweep:
    def test_rejects_equal_endpoints(self, capsys):
        code, _, err = run(capsys, "sweep", "0", "0", "100")
        assert code == 2

    def test_rejects_small_count(self, capsys):
        code, _, err = run(capsys, "sweep", "-1", "1", "1")
        assert code == 2

    def test_rejects_out_of_range_grid(self, capsys):
        code, _, err = run(capsys, "sweep", "-2", "2", "10")
        assert code == 2

    def test_two_point_sweep(self, capsys, tmp_path):
        csv = tmp_path / "rows.csv"
        code, out, _ = run(capsys, "sweep", "-1", "1", "2", "--csv", str(csv))
        assert code == 0
        lines = csv.read_text().splitlines()
        assert lines[0] == "x,fx_out,ref_out,abs_err"
        assert len(lines) == 3  # header + endpoints only
        assert lines[1].startswith("-1,")
        assert lines[2].startswith("1,")

    def test_csv_json_consistency(self, capsys, tmp_path):
        csv, js = tmp_path / "rows.csv", tmp_path / "summary.json"
        code, out, _ = run(
            capsys, "sweep", "-1", "1", "101", "--csv", str(csv), "--json", str(js)
        )
        assert code == 0
        rows = csv.read_text().splitlines()[1:]
        assert len(rows) == 101
        errs = [float(r.split(",")[3]) for r in rows]
        summary = json.loads(js.read_text())
        assert summary["n_samples"] == 101
        assert summary["mae"] == pytest.approx(math.fsum(errs) / len(errs), rel=1e-8)
        assert summary["max_abs_err"] >= summary["mae"]
        assert summary["format"] == "Q2.14"

    def test_unwritable_path_exits_3(self, capsys):
        code, _, err = run(capsys, "sweep", "-1", "1", "2", "--csv", "/nonexistent/x.csv")
        assert code == 3


class TestVerify:
    def test_default_config_passes(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 0
        assert "FAIL" not in out
        assert "r2_range 0.504210 PASS" in out
        assert "r4_range 0.010376 PASS" in out

    def test_json_report(self, capsys, tmp_path):
        js = tmp_path / "verify.json"
        code, _, _ = run(capsys, "verify", "--json", str(js))
        assert code == 0
        checks = json.loads(js.read_text())
        overlap = [c for c in checks if c["check"].startswith("srt_overlap")]
        assert len(overlap) == 16
        assert all(c["pass"] for c in checks)
        assert all("lower" in c and "upper" in c and "threshold" in c for c in overlap)


class TestTables:
    def test_line_count_and_content(self, capsys):
        code, out, _ = run(capsys, "tables")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 21
        x_init = [l for l in lines if l.startswith("x_init")]
        assert len(x_init) == 1
        assert float(x_init[0].split()[3]) == pytest.approx(1.043678, abs=1e-4)

    def test_byte_identical_reruns(self, capsys, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        assert run(capsys, "tables", "--out", str(a))[0] == 0
        assert run(capsys, "tables", "--out", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()
        assert a.read_bytes().endswith(b"\n")

    def test_unwritable_path_exits_3(self, capsys):
        code, _, err = run(capsys, "tables", "--out", "/nonexistent/t.txt")
        assert code == 3


class TestFormatFlags:
    def test_custom_format_roundtrip(self, capsys):
        code, out, _ = run(capsys, "--bits", "20", "--frac", "17", "eval", "0.25")
        assert code == 0

    def test_bad_format_exits_2(self, capsys):
        code, _, err = run(capsys, "--bits", "8", "--frac", "14", "eval", "0.0")
        assert code == 2
