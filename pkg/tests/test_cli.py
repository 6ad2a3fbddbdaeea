import csv
import io
import math
import subprocess
import sys

import numpy as np
import pytest

from qlandauer.cli import FIGURE1_COLUMNS, FIGURE2_COLUMNS, POINT_COLUMNS, main

SMALL_GRID = ["--tmin", "0.01", "--tmax", "10", "--tpoints", "12"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def table(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], np.array(rows[1:], dtype=float)


class TestPoint:
    def test_strong_sign_pattern(self, capsys):
        code, out, _ = run(capsys, "point", "-T", "0.05")
        assert code == 0
        header, data = table(out)
        assert header == POINT_COLUMNS
        row = dict(zip(header, data[0]))
        assert row["Q_M"] > 0 and row["dS_M"] < 0
        assert row["Q_C"] < 0 and row["dS_C"] > 0
        assert row["Delta"] < 0 and row["clausius_ok"] == 1

    def test_uncoupled_has_zero_shift(self, capsys):
        code, out, _ = run(capsys, "point", "-T", "0.3", "--eta", "0")
        assert code == 0
        header, data = table(out)
        assert abs(dict(zip(header, data[0]))["dH"]) <= 1e-12

    def test_zero_temperature_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "point", "-T", "0")
        assert code == 2 and "exact-limit" in err

    def test_zero_temperature_exact_limit(self, capsys):
        code, out, _ = run(capsys, "point", "-T", "0", "--exact-limit")
        assert code == 0
        header, data = table(out)
        row = dict(zip(header, data[0]))
        assert row["v"] > 0.5
        assert math.isnan(row["F"])

    def test_missing_temperature(self, capsys):
        assert run(capsys, "point")[0] == 2

    def test_numerical_failure_exit_code(self, capsys):
        # a double root of the characteristic cubic
        code, _, err = run(capsys, "point", "-T", "0.1", "--mass", "1", "--omega", repr(math.sqrt(0.8)),
                           "--eta", "1.62", "--omega-d", "10")
        assert code == 1 and "numerical failure" in err


class TestFigures:
    def test_figure1(self, capsys):
        code, out, _ = run(capsys, "figure1", *SMALL_GRID)
        assert code == 0
        header, data = table(out)
        assert header == FIGURE1_COLUMNS
        assert data.shape == (12, 4)
        T, dM, d = data[:, 0], data[:, 1], data[:, 2]
        assert np.all(np.diff(T) > 0)
        assert dM[0] > 0
        assert np.all(d < 0)

    def test_figure2(self, capsys):
        code, out, _ = run(capsys, "figure2", *SMALL_GRID)
        header, data = table(out)
        assert code == 0 and header == FIGURE2_COLUMNS
        assert np.all(np.isfinite(data))
        low = data[data[:, 0] <= 0.1]
        Qc, dSc, Qm, dSm = low[:, 1], low[:, 2], low[:, 3], low[:, 4]
        assert np.all(Qc < 0) and np.all(dSc > 0) and np.all(Qm > 0) and np.all(dSm < 0)
        assert np.all(abs(Qc) > abs(Qm))

    def test_svg(self, capsys, tmp_path):
        out = tmp_path / "fig1.svg"
        code, _, _ = run(capsys, "figure1", *SMALL_GRID, "--format", "svg", "--out", str(out))
        text = out.read_text()
        assert code == 0 and text.startswith("<svg") and text.rstrip().endswith("</svg>")
        assert text.count("<polyline") == 3

    def test_csv_format(self, capsys, tmp_path):
        out = tmp_path / "f.csv"
        run(capsys, "figure2", *SMALL_GRID, "--out", str(out))
        raw = out.read_bytes()
        assert b"\r" not in raw
        lines = raw.decode("utf-8").splitlines()
        assert sum(line.startswith("T,") for line in lines) == 1
        for cell in lines[1].split(","):
            mantissa = cell.split("e")[0].lstrip("-")
            assert len(mantissa.replace(".", "")) == 15

    def test_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "sweep", *SMALL_GRID, "--out", str(a))
        run(capsys, "sweep", *SMALL_GRID, "--out", str(b), "--jobs", "2")
        assert a.read_bytes() == b.read_bytes()


class TestConfig:
    def test_flags_override_file(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# moderate coupling\neta = 1\nomega_d = 10\nmass = 1\nomega = 1\nmass1 = 1.01\n")
        _, from_file, _ = run(capsys, "point", "-T", "0.5", "--config", str(cfg))
        _, overridden, _ = run(capsys, "point", "-T", "0.5", "--config", str(cfg), "--eta", "2")
        _, direct, _ = run(capsys, "point", "-T", "0.5", "--preset", "moderate", "--eta", "2")
        _, preset, _ = run(capsys, "point", "-T", "0.5", "--preset", "moderate")
        assert from_file == preset
        assert overridden == direct != from_file

    def test_unknown_key(self, capsys, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("gamma = 3\n")
        assert run(capsys, "point", "-T", "0.5", "--config", str(cfg))[0] == 2

    @pytest.mark.parametrize("argv", [["--tmin", "-1"], ["--tmin", "2", "--tmax", "1"],
                                      ["--mass", "0"], ["--n-bath", "3"], ["--jobs", "0"]])
    def test_invalid_values(self, capsys, argv):
        assert run(capsys, "figure1", *argv)[0] == 2


class TestOracle:
    def test_ladder_and_control_row(self, capsys):
        code, out, _ = run(capsys, "oracle", "--n-bath", "400")
        assert code == 0
        header, data = table(out)
        assert header[:2] == ["eta", "N"]
        assert list(data[:, 1]) == [50, 100, 200, 400, 400]
        control = dict(zip(header, data[-1]))
        assert control["eta"] == 0
        for name in ("q2_rel_err", "p2_rel_err", "F_rel_err"):
            assert control[name] <= 1e-10
            assert np.all(np.diff(data[:4, header.index(name)]) < 0)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qlandauer", "point", "-T", "0.2", "--preset", "moderate"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.startswith("T,q2,p2")
