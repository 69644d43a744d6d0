import json
import os
import time

import pytest

from dmoments import special
from dmoments.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestPointCommands:
    def test_edm_with_published_value(self, capsys):
        code, out, _ = run(capsys, "edm", "--B-gauss", "1e-3", "--epsilon-eV", "2.6e5", "--n", "0", "--k", "0",
                           "--compare-paper")
        assert code == 0
        assert "7.2057" in out and "e-20" in out
        assert "3.1e-24" in out and "high_kinetic" in out and "scale_eV" in out

    def test_edm_quadrature(self, capsys):
        code, out, _ = run(capsys, "edm", "--B", "1e-7", "--epsilon-eV", "2.6e5", "--quadrature")
        assert code == 0
        closed, quad = (float(line.split()[2]) for line in out.splitlines() if line.startswith("p1 ="))
        assert quad == pytest.approx(closed, rel=1e-6)

    def test_edm_epsilon_in_joule(self, capsys):
        a = run(capsys, "edm", "--B", "1e-7", "--epsilon-J", "1e-14")[1]
        b = run(capsys, "edm", "--B", "1e-7", "--epsilon-eV", repr(1e-14 / 1.602176634e-19))[1]
        assert a == b

    def test_edm_csv_out(self, capsys, tmp_path):
        path = tmp_path / "points.csv"
        for B in ("1e-7", "2e-7"):
            assert run(capsys, "edm", "--B", B, "--epsilon-eV", "2.6e5", "--out", str(path))[0] == 0
        lines = path.read_text().splitlines()
        assert len(lines) == 3 and lines[0].startswith("axis_name")

    @pytest.mark.parametrize("argv", [
        ["edm", "--B", "0", "--epsilon-eV", "1"],
        ["edm", "--B", "-1", "--epsilon-eV", "1"],
        ["edm", "--B", "1", "--epsilon-eV", "0"],
        ["edm", "--B", "1", "--B-gauss", "1", "--epsilon-eV", "1"],
        ["edm", "--epsilon-eV", "1"],
        ["edm", "--B", "abc", "--epsilon-eV", "1"],
        ["edm", "--B", "1", "--epsilon-eV", "1", "--n", "-2"],
        ["frobnicate"],
        [],
    ])
    def test_invalid_input_exit_2(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2
        assert "usage" in err

    def test_spectrum(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--B", "1e10")
        assert code == 0 and "1.2017" in out

    def test_mdm(self, capsys):
        code, out, _ = run(capsys, "mdm", "--B", "1e-10")
        assert code == 0 and "9.2740100783e-24" in out

    def test_help(self, capsys):
        assert run(capsys, "--help")[0] == 0


class TestSweepCommand:
    def write_config(self, tmp_path, **overrides):
        doc = {
            "quantity": "edm", "n": 0, "k": 0, "fixed": {"epsilon_eV": 2.6e5}, "axis": "B_tesla",
            "grid": {"min": 1e-9, "max": 4e-7, "points": 5, "spacing": "linear"},
        }
        doc.update(overrides)
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps(doc))
        return path

    def test_stdout(self, capsys, tmp_path, monkeypatch):
        monkeypatch.delenv("DMOMENTS_OUT_DIR", raising=False)
        code, out, _ = run(capsys, "sweep", str(self.write_config(tmp_path)))
        assert code == 0 and len(out.splitlines()) == 6

    def test_out_dir_env_and_override(self, capsys, tmp_path, monkeypatch):
        cfg = self.write_config(tmp_path)
        monkeypatch.setenv("DMOMENTS_OUT_DIR", str(tmp_path / "env"))
        assert run(capsys, "sweep", str(cfg))[0] == 0
        assert (tmp_path / "env" / "cfg.csv").exists()
        assert run(capsys, "sweep", str(cfg), "--out", str(tmp_path / "x.csv"), "--svg", str(tmp_path / "x.svg"))[0] == 0
        assert (tmp_path / "x.csv").read_text() == (tmp_path / "env" / "cfg.csv").read_text()
        assert (tmp_path / "x.svg").read_text().startswith("<svg")

    def test_byte_stable(self, capsys, tmp_path):
        cfg = self.write_config(tmp_path)
        run(capsys, "sweep", str(cfg), "--out", str(tmp_path / "a.csv"))
        run(capsys, "sweep", str(cfg), "--out", str(tmp_path / "b.csv"))
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_schema_violation(self, capsys, tmp_path):
        code, _, err = run(capsys, "sweep", str(self.write_config(tmp_path, colour="red")))
        assert code == 2 and "colour" in err

    def test_bad_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert run(capsys, "sweep", str(path))[0] == 2

    def test_missing_config(self, capsys, tmp_path):
        assert run(capsys, "sweep", str(tmp_path / "nope.json"))[0] == 3

    def test_unwritable_output(self, capsys, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        cfg = self.write_config(tmp_path)
        assert run(capsys, "sweep", str(cfg), "--out", str(blocker / "out.csv"))[0] == 3

    def test_does_not_touch_other_files(self, capsys, tmp_path, monkeypatch):
        cfg = self.write_config(tmp_path)
        monkeypatch.chdir(tmp_path)
        before = sorted(os.listdir(tmp_path))
        run(capsys, "sweep", str(cfg), "--out", "only.csv")
        assert sorted(os.listdir(tmp_path)) == sorted(before + ["only.csv"])


class TestCompareCommand:
    def test_table2(self, capsys, monkeypatch):
        monkeypatch.delenv("DMOMENTS_OUT_DIR", raising=False)
        code, out, _ = run(capsys, "compare", "--table", "2")
        assert code == 0
        assert "3.1e-24" in out and "5.9e-27" in out and "informational" in out

    def test_table1_csv(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("DMOMENTS_OUT_DIR", str(tmp_path))
        assert run(capsys, "compare", "--table", "1")[0] == 0
        text = (tmp_path / "compare_table1.csv").read_text()
        assert "Table 1 row c (B min),1.00000000000e+05,1.00000000000e+03,\"[1,6]x10^3\",3e-20" in text

    def test_unknown_table(self, capsys):
        assert run(capsys, "compare", "--table", "3")[0] == 2


class TestVerifyCommand:
    def test_pristine(self, capsys):
        start = time.perf_counter()
        code, out, _ = run(capsys, "verify")
        assert code == 0
        assert time.perf_counter() - start < 60
        assert out.count("[PASS]") == 9

    def test_fault_injected(self, capsys):
        with special.inject_gamma_fault(1e-3):
            code, out, _ = run(capsys, "verify")
        assert code == 1
        assert "[FAIL]" in out
