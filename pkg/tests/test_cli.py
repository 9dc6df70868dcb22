import io
import json
import shutil
import subprocess
import sys

import pytest

from periodic_dedekind.cli import CONFIG_ENV, CliConfig, ConfigError, main, parse_config


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.fixture(autouse=True)
def no_config(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV, raising=False)


class TestCompute:
    def test_classical(self):
        code, out = run("compute", "classical", "--d", "1", "--c", "3")
        assert code == 0
        assert out.splitlines() == ["1/18", "0.0555555555555556"]

    def test_periodic_example(self):
        code, out = run("compute", "periodic", "--family", "BbAc", "--d", "4", "--c", "3", "--b", "auto",
                        "--A", "char:k=2,i=0", "--B", "char:k=2,i=0")
        assert code == 0
        assert out.splitlines()[0] == "2/9"

    def test_ramanujan_P1(self):
        code, out = run("compute", "P", "--n", "1", "--x", "0", "--seq", "ramanujan:k=6")
        assert code == 0 and out.splitlines()[0] == "-1"

    def test_gauss_sum(self):
        code, out = run("compute", "gauss", "--n", "1", "--k", "4", "--i", "1")
        assert out.splitlines() == ["2*z4^1", "2i"]

    def test_hardy_and_generalized(self):
        assert run("compute", "s2", "--d", "1", "--c", "3")[1].splitlines()[0] == "0"
        code, out = run("compute", "generalized", "--d", "1", "--c", "1", "--A", "const:k=1", "--B", "const:k=1",
                        "--x", "1/2", "--y", "1/3")
        assert code == 0 and out.splitlines()[0] == "-1/18"

    def test_star_and_B(self):
        assert run("compute", "B", "--n", "0", "--seq", "const:k=5")[1].splitlines()[0] == "1"
        code, out = run("compute", "star", "--d", "1", "--c", "1", "--k", "4", "--i1", "1", "--i2", "1")
        assert code == 0

    def test_L_value(self):
        code, out = run("compute", "L", "--s", "1", "--seq", "char:k=4,i=1")
        assert code == 0 and abs(float(out.strip()) - 0.785398163397448) < 1e-14

    def test_json_output(self):
        code, out = run("compute", "classical", "--d", "2", "--c", "5", "--format", "json")
        assert json.loads(out) == {"kind": "classical", "value": "0", "approx": "0"}

    @pytest.mark.parametrize(
        "argv, needle",
        [
            (["compute", "classical", "--d", "2", "--c", "4"], "gcd"),
            (["compute", "periodic", "--d", "3", "--c", "3", "--b", "auto", "--A", "const:k=1", "--B", "const:k=1"], "gcd"),
            (["compute", "periodic", "--d", "3", "--c", "2", "--b", "auto", "--A", "const:k=2", "--B", "const:k=2"], "mod k"),
            (["compute", "P", "--n", "1", "--x", "0", "--seq", "bogus:k=1"], ""),
            (["compute", "L", "--s", "1", "--seq", "const:k=3"], "pole"),
            (["compute", "classical", "--d", "1"], "--c"),
        ],
    )
    def test_precondition_errors(self, argv, needle, capsys):
        code, out = run(*argv)
        assert code == 2 and out == ""
        err = capsys.readouterr().err
        assert err.startswith("error: ") and needle in err


class TestVerify:
    def test_nonexistent(self):
        assert run("verify", "--filter", "nonexistent") == (0, "0/0\n")

    def test_example_json_lines(self):
        code, out = run("verify", "--filter", "N_ex1")
        lines = out.splitlines()
        assert code == 0 and lines[-1] == "4/4"
        for line in lines[:-1]:
            rec = json.loads(line)
            assert list(rec)[:7] == ["id", "params", "mode", "residual", "pass", "tail", "elapsed_ms"]
            assert rec["pass"] is True

    def test_text_format(self):
        code, out = run("verify", "--filter", "E1", "--format", "text")
        assert code == 0
        assert out.splitlines()[0].startswith("PASS E1 ")
        assert out.splitlines()[-1] == "1547/1547"

    def test_failure_exit_code(self):
        code, out = run("verify", "--filter", "N_ex1", "--tolerance", "N_ex1=1e-300")
        assert code == 1 and out.splitlines()[-1] == "0/4"

    def test_errata_do_not_fail_the_run(self):
        code, out = run("verify", "--filter", "X_52", "--include-errata", "--format", "text")
        assert code == 0
        assert out.splitlines()[0].startswith("FAIL (erratum) X_52")

    def test_byte_identical_without_timings(self):
        a = run("verify", "--filter", "E12", "--no-timings")
        b = run("verify", "--filter", "E12", "--no-timings", "--workers", "2")
        assert a == b
        assert '"elapsed_ms": null' in a[1]

    def test_bad_workers(self, capsys):
        assert run("verify", "--workers", "0")[0] == 2
        assert "workers" in capsys.readouterr().err


class TestSequence:
    def rows(self, out):
        return [line.split("\t") for line in out.splitlines()[2:]]

    def test_ramanujan(self):
        code, out = run("sequence", "ramanujan:k=4")
        assert code == 0
        assert [r[1] for r in self.rows(out)] == ["2", "0", "-2", "0"]

    def test_dft(self):
        code, out = run("sequence", "dft:(const:k=3)")
        assert [r[1] for r in self.rows(out)] == ["1", "0", "0"]

    def test_character(self):
        code, out = run("sequence", "char:k=6,i=1")
        assert [r[1] for r in self.rows(out)] == ["0", "1", "0", "0", "0", "-1"]
        assert out.splitlines()[0] == "# period=6 parity=odd primitive=false"

    def test_json(self):
        code, out = run("sequence", "char:k=4,i=1", "--format", "json")
        rec = json.loads(out)
        assert rec["values"] == ["0", "1", "0", "-1"] and rec["primitive"] is True

    def test_parse_error(self, capsys):
        assert run("sequence", "char:k=4")[0] == 2
        assert capsys.readouterr().err.startswith("error: ")


class TestListIdentities:
    def test_lists_everything(self):
        code, out = run("list-identities")
        ids = [line.split("\t")[0] for line in out.splitlines()]
        assert code == 0 and "E1" in ids and "X_52" in ids and len(ids) == 37


class TestConfig:
    def test_parse(self):
        cfg = parse_config("format = text\nworkers=2 # comment\n\ntolerance.N1 = 1e-6\ntimings = no\n")
        assert cfg == CliConfig(format="text", workers=2, timings=False, tolerances={"N1": 1e-6})

    @pytest.mark.parametrize("text", ["workers = 0", "order_cap = 9999", "colour = red", "nonsense", "timings = maybe",
                                      "tolerance.N1 = 2", "format = xml"])
    def test_rejects(self, text):
        with pytest.raises(ConfigError):
            parse_config(text)

    def test_file_and_flag_precedence(self, tmp_path, monkeypatch):
        path = tmp_path / "pd.conf"
        path.write_text("format = text\norder_cap = 3\n")
        monkeypatch.setenv(CONFIG_ENV, str(path))
        # the file's order cap forbids z4
        assert run("compute", "gauss", "--n", "1", "--k", "4", "--i", "1")[0] == 2
        code, out = run("compute", "gauss", "--n", "1", "--k", "4", "--i", "1", "--order-cap", "360", "--format", "json")
        assert code == 0 and json.loads(out)["value"] == "2*z4^1"

    def test_file_tolerance_overridden_by_flag(self, tmp_path, monkeypatch):
        path = tmp_path / "pd.conf"
        path.write_text("tolerance.N_ex1 = 1e-300\n")
        monkeypatch.setenv(CONFIG_ENV, str(path))
        assert run("verify", "--filter", "N_ex1")[0] == 1
        assert run("verify", "--filter", "N_ex1", "--tolerance", "N_ex1=1e-10")[0] == 0

    def test_missing_file(self, monkeypatch, capsys):
        monkeypatch.setenv(CONFIG_ENV, "/nonexistent/pd.conf")
        assert run("sequence", "const:k=2")[0] == 2
        assert "cannot read config" in capsys.readouterr().err


def test_console_script():
    exe = shutil.which("periodic-dedekind")
    cmd = [exe] if exe else [sys.executable, "-m", "periodic_dedekind.cli"]
    proc = subprocess.run(cmd + ["compute", "classical", "--d", "1", "--c", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[0] == "1/18"
    proc = subprocess.run(cmd + ["sequence", "oops"], capture_output=True, text=True)
    assert proc.returncode == 2
