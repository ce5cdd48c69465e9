import csv
import io
import subprocess
import sys
from pathlib import Path

import pytest

from satelim.bench import CSV_HEADER
from satelim.cli import EXIT_DISAGREE, EXIT_MATH, EXIT_OK, EXIT_USAGE, main

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_eliminate_both_twisted_cubic():
    code, out = run("eliminate", "--method", "both", PROBLEMS / "twisted_cubic.ideal")
    assert code == EXIT_OK
    assert out.splitlines() == ["b1^2 - b2", "b1*b2 - b3", "b2^2 - b1*b3", "AGREE"]


@pytest.mark.parametrize("method", ["saturation", "block"])
def test_eliminate_single_route(method):
    code, out = run("eliminate", "--method", method, PROBLEMS / "circle_line.ideal")
    assert (code, out) == (EXIT_OK, "x^2 - 1/2\n")


def test_saturate_example(capsys):
    code, out = run("saturate", "--by", "x0", PROBLEMS / "satex.ideal")
    assert code == EXIT_OK
    assert out.splitlines() == ["x1^2", "x2"]
    assert "saturation steps: 1" in capsys.readouterr().err


def test_quotient_command():
    code, out = run("quotient", "--by", "x0", PROBLEMS / "satex.ideal")
    assert out.splitlines() == ["x1^2", "x2"]


def test_homogenize_command():
    code, out = run("homogenize", "--show-j", PROBLEMS / "satex_affine.ideal")
    assert code == EXIT_OK
    assert out.splitlines() == ["# J", "x1^2", "-x1^2 + x2*x0", "# Ih", "x1^2", "x2"]


def test_gb_and_orders():
    code, out = run("gb", "--order", "lex", PROBLEMS / "twisted_cubic.ideal")
    assert out.splitlines() == ["b1 - t", "b2 - t^2", "b3 - t^3"]
    code, out = run("gb", PROBLEMS / "twisted_cubic.ideal")
    assert out.splitlines() == ["b2^2 - b3*t", "b2*t - b3", "t^2 - b2", "b1 - t"]


def test_gb_empty_file():
    assert run("gb", "--order", "degrevlex", PROBLEMS / "empty.ideal") == (EXIT_OK, "")


def test_syz_command(tmp_path):
    f = tmp_path / "xy.ideal"
    f.write_text("field QQ\nvars x,y\ngens:\nx\ny\n")
    assert run("syz", f) == (EXIT_OK, "[y, -x]\n")


def test_module_problem():
    code, out = run("eliminate", "--method", "both", PROBLEMS / "module_example.ideal")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "AGREE"


def test_parse_error_exit_code(tmp_path, capsys):
    f = tmp_path / "bad.ideal"
    f.write_text("field QQ\nvars x\ngens:\nx + y\n")
    code, out = run("gb", f)
    assert code == EXIT_USAGE and out == ""
    err = capsys.readouterr().err
    assert "line 4, column 5" in err and "unknown identifier" in err


def test_usage_errors(tmp_path):
    assert run("gb", tmp_path / "missing.ideal")[0] == EXIT_USAGE
    assert run("frobnicate")[0] == EXIT_USAGE
    assert run("gb", "--order", "nonsense", PROBLEMS / "twisted_cubic.ideal")[0] == EXIT_USAGE
    assert run("quotient", "--by", "0", PROBLEMS / "satex.ideal")[0] == EXIT_USAGE
    assert run("bench", "--methods", "magic", "--curves", "1")[0] == EXIT_USAGE


def test_budget_exit_code(capsys):
    code, _ = run("gb", "--max-pairs", "1", PROBLEMS / "twisted_cubic.ideal")
    assert code == EXIT_MATH
    assert "critical pairs" in capsys.readouterr().err


def test_help_exit_code():
    assert run("--help")[0] == EXIT_OK


def test_disagree_exit_code(monkeypatch):
    import satelim.cli as cli
    monkeypatch.setattr(cli, "ideal_equal", lambda *a, **k: False)
    code, out = run("eliminate", "--method", "both", PROBLEMS / "circle_line.ideal")
    assert code == EXIT_DISAGREE
    assert out.splitlines() == ["# saturation", "x^2 - 1/2", "# block", "x^2 - 1/2", "DISAGREE"]


def test_bench_command(tmp_path):
    out_file = tmp_path / "b.csv"
    code, _ = run("bench", PROBLEMS, "--curves", "2", "--repeat", "1", "--out", out_file)
    assert code == EXIT_OK
    rows = list(csv.reader(out_file.open()))
    assert tuple(rows[0]) == CSV_HEADER
    assert {r[-1] for r in rows[1:]} == {"ok"}
    assert len(rows) == 1 + 2 * (len(list(PROBLEMS.glob("*.ideal"))) + 2)


def test_output_is_deterministic_across_processes():
    cmd = [sys.executable, "-m", "satelim.cli", "eliminate", "--method", "both", str(PROBLEMS / "twisted_cubic.ideal")]
    outs = {subprocess.run(cmd, capture_output=True, text=True, check=True).stdout for _ in range(3)}
    assert len(outs) == 1


def test_console_script_entry_point():
    res = subprocess.run([sys.executable, "-m", "satelim.cli", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("satelim")
