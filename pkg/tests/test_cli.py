import json
import subprocess
import sys
from pathlib import Path

import pytest

from hacs6.cli import EXIT_CLAIM, EXIT_OK, EXIT_USAGE, main
from hacs6.verify.a1solver import grid_from_axes

GOLDEN = Path(__file__).parent / "golden"

KAHLER = '{"alpha":"1","r":"0","eps":"1","q":"i","b":"i"}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,golden", [
    (["report", "--case", "A1.1", "--params", KAHLER], "report_a11_kahler.json"),
    (["report", "--case", "A2.1", "--params", '{"r":"sqrt3/3","t":"2/3*sqrt3"}'], "report_a21_snk.json"),
    (["build", "--case", "A2.1", "--params", '{"r":"1","t":"2"}'], "build_a21.json"),
])
def test_golden_json(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert out == (GOLDEN / golden).read_text()


def test_kahler_report_values(capsys):
    _, out, _ = run(capsys, "report", "--case", "A1.1", "--params", KAHLER)
    rec = json.loads(out)
    assert rec["kahler"] is True
    assert rec["einstein_lambda"] == "-2" and rec["cosmological_constant"] == "-4"


def test_output_is_byte_identical_across_processes(tmp_path):
    outs = []
    for n in range(2):
        path = tmp_path / f"r{n}.json"
        subprocess.run([sys.executable, "-m", "hacs6.cli", "report", "--case", "A1.2",
                        "--params", '{"q":"j","p":"k"}', "--out", str(path)], check=True)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_params_from_file(tmp_path, capsys):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"case": "A1.1", "params": json.loads(KAHLER)}))
    code, out, _ = run(capsys, "report", "--params", str(f))
    assert code == EXIT_OK and json.loads(out)["kahler"] is True


def test_violated_constraint_exit_code(capsys):
    code, _, err = run(capsys, "build", "--case", "A1.1", "--params", '{"alpha":"0","r":"0","eps":"1","q":"i"}')
    assert code == EXIT_USAGE
    assert "α≠0" in err


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["report"],
    ["report", "--case", "A2.1", "--params", "{not json"],
    ["report", "--case", "A2.1", "--params", '{"r":0.5,"t":"1"}'],
    ["report", "--case", "A2.1", "--params", '{"r":"1","t":"1"}', "--mode", "float", "--tol", "abc"],
    ["verify", "--suite", "nope"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_float_mode_with_tolerance(capsys):
    code, out, _ = run(capsys, "report", "--case", "A2.1", "--params", '{"r":"1","t":"2"}',
                       "--mode", "float", "--tol", "1/10000000")
    rec = json.loads(out)
    assert code == EXIT_OK and rec["mode"] == "float" and rec["nijenhuis_class"] == "NDG"


def test_text_format_and_list(capsys):
    code, out, _ = run(capsys, "list", "--format", "text")
    assert code == EXIT_OK and out.startswith("A1.1")
    code, out, _ = run(capsys, "report", "--case", "A6", "--format", "text")
    assert code == EXIT_OK and "nijenhuis_class" in out


def test_verify_suite_corrected_and_literal(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "g2")
    assert code == EXIT_OK and json.loads(out)[0]["passed"]
    code, _, _ = run(capsys, "verify", "--suite", "g2", "--literal")
    assert code == EXIT_CLAIM


def test_verify_single_table_row(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "table", "--case", "A1.3", "--format", "text")
    assert code == EXIT_OK and "A1.3" in out


def test_solve_a1_custom_grid(capsys):
    axes = {"lam": ["0", "1"], "b": ["0", "i"], "c": ["0"], "eps": ["1"], "a": ["0", "1"]}
    code, out, _ = run(capsys, "solve-a1", "--grid", json.dumps(axes))
    assert code == EXIT_OK and json.loads(out)[0]["extra"]["grid_points"] == len(grid_from_axes(**axes))
    assert run(capsys, "solve-a1", "--grid", '{"zeta":["1"]}')[0] == EXIT_USAGE


def test_sweep_grid(capsys, tmp_path):
    g = tmp_path / "grid.json"
    g.write_text(json.dumps({"case": "A2.2", "points": [{"r": "1", "t": "2"}, {"r": "0", "t": "1"}]}))
    code, out, _ = run(capsys, "sweep", "--grid", str(g))
    recs = json.loads(out)
    assert code == EXIT_OK and len(recs) == 2 and {r["case"] for r in recs} == {"A2.2"}
