import json
import subprocess
import sys

import pytest

from peakalg.cli import main
from peakalg.serialize import element_from_json
from peakalg.symcore import zassenhaus_zetas


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_zeta_text(capsys):
    code, out, _ = run(capsys, "zeta", "--kind", "A", "--n", "4")
    assert code == 0
    assert out.strip().endswith("- 1/4*S^1.1.1.1")
    assert out.count("S") == 6


def test_zeta_json_round_trip(capsys):
    code, out, _ = run(capsys, "zeta", "--n", "5", "--format", "json")
    assert code == 0
    assert element_from_json(json.loads(out)) == dict(zassenhaus_zetas(5)[5].terms)


def test_zeta_level_and_b(capsys):
    assert run(capsys, "zeta", "--kind", "level", "--r", "3", "--n", "3")[0] == 0
    code, out, _ = run(capsys, "zeta", "--kind", "B", "--n", "2", "--tilde", "--format", "latex")
    assert code == 0 and "\\sharp" in out


@pytest.mark.parametrize("argv", [
    ["zeta", "--n", "0"],
    ["zeta", "--kind", "level", "--n", "3"],
    ["cartan", "--n", "4"],
    ["cartan", "--n", "4", "--r", "1"],
    ["conjecture", "--n", "4", "--r", "3", "--graded"],
    ["verify-paper", "--sections", "nope"],
    ["verify-paper", "--max-n", "0"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_idempotents_json(capsys):
    code, out, _ = run(capsys, "idempotents", "--family", "peak", "--n", "5", "--r", "3")
    data = json.loads(out)
    assert code == 0 and all(data["checks"].values())
    assert [x["label"] for x in data["idempotents"]][-1] == "0;5"
    for fam in ("A", "B"):
        assert run(capsys, "idempotents", "--family", fam, "--n", "3")[0] == 0


def test_cartan_latex_and_json(capsys):
    code, out, _ = run(capsys, "cartan", "--n", "4", "--r", "2", "--format", "latex")
    assert code == 0 and out.startswith("\\left(\\begin{array}{cccc}")
    code, out, _ = run(capsys, "cartan", "--family", "A", "--n", "4", "--format", "json")
    assert code == 0 and len(json.loads(out)["labels"]) == 5


def test_quiver(capsys):
    code, out, _ = run(capsys, "quiver", "--n", "6", "--r", "2")
    assert code == 0 and "0;3,1,1,1 -> 0;5,1" in out


def test_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "--n", "5", "--r", "2", "--graded")
    assert code == 0 and out.strip().endswith("match")


def test_verify_small_deterministic(capsys, tmp_path):
    args = ["verify-paper", "--sections", "expansions,peak", "--max-n", "4", "--no-timings"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2
    report = json.loads(out1)
    assert "timings" not in report and report["summary"]["ok"]
    target = tmp_path / "report.txt"
    assert run(capsys, *args[:-1], "--format", "text", "--output", str(target))[0] == 0
    assert "checks passed" in target.read_text() and "wall time" in target.read_text()


def test_verify_failure_exits_1(capsys):
    code, out, _ = run(capsys, "verify-paper", "--sections", "typeA", "--max-n", "3",
                       "--format", "text")
    assert code == 1
    assert "FAIL [typeA] q-Cartan literal formula n=2" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "peakalg", "zeta", "--n", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "--n must be at least 1" in proc.stderr
