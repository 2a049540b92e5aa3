import json
import os
import subprocess
import sys

import pytest

from mnqt.cli import main
from mnqt.exact import RatFunc
from mnqt.greenkostka import kostka_direct
from mnqt.symfunc import truncation_degree


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_kostka_json_round_trips(capsys):
    code, out, _ = run(capsys, "kostka", "--size", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["partitions"] == ["3", "2,1", "1,1,1"]
    for i, lam in enumerate(doc["partitions"]):
        for j, mu in enumerate(doc["partitions"]):
            assert RatFunc(doc["matrix"][i][j]) == kostka_direct(lam, mu)


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "mn", "--mu", "2,1", "--k", "2", "--threads", "2")
    _, second, _ = run(capsys, "mn", "--mu", "2,1", "--k", "2")
    assert first == second


def test_global_flags_after_verb(capsys):
    _, before, _ = run(capsys, "--format", "text", "green", "--lambda", "2,1", "--mu", "1,1,1")
    _, after, _ = run(capsys, "green", "--lambda", "2,1", "--mu", "1,1,1", "--format", "text")
    assert before == after and before.startswith("green entry")


def test_bad_partition_token_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["mn", "--mu", "2,x", "--k", "1"])
    assert exc.value.code == 2
    assert "'x'" in capsys.readouterr().err


def test_degree_cap_and_override(capsys, monkeypatch):
    code, _, err = run(capsys, "expand", "--size", "9")
    assert code == 2 and "truncation degree 8" in err
    code, _, err = run(capsys, "--degree", "3", "kostka", "--size", "4")
    assert code == 2
    monkeypatch.setenv("MNQT_DEGREE", "3")
    assert truncation_degree() == 3
    code, _, err = run(capsys, "expand", "--size", "4")
    assert code == 2 and "truncation degree 3" in err
    code, _, _ = run(capsys, "--degree", "4", "expand", "--size", "4")
    assert code == 0


def test_expand_text_and_latex(capsys):
    _, text, _ = run(capsys, "expand", "--basis", "P", "--size", "2", "--format", "text")
    assert "P_{(2)}[m_{(1,1)}]" in text
    _, tex, _ = run(capsys, "expand", "--basis", "P", "--size", "2", "--format", "latex")
    assert r"\begin{align*}" in tex and r"\frac{" in tex


def test_mn_variants(capsys):
    _, out, _ = run(capsys, "mn", "--variant", "hecke", "--mu", "3,2,1", "--k", "5")
    terms = {t["lambda"]: RatFunc(t["coeff"]) for t in json.loads(out)["terms"]}
    q = RatFunc.var("q")
    assert terms["4,3,3,1"] == -q * (1 - q) ** 2
    _, out, _ = run(capsys, "mn", "--variant", "dual", "--lambda", "2,1", "--k", "1")
    assert json.loads(out)["variant"] == "dual"
    with pytest.raises(SystemExit):
        main(["mn", "--variant", "dual", "--k", "1"])
    capsys.readouterr()


def test_invert_pieri_check(capsys):
    _, out, _ = run(capsys, "invert-pieri", "--lambda", "3,1", "--check")
    assert json.loads(out)["reconstructs"] is True
    _, out, _ = run(capsys, "invert-pieri", "--lambda", "2,1", "--tm1")
    coeffs = [t["coeff"] for t in json.loads(out)["terms"]]
    assert coeffs == ["1", "-2"]
    with pytest.raises(SystemExit):
        main(["invert-pieri", "--lambda", "2,2", "--tm1"])
    capsys.readouterr()


def test_verify_report_lines(capsys):
    code, out, _ = run(capsys, "verify", "orthogonality", "--format", "text")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("PASS <P_lam, Q_mu>_qt = delta n<=6")
    assert lines[-1] == "orthogonality: 2 passed, 0 failed"


def test_verify_fault_injection_names_cell(capsys):
    code, out, _ = run(capsys, "--degree", "4", "verify", "kostka", "--perturb", "2,1,1/3,1",
                       "--format", "json")
    assert code == 1
    doc = json.loads(out)
    failed = [c for c in doc["checks"] if not c["passed"]]
    assert failed and any("(2,1,1 | 3,1)" in f for c in failed for f in c["failures"])


def test_verify_spot_checks_use_seed(capsys):
    _, first, _ = run(capsys, "--seed", "5", "--degree", "4", "verify", "green", "--spot", "3")
    _, second, _ = run(capsys, "--seed", "5", "--degree", "4", "verify", "green", "--spot", "3")
    assert first == second and "seed=5" in first


def test_unknown_suite(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "nope"])
    capsys.readouterr()


def test_module_entry_point():
    env = dict(os.environ, MNQT_DEGREE="3")
    out = subprocess.run([sys.executable, "-m", "mnqt", "kostka", "--lambda", "2", "--mu", "1,1",
                          "--format", "text"], capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip().endswith("K_{(2),(1,1)}: t")
