import json
import subprocess
import sys

import pytest

from conftest import CODES
from merodec.cli import main
from merodec.stabcode import parse_code


def run(capsys, *argv):
    status = main([str(a) for a in argv])
    out = capsys.readouterr()
    return status, out.out, out.err


@pytest.mark.parametrize("argv,expected", [
    (("decode", CODES / "steane.code"), "f(z) = (z^7 + 7*z^3)/(7*z^4 + 1)"),
    (("decode", CODES / "five13.code"), "f(z) = (z^5 - 5*z)/(5*z^4 - 1)"),
    (("decode", CODES / "rep3z.code", "--multi"), "f(z1, z2, z3) = z1*z2*z3"),
    (("wenum", CODES / "steane.code", "--xtype"), "x^7 + 7*x^3*y^4"),
    (("orbit", "0", "1"), "same orbit: true (E7 = 0)"),
    (("orbit", "--", "inf", "-i"), "same orbit: true (E7 = 0)"),
    (("zxw", "eval", "r(r(2, 3), 0)"), "value: 5/7"),
    (("zxw", "eval", "r(z1, r(z2, z3))", "--symbolic"),
     "symbolic: (z1*z2*z3 + z1 + z2 + z3)/(z1*z2 + z1*z3 + z2*z3 + 1)"),
    (("zxw", "eval", "r(a, b)", "--at", "a=1", "--at", "b=-1"), "value: bot"),
])
def test_outputs(capsys, argv, expected):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    assert expected in out.splitlines()


def test_orbit_false(capsys):
    status, out, _ = run(capsys, "orbit", "0", "2")
    assert status == 0 and out.startswith("same orbit: false")


def test_analyze_reports(capsys):
    _, out, _ = run(capsys, "analyze", CODES / "shor.code")
    coherent = out.split("coherently distilled")[1].split("distilled up to")[0]
    for point in ("-1", "0", "1"):
        assert any(line.split()[:1] == [point] and "order 3" in line for line in coherent.splitlines())
    _, out, _ = run(capsys, "analyze", CODES / "five13.code")
    clifford = out.split("distilled up to a Clifford:")[1]
    assert any(" F " in line and "order 2" in line and "witness" in line for line in clifford.splitlines())
    _, out, _ = run(capsys, "analyze", CODES / "steane.code")
    fixed = out.split("fixed points:")[1].split("coherently")[0]
    h_lines = [line for line in fixed.splitlines() if " H " in line]
    assert len(h_lines) == 2 and all("order 1" in line for line in h_lines)


def test_analyze_function(capsys):
    status, out, _ = run(capsys, "analyze", "--function", "z^2")
    assert status == 0 and "fixed points:" in out
    assert run(capsys, "analyze", "--function", "3")[0] == 3
    assert run(capsys, "analyze", "--function", "z^")[0] == 2
    assert run(capsys, "analyze")[0] == 2


def test_concat_writes_shor(capsys, tmp_path):
    out = tmp_path / "shor.code"
    status, _, _ = run(capsys, "concat", CODES / "rep3x.code", CODES / "rep3z.code", "-o", out)
    assert status == 0
    assert parse_code(out.read_text()) == parse_code((CODES / "shor.code").read_text())
    status, text, _ = run(capsys, "concat", CODES / "rep3x.code", CODES / "rep3z.code")
    assert parse_code(text).n == 9


def test_dual(capsys):
    status, out, _ = run(capsys, "dual", CODES / "rep3x.code")
    assert status == 0
    assert parse_code(out) == parse_code((CODES / "rep3z.code").read_text())
    _, out, _ = run(capsys, "--json", "dual", CODES / "five13.code")
    assert json.loads(out)["identity_holds"] is True


def test_json_decode(capsys):
    _, out, _ = run(capsys, "decode", CODES / "rep3x.code", "--multi", "--json")
    data = json.loads(out)
    assert data["f"] == {"num": ["0", "3", "0", "1"], "den": ["1", "0", "3"]}
    assert {"exp": [1, 1, 1], "coeff": "1"} in data["multi"]["num"]


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "decode", tmp_path / "missing.code")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "--threads", "0", "orbit", "0", "1")[0] == 2
    assert run(capsys, "orbit", "0", "1/")[0] == 2
    assert run(capsys, "wenum", CODES / "five13.code", "--xtype")[0] == 1
    assert run(capsys, "render", "e7", "--size", "0")[0] == 2
    assert run(capsys, "zxw", "eval", "g(x)")[0] == 2


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("MERODEC_THREADS", "3")
    assert run(capsys, "orbit", "0", "1")[0] == 0
    monkeypatch.setenv("MERODEC_THREADS", "many")
    assert run(capsys, "orbit", "0", "1")[0] == 2


def test_render_through_e7(capsys, tmp_path):
    out = tmp_path / "f.ppm"
    status, _, _ = run(capsys, "render", "(z^5-5*z)/(5*z^4-1)", "--through-e7", "--size", 16, "--out", out)
    assert status == 0
    data = out.read_bytes()
    assert data.startswith(b"P6\n16 16\n255\n") and len(data) == 13 + 16 * 16 * 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "merodec.cli", "decode", str(CODES / "steane.code")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "f(z) = (z^7 + 7*z^3)/(7*z^4 + 1)"
    proc = subprocess.run(
        [sys.executable, "-m", "merodec.cli", "decode", str(CODES / "nope.code")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 2 and "cannot read" in proc.stderr
