import json
import subprocess
import sys
from pathlib import Path

import pytest

from ncpoisson.catalog import heisenberg, l2, sl2
from ncpoisson.cli import main
from ncpoisson.evaluate import evaluate
from ncpoisson.files import AlgebraFile, serialize_algebra_file


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    d = tmp_path_factory.mktemp("alg")
    paths = {}
    for name, make in (("sl2", sl2), ("l2", l2), ("h3", heisenberg)):
        p = d / f"{name}.alg"
        p.write_text(serialize_algebra_file(AlgebraFile.from_algebra(make())))
        paths[name] = str(p)
    bad = d / "flipped.alg"
    bad.write_text(Path(paths["sl2"]).read_text().replace('"X": "2"', '"X": "-2"', 1))
    paths["flipped"] = str(bad)
    broken = d / "broken.alg"
    broken.write_text('{"basis": ["a"], "brackets": {"a,q": {"a": "1"}}}')
    paths["broken"] = str(broken)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graded_example(files, capsys):
    code, out, _ = run(capsys, "eval", files["sl2"], "--space", "graded", "--expr", "{X@H, X@H}")
    assert code == 0 and out.strip() == "2 H^X @ X"


def test_liezation_json(files, capsys):
    code, out, _ = run(capsys, "liezation", files["l2"], "--format", "json")
    result = json.loads(out)["result"]
    assert code == 0
    assert result["ann_basis"] == ["b"]
    assert result["quotient_dim"] == 1
    assert result["quotient_brackets"] == {}


def test_verify_l2_all_degree_three(files, capsys):
    code, out, _ = run(capsys, "verify", files["l2"], "--suite", "all", "--max-degree", "3", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["report"]["failures"] == []
    assert {s["suite"] for s in payload["suites"]} == {"loday", "dualprepoisson", "lieobject", "dialgebra", "limits"}
    assert all(s["checked"] > 0 and s["passed"] for s in payload["suites"])


def test_verify_reports_witness_on_failure(files, capsys):
    code, out, _ = run(capsys, "verify", files["flipped"], "--format", "json")
    failures = json.loads(out)["report"]["failures"]
    assert code == 1
    assert failures and len(failures[0]["witness"]) == 3


def test_quantize(files, capsys):
    code, out, _ = run(capsys, "quantize", files["sl2"], "--expr", "X*Y", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["result"] == "1/2 h.H + X.Y"
    assert payload["h_expansion"] == {"0": "X.Y", "1": "1/2 H"}


def test_free_loday(capsys):
    code, out, _ = run(capsys, "free-loday", "--generators", "x,y,z", "--expr", "[x@y, z]")
    assert code == 0 and out.strip() == "x@y@z - y@x@z"


def test_dialgebra_commutator(files, capsys):
    code, out, _ = run(capsys, "eval", files["h3"], "--space", "dialgebra",
                       "--expr", "(1@x) |- (1@y) - (1@y) -| (1@x)")
    assert code == 0 and out.strip() == "h @ z"


@pytest.mark.parametrize("argv", [
    ("eval", "%sl2", "--expr", "{X, {Y"),
    ("eval", "%sl2", "--expr", "{Q@X, 1@Y}"),
    ("eval", "%sl2", "--space", "graded", "--expr", "X.Y @ H"),
    ("eval", "%broken", "--expr", "a"),
    ("eval", "missing.alg", "--expr", "X"),
    ("verify", "%sl2", "--max-degree", "4"),
    ("verify", "%sl2", "--max-degree", "-1"),
    ("free-loday", "--generators", "x,x", "--expr", "x"),
    ("free-loday", "--generators", "x,h", "--expr", "x"),
    ("liezation", "%flipped"),
])
def test_usage_errors_exit_2(files, capsys, argv):
    argv = [files[a[1:]] if a.startswith("%") else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors_exit_2(files, capsys):
    with pytest.raises(SystemExit) as info:
        main(["eval", files["sl2"], "--space", "nowhere", "--expr", "X"])
    assert info.value.code == 2


def test_json_is_deterministic(files, capsys):
    argv = ("eval", files["sl2"], "--space", "star", "--expr", "(H.X @ Y) |-s (X @ H)", "--format", "json")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


@pytest.mark.parametrize("space,source", [
    ("poly", "{X.Y @ H, H @ X}"), ("graded", "{X^Y @ H, X @ H}"),
    ("dialgebra", "(H.X @ Y) -| (X @ H)"), ("star", "(X @ Y) -|s (Y.Y @ H)"),
])
def test_printed_results_parse_back(space, source):
    ev, value = evaluate(sl2(), space, source)
    text = ev.format(value)
    ev2, again = evaluate(sl2(), space, text)
    assert ev2.format(again) == text


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "ncpoisson.cli", "eval", files["sl2"], "--expr", "{1@X, 1@Y}"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1 @ H"
