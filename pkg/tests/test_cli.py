from __future__ import annotations

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from tournakit.catalog import exception_tournament
from tournakit.cli import main

GOLDEN = Path(__file__).parent / "golden"


def tk(*args, env=None):
    e = dict(os.environ)
    e.pop("TK_DEEP", None)
    e.update(env or {})
    return subprocess.run([sys.executable, "-m", "tournakit.cli", *args], capture_output=True, text=True, env=e)


def test_origins_example():
    a4 = exception_tournament("4A").to_text()
    r = tk("origins", "--tournament", a4, "--path", "+(1,2)")
    assert (r.returncode, r.stdout) == (0, "{1,2}\n")


def test_embed_absent():
    r = tk("embed", "--tournament", "t 3 101", "--cycle", "(2,1)")
    assert (r.returncode, r.stdout) == (0, "ABSENT\n")


def test_enum_count_only():
    r = tk("enum", "--order", "5", "--count-only")
    assert (r.returncode, r.stdout) == (0, "12\n")


def test_enum_lines_sorted(tmp_path, capsys):
    out = tmp_path / "t4.txt"
    assert main(["enum", "--order", "4", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 4 and lines == sorted(lines)
    assert all(ln.startswith("t 4 ") for ln in lines)


def test_file_input_and_canon(tmp_path, capsys):
    f = tmp_path / "ts.txt"
    f.write_text("t 3 011\nt 3 101\n")
    assert main(["canon", "--tournament", str(f)]) == 0
    assert capsys.readouterr().out == "t 3 000\nt 3 010\n"


def test_embed_witness_and_count(capsys):
    assert main(["embed", "--tournament", "t 4 110101", "--path", "+(1,2)"]) == 0
    w = capsys.readouterr().out.strip()
    assert w[0] in "12" and len(w) == 4
    assert main(["count", "--tournament", "t 3 101", "--path", "+(2)"]) == 0
    assert capsys.readouterr().out == "3\n"


def test_catalog_match(capsys):
    assert main(["catalog", "--tournament", "t 3 101", "--cycle", "(2,1)"]) == 0
    assert capsys.readouterr().out == "A1\n"
    assert main(["catalog", "--tournament", "t 3 111", "--cycle", "(2,1)"]) == 0
    assert capsys.readouterr().out == "NONE\n"


@pytest.mark.parametrize("argv", [
    ["origins", "--tournament", "t 3 10", "--path", "+(1,1)"],
    ["origins", "--tournament", "t 3 101", "--path", "(1,1)"],
    ["embed", "--tournament", "no-such-file", "--cycle", "(2,1)"],
    ["count", "--tournament", "t 3 101", "--path", "+(1)"],
])
def test_usage_errors_exit_2(argv):
    assert main(argv) == 2


def test_argparse_errors_exit_2():
    assert tk("verify", "--check", "bogus").returncode == 2
    assert tk("frobnicate").returncode == 2


def test_verify_exit_codes(tmp_path):
    ok = tk("verify", "--check", "reversal", "--max-order", "4", "--samples", "5")
    assert ok.returncode == 0
    bad = tk("verify", "--check", "thm2.1", "--max-order", "6")
    assert bad.returncode == 1


@pytest.mark.parametrize("name,argv", [
    ("reversal_4.json", ["--check", "reversal", "--max-order", "4", "--samples", "5"]),
    ("building_2.10.json", ["--check", "building:2.10"]),
])
def test_golden_reports(tmp_path, name, argv):
    out = tmp_path / name
    tk("verify", *argv, "--report", str(out))
    assert out.read_text() == (GOLDEN / name).read_text()


def test_deep_env_matches_flag(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    tk("verify", "--check", "reversal", "--samples", "0", "--deep", "--report", str(a))
    tk("verify", "--check", "reversal", "--samples", "0", "--report", str(b), env={"TK_DEEP": "1"})
    assert a.read_text() == b.read_text()
    assert json.loads(a.read_text())["parameters"]["orders"][-1] == 7


def test_seed_is_reproducible():
    args = ("embed", "--tournament", "t 9 " + "10" * 18, "--cycle", "(2,1,1,1,1,1,1,1)", "--proof-guided")
    out = tk(*args)
    assert out.returncode == 0 and len(out.stdout.strip()) == 9
    assert out.stdout == tk(*args, "--seed", "0").stdout
