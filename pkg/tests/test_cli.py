import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from grothpos.cli import main, parse_vector

PARAMS = Path(__file__).resolve().parent.parent / "params"


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


def values(rows):
    return {r["partition"]: r["value"] for r in rows}


def test_fmu_example():
    code, data = run_json("fmu", "--mu", "1,1", "--cap", "8")
    assert code == 0 and data["agree"]
    assert data["determinant"] == data["delegant"]


def test_plancherel_hecke_example():
    code, data = run_json("measure", "plancherel-hecke", "--m", "2", "--n", "2")
    assert code == 0
    assert values(data["table"]) == {"1": "1/2", "2": "1/4", "1,1": "1/4"}


def test_scan_negative_control_exits_one():
    code, data = run_json("scan", "schur", "--params", str(PARAMS / "psi_half.json"), "--max-size", "2")
    assert code == 1
    assert values(data["violations"]) == {"1,1": "-1/4"}


def test_product():
    code, data = run_json("product", "--mu", "1", "--nu", "1")
    assert code == 0
    assert values(data["expansion"]) == {"2": "1", "1,1": "1", "2,1": "1"}


def test_pieri_verify():
    code, data = run_json("pieri", "--k", "2", "--lam", "1", "--verify")
    assert code == 0 and data["agrees_with_product"]


def test_expand_monomial():
    code, data = run_json("expand", "--family", "Gtilde", "--outer", "1", "--nvars", "2", "--degree", "2")
    assert code == 0
    assert values(data["monomial"]) == {"1": "1", "1,1": "1"}


def test_convert_round_trip():
    code, data = run_json("convert", "--from", "schur", "--to", "gtilde", "--vector", "1:1", "--cap", "4")
    assert code == 0
    assert values(data["vector"]) == {"1": "1", "1,1": "-1", "1,1,1": "1", "1,1,1,1": "-1"}


def test_count():
    code, data = run_json("count", "syt", "--lam", "2,2")
    assert code == 0 and data["value"] == "2"


def test_specialize_signed():
    code, data = run_json("specialize", "--params", str(PARAMS / "normalized_pair.json"), "--family", "signed",
                          "--max-size", "2")
    assert code == 0


def test_toeplitz_and_harmonic():
    code, data = run_json("toeplitz", "--params", str(PARAMS / "mixed.json"), "--source", "gamma",
                          "--size", "6", "--order-cap", "4")
    assert code == 0 and data["status"] == "pass"
    code, _ = run_json("toeplitz", "--values", "1,1,0,0,1", "--order-cap", "4")
    assert code == 1
    code, data = run_json("harmonic", "--params", str(PARAMS / "normalized_pair.json"), "--rank", "5")
    assert code == 0


def test_duality():
    code, data = run_json("duality", "--degree", "3")
    assert code == 0 and data["identity"]


def test_tsv_format_before_or_after_subcommand():
    a = run("--format", "tsv", "count", "syt", "--lam", "2,2")
    b = run("count", "syt", "--lam", "2,2", "--format", "tsv")
    assert a == b and a[0] == 0
    assert "\t" in a[1]


@pytest.mark.parametrize("argv", [
    ("count", "syt", "--lam", "x"),
    ("fmu",),
    ("measure", "corner", "--n", "0"),
    ("scan", "schur", "--params", "/nonexistent.json"),
])
def test_usage_errors_exit_two(argv):
    assert run(*argv)[0] == 2


def test_output_is_deterministic():
    argv = ("specialize", "--params", str(PARAMS / "mixed.json"), "--family", "gtilde", "--max-size", "3")
    assert run(*argv) == run(*argv)


def test_parse_vector():
    vec = parse_vector("2,1:1;1,1:-1/2", "schur")
    assert vec[(2, 1)] == 1 and vec[(1, 1)] == -0.5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "grothpos", "count", "syt", "--lam", "2,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == "2"
