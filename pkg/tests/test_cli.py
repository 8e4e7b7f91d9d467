import json
import re
import subprocess
import sys

import pytest

from frobkit.cli import main, parse_tuple
from frobkit.envelope import OutputEnvelope, to_json
from frobkit.errors import InvalidInputError


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_parse_tuple():
    assert parse_tuple("15,10,6") == [15, 10, 6]
    assert parse_tuple("7") == [7]
    for bad in ("3, 5", "3,5 ", "", "3,,5", "a,b", "3;5", "-3,5"):
        with pytest.raises(InvalidInputError):
            parse_tuple(bad)


def test_denumerant_counts(capsys):
    code, payload = run_json(capsys, "denumerant", "--gens", "15,10,6", "--x", "89")
    assert code == 0
    assert payload["result"]["count"] == 3

    code, payload = run_json(capsys, "denumerant", "--gens", "3,5", "--x", "7")
    assert code == 0
    assert payload["result"]["count"] == 0

    code, payload = run_json(capsys, "denumerant", "--gens", "3,5", "--x", "0")
    assert payload["result"]["count"] == 1


def test_denumerant_enumerate(capsys):
    code, payload = run_json(
        capsys, "denumerant", "--gens", "15,10,6", "--x", "89", "--enumerate"
    )
    assert code == 0
    assert payload["result"]["representations"] == [[1, 2, 9], [1, 5, 4], [3, 2, 4]]


def test_frobenius_payload(capsys):
    code, payload = run_json(capsys, "frobenius", "--gens", "3,5", "--s", "1")
    assert code == 0
    r = payload["result"]
    assert (r["g_star"], r["g_exact"], r["n_star"]) == (22, 22, 19)

    code, payload = run_json(capsys, "frobenius", "--gens", "15,10,6", "--s", "0")
    assert payload["result"]["g_star"] == 29

    code, payload = run_json(capsys, "frobenius", "--gens", "1,2", "--s", "0")
    assert payload["result"]["g_star"] == -1
    assert payload["result"]["g_exact"] is None


def test_frobenius_table_csv(capsys):
    code, out = run_cli(
        capsys, "frobenius", "--gens", "3,5", "--s", "1", "--table", "--format", "csv"
    )
    assert code == 0
    assert out == "j,n_j_s\n0,15\n1,25\n2,20\n"


def test_apery_command(capsys):
    code, payload = run_json(capsys, "apery", "--gens", "3,5", "--s", "0")
    assert code == 0
    assert payload["result"]["entries"] == [0, 10, 5]
    assert payload["result"]["g_star"] == 7
    assert payload["result"]["modulus"] == 3

    code, payload = run_json(
        capsys, "apery", "--gens", "3,5", "--s", "0", "--modulus-index", "1"
    )
    assert payload["result"]["modulus"] == 5
    assert payload["result"]["g_star"] == 7


def test_family_pass(capsys):
    code, payload = run_json(capsys, "family", "--base", "2,3,5", "--t-max", "3")
    assert code == 0
    r = payload["result"]
    assert [s["value"] for s in r["steps"]] == [59, 89, 119]
    assert r["verdict"] == "pass"
    assert r["g0_ok"] is True


def test_family_matches_pair_closed_form(capsys):
    code, payload = run_json(capsys, "family", "--base", "3,5", "--t-max", "4")
    assert code == 0
    assert [s["value"] for s in payload["result"]["steps"]] == [22, 37, 52, 67]


def test_reduce_pass(capsys):
    code, payload = run_json(capsys, "reduce", "--gens", "5,6,9,21", "--s", "0")
    assert code == 0
    r = payload["result"]
    assert r["d"] == 3
    assert r["reduced"] == [5, 2, 3, 7]
    assert all(c["equal"] for c in r["checks"])
    assert {c["quantity"]: c["direct"] for c in r["checks"]} == {"g_star": 13, "n_star": 7}

    code, payload = run_json(capsys, "reduce", "--gens", "15,10,6", "--s", "1")
    assert code == 0
    assert payload["result"]["reduced"] == [15, 5, 3]
    assert payload["result"]["verdict"] == "pass"


def test_reduce_no_reduction(capsys):
    code, payload = run_json(capsys, "reduce", "--gens", "2,3,5", "--s", "0")
    assert code == 0
    assert payload["result"]["no_reduction"] is True


def test_validation_exit_code(capsys):
    assert main(["family", "--base", "6,10,15", "--t-max", "1"]) == 2
    assert main(["frobenius", "--gens", "4,6"]) == 2
    assert main(["denumerant", "--gens", "3, 5", "--x", "1"]) == 2
    assert main(["frobenius", "--gens", "3,5", "--s", "-1"]) == 2


def test_resource_exit_code(capsys):
    assert main(["denumerant", "--gens", "1,2", "--x", "60", "--enumerate", "--cap", "3"]) == 3
    assert main(["apery", "--gens", "3,5", "--s", "1", "--ceiling", "5"]) == 3


def test_text_format_roundtrips_numbers(capsys):
    code, out = run_cli(capsys, "frobenius", "--gens", "3,5", "--s", "1")
    assert code == 0
    assert "g_star: 22" in out
    assert "g_exact: 22" in out
    assert "n_star: 19" in out

    code, out = run_cli(capsys, "frobenius", "--gens", "1,2")
    assert "g_exact: null" in out


def test_json_envelope_key_order(capsys):
    code, out = run_cli(capsys, "apery", "--gens", "3,5", "--format", "json")
    keys = list(json.loads(out).keys())
    assert keys == ["command", "inputs", "result", "elapsed_ms", "version"]


def test_json_determinism_same_process(capsys):
    runs = []
    for _ in range(2):
        code, out = run_cli(capsys, "family", "--base", "2,3,5", "--t-max", "2", "--format", "json")
        assert code == 0
        runs.append(re.sub(r'"elapsed_ms": \d+', '"elapsed_ms": 0', out))
    assert runs[0] == runs[1]


def test_large_integers_become_strings():
    env = OutputEnvelope(
        command="t",
        inputs={},
        result={"big": 2**53, "edge": 2**53 - 1, "neg": -(2**60)},
        elapsed_ms=0,
        version="0",
    )
    payload = json.loads(to_json(env))
    assert payload["result"]["big"] == str(2**53)
    assert payload["result"]["edge"] == 2**53 - 1
    assert payload["result"]["neg"] == str(-(2**60))


def test_plot_dir_writes_figures(tmp_path, capsys):
    code, payload = run_json(
        capsys, "apery", "--gens", "3,5", "--s", "1", "--plot-dir", str(tmp_path)
    )
    assert code == 0
    figures = payload["result"]["figures"]
    assert len(figures) == 1
    fig = tmp_path / "apery_3-5_s1.png"
    assert str(fig) in figures
    assert fig.stat().st_size > 0

    code, payload = run_json(
        capsys, "family", "--base", "2,3", "--t-max", "2", "--plot-dir", str(tmp_path)
    )
    assert (tmp_path / "family_2-3.png").stat().st_size > 0

    code, payload = run_json(
        capsys,
        "denumerant", "--gens", "3,5", "--x", "20", "--plot-dir", str(tmp_path),
    )
    assert (tmp_path / "denumerant_3-5_x20.png").stat().st_size > 0


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "frobkit", "frobenius", "--gens", "3,5", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["result"]["g_star"] == 7
