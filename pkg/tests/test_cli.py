import io
import json
import subprocess
import sys

import pytest

from sifre import cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    return code, (json.loads(out) if out else None), err


def test_betti_and_sifre_worked_example():
    code, data, _ = run_json("betti", "--gens", "155,185,205,328,410")
    assert code == 0
    assert data["betti"]["degrees"]["1"] == [410, 925, 1395, 1640, 1640]
    code, data, _ = run_json("sifre", "--gens", "155,185,205,328,410")
    assert code == 1
    assert data["verdict"]["holds"] is False
    assert {"i": 1, "a": 1640, "b": 1640, "diff": 0, "certificate": "duplicate"} in data["verdict"]["witnesses"]


def test_sifre_true_exit_zero():
    code, data, _ = run_json("sifre", "--gens", "31,37,41")
    assert code == 0 and data["verdict"]["holds"] is True


def test_glue_and_extend():
    code, data, _ = run_json("glue", "--s1", "31,37,41", "--s2", "4,5", "--a", "109", "--b", "19", "--check", "sifre")
    assert code == 0
    assert data["gluing"]["alpha"] == 2071 and data["verdict"]["holds"]
    code, data, _ = run_json("glue", "--s1", "31,37,41", "--s2", "4,5", "--a", "355", "--b", "19", "--check", "unique")
    assert code == 0
    code, data, _ = run_json("glue", "--s1", "31,37,41", "--s2", "4,5", "--a", "355", "--b", "19")
    assert code == 1
    code, data, _ = run_json("glue", "--s1", "31,37,41", "--s2", "4,5", "--a", "355", "--b", "19", "--check", "none")
    assert code == 0 and "verdict" not in data
    code, data, _ = run_json("extend", "--gens", "31,37,41", "--m", "150")
    assert code == 0
    assert data["extension"]["ell"] == 7 and data["extension"]["extended"] == [150, 217, 259, 287]


def test_herzog_reports_reason():
    code, data, _ = run_json("herzog", "--gens", "7,9,10")
    assert code == 0
    assert data["reason"] == "no SIFRE extension (alpha_13=1)"
    code, out, _ = run("herzog", "--gens", "7,9,10")
    assert "alpha_13=1" in out


def test_bresinsky_and_ci_family():
    code, data, _ = run_json("bresinsky", "--cross", "1,2,2,1,2,1,1,1")
    assert code == 0 and data["bresinsky"]["m"] == [13, 8, 14, 11]
    code, data, _ = run_json("bresinsky", "--cross", "1,2,2,1,2,1,1,1", "--u", "1,1,1,1")
    assert code == 1 and data["predicted"] is False
    code, data, _ = run_json("ci-family", "--n", "2", "--u", "1,1", "--depth", "2")
    assert code == 0
    assert data["steps"][2]["generators"] == [[4, 0], [0, 4], [2, 2], [1, 3]]


def test_affine_betti():
    code, data, _ = run_json("betti", "--affine-gens", "4,0;0,4;2,2;1,3", "--degree", "6,10")
    assert code == 0 and data["multiplicity"]["2"] == 1


def test_searches():
    code, data, _ = run_json("search-extensions", "--gens", "31,37,41")
    assert code == 0 and data["m_values"] == [109, 150]
    code, data, _ = run_json("search-gluings", "--s1", "6,7,10")
    assert code == 0 and data["no_sifre_gluing_certified"] is True


@pytest.mark.parametrize("argv", [
    ["betti"],
    ["betti", "--gens", "4,x"],
    ["betti", "--gens", "4,6"],
    ["betti", "--gens", "3,5,6", "--strict-minimal"],
    ["glue", "--s1", "31,37,41", "--s2", "4,5", "--a", "150", "--b", "14"],
    ["herzog", "--gens", "4,6,7"],
    ["bresinsky", "--cross", "1,2,3"],
    ["extend", "--gens", "31,37,41", "--m", "150", "--ell", "2"],
    ["betti", "--affine-gens", "1,0;0,1"],
    ["no-such-command"],
])
def test_input_errors_exit_two(argv, capsys):
    code, out, err = run(*argv)
    assert code == 2
    assert out == ""


def test_json_is_byte_identical():
    a = run("info", "--gens", "7,9,10", "--json")[1]
    b = run("info", "--gens", "7,9,10", "--json")[1]
    assert a == b


def test_text_and_json_agree():
    code, data, _ = run_json("info", "--gens", "7,9,10")
    _, text, _ = run("info", "--gens", "7,9,10")
    parsed = {}
    for line in text.splitlines():
        key, _, value = line.partition(": ")
        parsed[key] = json.loads(value)
    assert parsed == data


def test_out_file_resume(tmp_path, monkeypatch):
    out = tmp_path / "results.ndjson"
    code, first, _ = run("search-extensions", "--gens", "31,37,41", "--json", "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 1
    record = json.loads(lines[0])
    assert record["command"] == "search-extensions" and record["exit_code"] == 0

    def boom(args):
        raise AssertionError("recomputed a cached result")

    monkeypatch.setitem(cli.COMMANDS, "search-extensions", boom)
    code, second, _ = run("search-extensions", "--gens", "31,37,41", "--json", "--out", str(out))
    assert code == 0 and second == first
    assert len(out.read_text().splitlines()) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sifre", "info", "--gens", "4,5", "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["frobenius"] == 11
