import io
import json
import subprocess
import sys

import pytest

from fockjack.cli import run
from fockjack.scalars import scalar_from_json
from fockjack.symfun import SymPoly
from fockjack.virchar import CharSeries


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_kac_json():
    code, out, _ = call("kac", "--pp", "2", "--pm", "5", "--json")
    assert code == 0
    assert json.loads(out) == {"classes": [{"rs": [1, 1], "delta": "0"}, {"rs": [1, 2], "delta": "-1/5"}]}


def test_census_count():
    code, out, _ = call("census", "--pp", "2", "--pm", "3", "--count-only")
    assert (code, out.strip()) == (0, "13")


def test_jack_json_round_trips():
    code, out, _ = call("jack", "--deg", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert [p["lambda"] for p in data["pairs"]] == [[2], [1, 1]]
    for p in data["pairs"]:
        P = SymPoly.from_json(p["P"])
        b = scalar_from_json(p["b"])
        assert SymPoly.from_json(p["Q"]) == P * b


def test_jack_specialized():
    code, out, _ = call("jack", "--deg", "2", "--kappa", "1/2", "--json")
    assert code == 0
    assert json.loads(out)["pairs"][1]["b"] == "8/3"


@pytest.mark.parametrize(
    "argv",
    [
        ["kac", "--pp", "2", "--pm", "4"],
        ["kac", "--pp", "x"],
        ["jack", "--deg", "2", "--kappa", "-1"],
        ["nonsense"],
        [],
        ["omega", "--n", "3"],
        ["structconst", "--n", "1"],
        ["characters", "--cutoff", "41"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert "error" in err


def test_structconst_text():
    code, out, _ = call("structconst", "--kind", "a", "--n", "1", "--k", "-1")
    assert code == 0
    assert "a_{1,-1} = 45" in out


def test_characters_json():
    code, out, _ = call("characters", "--cutoff", "10", "--json")
    assert code == 0
    ch = CharSeries.from_json(json.loads(out)["1,1"])
    assert ch.coeffs == (1,) + (0,) * 10


def test_felder_exact_case():
    code, out, _ = call("felder", "--r", "1", "--s", "3", "--json")
    assert code == 0
    assert json.loads(out)["certificate"]["pass"] is True


def test_singvec_and_gpoly():
    assert call("singvec", "--r", "2", "--s", "2", "--pp", "3", "--pm", "4")[0] == 0
    code, out, _ = call("gpoly", "--json")
    assert code == 0
    assert all(v["certificate"]["pass"] for v in json.loads(out).values())


def test_verify_all_passes():
    code, out, err = call("verify-all", "--pp", "2", "--pm", "3", "--cutoff", "12")
    assert code == 0, err
    assert "FAIL" not in out
    assert out.count("PASS") == 9
    assert "[fockjack]" in err and "[fockjack]" not in out


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "fockjack", "gpoly", "--pp", "2", "--pm", "5", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
