import json

import pytest

from qbailey.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list_text(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert "bressoud-3.4" in out and "k: integer ≥ 1" in out


def test_list_json(capsys):
    code, out, _ = run(capsys, "list", "--json")
    data = json.loads(out)
    assert code == 0 and isinstance(data, list)
    entry = next(d for d in data if d["id"] == "andrews-merca-trunc")
    assert entry["params"] == [{"name": "k", "constraint": "integer ≥ 1"}]


def test_verify_derived_passes(capsys):
    code, out, _ = run(capsys, "verify", "thm1-derived", "--order", "200", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["status"] == "pass" and data["window"] == [0, 200] and data["first_mismatch"] is None


def test_verify_printed_fails_with_details(capsys):
    code, out, _ = run(capsys, "verify", "thm1", "--order", "200", "--json")
    data = json.loads(out)
    assert code == 1
    assert data["identity"] == "thm1"
    assert data["first_mismatch"] == {"exponent": 4, "lhs": "2", "rhs": "1"}


def test_verify_several_ids(capsys):
    code, out, _ = run(capsys, "verify", "thm3-derived", "concluding-2", "--json")
    data = json.loads(out)
    assert code == 0 and [d["identity"] for d in data] == ["concluding-2", "thm3-derived"]


def test_verify_with_param(capsys):
    code, out, _ = run(capsys, "verify", "guo-zeng-trunc-corrected", "--param", "k=3", "--order", "100")
    assert code == 0 and "k=3" in out and "1/1 identities pass" in out


def test_verify_window(capsys):
    code, out, _ = run(capsys, "verify", "thm3", "--window", "0:8", "--json")
    assert code == 0 and json.loads(out)["window"] == [0, 8]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "no-such-id"],
        ["verify", "general-odd-M", "--param", "M=4"],
        ["verify", "thm1", "--param", "x=1"],
        ["verify", "thm1", "--window", "5:2"],
        ["verify", "thm1", "--order", "10", "--window", "0:20"],
        ["expand", "general-odd-M", "--side", "lhs"],
        ["positivity", "andmer-k"],
        ["positivity", "cor9"],
        ["positivity", "cor1", "--max-n", "-1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_expand_lhs(capsys):
    code, out, _ = run(capsys, "expand", "thm1", "--side", "lhs", "--order", "5")
    assert code == 0
    assert out.split("\n")[:5] == ["0 1", "1 0", "2 1", "3 1", "4 2"]


def test_expand_json_strings(capsys):
    code, out, _ = run(capsys, "expand", "concluding-2", "--side", "rhs", "--order", "8", "--json")
    pairs = json.loads(out)
    assert code == 0 and len(pairs) == 8
    assert all(isinstance(c, str) and int(c) >= 0 for _, c in pairs)


def test_expand_big_coefficients_round_trip(capsys):
    code, out, _ = run(capsys, "expand", "general-odd-M", "--side", "rhs", "--param", "M=13", "--window", "495:500", "--json")
    values = [int(c) for _, c in json.loads(out)]
    assert code == 0 and all(v > 2**53 for v in values)


def test_positivity_cor1(capsys):
    code, out, _ = run(capsys, "positivity", "cor1", "--max-n", "2000")
    assert code == 0 and "pass" in out


def test_positivity_andmer(capsys):
    code, _, _ = run(capsys, "positivity", "andmer-k", "--param", "k=2", "--max-n", "500")
    assert code == 0


def test_positivity_json(capsys):
    code, out, _ = run(capsys, "positivity", "cor2", "--max-n", "3", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["min"] == "0" and data["first_negative"] is None and data["window"] == [0, 4]


def test_positivity_failure(capsys):
    code, out, _ = run(capsys, "positivity", "merca", "--max-n", "20", "--json")
    data = json.loads(out)
    assert code == 1 and data["first_negative"] == 7 and data["status"] == "fail"


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "qbailey", "verify", "no-such-id"], capture_output=True, text=True)
    assert res.returncode == 2 and "unknown identity" in res.stderr
