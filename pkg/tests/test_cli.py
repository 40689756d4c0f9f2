import csv
import io
import json

import pytest

from seifert_surgery.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_norm(capsys):
    code, out, _ = run(capsys, "norm", "--poly", "1,-3,1", "--d", "5")
    assert code == 0
    assert json.loads(out) == {"poly": {"0": 1, "1": -3, "2": 1}, "d": 5, "norm": "121"}
    code, out, _ = run(capsys, "norm", "--poly", "1,-3,1", "--offset=-1", "--d", "2")
    assert json.loads(out)["norm"] == "5"
    code, out, _ = run(capsys, "norm", "--fig8-q", "2", "--d", "5")
    assert json.loads(out)["norm"] == "361"


def test_dedekind(capsys):
    code, out, _ = run(capsys, "dedekind", "--q", "1", "--p", "4")
    assert json.loads(out) == {"q": 1, "p": 4, "s": "1/8"}
    code, _, err = run(capsys, "dedekind", "--q", "2", "--p", "4")
    assert code == 2 and "gcd" in err


def test_lescop_2bridge(capsys):
    code, out, _ = run(capsys, "lescop-2bridge", "--dseq=1,-7,1", "--surgery=-3/1,-3/1")
    data = json.loads(out)
    assert code == 0
    assert data["lambda"] == "-7/1"
    assert (data["trace"], data["b_minus"], data["signature"], data["abs_p"]) == ("-6/1", 2, -2, "5/1")
    assert data["L"] == "-17/2" and data["K1"] == "-11/24"
    code, _, _ = run(capsys, "lescop-2bridge", "--dseq=1,-7,1", "--surgery=-3/0,-3/1")
    assert code == 2


def test_lescop_seifert(capsys):
    code, out, _ = run(capsys, "lescop-seifert", "--alpha", "1", "--beta", "4", "--q1", "1", "--q2", "1", "--q3=-3")
    assert json.loads(out)["lambda"] == "-9/2"


def test_h1_and_lift(capsys):
    code, out, _ = run(capsys, "h1", "--matrix=-3,-2;-2,-3")
    assert json.loads(out)["invariant_factors"] == [1, 5]
    code, out, _ = run(capsys, "h1", "--alpha", "1", "--beta", "1", "--q1", "0", "--q2", "0", "--q3", "0")
    assert json.loads(out)["h1_order_X"] == "infinite"
    code, out, _ = run(capsys, "lift", "--alpha", "1", "--beta", "2", "--q1", "1", "--q2=-1", "--q3=-1")
    data = json.loads(out)
    assert data["X_coefficients"] == ["1/1", "2/-1", "5/-1", "5/-1"]
    assert data["homology_consistent"] is True
    code, _, _ = run(capsys, "lift", "--alpha", "2", "--beta", "4", "--q1", "1", "--q2", "1", "--q3", "1")
    assert code == 2


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--q", "3", "--lambda=-3", "--norm5", "1936")
    assert code == 0 and json.loads(out)["verdict"] == "not Seifert-realizable"
    code, out, _ = run(capsys, "verify", "--q", "1", "--lambda=-1", "--norm5", "16")
    data = json.loads(out)
    assert code == 3 and data["survivors"][0]["candidate"]["beta"] == 2
    code, _, _ = run(capsys, "verify", "--q", "2", "--lambda=-2", "--norm5", "361")
    assert code == 0
    code, _, _ = run(capsys, "verify", "--q", "2", "--lambda=-2", "--norm5", "abc")
    assert code == 1
    code, _, _ = run(capsys, "verify", "--q", "2", "--lambda=-2", "--norm5", "361", "--sigma-nonzero")
    assert code == 2


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "dedekind", "--q", "x", "--p", "3")[0] == 1
    assert run(capsys)[0] == 1


def test_fig8_table(capsys):
    code, out, _ = run(capsys, "fig8-table", "--q-min=-1", "--q-max", "4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    by_q = {int(r["q"]): r for r in rows}
    assert by_q[1] == {"q": "1", "lambda_q": "-1/1", "norm5": "16", "ineq_24_holds": "true"}
    assert by_q[0]["norm5"] == "1"
    assert by_q[4]["norm5"] == "6241"
    assert all(r["ineq_24_holds"] == "true" for r in rows)


def test_sweep_output_deterministic(capsys, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "sweep", "--max-beta", "8", "--traces", "--out", str(out1))[0] == 0
    assert run(capsys, "sweep", "--max-beta", "8", "--traces", "--workers", "2", "--out", str(out2))[0] == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert "." not in json.dumps(json.loads(out1.read_text())["summary"])


def test_text_format(capsys):
    code, out, _ = run(capsys, "dedekind", "--q", "1", "--p", "5", "--format", "text")
    assert out == "q: 1\np: 5\ns: 1/5\n"
