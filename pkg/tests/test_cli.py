import json

import pytest

from pptor.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_low_false(capsys):
    code, out, _ = run(capsys, "low", "E y. x = 2*y")
    assert code == 0 and out.strip() == "false"


def test_low_true(capsys):
    code, out, _ = run(capsys, "low", "2*x = 0 & E y. x = 4*y")
    assert code == 0 and out.strip() == "true"


def test_low_json_schema_keys(capsys):
    code, doc = run_json(capsys, "low", "E y. x = 2*y")
    assert code == 0
    assert doc["command"] == "low"
    assert doc["input"]["formula"] == "E y. x = 2*y"
    assert doc["result"]["low"] is False
    assert "trace" in doc


def test_eval(capsys):
    code, doc = run_json(capsys, "eval", "2*x = 0 & E y. x = 4*y", "Z/8 + Z/2")
    assert code == 0
    assert doc["result"]["subgroup"]["order"] == 2


def test_pure_and_witness(capsys):
    code, doc = run_json(capsys, "pure", "2,0", "Z/8 + Z/2")
    assert code == 0
    assert doc["result"]["pure"] is False
    assert doc["trace"]["witness"]["n"] == 2
    code, doc = run_json(capsys, "pure", "0,1", "Z/8 + Z/2")
    assert doc["result"]["pure"] is True


def test_torsion(capsys):
    code, doc = run_json(capsys, "torsion", "Z + Z/6")
    assert code == 0
    assert doc["result"]["torsion"]["order"] == 6


def test_complement_success_and_failure(capsys):
    code, doc = run_json(capsys, "complement", "0,1", "Z/8 + Z/2")
    assert code == 0
    assert doc["result"]["complement"]["order"] == 8
    code, doc = run_json(capsys, "complement", "4,0", "Z/8 + Z/2")
    assert code == 1
    assert "error" in doc and "result" not in doc


def test_chain(capsys):
    code, doc = run_json(capsys, "chain", "--witness", "2", "3", "1",
                         "--indices")
    assert code == 0
    assert doc["result"]["orders"] == [8, 4, 2, 1, 1]
    assert doc["result"]["stabilization_index"] == 3
    assert doc["result"]["indices"] == [2, 2, 2, 1]


def test_types(capsys):
    code, out, _ = run(capsys, "types", "0", "--bound", "4")
    assert code == 0 and out.strip() == "5"
    code, out, _ = run(capsys, "types", "0", "--bound", "2")
    assert out.strip() == "2"


def test_ulm(capsys):
    code, doc = run_json(capsys, "ulm", "Z/8 + Z/2")
    assert code == 0
    assert {(a["p"], a["n"]): a["value"] for a in doc["result"]["alpha"]} == \
        {(2, 1): 1, (2, 3): 1}


def test_limit_model(capsys):
    code, doc = run_json(capsys, "limit-model", "lambda", "--cof", "w1")
    assert code == 0
    assert doc["result"]["model"] == \
        "t(Prod_p(PE(Sum_n(Z(p^n)^(λ))))) ⊕ Sum_p(Z(p^inf)^(λ))"


def test_card_stable_false_koenig(capsys):
    code, out, _ = run(capsys, "card", "stable", "beth(ω)")
    assert code == 0
    assert out.startswith("false (")
    assert "König" in out


def test_card_stable_true(capsys):
    code, out, _ = run(capsys, "card", "stable", "2^aleph0")
    assert code == 0 and out.startswith("true")


def test_card_stable_unknown_json(capsys):
    code, doc = run_json(capsys, "card", "stable", "aleph1")
    assert code == 0
    assert doc["command"] == "card stable"
    assert doc["result"]["verdict"] == "unknown"


def test_verify_single_suite(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "rem-ab")
    assert code == 0
    assert doc["result"][0]["passed"] is True


def test_domain_error_exit_1(capsys):
    code, out, err = run(capsys, "eval", "bad ((", "Z/2")
    assert code == 1 and "error" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
