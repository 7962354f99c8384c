import json
import random

import pytest

from fermatrep.cli import deserialize_certificate, main, serialize_certificate
from fermatrep.errors import ReductionFailure
from fermatrep.modarith import is_prime
from fermatrep.theorems import one_three, two_squares


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_two_squares_line(capsys):
    code, out, err = run(capsys, "two-squares", "13")
    assert code == 0
    assert out == "13 = 2^2 + 3^2\n"
    assert err == ""


def test_one_three_line(capsys):
    code, out, _ = run(capsys, "one-three", "13")
    assert code == 0
    assert out == "13 = 1^2 + 3*2^2\n"


def test_wrong_residue_class_is_a_usage_error(capsys):
    code, out, err = run(capsys, "two-squares", "11")
    assert code == 2
    assert out == ""
    assert "11 ≡ 3 (mod 4)" in err
    assert "Theorem A" in err

    code, _, err = run(capsys, "one-three", "11")
    assert code == 2
    assert "11 ≡ 2 (mod 3)" in err
    assert "Theorem B" in err

    # p = 3 satisfies 3 = 0^2 + 3*1^2 but not the hypothesis p = 3N + 1
    code, _, err = run(capsys, "one-three", "3")
    assert code == 2
    assert "Theorem B" in err


def test_composite_input_is_a_usage_error(capsys):
    code, out, err = run(capsys, "two-squares", "15")
    assert code == 2
    assert out == ""
    assert "not prime" in err


def test_json_record(capsys):
    code, out, _ = run(capsys, "two-squares", "13", "--json")
    assert code == 0
    record = json.loads(out)
    assert record == {"p": 13, "form": "x2+y2", "X": 2, "Y": 3, "verified": True}


def test_sweep_json_records(capsys):
    code, out, _ = run(capsys, "sweep", "5", "20", "--form", "1", "--json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["p"] for r in records] == [5, 13, 17]
    assert all(r["form"] == "x2+y2" and r["verified"] for r in records)


def test_sweep_both_forms_orders_records(capsys):
    code, out, _ = run(capsys, "sweep", "5", "14", "--json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [(r["p"], r["form"]) for r in records] == [
        (5, "x2+y2"),
        (7, "x2+3y2"),
        (13, "x2+y2"),
        (13, "x2+3y2"),
    ]


def test_sweep_rejects_bad_ranges(capsys):
    assert run(capsys, "sweep", "20", "5")[0] == 2
    assert run(capsys, "sweep", "5", str(2**41))[0] == 2


def test_certificate_flag_embeds_certificate(capsys):
    code, out, _ = run(capsys, "two-squares", "5", "--json", "--certificate")
    assert code == 0
    record = json.loads(out)
    cert = record["certificate"]
    assert cert["p"] == 5
    assert cert["word"] == ["invert", {"shift": 2}]
    assert cert["U"] == [2, -1, 1, 0]
    assert cert["form"] == "x2+y2"


def test_serialized_word_layout():
    text = serialize_certificate(two_squares(5))
    assert '"word":["invert",{"shift":2}]' in text
    assert serialize_certificate(one_three(7)).find('"form":"x2+3y2"') > 0


def test_serialization_round_trip():
    rng = random.Random(7)
    seen = 0
    while seen < 100:
        n = rng.randrange(5, 10**6)
        if not is_prime(n):
            continue
        if n % 4 == 1:
            cert = two_squares(n)
        elif n % 3 == 1:
            cert = one_three(n)
        else:
            continue
        assert deserialize_certificate(serialize_certificate(cert)) == cert
        seen += 1


def test_deserialize_rejects_inconsistent_payloads():
    text = serialize_certificate(two_squares(13))
    data = json.loads(text)
    data["U"] = [1, 0, 0, 1]
    with pytest.raises(ValueError):
        deserialize_certificate(json.dumps(data))
    data = json.loads(text)
    data["word"] = ["rotate"]
    with pytest.raises(ValueError):
        deserialize_certificate(json.dumps(data))


def test_quiet_suppresses_stdout(capsys):
    code, out, _ = run(capsys, "two-squares", "13", "--quiet", "--verify")
    assert code == 0
    assert out == ""


def test_internal_errors_exit_one(capsys, monkeypatch):
    import fermatrep.cli as cli

    def boom(n):
        raise ReductionFailure("injected")

    monkeypatch.setattr(cli, "two_squares", boom)
    code, _, err = run(capsys, "two-squares", "13")
    assert code == 1
    assert "internal error" in err


def test_verify_detects_oracle_mismatch(capsys, monkeypatch):
    import fermatrep.cli as cli

    monkeypatch.setattr(cli, "_oracle_matches", lambda cert: False)
    code, _, err = run(capsys, "two-squares", "13", "--verify", "--quiet")
    assert code == 1
    assert "mismatch" in err


def test_verify_sweep_below_1e5(capsys):
    code, out, err = run(capsys, "sweep", "2", "100000", "--verify", "--quiet")
    assert code == 0
    assert out == ""
    assert err == ""
