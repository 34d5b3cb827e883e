import json

from polyzeta.cli import main
from polyzeta.serialize import (lincomb_from_json, params_to_json,
                                polynomial_from_json, word_to_json)
from polyzeta.words import word, x, y
from polyzeta.zeta import PolyzetaParams


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def yw(*indices):
    return json.dumps([
        {"kind": "indexed", "family": "y", "index": i} for i in indices])


def test_expand_stuffle_example(capsys):
    code, out, _ = run(capsys, "expand", "--product", "stuffle",
                       "--left", yw(3, 1), "--right", yw(2))
    assert code == 0
    poly = polynomial_from_json(json.loads(out))
    assert len(poly.terms) == 5
    assert poly.coeff(word(y(5), y(1))) == 1
    assert poly.coeff(word(y(3), y(3))) == 1


def test_expand_unit_word(capsys):
    code, out, _ = run(capsys, "expand", "--product", "shuffle",
                       "--left", "[]",
                       "--right", json.dumps(word_to_json(word(x(0), x(1)))))
    assert code == 0
    poly = polynomial_from_json(json.loads(out))
    assert poly.coeff(word(x(0), x(1))) == 1 and len(poly.terms) == 1


def test_expand_pretty(capsys):
    code, out, _ = run(capsys, "expand", "--product", "stuffle",
                       "--left", yw(3, 1), "--right", yw(2),
                       "--format", "pretty")
    assert code == 0
    assert "y₅y₁" in out


def test_expand_json_round_trips_stably(capsys):
    code, first, _ = run(capsys, "expand", "--product", "stuffle",
                         "--left", yw(3, 1), "--right", yw(2))
    assert code == 0
    code, second, _ = run(capsys, "expand", "--product", "stuffle",
                          "--left", yw(3, 1), "--right", yw(2))
    assert first == second
    payload = json.loads(first)
    assert json.dumps(json.loads(json.dumps(payload))) == json.dumps(payload)


def test_antipode_command(capsys):
    code, out, _ = run(capsys, "antipode", "--product", "shuffle",
                       "--word", json.dumps(word_to_json(word(x(0), x(1)))))
    assert code == 0
    poly = polynomial_from_json(json.loads(out))
    assert poly.coeff(word(x(1), x(0))) == 1 and len(poly.terms) == 1


def test_hopf_check_success_and_failure(capsys):
    code, out, _ = run(capsys, "hopf-check", "--product", "stuffle",
                       "--max-len", "3")
    assert code == 0
    payload = json.loads(out)
    assert [rep["status"] for rep in payload] == ["ok", "ok"]

    alphabet = json.dumps([{"kind": "indexed", "family": "y", "index": 1}])
    code, out, _ = run(capsys, "hopf-check", "--product", "stuffle",
                       "--max-len", "2", "--alphabet", alphabet)
    assert code == 0


def test_encode_decode_round_trip(capsys):
    params = {"s": [2, 3], "xi": ["1/2", "1/3"], "t": ["1/5", 0]}
    code, out, _ = run(capsys, "encode", "--params", json.dumps(params))
    assert code == 0
    code, out2, _ = run(capsys, "decode", "--word", out.strip())
    assert code == 0
    got = json.loads(out2)
    assert got["s"] == [2, 3]
    assert got["xi"] == ["1/2", "1/3"]
    assert got["t"] == ["1/5", "0/1"]


def test_zeta_expand_duffle_worked_example(capsys):
    left = {"s": [3, 1], "xi": ["2/3", "-1"], "t": [0, 0]}
    right = {"s": [2], "xi": ["1/2"], "t": [0]}
    code, out, _ = run(capsys, "zeta-expand", "--mode", "duffle",
                       "--left", json.dumps(left), "--right", json.dumps(right))
    assert code == 0
    lc = lincomb_from_json(json.loads(out))
    assert len(lc) == 5
    ss = {term.s for term, _ in lc}
    assert ss == {(3, 1, 2), (3, 2, 1), (3, 3), (2, 3, 1), (5, 1)}


def test_eval_command(capsys):
    params = {"s": [2], "xi": [{"re": 0.5, "im": 0}], "t": [0]}
    code, out, _ = run(capsys, "eval", "--params", json.dumps(params))
    assert code == 0
    payload = json.loads(out)
    assert payload["converged"] is True
    assert abs(payload["value"]["re"] - 0.5822405264650125) < 1e-10


def test_verify_command_shuffle(capsys):
    left = {"s": [3], "xi": [{"re": 0.5, "im": 0}], "t": [0.2]}
    right = {"s": [2], "xi": [{"re": -0.7, "im": 0}], "t": [-0.3]}
    code, out, _ = run(capsys, "verify", "--mode", "shuffle",
                       "--left", json.dumps(left), "--right", json.dumps(right),
                       "--tol", "1e-8")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True and payload["residual"] <= 1e-8


def test_verify_command_duffle_at_zero_shift(capsys):
    left = {"s": [3, 1], "xi": ["2/3", "-1"], "t": [0, 0]}
    right = {"s": [2], "xi": ["1/2"], "t": [0]}
    code, out, _ = run(capsys, "verify", "--mode", "duffle",
                       "--left", json.dumps(left), "--right", json.dumps(right),
                       "--tol", "1e-8")
    assert code == 0


def test_exit_code_2_on_bad_json(capsys):
    code, _, err = run(capsys, "expand", "--product", "stuffle",
                       "--left", "[{", "--right", yw(2))
    assert code == 2
    assert "JSON" in err or "error" in err


def test_exit_code_2_on_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 2


def test_exit_code_3_on_domain_errors(capsys):
    # mixed alphabets
    left = json.dumps([{"kind": "monoid", "value": "1/2"}])
    code, _, err = run(capsys, "expand", "--product", "stuffle",
                       "--left", left, "--right", yw(2))
    assert code == 3
    # divergent evaluation
    params = {"s": [1], "xi": [1], "t": [0]}
    code, _, err = run(capsys, "eval", "--params", json.dumps(params))
    assert code == 3
    # diagonal violation
    left = {"s": [2, 1], "xi": ["1/2", 1], "t": [0, "1/5"]}
    right = {"s": [2], "xi": ["1/2"], "t": [0]}
    code, _, err = run(capsys, "verify", "--mode", "duffle",
                       "--left", json.dumps(left), "--right", json.dumps(right))
    assert code == 3
    # bad word shape
    code, _, err = run(capsys, "decode", "--word", json.dumps([{"kind": "x0"}]))
    assert code == 3


def test_exit_code_1_on_failed_residual(capsys):
    # a residual threshold below float noise cannot be met
    a = PolyzetaParams.of((3,), (0.5,), (0.0,))
    b = PolyzetaParams.of((2,), (0.5,), (0.0,))
    code, out, _ = run(capsys, "verify", "--mode", "shuffle",
                       "--left", json.dumps(params_to_json(a)),
                       "--right", json.dumps(params_to_json(b)),
                       "--tol", "1e-30")
    assert code == 1


def test_file_at_reference(tmp_path, capsys):
    path = tmp_path / "word.json"
    path.write_text(yw(3, 1), encoding="utf-8")
    code, out, _ = run(capsys, "expand", "--product", "stuffle",
                       "--left", f"@{path}", "--right", yw(2))
    assert code == 0
    code2, _, err = run(capsys, "expand", "--product", "stuffle",
                        "--left", "@/nonexistent/file.json", "--right", yw(2))
    assert code2 == 2
