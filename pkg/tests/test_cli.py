import json

import pytest

from dzeta.cli import (EXIT_FAIL, EXIT_OK, EXIT_REFUSED, dumps, load_suite, main,
                       parse_complex, parse_range, parse_sequence)
from dzeta.coefficients import Character, Constant, CuspFormSequence, Delta, Exponential


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParsing:
    @pytest.mark.parametrize("text, value", [("2", 2), ("1.5-2i", 1.5 - 2j), ("-3j", -3j),
                                             ([0.5, 1], 0.5 + 1j)])
    def test_complex(self, text, value):
        assert parse_complex(text) == value

    def test_sequences(self):
        assert isinstance(parse_sequence("const"), Constant)
        assert parse_sequence("exp:0.3").beta == 0.3
        assert parse_sequence("delta:5").n0 == 5
        assert isinstance(parse_sequence("char:4:1"), Character)
        assert isinstance(parse_sequence("tau"), CuspFormSequence)
        assert tuple(parse_sequence("periodic:1,-1,1,-1").table) == (1, -1, 1, -1)

    def test_range(self):
        assert list(parse_range("0:1:0.25")) == pytest.approx([0, 0.25, 0.5, 0.75, 1.0])

    def test_bad_input(self):
        with pytest.raises(ValueError):
            parse_complex("two")


class TestExitCodes:
    def test_pass_refusal_malformed_triple(self, capsys):
        code, out, _ = run(capsys, "verify", "T5", "--s1", "-1.5", "--s2", "3.2",
                           "--seq", "delta:2")
        assert code == EXIT_OK and json.loads(out)["summary"]["pass"] == 1
        code, out, _ = run(capsys, "verify", "T5", "--s1", "5", "--s2", "0.1")
        rep = json.loads(out)["reports"][0]
        assert code == EXIT_REFUSED and "Re s2" in rep["refusal_reason"]
        code, _, err = run(capsys, "verify", "T5", "--s1", "abc", "--s2", "3")
        assert code == EXIT_FAIL and "error" in err

    def test_eval_refusal_and_unknown(self, capsys):
        assert run(capsys, "eval", "zeta", "--s", "1")[0] == EXIT_REFUSED
        assert run(capsys, "eval", "nosuch", "--s", "1")[0] == EXIT_FAIL
        with pytest.raises(SystemExit) as exc:
            main(["eval"])
        assert exc.value.code == EXIT_FAIL

    def test_tolerance_range(self, capsys):
        assert run(capsys, "verify", "Riemann", "--s", "2", "--tol", "0.5")[0] == EXIT_FAIL


class TestEval:
    def test_examples(self, capsys):
        cases = [(("eval", "zeta", "--s", "2"), 1.6449340668),
                 (("eval", "L2", "--s1", "2", "--s2", "2", "--seq", "const", "--alpha", "1",
                   "--omega", "1"), 0.8117424253),
                 (("eval", "psi", "--a", "1", "--c", "2", "--x", "10"), 0.1)]
        for argv, expect in cases:
            code, out, _ = run(capsys, *argv)
            d = json.loads(out)
            assert code == EXIT_OK and d["schema"] == "dzeta-fe/1"
            assert d["value"][0] == pytest.approx(expect, rel=1e-10)
            assert d["value"][1] == pytest.approx(0, abs=1e-14)
            assert d["route"]

    def test_continued_L2(self, capsys):
        code, out, _ = run(capsys, "eval", "L2", "--s1", "-1.5", "--s2", "3.2", "--continue")
        assert code == EXIT_OK and "thm5" in json.loads(out)["route"]

    def test_csv_and_out_file(self, capsys, tmp_path):
        path = tmp_path / "z.csv"
        code, _, _ = run(capsys, "eval", "zeta", "--s", "2", "--format", "csv",
                         "--out", str(path))
        lines = path.read_text().splitlines()
        assert code == EXIT_OK and lines[0].startswith("function,re,im")

    def test_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "c.json"
        cfg.write_text(json.dumps({"s": "3"}))
        code, out, _ = run(capsys, "eval", "zeta", "--config", str(cfg))
        assert code == EXIT_OK
        assert json.loads(out)["value"][0] == pytest.approx(1.2020569031595942)


class TestDeterminism:
    def test_byte_identical(self, capsys):
        # complex values with a leading minus need the --flag=value form
        argv = ("verify", "T5", "--s1=-0.7+0.4i", "--s2", "2.6-0.2i", "--seq", "delta:2")
        first = run(capsys, *argv)[1]
        assert run(capsys, *argv)[1] == first

    def test_thread_pool_keeps_order(self, capsys, monkeypatch):
        argv = ("verify", "Riemann", "--suite", "classical")
        serial = run(capsys, *argv)[1]
        monkeypatch.setenv("DZETA_THREADS", "4")
        assert run(capsys, *argv)[1] == serial

    def test_no_object_addresses(self, capsys):
        out = run(capsys, "verify", "--suite", "oracle")[1]
        assert " at 0x" not in out
        seqs = [r["params"]["sequence"] for r in json.loads(out)["reports"]]
        assert seqs[0] == {"kind": "constant", "value": 1.0}
        assert seqs[-1]["name"] == "Delta"

    def test_float_format(self):
        assert dumps({"x": 0.1, "z": [1 / 3, 2.0]}) == dumps({"x": 0.1, "z": [1 / 3, 2.0]})
        assert "0.33333333333333331" in dumps({"z": 1 / 3})


class TestGenCoeffs:
    def test_tau(self, capsys):
        code, out, _ = run(capsys, "gen-coeffs", "tau", "--max", "5")
        assert code == EXIT_OK and json.loads(out)["values"] == [1, -24, 252, -1472, 4830]

    def test_character(self, capsys):
        d = json.loads(run(capsys, "gen-coeffs", "character", "--mod", "4", "--index", "1")[1])
        assert d["values"] == [[1, 0], [0, 0], [-1, 0], [0, 0]] and d["parity"] == -1

    def test_fourier_roundtrip(self, capsys):
        d = json.loads(run(capsys, "gen-coeffs", "fourier", "--seq", "1,0,-1,0")[1])
        assert d["roundtrip_ok"]
        # hat(chi_4)(nu) = (2i / 4) chi_4(-nu): -i/2 at nu = 1, +i/2 at nu = 3
        assert d["hat"][0] == pytest.approx([0, -0.5], abs=1e-15)
        assert d["hat"][2] == pytest.approx([0, 0.5], abs=1e-15)


class TestSuites:
    def test_bundled_suites_exist(self):
        for name in ("classical", "psi", "thm5", "thm4", "gates", "default"):
            assert load_suite(name)
        assert len(load_suite("default")) == 10

    def test_default_suite_passes(self, capsys):
        code, out, err = run(capsys, "verify", "T5", "--suite", "default")
        assert code == EXIT_OK and json.loads(out)["summary"]["pass"] == 10
        assert "pass 10" in err

    def test_gates_suite_refuses(self, capsys):
        # each case expects a refusal, so a refusal counts as a pass
        code, out, _ = run(capsys, "verify", "--suite", "gates")
        d = json.loads(out)
        assert code == EXIT_OK and d["summary"]["pass"] == 16
        assert all(r["exit"] == EXIT_REFUSED for r in d["reports"])

    def test_unknown_suite(self, capsys):
        assert run(capsys, "verify", "--suite", "nosuch")[0] == EXIT_FAIL
