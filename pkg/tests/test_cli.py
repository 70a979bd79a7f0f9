"""Tests for the ffelim command line."""

import json
import os

import pytest
from src.ffelim.main import EXIT_INPUT, EXIT_MATH, EXIT_OK, main


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in list(os.environ):
        if name.startswith("FFELIM_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("src.ffelim.config.load_dotenv", lambda: None)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_OK, err
    return json.loads(out)


class TestRes:
    def test_linear_resultant(self, capsys):
        payload = run_json(capsys, "res", "-p", "7", "--var", "x1", "x1^2+1", "x1+1")
        assert payload["command"] == "res"
        assert payload["resultant"] == "2"
        assert (payload["dim"], payload["d_alpha"], payload["d_beta"]) == (3, 2, 1)
        assert payload["schema"] == "1"

    def test_text_output(self, capsys):
        code, out, _ = run(
            capsys, "res", "-p", "7", "--var", "x1", "--format", "text", "x1^2+1", "x1+1"
        )
        assert code == EXIT_OK
        assert out == "2\n"

    def test_json_keys_are_sorted(self, capsys):
        _, out, _ = run(capsys, "res", "-p", "7", "x1^2+1", "x1+1")
        keys = list(json.loads(out))
        assert keys == sorted(keys)
        assert out.endswith("}\n")

    def test_leibniz_cap_is_a_math_error(self, capsys):
        code, _, err = run(
            capsys, "res", "-p", "7", "--strategy", "leibniz", "x1^5 + x0", "x1^4 + 1"
        )
        assert code == EXIT_MATH
        assert "ffelim: DimensionTooLarge:" in err
        assert "command_failed | command=res | kind=DimensionTooLarge" in err

    def test_parse_error_is_an_input_error(self, capsys):
        code, _, err = run(capsys, "res", "-p", "7", "x1^^2", "x1")
        assert code == EXIT_INPUT
        assert "PolySyntaxError" in err

    def test_non_prime_modulus(self, capsys):
        code, _, err = run(capsys, "res", "-p", "9", "x1", "x1+1")
        assert code == EXIT_MATH
        assert "NotPrime" in err

    def test_oversized_power_is_an_input_error(self, capsys):
        code, _, err = run(capsys, "res", "-p", "7", "(x1+1)^2000000000", "x1")
        assert code == EXIT_INPUT
        assert "ExponentOverflow" in err
        assert "command_failed | command=res | kind=ExponentOverflow" in err

    def test_reports_resolved_strategy(self, capsys):
        payload = run_json(capsys, "res", "-p", "7", "x1^2+1", "x1+1")
        assert (payload["strategy"], payload["requested_strategy"]) == ("leibniz", "auto")

        payload = run_json(
            capsys, "res", "-p", "2", "x1^3 + x0^3*x1 + 1", "x1^3 + x0^3 + x1"
        )
        assert (payload["strategy"], payload["requested_strategy"]) == ("propagate", "auto")

        payload = run_json(capsys, "res", "-p", "7", "--strategy", "interp", "x1^2+1", "x1+1")
        assert (payload["strategy"], payload["requested_strategy"]) == ("interp", "interp")


def test_eliminate_text(capsys):
    code, out, _ = run(
        capsys,
        "eliminate", "-p", "5", "-n", "3", "--order", "x2,x1", "--format", "text",
        "x2 - x0", "x2 - x1", "x0 + x1 - 2",
    )
    assert code == EXIT_OK
    assert out == "3*x0 + 2\n"


def test_eliminate_csv_log(capsys):
    code, out, _ = run(
        capsys, "eliminate", "-p", "5", "-n", "3", "--format", "csv",
        "x2 - x0", "x2 - x1", "x0 + x1 - 2",
    )
    assert code == EXIT_OK
    assert out.splitlines()[0] == "step,method,var,terms,maxdeg,micros,transcript"


class TestCount:
    def test_square_roots(self, capsys):
        payload = run_json(capsys, "count", "-p", "5", "x1^2 - x0")
        assert payload["distinct_t"] == 3
        assert payload["cumulative"] == {"1": 3}
        assert payload["route"] == "product"

    def test_quadratic_image(self, capsys):
        payload = run_json(capsys, "count", "-p", "5", "--dmax", "2", "x1 - (x0^2 - 2)")
        assert payload["exact"] == {"1": 5, "2": 4}
        assert payload["cumulative"] == {"1": 5, "2": 9}

    def test_transcript_flag(self, capsys):
        payload = run_json(capsys, "count", "-p", "5", "--transcript", "x1^2 - x0")
        assert payload["transcript"]["kind"] == "frobenius-gcd"
        assert payload["transcript_len"] > 0

    def test_sylvester_route_guard(self, capsys):
        code, _, err = run(capsys, "count", "--route", "sylvester", "-p", "31", "x1^2 - x0")
        assert code == EXIT_MATH
        assert "DimensionTooLarge" in err

    def test_csv_is_rejected(self, capsys):
        code, out, err = run(capsys, "count", "-p", "5", "--format", "csv", "x1^2 - x0")
        assert code == EXIT_INPUT
        assert out == ""
        assert "CSV" in err

    def test_wrong_arity(self, capsys):
        code, _, _ = run(capsys, "count", "-p", "5", "-n", "3", "x1^2 - x0")
        assert code == EXIT_INPUT


def test_decide(capsys):
    payload = run_json(capsys, "decide", "-p", "5", "x1^2+x1+1 + x0^5 - x0")
    assert payload["no_zero"] is True
    assert "transcript" not in payload

    code, out, _ = run(capsys, "decide", "-p", "5", "--format", "text", "x1^2 - x0")
    assert code == EXIT_OK
    assert out == "false\n"


class TestGen:
    def test_nonresidue_defaults_to_text(self, capsys):
        code, out, _ = run(capsys, "gen", "nonresidue", "-p", "7", "--factors", "1,3,2")
        assert code == EXIT_OK
        assert out == "x0^2 + 4\n"

    def test_nonresidue_json(self, capsys):
        payload = run_json(
            capsys, "gen", "nonresidue", "-p", "7", "--factors", "1,3,2", "--format", "json"
        )
        assert payload["polynomial"] == "x0^2 + 4"
        assert payload["validation"] == {
            "nu": 6,
            "nonzero_at_origin": True,
            "no_root_of_order_dividing_nu": True,
        }

    def test_rejected_factor(self, capsys):
        code, _, err = run(
            capsys, "gen", "nonresidue", "-p", "7", "--factors", "1,3,2", "--factors", "1,2,2"
        )
        assert code == EXIT_MATH
        assert "ConditionViolated" in err

    def test_malformed_factor(self, capsys):
        code, _, _ = run(capsys, "gen", "nonresidue", "-p", "7", "--factors", "1,3")
        assert code == EXIT_INPUT

    def test_substitution(self, capsys):
        code, out, _ = run(capsys, "gen", "subst", "-p", "5", "-r", "7", "x0^2 + x0 + 1")
        assert code == EXIT_OK
        assert out == "x0^3 + x0^2 + 1\n"


class TestBench:
    ARGS = ("bench", "-p", "31", "-d", "3", "-L", "2", "--trials", "5", "--seed", "1")

    def test_rerun_is_byte_identical(self, capsys):
        code, first, _ = run(capsys, *self.ARGS)
        assert code == EXIT_OK
        _, second, _ = run(capsys, *self.ARGS)
        assert first == second
        assert first.splitlines()[0] == "step,method,var,terms,maxdeg,micros,transcript"

    def test_out_of_range(self, capsys):
        code, _, err = run(capsys, "bench", "-p", "31", "-d", "9")
        assert code == EXIT_MATH
        assert "ConfigOutOfRange" in err


def test_oracle_zeros(capsys):
    payload = run_json(capsys, "oracle", "zeros", "-p", "7", "x0^2 + x1^2 - 1")
    assert payload["count"] == 8


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "count", "-p", "5", "-o", str(target), "x1^2 - x0")
    assert code == EXIT_OK
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["distinct_t"] == 3


def test_usage_errors(capsys):
    assert run(capsys, "res", "x1", "x1")[0] == EXIT_INPUT
    assert run(capsys, "nope")[0] == EXIT_INPUT
    assert run(capsys, "--help")[0] == EXIT_OK


def test_configuration_error(capsys, monkeypatch):
    monkeypatch.setenv("FFELIM_SEED", "-4")
    code, _, err = run(capsys, "res", "-p", "7", "x1", "x1+1")
    assert code == EXIT_INPUT
    assert err.startswith("ffelim: configuration error: FFELIM_SEED")
