"""Tests for the command-line entry point."""

import json

import pytest

from src.commands.enums import ExitCode
from src.main import main

from .conftest import BASE10_TABLE


@pytest.fixture
def cli(cache_dir, capsys):
    """Runs the CLI against a fresh cache; returns (exit code, stdout)."""

    def run(*argv):
        code = main([*argv, "--cache", str(cache_dir)])
        return code, capsys.readouterr().out

    return run


class TestCompute:
    """Tests for `niven compute`."""

    def test_base10_table(self, cli):
        """Test the base-10 table rows."""
        code, out = cli("compute", "--base", "10", "--k", "10..23")
        assert code == ExitCode.OK
        lines = out.splitlines()
        assert lines[0] == "k,a_k,c_k,digit_len"
        assert lines[1] == "10,190,19,3"
        assert len(lines) == 15
        assert {int(line.split(",")[0]): int(line.split(",")[1]) for line in lines[1:]} == BASE10_TABLE

    def test_binary_quotients(self, cli):
        """Test c_1, c_2, c_3 = 1, 3, 7 in JSON."""
        code, out = cli("compute", "--base", "2", "--k", "1..3", "--format", "json")
        assert code == ExitCode.OK
        assert [row["c_k"] for row in json.loads(out)] == ["1", "3", "7"]

    def test_out_file_round_trips(self, cli, tmp_path):
        """Test that a cached rerun writes the same bytes."""
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert cli("compute", "--k", "1..12", "--out", str(first))[0] == ExitCode.OK
        assert cli("compute", "--k", "1..12", "--out", str(second), "--recheck")[0] == ExitCode.OK
        assert first.read_bytes() == second.read_bytes()

    @pytest.mark.parametrize("k_range", ["5..3", "0..4", "a..b", "3.."])
    def test_bad_range(self, cli, k_range):
        """Test malformed ranges."""
        assert cli("compute", "--k", k_range)[0] == ExitCode.USAGE

    def test_state_cap(self, cli):
        """Test the resource-limit exit code."""
        assert cli("compute", "--k", "40..40", "--state-cap", "100")[0] == ExitCode.RESOURCE_LIMIT

    def test_cache_corruption(self, cli, cache_dir):
        """Test the cache-corruption exit code on recheck."""
        cache_dir.mkdir(parents=True)
        (cache_dir / "ak_q2.csv").write_text("q,k,a_k,c_k,len\n2,3,42,14,6\n")
        assert cli("compute", "--k", "3..3", "--recheck")[0] == ExitCode.CACHE_CORRUPTION

    def test_missing_argument(self, cli):
        """Test argparse errors."""
        assert cli("compute")[0] == ExitCode.USAGE


class TestVerify:
    """Tests for `niven verify`."""

    def test_binary(self, cli):
        """Test the suite up to 128."""
        code, out = cli("verify", "--max", "128")
        assert code == ExitCode.OK
        assert out.splitlines()[-1] == "OK: base 2, k <= 128"
        assert "FAIL" not in out

    def test_trivial(self, cli):
        """Test k_max = 1."""
        assert cli("verify", "--max", "1")[0] == ExitCode.OK

    def test_base10_json(self, cli):
        """Test the JSON report for base 10."""
        code, out = cli("verify", "--base", "10", "--max", "23", "--format", "json")
        assert code == ExitCode.OK
        report = json.loads(out)
        assert report["message"] == "OK"
        assert all(check["passed"] for check in report["checks"])


class TestClasses:
    """Tests for `niven classes`."""

    def test_single_k(self, cli):
        """Test m_min = 3 for k = 7."""
        code, out = cli("classes", "--k", "7")
        assert code == ExitCode.OK
        header, row = out.splitlines()
        record = dict(zip(header.split(","), row.split(",")))
        assert record["m_min"] == "3"
        assert record["bit_length_a_k"] == "10"

    def test_even_k(self, cli):
        """Test that even k is a usage error."""
        assert cli("classes", "--k", "8")[0] == ExitCode.USAGE

    def test_scan(self, cli):
        """Test the density curve columns."""
        code, out = cli("classes", "--scan", "101", "--m", "2", "--stride", "5")
        assert code == ExitCode.OK
        lines = out.splitlines()
        assert lines[0] == "x,count,ratio"
        assert lines[-1].startswith("101,")

    def test_empty_scan(self, cli):
        """Test that x below 3 gives an empty table."""
        code, out = cli("classes", "--scan", "1", "--m", "1")
        assert code == ExitCode.OK
        assert out == "x,count,ratio\n"

    def test_scan_needs_m(self, cli):
        """Test --scan without --m."""
        assert cli("classes", "--scan", "101")[0] == ExitCode.USAGE


class TestFigure1:
    """Tests for `niven figure1`."""

    def test_columns(self, cli):
        """Test the plot columns."""
        code, out = cli("figure1", "--max", "10")
        assert code == ExitCode.OK
        lines = out.splitlines()
        assert lines[0] == "k,ln_c_k,k_ln_2,ln_lower_bound"
        assert len(lines) == 11
        assert lines[1].startswith("1,0.0,")


class TestWitness:
    """Tests for `niven witness`."""

    def test_c1(self, cli):
        """Test the C_1 closed form for k = 29."""
        code, out = cli("witness", "c1", "--k", "29")
        assert code == ExitCode.OK
        assert "value: 1073741791" in out.splitlines()

    def test_prime_power(self, cli):
        """Test q = 2, m = 0."""
        code, out = cli("witness", "primepower", "--base", "2", "--m", "0")
        assert code == ExitCode.OK
        assert "value: 1" in out.splitlines()

    def test_mersenne(self, cli):
        """Test i = 3: 623, tight."""
        code, out = cli("witness", "mersenne", "--i", "3")
        assert code == ExitCode.OK
        lines = out.splitlines()
        assert "value: 623" in lines
        assert "is_tight: true" in lines

    def test_hexadecimal(self, cli):
        """Test --hex: 623 prints as 26f."""
        code, out = cli("witness", "mersenne", "--i", "3", "--hex")
        assert code == ExitCode.OK
        assert "value: 26f" in out.splitlines()

    def test_cm_json(self, cli):
        """Test the general closed form in JSON."""
        code, out = cli("witness", "cm", "--k", "7", "--format", "json")
        assert code == ExitCode.OK
        assert json.loads(out)["value"] == "623"

    def test_not_in_class(self, cli):
        """Test that 7 is refused by the C_1 closed form."""
        assert cli("witness", "c1", "--k", "7")[0] == ExitCode.USAGE

    def test_missing_parameter(self, cli):
        """Test a construction without its parameters."""
        assert cli("witness", "lemma2", "--k", "11")[0] == ExitCode.USAGE

    def test_lemma2_search_engine(self, cli):
        """Test the DP engine through the CLI."""
        code, out = cli("witness", "lemma2", "--k", "11", "--x", "9", "--engine", "search")
        assert code == ExitCode.OK
        assert any(line.startswith("notes: exponents") for line in out.splitlines())
        assert not any(line.startswith("divisible:") for line in out.splitlines())
