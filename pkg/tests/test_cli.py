"""Command line contract tests: subcommands, output, exit codes."""

import json

import pytest

from paulicompress import __version__
from paulicompress.cli import cli_main

import reference_example as ref


@pytest.fixture
def reference_file(tmp_path):
    path = tmp_path / "reference.pauli"
    path.write_text("".join(f"{op}\n" for op in ref.OPS), encoding="utf-8")
    return str(path)


@pytest.fixture
def tiny_file(tmp_path):
    path = tmp_path / "tiny.pauli"
    path.write_text("0.5 XX\n-1 IZ\n", encoding="utf-8")
    return str(path)


class TestInfo:
    def test_reference_line(self, reference_file, capsys):
        assert cli_main(["info", reference_file]) == 0
        out = capsys.readouterr().out.strip()
        assert out == "terms=8 n=10 phi_rank=8 comm_rank=6 min_registers=5"

    def test_formula_consistency(self, tiny_file, capsys):
        assert cli_main(["info", tiny_file]) == 0
        out = capsys.readouterr().out.strip()
        fields = dict(kv.split("=") for kv in out.split())
        assert int(fields["min_registers"]) == int(fields["phi_rank"]) - int(fields["comm_rank"]) // 2


class TestVerify:
    def test_self_passes(self, reference_file, capsys):
        assert cli_main(["verify", reference_file, reference_file]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_corrected_minimal_set_passes(self, reference_file, tmp_path):
        cand = tmp_path / "minimal.pauli"
        cand.write_text("".join(f"{op}\n" for op in ref.MINIMAL), encoding="utf-8")
        assert cli_main(["verify", reference_file, str(cand)]) == 0

    def test_mismatch_fails(self, tiny_file, tmp_path, capsys):
        cand = tmp_path / "bad.pauli"
        cand.write_text("X\nX\n", encoding="utf-8")
        assert cli_main(["verify", tiny_file, str(cand)]) == 1
        assert "FAIL" in capsys.readouterr().out

    def test_length_mismatch_fails(self, tiny_file, tmp_path):
        cand = tmp_path / "short.pauli"
        cand.write_text("X\n", encoding="utf-8")
        assert cli_main(["verify", tiny_file, str(cand)]) == 1


class TestCompress:
    def test_stdout_report(self, tiny_file, capsys):
        assert cli_main(["compress", tiny_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["compressed_registers"] == 1
        assert doc["verification"]["pairwise_match"] is True
        assert doc["verification"]["oracle_used"] is False

    def test_verify_and_oracle(self, tiny_file, capsys):
        assert cli_main(["compress", tiny_file, "--verify", "--oracle"]) == 0
        captured = capsys.readouterr()
        doc = json.loads(captured.out)
        assert doc["compressed_registers"] == 1
        assert doc["verification"]["oracle_used"] is True
        assert "oracle:" in captured.err

    def test_output_file(self, tiny_file, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert cli_main(["compress", tiny_file, "-o", str(out), "--verify"]) == 0
        doc = json.loads(out.read_text())
        assert doc["compressed_registers"] == 1
        assert [t["weight"] for t in doc["compressed_terms"]] == [[0.5, 0.0], [-1.0, 0.0]]

    def test_reference_with_oracle(self, reference_file, capsys):
        # n=10 and q=5 are inside the dense cap; dim 8 skips the search
        assert cli_main(["compress", reference_file, "--verify", "--oracle"]) == 0
        captured = capsys.readouterr()
        doc = json.loads(captured.out)
        assert doc["compressed_registers"] == 5
        assert doc["verification"]["oracle_used"] is True
        assert "minimality search skipped" in captured.err

    def test_all_identity_input_is_usage_error(self, tmp_path, capsys):
        path = tmp_path / "ids.pauli"
        path.write_text("II\nII\n", encoding="utf-8")
        assert cli_main(["compress", str(path)]) == 2
        assert "no non-identity content" in capsys.readouterr().err


class TestExitCodes:
    def test_unknown_flag(self, tiny_file):
        assert cli_main(["compress", tiny_file, "--frobnicate"]) == 2

    def test_unknown_subcommand(self):
        assert cli_main(["explode"]) == 2

    def test_missing_file(self, tmp_path):
        assert cli_main(["info", str(tmp_path / "absent.pauli")]) == 2

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.pauli"
        path.write_text("XX\nXYZ\n", encoding="utf-8")
        assert cli_main(["info", str(path)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_version(self, capsys):
        assert cli_main(["--version"]) == 0
        assert __version__ in capsys.readouterr().out

    def test_help(self, capsys):
        assert cli_main(["--help"]) == 0
        assert "compress" in capsys.readouterr().out
