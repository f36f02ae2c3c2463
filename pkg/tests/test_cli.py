"""Command-line interface: flows and exit codes."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

import bipham
from bipham.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_writes_to_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "directed_cycle", "--a", "3")
        assert code == 0
        assert bipham.parse_graph(out) == bipham.directed_cycle(3)

    def test_writes_to_file(self, tmp_path, capsys):
        target = tmp_path / "g.bbd"
        code, out, _ = run_cli(capsys, "gen", "d8", "-o", str(target))
        assert code == 0
        assert out == ""
        assert bipham.parse_graph(target.read_text()) == bipham.d8()

    def test_family_with_two_parameters(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "ex4", "--a", "5", "--size-a", "2")
        assert code == 0
        assert bipham.parse_graph(out) == bipham.ex4(5, size_a=2)

    def test_stray_parameter_is_input_error(self, capsys):
        code, _, err = run_cli(capsys, "gen", "d8", "--a", "4")
        assert code == 2
        assert "error" in err

    def test_unknown_family_is_input_error(self, capsys):
        # argparse rejects it via choices, exiting with the input-error code
        with pytest.raises(SystemExit) as excinfo:
            main(["gen", "moebius"])
        assert excinfo.value.code == 2


class TestCheck:
    def test_text_report_and_json(self, tmp_path, capsys):
        src = tmp_path / "d8.bbd"
        src.write_text(bipham.serialize_graph(bipham.d8()))
        out_json = tmp_path / "report.json"
        code, out, _ = run_cli(capsys, "check", str(src), "--json", str(out_json))
        assert code == 0
        assert "hamiltonian: False" in out
        data = json.loads(out_json.read_text())
        assert data["max_bk"] == 1
        assert data["iso_d8"] is True

    def test_reads_stdin(self, tmp_path, capsys, monkeypatch):
        import io

        monkeypatch.setattr(
            "sys.stdin", io.StringIO(bipham.serialize_graph(bipham.directed_cycle(2)))
        )
        code, out, _ = run_cli(capsys, "check", "-")
        assert code == 0
        assert "hamiltonian: True" in out

    def test_parse_error_names_line(self, tmp_path, capsys):
        src = tmp_path / "bad.bbd"
        src.write_text("bbd 1\na 2\nx0 x1\n")
        code, _, err = run_cli(capsys, "check", str(src))
        assert code == 2
        assert "line 3" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "check", str(tmp_path / "nope.bbd"))
        assert code == 2
        assert "cannot read" in err

    def test_oversized_input(self, tmp_path, capsys):
        src = tmp_path / "big.bbd"
        src.write_text("bbd 1\na 11\nx0 y0\n")
        code, _, err = run_cli(capsys, "check", str(src))
        assert code == 2


class TestVerify:
    def test_sampled_run_passes(self, tmp_path, capsys):
        out_json = tmp_path / "verdict.json"
        code, out, _ = run_cli(
            capsys,
            "verify", "T1_9",
            "--sample", "a=4,p=0.85,seed=11,count=40",
            "--json", str(out_json),
        )
        assert code == 0
        assert "PASS" in out
        data = json.loads(out_json.read_text())
        assert data["passes"] is True
        assert data["population"]["constraints"] == ["B1", "strong"]

    def test_repeat_runs_byte_identical(self, tmp_path, capsys):
        a, b = tmp_path / "one.json", tmp_path / "two.json"
        for target in (a, b):
            run_cli(
                capsys,
                "verify", "T6_1",
                "--sample", "a=4,p=0.85,seed=3,count=30",
                "--json", str(target),
            )
        assert a.read_bytes() == b.read_bytes()

    def test_exhaustive_counterexamples_exit_one(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify", "T1_9",
            "--exhaustive-a", "2",
            "--constraints", "strong,B1,not_hamiltonian",
            "--min-order", "4",
        )
        assert code == 1
        assert "counterexamples=4" in out

    def test_exhaustive_too_large_exit_three(self, capsys):
        code, _, err = run_cli(capsys, "verify", "T1_9", "--exhaustive-a", "4")
        assert code == 3

    def test_both_population_flags_rejected(self, capsys):
        code, _, err = run_cli(
            capsys,
            "verify", "T1_9",
            "--exhaustive-a", "2",
            "--sample", "a=4,p=0.5,seed=1,count=1",
        )
        assert code == 2

    def test_neither_population_flag_rejected(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "T1_9")
        assert code == 2

    @pytest.mark.parametrize(
        "spec",
        ["a=4,p=0.5,seed=1", "a=4,p=0.5,seed=1,count=2,extra=9", "a=four,p=0.5,seed=1,count=2"],
    )
    def test_malformed_sample_spec(self, capsys, spec):
        code, _, _ = run_cli(capsys, "verify", "T1_9", "--sample", spec)
        assert code == 2

    def test_unknown_theorem(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "T0_0", "--sample", "a=4,p=0.5,seed=1,count=1"])
        assert excinfo.value.code == 2

    def test_unknown_sample_constraint(self, capsys):
        code, _, _ = run_cli(
            capsys,
            "verify", "T1_9",
            "--sample", "a=4,p=0.5,seed=1,count=1",
            "--constraints", "strong,not_hamiltonian",
        )
        assert code == 2  # enumeration-only names are invalid for sampling

    def test_workers_flag(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify", "L4_3",
            "--sample", "a=4,p=0.75,seed=5,count=30",
            "--workers", "2",
        )
        assert code == 0
        assert "PASS" in out


class TestEnumerate:
    def test_count_only(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--a", "1", "--count-only")
        assert code == 0
        assert out.strip() == "4"

    def test_dedupe_count(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--a", "1", "--dedupe", "--count-only")
        assert out.strip() == "3"

    def test_filtered_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--a", "2", "--filter", "strong", "--count-only"
        )
        assert out.strip() == "35"

    def test_stream_parses_back(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--a", "1")
        blocks = [b for b in out.split("\n\n") if b.strip()]
        assert len(blocks) == 4
        parsed = [bipham.parse_graph(b) for b in blocks]
        assert parsed[0].arc_count == 0

    def test_too_large(self, capsys):
        code, _, _ = run_cli(capsys, "enumerate", "--a", "4", "--count-only")
        assert code == 3


class TestDot:
    def test_renders(self, tmp_path, capsys):
        src = tmp_path / "c.bbd"
        src.write_text(bipham.serialize_graph(bipham.directed_cycle(2)))
        code, out, _ = run_cli(capsys, "dot", str(src))
        assert code == 0
        assert out.startswith("digraph")
        assert "x0 -> y0;" in out

    def test_writes_file(self, tmp_path, capsys):
        src = tmp_path / "c.bbd"
        src.write_text(bipham.serialize_graph(bipham.directed_cycle(2)))
        target = tmp_path / "c.dot"
        code, _, _ = run_cli(capsys, "dot", str(src), "-o", str(target))
        assert code == 0
        assert target.read_text().startswith("digraph")


def test_console_script_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "bipham", "gen", "directed_cycle", "--a", "2"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert result.returncode == 0
    assert bipham.parse_graph(result.stdout) == bipham.directed_cycle(2)


def test_cli_help_lists_subcommands(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--help"])
    assert excinfo.value.code == 0
    out = capsys.readouterr().out
    for sub in ("check", "gen", "verify", "enumerate", "dot"):
        assert sub in out
