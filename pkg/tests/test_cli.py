"""End-to-end CLI behavior: outputs, exit codes, round trips."""

import json
import subprocess
import sys

import pytest

from fubini import bfiles, sequences
from fubini.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- compute ----------------------------------------------------------------


def test_compute_bell(capsys):
    code, out, _ = run_cli(capsys, "compute", "bell", "--max", "3")
    assert code == 0
    assert out == "0 1\n1 1\n2 3\n3 13\n"


def test_compute_cyclic_single(capsys):
    code, out, _ = run_cli(capsys, "compute", "cyclic", "--max", "1")
    assert code == 0
    assert out == "1 1\n"


def test_compute_cyclic_parities(capsys):
    code, out, _ = run_cli(capsys, "compute", "cyclic-even", "--max", "4")
    assert code == 0
    assert out == "1 0\n2 1\n3 3\n4 13\n"
    code, out, _ = run_cli(capsys, "compute", "cyclic-odd", "--max", "2")
    assert out == "1 1\n2 1\n"


def test_compute_rows(capsys):
    code, out, _ = run_cli(capsys, "compute", "stirling-row", "--n", "4")
    assert code == 0
    assert out == "0 0\n1 1\n2 7\n3 6\n4 1\n"
    code, out, _ = run_cli(capsys, "compute", "worpitzky-row", "--n", "3")
    assert out == "0 1\n1 7\n2 12\n3 6\n"


def test_compute_bfile_format_roundtrips(capsys):
    code, out, _ = run_cli(capsys, "compute", "bell", "--max", "6", "--format", "bfile")
    assert code == 0
    parsed = bfiles.parse_bfile(out)
    assert [v for _, v in parsed.entries] == [sequences.ordered_bell(n) for n in range(7)]


def test_compute_usage_errors(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["compute", "bell", "--max", "0x"])
    assert excinfo.value.code == 2

    with pytest.raises(SystemExit) as excinfo:
        main(["compute", "nonsense", "--max", "3"])
    assert excinfo.value.code == 2

    code, _, err = run_cli(capsys, "compute", "bell")  # missing --max
    assert code == 2
    assert "error" in err

    code, _, err = run_cli(capsys, "compute", "stirling-row", "--max", "4")
    assert code == 2  # rows need --n

    code, _, err = run_cli(capsys, "compute", "cyclic", "--max", "0")
    assert code == 2  # cyclic sequences start at n=1


# -- verify -------------------------------------------------------------------


def test_verify_all_plain(capsys):
    code, out, _ = run_cli(capsys, "verify", "all", "--max", "25", "--order", "10")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 10
    assert all(line.endswith("pass") for line in lines)


def test_verify_target_structured(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "cyclic", "--max", "12", "--format", "structured"
    )
    assert code == 0
    reports = json.loads(out)
    assert reports == [
        {
            "identity_id": "cyclic.doubling",
            "range_checked": [1, 12],
            "status": "pass",
            "first_failure": None,
        }
    ]


def test_verify_failure_exit_code(capsys, monkeypatch):
    real_row = sequences.stirling2_row

    def corrupted(n):
        row = real_row(n)
        if n == 6:
            row[2] += 1
        return row

    monkeypatch.setattr(sequences, "stirling2_row", corrupted)
    code, out, _ = run_cli(capsys, "verify", "cyclic", "--max", "10")
    assert code == 1
    assert "fail" in out
    assert "first_failure" in out


def test_verify_usage_errors(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "bogus"])
    assert excinfo.value.code == 2

    code, _, err = run_cli(capsys, "verify", "all", "--max", "0")
    assert code == 2
    assert "empty range" in err


# -- egf ---------------------------------------------------------------------


def test_egf_bell(capsys):
    code, out, _ = run_cli(capsys, "egf", "bell", "--order", "2")
    assert code == 0
    assert out == "0 1 1\n1 1 1\n2 3/2 3\n"


def test_egf_cyclic_even_order_one(capsys):
    code, out, _ = run_cli(capsys, "egf", "cyclic-even", "--order", "1")
    assert code == 0
    assert out == "0 0 0\n1 0 0\n"


def test_egf_stirling_col(capsys):
    code, out, _ = run_cli(capsys, "egf", "stirling-col", "--order", "3", "--k", "2")
    assert code == 0
    assert out.splitlines() == ["0 0 0", "1 0 0", "2 1/2 1", "3 1/2 3"]


def test_egf_usage_errors(capsys):
    code, _, err = run_cli(capsys, "egf", "stirling-col", "--order", "2")
    assert code == 2
    assert "--k" in err

    with pytest.raises(SystemExit) as excinfo:
        main(["egf", "unknown", "--order", "2"])
    assert excinfo.value.code == 2

    code, _, _ = run_cli(capsys, "egf", "bell", "--order", "-1")
    assert code == 2


# -- bfile -------------------------------------------------------------------


def test_bfile_check_passes(capsys):
    code, out, _ = run_cli(capsys, "bfile", "check", "A000670", "--limit", "20")
    assert code == 0
    assert "oeis.A000670" in out
    assert "pass" in out


def test_bfile_check_all_fixtures(capsys):
    for sequence_id in bfiles.fixture_ids():
        code, out, _ = run_cli(capsys, "bfile", "check", sequence_id)
        assert code == 0, out


def test_bfile_export(capsys):
    code, out, _ = run_cli(capsys, "bfile", "export", "A000670", "--limit", "2")
    assert code == 0
    assert out == "0 1\n1 1\n2 3\n"


def test_bfile_export_requires_limit(capsys):
    code, _, err = run_cli(capsys, "bfile", "export", "A000670")
    assert code == 2
    assert "--limit" in err


def test_bfile_fetch_offline(capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "bfile", "fetch", "A000670", "--cache-dir", str(tmp_path)
    )
    assert code == 3
    assert "offline" in err


def test_bfile_unknown_ids(capsys):
    code, _, err = run_cli(capsys, "bfile", "check", "X123")
    assert code == 2
    code, _, err = run_cli(capsys, "bfile", "check", "A000001")
    assert code == 2


def test_bfile_check_detects_mismatch(capsys, monkeypatch):
    real = sequences.ordered_bell

    def corrupted(n):
        return real(n) + (n == 5)

    monkeypatch.setattr(sequences, "ordered_bell", corrupted)
    code, out, _ = run_cli(capsys, "bfile", "check", "A000670", "--limit", "10")
    assert code == 1
    assert "fail" in out


# -- installed entry point -----------------------------------------------------


def test_module_invocation_smoke():
    result = subprocess.run(
        [sys.executable, "-m", "fubini", "compute", "bell", "--max", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert result.stdout == "0 1\n1 1\n2 3\n3 13\n"
