import csv
import json

import pytest

from discord_atlas import __version__
from discord_atlas.cli import fmt, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fmt():
    assert fmt(True) == "true" and fmt(False) == "false"
    assert fmt(1.0 / 3) == "0.333333333333"
    assert fmt(1.5e-7) == "1.5e-07"
    assert fmt(3) == "3"


def test_usage_errors(capsys):
    assert run(capsys, "--bogus")[0] == 1
    assert run(capsys, "qubit", "scan", "--unknown-flag")[0] == 1
    assert run(capsys, "qubit", "scan", "--n-alpha", "2")[0] == 1
    assert run(capsys, "qubit", "structure", "--q", "1.5", "--alpha", "0", "--beta", "0")[0] == 1
    assert run(capsys, "gauss", "standard-form", "--nu", "1,5,1")[0] == 1
    assert run(capsys, "gauss", "standard-form", "--nu", "1,x,1")[0] == 1
    code, _, err = run(capsys, "qubit", "trajectory", "--fix", "pi", "--level", "3", "--samples", "10")
    assert code == 1 and "error" in err


def test_help_and_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0 and __version__ in out
    code, out, _ = run(capsys, "qubit", "scan", "--help")
    assert code == 0 and "default 16" in out


def test_structure_text_and_json(capsys, tmp_path):
    code, out, _ = run(capsys, "qubit", "structure", "--q", "0.5", "--alpha", "0.7854", "--beta", "0.7854")
    assert code == 0 and "agreement: True" in out
    path = tmp_path / "s.json"
    code, _, _ = run(capsys, "qubit", "structure", "--q", "0.5", "--alpha", "45", "--beta", "45", "--deg",
                     "--json", "--out", str(path))
    data = json.loads(path.read_text())
    assert code == 0 and data["agreement"] is True
    assert data["values"]["discord_ab"] > 0 and data["values"]["discord_ba"] > 0
    assert data["source"]["alpha"] == pytest.approx(0.7853981633974483)


def test_standard_form_vacua(capsys):
    code, out, _ = run(capsys, "gauss", "standard-form", "--nu", "1,1,1")
    assert code == 0 and "product of vacua" in out


def test_scan_csv_is_reproducible(capsys, tmp_path):
    a = tmp_path / "a.csv"
    args = ["qubit", "scan", "--n-alpha", "4", "--n-beta", "3", "--q", "0.4", "--out", str(a)]
    assert run(capsys, *args)[0] == 0
    first = a.read_bytes()
    assert run(capsys, *args)[0] == 0
    assert a.read_bytes() == first
    lines = a.read_text().splitlines()
    assert lines[0].startswith(f"# discord-atlas {__version__}; command: discord-atlas qubit scan")
    assert "seed: none" in lines[0] and "negativity: oufan" in lines[0]
    rows = list(csv.DictReader(lines[1:]))
    assert len(rows) == 12 and list(rows[0]) == ["alpha", "beta", "D_ab", "D_ba", "neg_ac", "neg_bc", "pi_tangle", "converged"]


@pytest.mark.slow
def test_trajectory_csv(capsys, tmp_path):
    out = tmp_path / "traj.csv"
    args = ["qubit", "trajectory", "--fix", "pi", "--level", "0.2", "--q", "0.5", "--samples", "400", "--out", str(out)]
    code, stdout, _ = run(capsys, *args)
    assert code == 0 and "spearman(neg_ac, neg_bc)" in stdout
    lines = out.read_text().splitlines()
    assert lines[0].startswith("#")
    assert lines[1] == "phi,alpha,beta,D_ab,D_ba,neg_ac,neg_bc,pi_tangle"
    assert len(lines) == 402
    first = out.read_bytes()
    assert run(capsys, *args)[0] == 0
    assert out.read_bytes() == first


def test_verify_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "gauss", "verify", "--seed", "1", "--samples", "50")
    assert code == 0 and "PASS" in out
    path = tmp_path / "q.json"
    code, out, _ = run(capsys, "qubit", "verify", "--seed", "2", "--samples", "10", "--identity-samples", "5",
                       "--json", "--out", str(path))
    data = json.loads(path.read_text())
    assert code == 0 and data["necessity_fuzz"]["violations"] == []
    assert set(data["structure_table"]) == {"generic", "beta_one", "alpha_one", "alpha_zero", "beta_zero", "ghz"}


def test_demos(capsys):
    code, out, _ = run(capsys, "activate")
    assert code == 0 and "after" in out
    code, out, _ = run(capsys, "nonconverse", "--json")
    data = json.loads(out)
    assert code == 0 and data["mutual_info_ab"] == pytest.approx(0, abs=1e-12)


def test_convergence_exit_code(capsys, monkeypatch):
    from discord_atlas import cli
    from discord_atlas.errors import ConvergenceError

    def boom(*a, **k):
        raise ConvergenceError("stalled")

    monkeypatch.setattr(cli, "structure_classify", boom)
    code, _, err = run(capsys, "qubit", "structure", "--q", "0.5", "--alpha", "1", "--beta", "1")
    assert code == 2 and "convergence" in err
