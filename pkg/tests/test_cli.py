import json
import subprocess
import sys
from pathlib import Path

import pytest

import autoseq.cli as cli
from autoseq.christol import compute_ABC
from autoseq.laurent import RationalFunction

DATA = Path(__file__).parent / "data"
F4 = str(DATA / "f4.toml")
F4_THM2 = str(DATA / "f4_thm2.json")
F5_POWER = str(DATA / "f5_power.toml")


def run(capsys, *argv):
    status = cli.cmd_run(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_gen(capsys):
    status, out, _ = run(capsys, "gen", "--spec", F4, "--terms", "16")
    lines = out.splitlines()
    assert status == 0 and len(lines) == 16
    assert lines[:2] == ["1,0", "1,1"]  # lambda_2 = 1/eps1 = omega^2


def test_gen_power_spec(capsys):
    status, out, _ = run(capsys, "gen", "--spec", F5_POWER, "--terms", "4")
    assert status == 0 and out.split() == ["2", "1", "0", "2"]


@pytest.mark.parametrize("path", [F4, F4_THM2])
def test_certify_json(capsys, path):
    status, out, _ = run(capsys, "certify", "--spec", path, "--order", "1000", "--format", "json")
    payload = json.loads(out)
    assert status == 0
    assert payload["residual_theta"] is True and payload["residual_rho"] is True


def test_prop3(capsys):
    status, out, _ = run(capsys, "prop3", "--spec", F4, "--order", "512", "--format", "json")
    payload = json.loads(out)
    assert status == 0 and payload["verdict"] == "cubic"
    assert payload["gap_witness"]["ok"] and payload["gap_witness"]["gap_lengths"][:3] == [2, 4, 8]


def test_kernel_json(capsys):
    status, out, _ = run(capsys, "kernel", "--spec", F4, "--horizon", "1024", "--format", "json")
    payload = json.loads(out)
    assert status == 0 and payload["closed"] and payload["class_count"] == 5


def test_dfao_dot(capsys, tmp_path):
    target = tmp_path / "a.dot"
    status, _, _ = run(capsys, "dfao-dot", "--spec", F4, "--horizon", "2048", "--out", str(target))
    assert status == 0 and target.read_text().startswith("digraph")


def test_cf(capsys):
    status, out, _ = run(capsys, "cf", "--spec", F4, "--terms", "4", "--order", "64")
    assert status == 0 and len(out.splitlines()) == 4


def test_report_power(capsys):
    status, out, _ = run(capsys, "report", "--spec", F5_POWER, "--horizon", "512", "--format", "json")
    payload = json.loads(out)
    assert status == 0 and payload["certificate"]["kind"] == "shift relation"


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "kernel", "--spec", F4, "--horizon", "256", "--format", "json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_bad_spec_exits_1(capsys, tmp_path):
    bad = tmp_path / "bad.toml"
    bad.write_text('family = "prop1"\np = 4\n')
    status, _, err = run(capsys, "gen", "--spec", str(bad))
    assert status == 1 and err.startswith("error:")
    assert run(capsys, "gen", "--spec", str(tmp_path / "missing.toml"))[0] == 1


def test_bad_flags_exit_1(capsys):
    assert run(capsys, "gen", "--spec", F4, "--terms", "0")[0] == 1
    assert run(capsys, "certify", "--spec", F5_POWER)[0] == 1


def test_unknown_command_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.cmd_run(["frobnicate", "--spec", F4])
    assert exc.value.code == 2


def test_corrupted_certificate_exits_2(capsys, monkeypatch):
    real = cli.verify_hyperquadratic

    def corrupted(spec, order):
        A, B, C = compute_ABC(spec)
        return real(spec, order, abc=(A, B + RationalFunction.monomial(spec.field, -3), C))

    monkeypatch.setattr(cli, "verify_hyperquadratic", corrupted)
    status, _, err = run(capsys, "certify", "--spec", F4_THM2)
    assert status == 2 and "verification failed" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "autoseq.cli", "gen", "--spec", F4, "--terms", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and len(proc.stdout.splitlines()) == 3
