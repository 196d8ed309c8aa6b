"""CLI contract: flags, exit codes, file outputs, determinism."""
import json
from pathlib import Path

import numpy as np
import pytest

from movers import cli


def run_cli(args):
    return cli.main(args)


def test_list(capsys):
    assert run_cli(["list"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 13
    assert "steady-contact" in out


def test_unknown_scheme_exit_2():
    with pytest.raises(SystemExit) as exc:
        run_cli(["run", "--case", "steady-contact", "--scheme", "bogus"])
    assert exc.value.code == 2


def test_unknown_case_exit_2():
    with pytest.raises(SystemExit) as exc:
        run_cli(["run", "--case", "nope"])
    assert exc.value.code == 2


def test_run_1d_outputs(tmp_path, capsys):
    out = tmp_path / "o"
    rc = run_cli(["run", "--case", "steady-contact", "--scheme", "movers-le",
                  "--out", str(out)])
    assert rc == 0
    stem = "steady-contact_movers-le_o1"
    csv = (out / f"{stem}.csv").read_text().splitlines()
    assert csv[0] == "x,rho,u,p,e,mach,entropy"
    assert len(csv) == 101
    # exact capture: exactly two density levels
    rho = {row.split(",")[1] for row in csv[1:]}
    assert len(rho) == 2
    assert (out / f"{stem}_oracle.csv").exists()
    hist = (out / f"{stem}_history.csv").read_text().splitlines()
    assert hist[0].startswith("step,t,dt,residual,total_mass")
    summary = json.loads((out / f"{stem}_summary.json").read_text())
    assert summary["case"] == "steady-contact"
    assert summary["l1_error"]["rho"] == 0.0


def test_run_determinism(tmp_path):
    outs = []
    for d in ("a", "b"):
        out = tmp_path / d
        run_cli(["run", "--case", "sod-modified-sonic", "--scheme", "llf",
                 "--nx", "50", "--out", str(out)])
        outs.append((out / "sod-modified-sonic_llf_o1.csv").read_bytes())
    assert outs[0] == outs[1]


def test_run_2d_outputs(tmp_path):
    out = tmp_path / "o2"
    rc = run_cli(["run", "--case", "slip-flow", "--scheme", "movers-le",
                  "--max-steps", "20", "--out", str(out)])
    assert rc == 0
    stem = "slip-flow_movers-le_o1"
    field = (out / f"{stem}_field.csv").read_text().splitlines()
    assert field[0] == "i,j,xc,yc,rho,u,v,p,mach"
    assert len(field) == 1601
    mach = {row.split(",")[8] for row in field[1:]}
    assert len(mach) == 2  # exact two-stream capture
    meta = (out / f"{stem}_meta.txt").read_text()
    assert "contour_mach=2.0:0.05:3.0" in meta
    assert "contour_mach_normalized=2.0:3.0:0.05" in meta


def test_run_2d_blanked_rows_absent(tmp_path):
    out = tmp_path / "o3"
    rc = run_cli(["run", "--case", "forward-step", "--scheme", "llf",
                  "--nx", "30", "--ny", "10", "--max-steps", "5",
                  "--out", str(out)])
    assert rc == 0
    field = (out / "forward-step_llf_o1_field.csv").read_text().splitlines()
    blanked = 24 * 2  # xc >= 0.6 (24 of 30 columns), yc <= 0.2 (2 of 10 rows)
    assert len(field) - 1 == 30 * 10 - blanked


def test_sweep(tmp_path, capsys):
    out = tmp_path / "sweep"
    rc = run_cli(["sweep", "--case", "sod-modified-sonic", "--scheme",
                  "movers-le", "--grids", "50,100", "--out", str(out)])
    assert rc == 0
    assert (out / "n50" / "sod-modified-sonic_movers-le_o1_n50.csv").exists()
    assert (out / "n100" / "sod-modified-sonic_movers-le_o1_n100.csv").exists()
    text = capsys.readouterr().out
    assert "L1(rho)" in text


def test_positivity_failure_exit_1(tmp_path, capsys, monkeypatch):
    from movers.errors import PositivityError

    def boom(*args, **kwargs):
        raise PositivityError("positivity lost", cell=7, time=0.1)

    monkeypatch.setattr(cli, "run", boom)
    rc = run_cli(["run", "--case", "steady-contact", "--out", str(tmp_path)])
    assert rc == 1
    assert "positivity" in capsys.readouterr().err
