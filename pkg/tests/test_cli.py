"""Batch front end: argument handling, file formats, exit codes.

Everything runs in-process through main(argv) so monkeypatching and output
capture work; tiny quadrature knobs keep each invocation fast.
"""

import json
import math
import os

import pytest

from casimir_cylinders import asympt, engine, pfa
from casimir_cylinders.cli import (
    SWEEP_COLUMNS,
    main,
    parse_float_list,
    parse_sweep_csv,
    rows_to_csv,
)
from casimir_cylinders.errors import ConfigError, ConvergenceError

TINY = ["--n-max", "1", "--n-k", "16", "--n-kappa", "12", "--tol", "-1"]


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def parse_any(text):
    """Like parse_sweep_csv but keeps non-numeric cells as strings."""
    lines = [ln for ln in text.split("\n") if ln != ""]
    cols = lines[0].split(",")
    rows = []
    for ln in lines[1:]:
        row = {}
        for c, v in zip(cols, ln.split(",")):
            if v == "":
                row[c] = None
            else:
                try:
                    row[c] = float(v)
                except ValueError:
                    row[c] = v
        rows.append(row)
    return cols, rows


def test_energy_row_matches_engine(capsys):
    code, out = run_cli(capsys, [
        "energy", "--field", "neumann", "--regime", "classical",
        "--d", "6", "--n-max", "2", "--n-k", "24",
    ])
    assert code == 0
    cols, rows = parse_any(out)
    assert cols == list(
        ("quantity", "field", "regime", "d", "theta", "r1", "r2",
         "temperature", "value", "est_error", "n_max", "N_k", "N_kappa")
    )
    want = engine.energy_classical(
        engine.Geometry(6.0, math.pi / 2), "neumann", n_max=2, n_k=24
    ).value
    assert rows[0]["value"] == pytest.approx(want, rel=1e-11)
    assert rows[0]["temperature"] is None
    assert rows[0]["quantity"] == "energy" and rows[0]["field"] == "neumann"


def test_single_point_zero_t(capsys):
    code, out = run_cli(capsys, [
        "energy", "--field", "dirichlet", "--regime", "zero_t", "--d", "8",
    ] + TINY)
    assert code == 0
    _, rows = parse_any(out)
    want = engine.energy_zero_T(
        engine.Geometry(8.0, math.pi / 2), "dirichlet",
        n_max=1, n_k=16, n_kappa=12, tol=None,
    ).value
    assert rows[0]["value"] == pytest.approx(want, rel=1e-11)
    assert rows[0]["est_error"] is None       # pinned knobs: no estimate


def test_deterministic_output_files(tmp_path, capsys):
    args = ["energy", "--field", "neumann", "--regime", "classical",
            "--d", "5", "--n-max", "2", "--n-k", "16"]
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(p1)]) == 0
    assert main(args + ["--out", str(p2)]) == 0
    capsys.readouterr()
    assert p1.read_bytes() == p2.read_bytes()
    m1 = json.loads((tmp_path / "a.csv.meta.json").read_text())
    m2 = json.loads((tmp_path / "b.csv.meta.json").read_text())
    assert m1["convergence"] == m2["convergence"]
    assert m1["config"]["field"] == "neumann"


def test_csv_round_trip():
    rows = [
        {"r": 0.1, "theta": math.pi / 2, "E_num": -1.2345678901234e-5,
         "E_pfa": None},
        {"r": 0.2, "theta": math.pi / 4, "E_num": -3.5e-4, "E_pfa": -4e-4},
    ]
    text = rows_to_csv(("r", "theta", "E_num", "E_pfa"), rows)
    cols, back = parse_sweep_csv(text)
    assert cols == ["r", "theta", "E_num", "E_pfa"]
    assert back[0]["E_pfa"] is None
    for orig, rt in zip(rows, back):
        for key, val in orig.items():
            if val is not None:
                assert rt[key] == pytest.approx(val, rel=1e-11)
    with pytest.raises(ConfigError):
        parse_sweep_csv("")
    with pytest.raises(ConfigError):
        parse_sweep_csv("a,b\n1\n")


def test_figure2_small(capsys):
    code, out = run_cli(capsys, ["figure", "2", "--r", "0.05,0.1"] + TINY)
    assert code == 0
    cols, rows = parse_sweep_csv(out)
    assert cols == list(SWEEP_COLUMNS)
    assert len(rows) == 2
    for row in rows:
        assert row["theta"] == pytest.approx(math.pi / 2, rel=1e-11)
        assert row["ratio_num_pfa"] == pytest.approx(
            row["E_num"] / row["E_pfa"], rel=1e-9
        )
        assert row["E_gradexp"] is not None
        assert row["E_asym"] is not None
        assert row["omega_ratio"] is None


def test_figure4_small(capsys):
    th = math.pi / 4
    code, out = run_cli(capsys, [
        "figure", "4", "--r", "0.1", "--thetas", f"{th!r},{math.pi / 2!r}",
    ] + TINY)
    assert code == 0
    cols, rows = parse_sweep_csv(out)
    assert cols == list(SWEEP_COLUMNS)
    by_theta = {round(r["theta"], 9): r for r in rows}
    perp = by_theta[round(math.pi / 2, 9)]
    assert perp["omega_ratio"] == pytest.approx(1.0, abs=1e-12)
    assert perp["omega_ratio_asym"] == pytest.approx(1.0, abs=1e-12)
    quart = by_theta[round(th, 9)]
    # the asymptotic ratio column is omega(theta)/omega(pi/2) exactly
    assert quart["omega_ratio_asym"] == pytest.approx(
        asympt.omega(th) / asympt.omega(math.pi / 2), rel=1e-9
    )
    assert quart["E_pfa"] is None


def test_sweep_raw_units(capsys):
    code, out = run_cli(capsys, [
        "sweep", "--field", "dirichlet", "--r", "0.1,0.2", "--units", "raw",
    ] + TINY)
    assert code == 0
    cols, rows = parse_sweep_csv(out)
    assert cols == list(SWEEP_COLUMNS) + ["d", "E_d"]
    for row in rows:
        assert row["d"] == pytest.approx(1.0 / row["r"], rel=1e-11)
        assert row["E_d"] == pytest.approx(row["E_num"] * row["d"], rel=1e-9)


def test_config_file_merge_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({
        "field": "dirichlet", "regime": "zero_t", "d": 8.0,
        "n_max": 2, "n_k": 16, "n_kappa": 12, "tol": -1.0,
    }))
    code, out = run_cli(capsys, [
        "energy", "--config", str(cfg), "--n-max", "1",
    ])
    assert code == 0
    _, rows = parse_any(out)
    assert rows[0]["field"] == "dirichlet"
    # the flag overrides the file for n_max, the file fills everything else
    assert rows[0]["n_max"] == 1
    assert rows[0]["d"] == pytest.approx(8.0)

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n_best": 3}))
    code = main(["energy", "--config", str(bad), "--d", "8"])
    capsys.readouterr()
    assert code == 2

    notjson = tmp_path / "broken.json"
    notjson.write_text("{not json")
    code = main(["energy", "--config", str(notjson), "--d", "8"])
    capsys.readouterr()
    assert code == 2


def test_exit_code_domain_and_config(capsys):
    # r beyond the sweep domain
    assert main(["sweep", "--r", "0.5"] + TINY) == 2
    # missing required distance
    assert main(["energy", "--field", "dirichlet"]) == 2
    # fields without a zero-mode sum
    assert main(["energy", "--field", "em", "--regime", "finite_t",
                 "--d", "6", "--temperature", "0.1"]) == 2
    # force is a classical-only command
    assert main(["force", "--field", "em", "--regime", "zero_t",
                 "--d", "6"]) == 2
    capsys.readouterr()


def test_exit_code_io_failure(capsys):
    code = main(["energy", "--field", "neumann", "--regime", "classical",
                 "--d", "5", "--n-max", "1", "--n-k", "16",
                 "--out", "/nonexistent-dir/x.csv"])
    capsys.readouterr()
    assert code == 4


def test_exit_code_convergence(monkeypatch, capsys):
    import casimir_cylinders.cli as cli

    def explode(*a, **kw):
        raise ConvergenceError("stalled", [1.0, 2.0])

    monkeypatch.setattr(cli.engine, "energy_zero_T", explode)
    code = main(["energy", "--field", "dirichlet", "--d", "8"])
    err = capsys.readouterr().err
    assert code == 3
    assert "stalled" in err


def test_invalid_figure_id(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["figure", "5"])
    capsys.readouterr()
    assert exc.value.code == 2


def test_jobs_do_not_change_bytes(capsys):
    argv = ["sweep", "--field", "dirichlet", "--r", "0.1,0.2"] + TINY
    code1, out1 = run_cli(capsys, argv + ["--jobs", "1"])
    code2, out2 = run_cli(capsys, argv + ["--jobs", "2"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_omega_subcommand(capsys):
    code, out = run_cli(capsys, ["omega", "--thetas",
                                 f"0,{math.pi / 2!r}"])
    assert code == 0
    _, rows = parse_sweep_csv(out)
    assert rows[0]["omega"] == pytest.approx(1.0, abs=1e-7)
    assert rows[1]["omega"] == pytest.approx(1 - math.log(2), abs=1e-7)

    code, out = run_cli(capsys, ["omega", "--theta", "0"])
    assert code == 0
    _, rows = parse_sweep_csv(out)
    assert len(rows) == 1 and rows[0]["omega"] == pytest.approx(1.0, abs=1e-7)

    code, out = run_cli(capsys, ["omega", "--fourier", "2"])
    assert code == 0
    _, rows = parse_sweep_csv(out)
    assert [r["n"] for r in rows] == [0.0, 1.0, 2.0]
    assert rows[1]["c_n"] == pytest.approx(1.0 / 3.0, abs=1e-3)


def test_pfa_subcommand(capsys):
    code, out = run_cli(capsys, [
        "pfa", "--d", "2.1", "--theta", f"{math.pi / 2!r}",
        "--length", "1.0",
    ])
    assert code == 0
    _, rows = parse_any(out)
    cfg = pfa.PfaConfig(2.1, 1.0, math.pi / 2, "zero_t")
    assert rows[0]["pfa_exact"] == pytest.approx(pfa.pfa_exact(cfg), rel=1e-9)
    assert rows[0]["pfa_limit"] == pytest.approx(pfa.pfa_limit(cfg), rel=1e-11)
    assert rows[0]["gradient_expansion"] == pytest.approx(
        pfa.gradient_expansion(cfg), rel=1e-11
    )
    assert rows[0]["pfa_parallel"] == pytest.approx(
        pfa.pfa_parallel(cfg, 1.0), rel=1e-11
    )
    code, out = run_cli(capsys, ["pfa", "--d", "2.1", "--regime", "classical"])
    assert code == 0
    _, rows = parse_any(out)
    assert rows[0]["gradient_expansion"] is None
    assert rows[0]["pfa_parallel"] is None


def test_json_format(capsys):
    code, out = run_cli(capsys, [
        "pfa", "--d", "2.1", "--format", "json",
    ])
    assert code == 0
    doc = json.loads(out)
    assert doc["columns"][0] == "d"
    assert doc["rows"][0]["d"] == pytest.approx(2.1)


def test_parse_float_list():
    assert parse_float_list("0.1,0.2") == (0.1, 0.2)
    assert parse_float_list("0:1:3") == (0.0, 0.5, 1.0)
    assert parse_float_list((1, 2)) == (1.0, 2.0)
    with pytest.raises(ConfigError):
        parse_float_list("0:1")
    with pytest.raises(ConfigError):
        parse_float_list("0:1:1")
    with pytest.raises(ConfigError):
        parse_float_list("a,b")


def test_module_entry_point():
    # python -m casimir_cylinders must route to the same parser
    import subprocess
    import sys
    proc = subprocess.run(
        [sys.executable, "-m", "casimir_cylinders", "pfa", "--d", "2.1"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("d,R,theta,regime")
