"""Batch command-line front end.

Subcommands
-----------
energy / force / torque
    Single-point engine evaluations, one output row each.
sweep
    Cross product of --r and --theta lists, one SweepRow per point.
figure {2,3,4}
    Canonical data sets: 2 and 3 sweep r = R/d at theta = pi/2 and pi/4
    with the energy-to-PFA ratio columns; 4 sweeps theta per r with the
    rescaled-energy ratio omega(theta)/omega(pi/2).
omega / pfa
    Closed-form helper tables (orientation factor, proximity-force values).

Output is CSV (default) or JSON, deterministic byte-for-byte for a fixed
config; when --out is given, convergence metadata goes to <out>.meta.json.
Exit codes: 0 success, 2 invalid config/domain, 3 convergence failure,
4 I/O failure.

Units: lengths are in units of the cylinder radius R (r1 = r2 = R = 1 for
sweeps and figures); zero-temperature energies are reported in units of
hbar*c/R, classical ones in units of k_B*T. Rescaled sweep output uses
r = R/d on the abscissa; --units raw appends the bare (d, E*d) pairs.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import asympt, engine, pfa
from .errors import (
    CasimirError,
    ConfigError,
    ConvergenceError,
    DomainError,
    ZeroModeError,
)

__all__ = ["RunConfig", "SweepRow", "SWEEP_COLUMNS", "run", "main"]

# figure defaults: r in [0.05, 0.45] (separations d >= 2.22 R), and a
# theta ladder from pi/12 to pi/2 that always contains the pi/2
# normalization point
_FIGURE_R = [0.05 + 0.025 * k for k in range(17)]
_FIGURE4_R = [0.01, 0.1, 0.2, 0.3]
_FIGURE4_THETA = [k * math.pi / 24.0 for k in range(2, 13)]

_DEFAULTS = {
    "field": "em",
    "regime": "zero_t",
    "d": None,
    "theta": math.pi / 2.0,
    "r1": 1.0,
    "r2": 1.0,
    "radius": 1.0,
    "temperature": None,
    "n_max": 3,
    "n_k": 64,
    "n_kappa": 40,
    "tol": 1e-4,
    "r": None,
    "thetas": None,
    "fourier": None,
    "length": None,
    "units": "scaled",
    "jobs": 1,
    "out": None,
    "format": "csv",
    "figure": None,
}

SWEEP_COLUMNS = (
    "r",
    "theta",
    "E_num",
    "E_pfa",
    "E_asym",
    "E_gradexp",
    "ratio_num_pfa",
    "omega_ratio",
    "omega_ratio_asym",
)
_RAW_COLUMNS = SWEEP_COLUMNS + ("d", "E_d")

_SINGLE_COLUMNS = (
    "quantity",
    "field",
    "regime",
    "d",
    "theta",
    "r1",
    "r2",
    "temperature",
    "value",
    "est_error",
    "n_max",
    "N_k",
    "N_kappa",
)


@dataclass(frozen=True)
class RunConfig:
    """Fully merged run description: defaults, then config file, then flags."""

    command: str
    field: str = "em"
    regime: str = "zero_t"
    d: float | None = None
    theta: float = math.pi / 2.0
    r1: float = 1.0
    r2: float = 1.0
    radius: float = 1.0
    temperature: float | None = None
    n_max: int = 3
    n_k: int = 64
    n_kappa: int = 40
    tol: float | None = 1e-4
    r: tuple | None = None
    thetas: tuple | None = None
    fourier: int | None = None
    length: float | None = None
    units: str = "scaled"
    jobs: int = 1
    out: str | None = None
    format: str = "csv"
    figure: int | None = None

    def __post_init__(self):
        if self.command not in ("energy", "force", "torque", "sweep",
                                "omega", "pfa", "figure"):
            raise ConfigError(f"unknown command {self.command!r}")
        if self.field not in engine.FIELDS:
            raise ConfigError(f"field must be one of {engine.FIELDS}")
        if self.regime not in engine.REGIMES:
            raise ConfigError(f"regime must be one of {engine.REGIMES}")
        if self.units not in ("scaled", "raw"):
            raise ConfigError("units must be 'scaled' or 'raw'")
        if self.format not in ("csv", "json"):
            raise ConfigError("format must be 'csv' or 'json'")
        for name in ("n_max", "n_k", "n_kappa", "jobs"):
            v = getattr(self, name)
            if not isinstance(v, int) or v <= 0:
                if not (name == "n_max" and v == 0):
                    raise ConfigError(f"{name} must be a positive integer, got {v!r}")
        if self.tol is not None and self.tol <= 0:
            raise ConfigError("tol must be positive (omit it for a fixed-knob run)")


@dataclass(frozen=True)
class SweepRow:
    """One sweep point; fields that a given figure does not define are None."""

    r: float
    theta: float
    E_num: float | None = None
    E_pfa: float | None = None
    E_asym: float | None = None
    E_gradexp: float | None = None
    ratio_num_pfa: float | None = None
    omega_ratio: float | None = None
    omega_ratio_asym: float | None = None
    d: float | None = None
    E_d: float | None = None


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, (int,)) and not isinstance(x, bool):
        return str(x)
    return format(float(x), ".12g")


def parse_float_list(text):
    """Comma list ("0.1,0.2") or linspace syntax ("start:stop:count")."""
    if isinstance(text, (list, tuple)):
        return tuple(float(v) for v in text)
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"range syntax is start:stop:count, got {text!r}")
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
        if n < 2:
            raise ConfigError("range count must be >= 2")
        step = (b - a) / (n - 1)
        return tuple(a + step * i for i in range(n))
    try:
        return tuple(float(v) for v in text.split(",") if v.strip() != "")
    except ValueError as exc:
        raise ConfigError(f"could not parse number list {text!r}") from exc


def rows_to_csv(columns, rows) -> str:
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_fmt(row.get(c)) for c in columns))
    return "\n".join(lines) + "\n"


def parse_sweep_csv(text: str):
    """Inverse of rows_to_csv for sweep output; '' round-trips to None."""
    lines = [ln for ln in text.split("\n") if ln != ""]
    if not lines:
        raise ConfigError("empty CSV")
    columns = lines[0].split(",")
    rows = []
    for ln in lines[1:]:
        cells = ln.split(",")
        if len(cells) != len(columns):
            raise ConfigError("ragged CSV row")
        rows.append({c: (None if v == "" else float(v))
                     for c, v in zip(columns, cells)})
    return columns, rows


# ---------------------------------------------------------------------------
# row evaluation (module level so a process pool can pickle the tasks)

@dataclass(frozen=True)
class _SweepTask:
    r: float
    theta: float
    field: str
    regime: str
    n_max: int
    n_k: int
    n_kappa: int
    tol: float | None
    with_pfa: bool


def _energy_point(field, regime, geom, n_max, n_k, n_kappa, tol,
                  temperature=None):
    if regime == "zero_t":
        return engine.energy_zero_T(geom, field, n_max=n_max, n_k=n_k,
                                    n_kappa=n_kappa, tol=tol)
    if regime == "classical":
        return engine.energy_classical(geom, field, n_max=n_max, n_k=n_k)
    if temperature is None:
        raise ConfigError("finite_t requires --temperature")
    return engine.energy_finite_T(geom, field, temperature, n_max=n_max,
                                  n_k=n_k)


def _sweep_point(task: _SweepTask):
    d = 1.0 / task.r
    geom = engine.Geometry(d=d, theta=task.theta)
    res = _energy_point(task.field, task.regime, geom, task.n_max,
                        task.n_k, task.n_kappa, task.tol)
    e_num = res.value
    e_pfa = e_asym = e_grad = ratio = None
    if task.with_pfa:
        cfg = pfa.PfaConfig(d=d, R=1.0, theta=task.theta, regime=task.regime)
        e_pfa = pfa.pfa_exact(cfg)
        if task.regime == "zero_t":
            e_grad = pfa.gradient_expansion(cfg)
        try:
            e_asym = asympt.closed_form(task.field, task.regime, d, 1.0,
                                        task.theta).value
        except DomainError:
            e_asym = None
        ratio = e_num / e_pfa
    return e_num, e_pfa, e_asym, e_grad, ratio, res


def _map_tasks(tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return [_sweep_point(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_sweep_point, tasks))


# ---------------------------------------------------------------------------
# subcommand implementations

def _meta_entry(res: engine.EnergyResult):
    return {
        "n_max": res.n_max,
        "N_k": res.N_k,
        "N_kappa": res.kappa_nodes,
        "est_error": None if math.isnan(res.est_error) else res.est_error,
        "regime": res.regime,
        "quantity": res.quantity,
    }


def _run_single(cfg: RunConfig):
    if cfg.d is None:
        raise ConfigError(f"{cfg.command} requires --d")
    geom = engine.Geometry(d=cfg.d, theta=cfg.theta, r1=cfg.r1, r2=cfg.r2)
    if cfg.command == "energy":
        res = _energy_point(cfg.field, cfg.regime, geom, cfg.n_max, cfg.n_k,
                            cfg.n_kappa, cfg.tol, cfg.temperature)
    elif cfg.command == "force":
        if cfg.regime != "classical":
            raise ConfigError("force supports only --regime classical "
                              "(differentiate energy output otherwise)")
        res = engine.force_classical(geom, cfg.field, n_max=cfg.n_max,
                                     n_k=cfg.n_k)
    else:
        res = engine.torque(geom, cfg.field, regime=cfg.regime,
                            n_max=cfg.n_max, n_k=cfg.n_k,
                            n_kappa=cfg.n_kappa,
                            temperature=cfg.temperature)
    row = {
        "quantity": res.quantity,
        "field": cfg.field,
        "regime": cfg.regime,
        "d": cfg.d,
        "theta": cfg.theta,
        "r1": cfg.r1,
        "r2": cfg.r2,
        "temperature": cfg.temperature,
        "value": res.value,
        "est_error": None if math.isnan(res.est_error) else res.est_error,
        "n_max": res.n_max,
        "N_k": res.N_k,
        "N_kappa": res.kappa_nodes,
    }
    return _SINGLE_COLUMNS, [row], {"rows": [_meta_entry(res)]}


def _sweep_rows(cfg: RunConfig, r_values, theta_values, ratio_mode):
    """ratio_mode: 'pfa' fills the E_*/ratio columns (figures 2/3, sweep);
    'omega' fills the rescaled-energy ratio columns (figure 4)."""
    if cfg.regime == "finite_t":
        raise ConfigError("sweeps support zero_t and classical regimes")
    for r in r_values:
        if not (0.0 < r <= 0.45):
            raise DomainError(
                f"r = R/d must lie in (0, 0.45] (d >= 2.22R), got {r:g}")
    rows = []
    meta = []
    if ratio_mode == "pfa":
        tasks = [_SweepTask(r, th, cfg.field, cfg.regime, cfg.n_max,
                            cfg.n_k, cfg.n_kappa, cfg.tol, True)
                 for th in theta_values for r in r_values]
        results = _map_tasks(tasks, cfg.jobs)
        for task, (e_num, e_pfa, e_asym, e_grad, ratio, res) in zip(tasks,
                                                                    results):
            row = SweepRow(r=task.r, theta=task.theta, E_num=e_num,
                           E_pfa=e_pfa, E_asym=e_asym, E_gradexp=e_grad,
                           ratio_num_pfa=ratio)
            rows.append(_finish_row(row, cfg))
            meta.append(_meta_entry(res))
        return rows, meta
    # omega mode: normalize E*sin(theta) per r at theta = pi/2
    thetas = list(theta_values)
    if not any(abs(t - math.pi / 2) < 1e-12 for t in thetas):
        thetas.append(math.pi / 2)
    thetas.sort()
    for r in r_values:
        tasks = [_SweepTask(r, th, cfg.field, cfg.regime, cfg.n_max,
                            cfg.n_k, cfg.n_kappa, cfg.tol, False)
                 for th in thetas]
        results = _map_tasks(tasks, cfg.jobs)
        ref = None
        for th, (e_num, *_rest) in zip(thetas, results):
            if abs(th - math.pi / 2) < 1e-12:
                ref = e_num * math.sin(th)
        asym_ref = asympt.closed_form(cfg.field, cfg.regime, 1.0 / r, 1.0,
                                      math.pi / 2).value
        for th, (e_num, _p, _a, _g, _r, res) in zip(thetas, results):
            asym = asympt.closed_form(cfg.field, cfg.regime, 1.0 / r, 1.0,
                                      th).value
            row = SweepRow(r=r, theta=th, E_num=e_num,
                           omega_ratio=e_num * math.sin(th) / ref,
                           omega_ratio_asym=asym * math.sin(th) / asym_ref)
            rows.append(_finish_row(row, cfg))
            meta.append(_meta_entry(res))
    return rows, meta


def _finish_row(row: SweepRow, cfg: RunConfig):
    d = 1.0 / row.r
    if cfg.units == "raw" and row.E_num is not None:
        e_d = row.E_num * d if cfg.regime == "zero_t" else None
        row = dataclasses.replace(row, d=d, E_d=e_d)
    return dataclasses.asdict(row)


def _run_sweep(cfg: RunConfig):
    if cfg.r is None:
        raise ConfigError("sweep requires --r (comma list or start:stop:count)")
    thetas = cfg.thetas if cfg.thetas is not None else (cfg.theta,)
    rows, meta = _sweep_rows(cfg, cfg.r, thetas, "pfa")
    cols = _RAW_COLUMNS if cfg.units == "raw" else SWEEP_COLUMNS
    return cols, rows, {"rows": meta}


def _run_figure(cfg: RunConfig):
    if cfg.figure not in (2, 3, 4):
        raise ConfigError("figure id must be 2, 3, or 4")
    if cfg.figure in (2, 3):
        theta = math.pi / 2 if cfg.figure == 2 else math.pi / 4
        r_values = cfg.r if cfg.r is not None else _FIGURE_R
        rows, meta = _sweep_rows(cfg, r_values, (theta,), "pfa")
    else:
        r_values = cfg.r if cfg.r is not None else _FIGURE4_R
        thetas = cfg.thetas if cfg.thetas is not None else _FIGURE4_THETA
        rows, meta = _sweep_rows(cfg, r_values, thetas, "omega")
    cols = _RAW_COLUMNS if cfg.units == "raw" else SWEEP_COLUMNS
    return cols, rows, {"rows": meta, "figure": cfg.figure}


def _run_omega(cfg: RunConfig):
    if cfg.fourier is not None:
        coeffs = asympt.omega_fourier(cfg.fourier)
        rows = [{"n": n, "c_n": c} for n, c in enumerate(coeffs)]
        return ("n", "c_n"), rows, {}
    thetas = cfg.thetas if cfg.thetas is not None else (cfg.theta,)
    rows = [{"theta": th, "omega": asympt.omega(th)} for th in thetas]
    return ("theta", "omega"), rows, {}


def _run_pfa(cfg: RunConfig):
    if cfg.d is None:
        raise ConfigError("pfa requires --d")
    if cfg.regime == "finite_t":
        raise ConfigError("pfa regimes are zero_t and classical")
    pcfg = pfa.PfaConfig(d=cfg.d, R=cfg.radius, theta=cfg.theta,
                         regime=cfg.regime)
    row = {
        "d": cfg.d,
        "R": cfg.radius,
        "theta": cfg.theta,
        "regime": cfg.regime,
        "l_over_R": pcfg.l_over_R,
        "pfa_exact": pfa.pfa_exact(pcfg),
        "pfa_limit": pfa.pfa_limit(pcfg),
        "gradient_expansion": (pfa.gradient_expansion(pcfg)
                               if cfg.regime == "zero_t" else None),
        "pfa_parallel": (pfa.pfa_parallel(pcfg, cfg.length)
                         if cfg.length is not None else None),
    }
    cols = ("d", "R", "theta", "regime", "l_over_R", "pfa_exact",
            "pfa_limit", "gradient_expansion", "pfa_parallel")
    return cols, [row], {}


# ---------------------------------------------------------------------------
# config plumbing

def _merge_config(args) -> RunConfig:
    merged = dict(_DEFAULTS)
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                file_cfg = json.load(fh)
        except OSError:
            raise
        except ValueError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from exc
        if not isinstance(file_cfg, dict):
            raise ConfigError("config file must hold a JSON object")
        unknown = set(file_cfg) - set(_DEFAULTS)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        merged.update(file_cfg)
    for key in _DEFAULTS:
        v = getattr(args, key, None)
        if v is not None:
            merged[key] = v
    for key in ("r", "thetas"):
        if merged[key] is not None:
            merged[key] = parse_float_list(merged[key])
    if merged["tol"] is not None and merged["tol"] <= 0:
        merged["tol"] = None  # pinned-knob mode
    return RunConfig(command=args.command, **merged)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cylcas",
        description="Casimir interactions of two inclined cylinders "
                    "(energies, forces, torques, figure data)")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, geometry=True):
        p.add_argument("--config", help="JSON config file; flags override it")
        if geometry:
            p.add_argument("--field", choices=engine.FIELDS)
            p.add_argument("--regime", choices=engine.REGIMES)
            p.add_argument("--d", type=float, help="axis distance (units of R)")
            p.add_argument("--theta", type=float, help="inclination, radians")
        p.add_argument("--n-max", dest="n_max", type=int)
        p.add_argument("--n-k", dest="n_k", type=int)
        p.add_argument("--n-kappa", dest="n_kappa", type=int)
        p.add_argument("--tol", type=float,
                       help="relative refinement tolerance; <= 0 pins the knobs")
        p.add_argument("--jobs", type=int, help="worker processes for sweeps")
        p.add_argument("--units", choices=("scaled", "raw"))
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"))

    for name in ("energy", "force", "torque"):
        p = sub.add_parser(name, help=f"single-point {name}")
        common(p)
        p.add_argument("--r1", type=float)
        p.add_argument("--r2", type=float)
        p.add_argument("--temperature", type=float,
                       help="k_B*T per hbar*c in inverse length units")

    p = sub.add_parser("sweep", help="cross product of --r and --theta lists")
    common(p)
    p.add_argument("--r", help="r = R/d values: comma list or start:stop:count")
    p.add_argument("--thetas", help="theta values: comma list or start:stop:count")

    p = sub.add_parser("figure", help="data behind the standard figures")
    p.add_argument("figure", type=int, choices=(2, 3, 4),
                   help="2: ratios at pi/2; 3: ratios at pi/4; 4: omega ratio")
    common(p)
    p.add_argument("--r", help="override the default r list")
    p.add_argument("--thetas", help="figure 4: override the theta list")

    p = sub.add_parser("omega", help="orientation factor table")
    p.add_argument("--config", help="JSON config file; flags override it")
    p.add_argument("--theta", type=float)
    p.add_argument("--thetas", help="comma list or start:stop:count")
    p.add_argument("--fourier", type=int,
                   help="emit cosine coefficients c_0..c_N instead")
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"))

    p = sub.add_parser("pfa", help="proximity-force table for one geometry")
    p.add_argument("--config", help="JSON config file; flags override it")
    p.add_argument("--d", type=float)
    p.add_argument("--radius", "--R", dest="radius", type=float)
    p.add_argument("--theta", type=float)
    p.add_argument("--regime", choices=("zero_t", "classical"))
    p.add_argument("--length", type=float,
                   help="also emit the parallel-cylinder value for this length")
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"))
    return ap


def _emit(cfg: RunConfig, columns, rows, meta):
    if cfg.format == "csv":
        payload = rows_to_csv(columns, rows)
    else:
        payload = json.dumps({"columns": list(columns), "rows": rows},
                             sort_keys=True, indent=2) + "\n"
    if cfg.out is None:
        sys.stdout.write(payload)
        return
    with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(payload)
    meta_doc = {"config": dataclasses.asdict(cfg), "convergence": meta}
    with open(cfg.out + ".meta.json", "w", encoding="utf-8", newline="") as fh:
        fh.write(json.dumps(meta_doc, sort_keys=True, indent=2) + "\n")


def run(cfg: RunConfig) -> int:
    dispatch = {
        "energy": _run_single,
        "force": _run_single,
        "torque": _run_single,
        "sweep": _run_sweep,
        "figure": _run_figure,
        "omega": _run_omega,
        "pfa": _run_pfa,
    }
    columns, rows, meta = dispatch[cfg.command](cfg)
    _emit(cfg, columns, rows, meta)
    return 0


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = _merge_config(args)
        return run(cfg)
    except (ConfigError, DomainError, ZeroModeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        if exc.history:
            print(f"successive estimates: {exc.history}", file=sys.stderr)
        return 3
    except CasimirError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
