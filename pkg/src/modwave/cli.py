"""Command-line front end.

Subcommands: classify, sweep, smallamp, bloch-check, validate.
Exit codes for classify: 0 stable, 10 unstable, 20 degenerate,
30 hypothesis-failed, 1 error.  Reports embed the resolved-convention
fingerprint so numbers stay comparable across versions.  Sweeps run on a
worker pool (--jobs / MODWAVE_JOBS) and emit rows in row-major grid order
regardless of parallelism.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from multiprocessing import Pool

import numpy as np

from . import __version__
from .bloch import (bo_assembler, local_assembler, match_slope_sets,
                    modulation_slopes)
from .bo import BOWaveParams, bo_conserved, bo_modulation_speeds, bo_quadrature_MP
from .conventions import fingerprint
from .equations import (EquationSpec, WaveParams, kdv_params_from_roots,
                        kdv_spec, mkdv_spec, schamel_spec)
from .errors import ConfigError, ModwaveError
from .mi_index import classify, kdv_closed_forms, modulation_slope_prediction
from .picard_fuchs import param_jacobian
from .smallamp import (benjamin_feir_cutoff, delta_constant_state,
                       delta_discriminant, delta_ilw, gamma_ilw, lambda_fkdv,
                       lambda_index, whitham_symbol)
from .waves import cnoidal_period, quadrature_TMPH, resolve_profile

EXIT_BY_LABEL = {"stable": 0, "unstable": 10, "degenerate": 20,
                 "hypothesis-failed": 30}

CSV_SCHEMA = "modwave-report-1"
CSV_COLUMNS = ["equation", "a", "E", "c", "branch", "classification",
               "delta_mi", "mu1", "mu2", "mu3", "T", "M", "P",
               "convention_fingerprint"]


def equation_from_name(name: str) -> EquationSpec:
    table = {
        "kdv": kdv_spec,
        "mkdv-focusing": lambda: mkdv_spec(+1),
        "mkdv-defocusing": lambda: mkdv_spec(-1),
        "schamel": schamel_spec,
    }
    if name not in table:
        raise ConfigError(f"unknown equation {name!r}", field="equation")
    return table[name]()


def _report_record(name: str, params: WaveParams, branch: int, report, dt: float) -> dict:
    mu = [complex(x) for x in np.atleast_1d(report.mu_roots)]
    rec = {
        "equation": name,
        "a": params.a, "E": params.E, "c": params.c, "branch": branch,
        "classification": report.classification,
        "delta_mi": None if np.isnan(report.delta_mi) else report.delta_mi,
        "mu_roots": [[m.real, m.imag] for m in mu],
        "hypothesis_flags": report.hypothesis_flags,
        "diagnostics": {k: v for k, v in report.diagnostics.items()
                        if k not in ("slopes",)},
        "timing_s": dt,
        "version": __version__,
        "convention_fingerprint": fingerprint(),
    }
    return rec


def _csv_row(rec: dict) -> list:
    mu = rec["mu_roots"] + [[float("nan"), 0.0]] * (3 - len(rec["mu_roots"]))
    fmt = lambda c: f"{c[0]!r}{'+' if c[1] >= 0 else ''}{c[1]!r}j"
    return [rec["equation"], repr(rec["a"]), repr(rec["E"]), repr(rec["c"]),
            rec["branch"], rec["classification"],
            "" if rec["delta_mi"] is None else repr(rec["delta_mi"]),
            fmt(mu[0]), fmt(mu[1]), fmt(mu[2]),
            repr(rec["diagnostics"].get("T", float("nan"))),
            repr(rec["diagnostics"].get("M", float("nan"))),
            repr(rec["diagnostics"].get("P", float("nan"))),
            rec["convention_fingerprint"]]


def _emit(records: list, fmt: str, out_path) -> str:
    if fmt == "json":
        body = json.dumps(records if len(records) != 1 else records[0],
                          indent=2, sort_keys=True)
    else:
        buf = io.StringIO()
        buf.write(f"#schema={CSV_SCHEMA}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            writer.writerow(_csv_row(rec))
        body = buf.getvalue()
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(body if body.endswith("\n") else body + "\n")
    else:
        sys.stdout.write(body if body.endswith("\n") else body + "\n")
    return body


def _load_config(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config parse error at line {exc.lineno}: {exc.msg}",
                          field="config")
    except OSError as exc:
        raise ConfigError(str(exc), field="config")


def _require_number(cfg: dict, field: str):
    val = cfg.get(field)
    if not isinstance(val, (int, float)):
        raise ConfigError(f"missing or non-numeric field {field!r}", field=field)
    return float(val)


def _classify_once(args_tuple):
    name, a, E, c, branch, tol_quad = args_tuple
    spec = equation_from_name(name)
    t0 = time.perf_counter()
    report = classify(spec, WaveParams(a, E, c), branch=branch, tol_quad=tol_quad)
    return _report_record(name, WaveParams(a, E, c), branch, report,
                          time.perf_counter() - t0)


def cmd_classify(args) -> int:
    cfg = _load_config(args.config) if args.config else {}
    name = args.equation or cfg.get("equation", {}).get("name")
    if not name:
        raise ConfigError("equation not specified", field="equation")
    p = cfg.get("parameters", {})
    a = args.a if args.a is not None else _require_number(p, "a")
    E = args.E if args.E is not None else _require_number(p, "E")
    c = args.c if args.c is not None else _require_number(p, "c")
    branch = args.branch if args.branch is not None else int(p.get("branch", 0))
    rec = _classify_once((name, a, E, c, branch, args.tol_quad))
    _emit([rec], args.format, args.out)
    return EXIT_BY_LABEL.get(rec["classification"], 1)


def cmd_sweep(args) -> int:
    cfg = _load_config(args.config)
    name = args.equation or cfg.get("equation", {}).get("name")
    if not name:
        raise ConfigError("equation not specified", field="equation")
    grid_cfg = cfg.get("grid")
    if not isinstance(grid_cfg, dict) or not grid_cfg:
        raise ConfigError("sweep needs a non-empty 'grid' object", field="grid")
    axes = []
    for key in ("a", "E", "c"):
        if key in grid_cfg:
            spec_g = grid_cfg[key]
            if not (isinstance(spec_g, list) and len(spec_g) == 3 and spec_g[2] >= 1):
                raise ConfigError(f"grid.{key} must be [lo, hi, n>=1]", field=f"grid.{key}")
            axes.append((key, np.linspace(spec_g[0], spec_g[1], int(spec_g[2]))))
        else:
            axes.append((key, np.array([_require_number(cfg.get("parameters", {}), key)])))
    branch = int(cfg.get("parameters", {}).get("branch", 0))
    tasks = [(name, float(av), float(Ev), float(cv), branch, args.tol_quad)
             for av in axes[0][1] for Ev in axes[1][1] for cv in axes[2][1]]
    jobs = int(os.environ.get("MODWAVE_JOBS", args.jobs))
    if jobs > 1:
        with Pool(jobs) as pool:
            records = pool.map(_classify_once, tasks)
    else:
        records = [_classify_once(t) for t in tasks]
    _emit(records, args.format, args.out)
    return 0


def cmd_smallamp(args) -> int:
    rows = []
    if args.symbol == "whitham":
        sym = whitham_symbol()
        ks = np.arange(args.k_min, args.k_max + 0.5 * args.k_step, args.k_step)
        for k in ks:
            lam, gam = lambda_index(float(k), sym)
            rows.append({"k": float(k), "Gamma": gam, "Lambda": lam})
        kstar, bracket = benjamin_feir_cutoff(sym, max(args.k_min, 0.5),
                                              min(args.k_max, 2.0))
        result = {"symbol": "whitham", "rows": rows,
                  "k_star": kstar, "bracket": list(bracket),
                  "convention_fingerprint": fingerprint()}
    elif args.symbol == "fkdv":
        alphas = [float(x) for x in args.alphas.split(",")] if args.alphas else [args.alpha]
        for al in alphas:
            rows.append({"alpha": al, "Lambda_fKdV": lambda_fkdv(args.k, al),
                         "sign": int(np.sign(lambda_fkdv(args.k, al)))})
        result = {"symbol": "fkdv", "k": args.k, "rows": rows,
                  "convention_fingerprint": fingerprint()}
    else:
        ks = np.arange(args.k_min, args.k_max + 0.5 * args.k_step, args.k_step)
        Hs = np.arange(args.H_min, args.H_max + 0.5 * args.H_step, args.H_step)
        for k in ks:
            for H in Hs:
                rows.append({"k": float(k), "H": float(H),
                             "Delta_ILW": delta_ilw(float(k), float(H)),
                             "Gamma_ILW": float(gamma_ilw(float(k) * float(H)))})
        result = {"symbol": "ilw", "rows": rows,
                  "all_positive": bool(all(r["Delta_ILW"] > 0 for r in rows)),
                  "convention_fingerprint": fingerprint()}
    if args.format == "csv":
        buf = io.StringIO()
        buf.write(f"#schema={CSV_SCHEMA}-smallamp\n")
        writer = csv.writer(buf, lineterminator="\n")
        cols = list(rows[0].keys())
        writer.writerow(cols)
        for r in rows:
            writer.writerow([repr(r[c]) if isinstance(r[c], float) else r[c]
                             for c in cols])
        body = buf.getvalue()
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(body)
        else:
            sys.stdout.write(body)
    else:
        _emit_json = json.dumps(result, indent=2, sort_keys=True)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(_emit_json + "\n")
        else:
            sys.stdout.write(_emit_json + "\n")
    return 0


def cmd_bloch_check(args) -> int:
    tol = args.tol
    if args.equation == "bo":
        params = BOWaveParams(a=args.a, k=args.k, c=args.c)
        assembler = bo_assembler(params, N=args.modes)
        measured = modulation_slopes(assembler)
        predicted = np.sort_complex(bo_modulation_speeds(params).astype(complex))
        scale = max(np.max(np.abs(predicted)), 1.0)
    else:
        spec = equation_from_name(args.equation)
        params = WaveParams(args.a, args.E, args.c)
        profile = resolve_profile(spec, params, branch=args.branch)
        assembler = local_assembler(profile, N=args.modes)
        measured = modulation_slopes(assembler)
        predicted = modulation_slope_prediction(param_jacobian(spec, params,
                                                               branch=args.branch))
        scale = max(np.max(np.abs(predicted)), 1.0)
    mismatch = match_slope_sets(measured, predicted) / scale
    print(f"measured : {np.round(measured, 6)}")
    print(f"predicted: {np.round(predicted, 6)}")
    print(f"relative mismatch: {mismatch:.3e} (tol {tol:.1e})")
    return 0 if mismatch < tol else 1


def cmd_validate(args) -> int:
    """Oracle suites: finite differences vs Picard-Fuchs, closed forms vs
    quadrature, Bloch slopes vs the dispersion cubic."""
    failures = 0

    def check(name, resid, tol):
        nonlocal failures
        ok = resid < tol
        failures += 0 if ok else 1
        print(f"{'PASS' if ok else 'FAIL'}  {name}: residual {resid:.3e} (tol {tol:.1e})")

    # Picard-Fuchs vs finite differences, KdV + mKdV points
    def fd_jacobian(spec, params, h):
        J = np.zeros((3, 3))
        for j, (da, dE, dc) in enumerate(np.eye(3) * h):
            up = quadrature_TMPH(spec, WaveParams(params.a + da, params.E + dE,
                                                  params.c + dc), tol_quad=1e-13)
            dn = quadrature_TMPH(spec, WaveParams(params.a - da, params.E - dE,
                                                  params.c - dc), tol_quad=1e-13)
            J[:, j] = (np.array(up[:3]) - np.array(dn[:3])) / (2 * h)
        return J

    kdv = kdv_spec()
    pk = kdv_params_from_roots(3.0, 1.0, 0.0)
    Jp = param_jacobian(kdv, pk)
    Jfd = fd_jacobian(kdv, pk, 1e-5)
    check("kdv picard-fuchs vs finite differences",
          float(np.max(np.abs(Jp.J - Jfd) / np.maximum(np.abs(Jfd), 1e-3))), 1e-6)

    # a = 0 defocusing point: several entries vanish by symmetry, so the
    # comparison floors the denominator at 1e-3
    mk = mkdv_spec(-1)
    pm = WaveParams(0.0, 0.5, 1.0)
    Jp2 = param_jacobian(mk, pm)
    Jfd2 = fd_jacobian(mk, pm, 1e-5)
    check("mkdv picard-fuchs vs finite differences",
          float(np.max(np.abs(Jp2.J - Jfd2) / np.maximum(np.abs(Jfd2), 1e-3))), 1e-6)

    # KdV closed forms vs the Picard-Fuchs route
    T_E, TM, TMP, _ = kdv_closed_forms(Jp.T, Jp.M, pk.a, pk.E, pk.c)
    check("kdv closed forms vs picard-fuchs",
          max(abs(T_E - Jp.T_E), abs(TM - Jp.TM_aE), abs(TMP - Jp.TMP_aEc))
          / max(abs(Jp.TMP_aEc), 1.0), 1e-8)

    # cnoidal period vs quadrature
    T_quad = quadrature_TMPH(kdv, pk)[0]
    check("cnoidal period vs quadrature",
          abs(T_quad - cnoidal_period(3.0, 1.0, 0.0)) / T_quad, 1e-10)

    # BO closed forms vs trapezoid quadrature
    bop = BOWaveParams(0.0, 1.0, -2.0)
    Mq, Pq = bo_quadrature_MP(bop)
    Mc, Pc, _ = bo_conserved(bop)
    check("bo conserved closed forms vs quadrature",
          max(abs(Mq - Mc), abs(Pq - Pc)), 1e-8)

    # Bloch slopes vs dispersion cubic on the KdV test wave
    profile = resolve_profile(kdv, pk)
    measured = modulation_slopes(local_assembler(profile, N=48))
    predicted = modulation_slope_prediction(Jp)
    check("bloch slopes vs dispersion cubic (kdv)",
          match_slope_sets(measured, predicted) / float(np.max(np.abs(predicted))),
          1e-3)

    # Whitham constant-state discriminant vs closed product form
    sym = whitham_symbol()
    resid = max(abs(delta_discriminant(2.0, 0.0, xi, sym)
                    - delta_constant_state(2.0, xi, sym))
                / abs(delta_constant_state(2.0, xi, sym))
                for xi in (1e-2, 1e-3))
    check("whitham constant-state discriminant vs product formula", resid, 1e-10)

    print(f"{'ALL CHECKS PASSED' if failures == 0 else f'{failures} CHECK(S) FAILED'}")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modwave",
                                 description="Modulational stability of periodic "
                                             "traveling waves of KdV type")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--equation", help="kdv | mkdv-focusing | mkdv-defocusing | schamel")
        p.add_argument("--config", help="JSON analysis request")
        p.add_argument("--out", help="output path (stdout if omitted)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--tol-quad", dest="tol_quad", type=float, default=None)
        p.add_argument("--modes", type=int, default=64, help="Bloch truncation N")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("classify", help="classify one wave")
    common(p)
    p.add_argument("--a", type=float)
    p.add_argument("--E", type=float)
    p.add_argument("--c", type=float)
    p.add_argument("--branch", type=int, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="grid sweep from a config file")
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("smallamp", help="small-amplitude index tables")
    common(p)
    p.add_argument("--symbol", choices=("whitham", "fkdv", "ilw"), default="whitham")
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--k-min", dest="k_min", type=float, default=0.1)
    p.add_argument("--k-max", dest="k_max", type=float, default=3.0)
    p.add_argument("--k-step", dest="k_step", type=float, default=0.01)
    p.add_argument("--alpha", type=float, default=0.75)
    p.add_argument("--alphas", help="comma-separated alpha sweep")
    p.add_argument("--H-min", dest="H_min", type=float, default=0.25)
    p.add_argument("--H-max", dest="H_max", type=float, default=5.0)
    p.add_argument("--H-step", dest="H_step", type=float, default=0.25)
    p.set_defaults(func=cmd_smallamp)

    p = sub.add_parser("bloch-check", help="compare Bloch slopes with theory")
    common(p)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--E", type=float, default=0.0)
    p.add_argument("--c", type=float, default=-2.0)
    p.add_argument("--k", type=float, default=1.0, help="BO wave number")
    p.add_argument("--branch", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-3)
    p.set_defaults(func=cmd_bloch_check)

    p = sub.add_parser("validate", help="run the oracle cross-check suites")
    common(p)
    p.set_defaults(func=cmd_validate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if getattr(args, "tol_quad", None) is not None and args.tol_quad <= 0:
            raise ConfigError("tolerances must be positive", field="tol_quad")
        return args.func(args)
    except ConfigError as exc:
        field = f" (field: {exc.field})" if exc.field else ""
        print(f"error: {exc}{field}", file=sys.stderr)
        return 1
    except ModwaveError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
