"""Command-line front end.

    mixspec solve  --config PATH [--out DIR]
    mixspec verify (--config PATH | --all) [--only NAME] [--out DIR] [--seed INT] [--threads INT]
    mixspec sweep  --config PATH [--out DIR] [--threads INT]

Exit codes: 0 pass, 1 fail, 2 config or precondition error, 3 numerical
error, 4 inconclusive (and nothing failed).  ``MIXSPEC_OUT`` overrides
``--out``.
"""
from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import logging
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .config import RunConfig, load_config, load_preset
from .eigensolver import build_pencil, smallest_eigenpairs
from .errors import ConfigError, MixspecError, NumericalError
from .experiments import CHECKS, CSV_COLUMNS, FAIL, INCONCLUSIVE, ExperimentReport, solve, table_row
from .grid import grid_from_json
from .measure import SignedMeasure

log = logging.getLogger("mixspec")

EXIT_PASS, EXIT_FAIL, EXIT_CONFIG, EXIT_NUMERICAL, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4


def atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def to_json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def to_csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in r])
    return buf.getvalue()


def _out_dir(args) -> Path:
    return Path(os.environ.get("MIXSPEC_OUT") or args.out)


def cmd_solve(args) -> int:
    cfg = load_config(args.config)
    grid = cfg.grid()
    measure = cfg.signed_measure()
    if cfg.k > grid.n:
        raise ConfigError("/k", f"k={cfg.k} exceeds the {grid.n} interior nodes")
    res = smallest_eigenpairs(build_pencil(grid, measure), k=cfg.k, tol=cfg.tol)
    out = _out_dir(args)
    payload = res.to_json()
    payload["parameters"] = {"domain": cfg.domain, "measure": measure.to_json(), "k": cfg.k, "tol": cfg.tol}
    atomic_write(out / "eigen_result.json", to_json_text(payload))
    header = ["x", "component"] + [f"v{j + 1}" for j in range(res.k)]
    rows = [[float(x), int(c), *map(float, res.vectors[i])]
            for i, (x, c) in enumerate(zip(grid.x, grid.component))]
    atomic_write(out / "eigenvectors.csv", to_csv_text(header, rows))
    print(f"lambda1 {float(res.lambdas[0])!r}")
    return EXIT_PASS


def _run_check(spec, seed: int) -> ExperimentReport:
    fn = CHECKS[spec.kind]
    params = dict(spec.params)
    params.setdefault("name", spec.name)
    if "seed" in inspect.signature(fn).parameters:
        params["seed"] = seed
    try:
        return fn(**params)
    except NumericalError:
        raise
    except (MixspecError, TypeError, ValueError, IndexError) as exc:
        raise ConfigError(f"{spec.pointer}/params", f"{spec.name}: {exc}") from None


def _map(fn, items, threads: int):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        # map() yields in submission order, so report order is the declared order
        return list(ex.map(fn, items))


def cmd_verify(args) -> int:
    if args.all:
        cfg = load_preset("verify_all")
    elif args.config:
        cfg = load_config(args.config)
    else:
        raise ConfigError("/", "verify needs --config PATH or --all")
    seed = cfg.seed if args.seed is None else args.seed
    checks = cfg.checks
    if args.only:
        checks = [c for c in checks if args.only in (c.name, c.kind)]
        if not checks:
            raise ConfigError("/checks", f"no check named {args.only!r}")
    if not checks:
        raise ConfigError("/checks", "no checks configured")
    reports = _map(lambda c: _run_check(c, seed), checks, args.threads)
    out = _out_dir(args)
    summary = []
    for r in reports:
        atomic_write(out / f"{r.name}.json", to_json_text(r.to_json()))
        if r.table:
            atomic_write(out / f"{r.name}.csv",
                         to_csv_text(CSV_COLUMNS, [[row[c] for c in CSV_COLUMNS] for row in r.table]))
        summary.append({"name": r.name, "verdict": r.verdict})
        print(f"{r.name} {r.verdict}")
    atomic_write(out / "summary.json", to_json_text({"seed": seed, "checks": summary}))
    verdicts = {r.verdict for r in reports}
    if FAIL in verdicts:
        return EXIT_FAIL
    if INCONCLUSIVE in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def _sweep_point(cfg: RunConfig, axis: str, value: float, measure: SignedMeasure):
    if axis in ("h", "n_per_unit"):
        dom = {"intervals": cfg.domain["intervals"], axis: value}
        try:
            grid = grid_from_json(dom)
        except MixspecError as exc:
            raise ConfigError("/sweep/values", str(exc)) from None
        _, res = solve(grid, measure.plus, measure.minus, k=cfg.k, s_bar=measure.s_bar, tol=cfg.tol)
    else:
        try:
            _, res = solve(cfg.grid(), measure.plus, [(value, 1.0)], k=cfg.k, s_bar=measure.s_bar, tol=cfg.tol)
        except (MixspecError, ValueError) as exc:
            if isinstance(exc, NumericalError):
                raise
            raise ConfigError("/sweep/values", str(exc)) from None
    return table_row(value, res)


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    if cfg.sweep is None:
        raise ConfigError("/sweep", "sweep needs a sweep axis")
    measure = cfg.signed_measure()
    axis = cfg.sweep["axis"]
    if axis == "s_minus":
        cfg.grid()  # surface domain errors before the sweep starts
    rows = _map(lambda v: _sweep_point(cfg, axis, v, measure), cfg.sweep["values"], args.threads)
    out = _out_dir(args)
    atomic_write(out / "sweep.csv", to_csv_text(CSV_COLUMNS, [[r[c] for c in CSV_COLUMNS] for r in rows]))
    for r in rows:
        print(f"{axis}={r['parameter']!r} lambda1={r['lambda1']!r} gap={r['gap']!r}")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mixspec", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="run configuration (JSON)")
        sp.add_argument("--out", default="mixspec_out", help="output directory")
        sp.add_argument("--threads", type=int, default=1, help="worker threads across checks/sweep points")
        sp.add_argument("--seed", type=int, default=None, help="seed for random probe vectors")

    common(sub.add_parser("solve", help="smallest eigenpairs of one pencil"))
    v = sub.add_parser("verify", help="run the theorem checks")
    common(v)
    v.add_argument("--all", action="store_true", help="run every shipped preset check")
    v.add_argument("--only", help="run only the check with this name or kind")
    common(sub.add_parser("sweep", help="parameter sweep to CSV"))
    return p


COMMANDS = {"solve": cmd_solve, "verify": cmd_verify, "sweep": cmd_sweep}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_PASS
    if args.command in ("solve", "sweep") and not args.config:
        log.error("/: --config is required")
        return EXIT_CONFIG
    try:
        return COMMANDS[args.command](args)
    except NumericalError as exc:
        log.error("numerical error: %s", exc)
        return EXIT_NUMERICAL
    except (MixspecError, IndexError) as exc:
        log.error("%s", exc)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
