"""Command-line entry point: ``limitshapes <subcommand> ...``.

Exit status is 0 on success, 2 on a usage error and 1 when a verification
fails; in the last case a JSON failure record goes to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from . import shape as sh
from .biject import BIJECTION_NAMES, named_bijection, verify_bijection
from .core import (
    ClassSpec,
    Distinct,
    Odd,
    OddDistinct,
    Partition,
    PartsIn,
    Unrestricted,
    parse_class,
)
from .curveops import PIPELINES
from .enumeration import count, count_table, enumerate_all
from .sampler import DEFAULT_SEED, SamplerConfig, SamplingError, run_convergence, sample_many

SIG = 12

IDENTITY_PAIRS: tuple[tuple[str, str], ...] = (
    ("parts:triangular", "convex:2"),
    ("parts:binom3", "convex:3"),
    ("odd", "distinct"),
    ("glaisher-o:1", "glaisher-d:1"),
    ("glaisher-o:2", "glaisher-d:2"),
    ("glaisher-o:3", "glaisher-d:3"),
    ("self-conjugate", "odd-distinct"),
    ("parts:integers:a=3", "parts:not-div-3"),
    ("mod4", "lebesgue"),
    ("romik-a", "romik-b"),
    *((f"even-largest:{k}", f"even-count:{k}") for k in range(1, 9)),
)


class UsageError(ValueError):
    pass


class VerificationFailure(RuntimeError):
    def __init__(self, record: dict):
        super().__init__(record.get("detail", "verification failed"))
        self.record = record


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------


def _fmt(v):
    if isinstance(v, float):
        return format(v, f".{SIG}g")
    return v


def _jsonable(v):
    if isinstance(v, (np.floating, float)):
        v = float(v)
        return float(format(v, f".{SIG}g")) if math.isfinite(v) else None
    if isinstance(v, np.integer):
        return int(v)
    return v


def render(command: str, columns: Sequence[str], rows: Sequence[Sequence], fmt: str, meta: dict | None = None) -> str:
    if fmt == "json":
        doc = {"command": command, "columns": list(columns), "rows": [[_jsonable(v) for v in r] for r in rows]}
        if meta:
            doc["meta"] = {k: _jsonable(v) for k, v in meta.items()}
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(v) for v in r])
    return buf.getvalue()


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit(args, command, columns, rows, meta=None, title: str = "") -> None:
    _write(render(command, columns, rows, args.format, meta), args.out)
    if getattr(args, "plot", None):
        _plot(columns, rows, args.plot, title or command)


def _plot(columns, rows, path, title: str) -> None:
    try:
        from .plotting import plot_table

        plot_table(columns, rows, path, title)
    except ImportError as exc:
        raise UsageError("--plot needs matplotlib (install the plot extra)") from exc


def parse_grid(text: str) -> np.ndarray:
    try:
        a, b, step = (float(x) for x in text.split(":"))
    except ValueError as exc:
        raise UsageError(f"grid must look like a:b:step, got {text!r}") from exc
    if step <= 0 or b < a:
        raise UsageError("grid needs a <= b and step > 0")
    k = int(round((b - a) / step))
    return np.round(a + step * np.arange(k + 1), 12)


def parse_params(items: Sequence[str] | None) -> dict[str, float]:
    out = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        out[key.strip()] = float(val)
    return out


def _class(text: str) -> ClassSpec:
    try:
        return parse_class(text)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc


def _safe(f, t: float) -> float:
    try:
        return float(f(t))
    except (ValueError, ArithmeticError):
        return float("nan")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_count(args) -> None:
    c = _class(args.cls)
    if args.table:
        table = count_table(c, args.n)
        _emit(args, "count", ["n", "count"], [(n, v) for n, v in enumerate(table.counts)])
    elif args.format == "json":
        _emit(args, "count", ["n", "count"], [(args.n, count(c, args.n))])
    else:
        _write(f"{count(c, args.n)}\n", args.out)


def cmd_enumerate(args) -> None:
    parts = enumerate_all(_class(args.cls), args.n)
    if args.format == "json":
        _emit(args, "enumerate", ["partition"], [(str(p),) for p in parts])
    else:
        _write("".join(f"{p}\n" for p in parts), args.out)


def _sampler_config(args) -> SamplerConfig:
    try:
        return SamplerConfig.for_class(_class(args.cls), args.n, mode=args.mode, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_sample(args) -> None:
    cfg = _sampler_config(args)
    parts = sample_many(cfg, args.count)
    if args.format == "json":
        _emit(args, "sample", ["partition"], [(str(p),) for p in parts], {"seed": args.seed, "mode": args.mode})
    else:
        _write("".join(f"{p}\n" for p in parts), args.out)


def reference_curve(c: ClassSpec):
    """The limit shape a convergence run compares against."""
    match c:
        case Unrestricted():
            return sh.named_curve("phi")
        case Distinct():
            return sh.named_curve("psi")
        case Odd():
            return sh.named_curve("odd")
        case OddDistinct():
            return sh.named_curve("odd-distinct")
        case PartsIn(U=U, a=a) if U.coeffs is not None:
            if a is None:
                return sh.named_curve("phi-rB", {"r": U.r, "B": U.B})
            return sh.named_curve("phi-rBa", {"r": U.r, "B": U.B, "a": a})
    raise UsageError(f"no reference shape known for {c.spec}; pass --reference")


def cmd_converge(args) -> None:
    cfg = _sampler_config(args)
    c = _class(args.cls)
    ref = sh.named_curve(args.reference, parse_params(args.param)) if args.reference else reference_curve(c)
    grid = parse_grid(args.grid)
    rep = run_convergence(cfg, ref, args.replicas, grid)
    meta = {
        "replicas": rep.replicas,
        "seed": rep.seed,
        "mode": rep.mode,
        "mean_sup_deviation": rep.mean_sup_deviation,
        "acceptance_rate": rep.acceptance_rate,
    }
    _emit(args, "converge", ["t", "empirical_mean", "q05", "q95", "theory"], rep.rows(), meta, f"{c.spec}, n={args.n}")


def cmd_bijection(args) -> None:
    try:
        b = named_bijection(args.name, r=args.r, m=args.m, k=args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.apply is not None:
        p = Partition.parse(args.apply)
        fn = b.inverse if args.inverse else b.forward
        if fn is None:
            raise UsageError(f"{b.name} has no inverse")
        try:
            q = fn(p)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if args.format == "json":
            _emit(args, "bijection", ["input", "output"], [(str(p), str(q))], {"name": b.name})
        else:
            _write(f"{q}\n", args.out)
        return
    if not args.verify:
        raise UsageError("bijection needs --apply or --verify")
    rep = verify_bijection(b, args.nmax)
    rows = [(n, d, c, "PASS" if ok else "FAIL") for n, d, c, ok in rep.rows]
    _emit(args, "bijection", ["n", "domain", "codomain", "status"], rows, {"name": b.name})
    if not rep.ok:
        raise VerificationFailure({"command": "bijection", "name": b.name, "detail": rep.failure})


def cmd_shape(args) -> None:
    try:
        curve = sh.named_curve(args.name, parse_params(args.param))
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    grid = parse_grid(args.grid)
    _emit(args, "shape", ["t", "value"], [(float(t), _safe(curve, t)) for t in grid], {"name": curve.name}, curve.name)


def constants_table() -> list[tuple[str, float]]:
    rows = [
        ("d(1,1)", sh.const_d(1, 1)),
        ("d(1,1,2)", sh.const_d(1, 1, 2)),
        ("d(2,1/2)", sh.const_d(2, 0.5)),
        ("convex_constant", sh.convex_constant()),
        ("romik_constant", sh.ROMIK_A),
        ("parts_constant", sh.parts_constant()),
        ("durfee_constant", sh.durfee_constant()),
        ("durfee_quintic_root", sh.durfee_quintic_root()),
        ("durfee_quintic_value", sh.durfee_quintic_value()),
        ("lebesgue_x0", sh.LEBESGUE_X0),
    ]
    for d in (1, 2, 3):
        y, g, w, c = sh.diffd_constants(d)
        rows += [(f"diff{d}_y", y), (f"diff{d}_gamma", g), (f"diff{d}_c", c)]
    return rows


def cmd_constants(args) -> None:
    _emit(args, "constants", ["name", "value"], constants_table())


def cmd_pipeline(args) -> None:
    if args.name not in PIPELINES:
        raise UsageError(f"unknown pipeline {args.name!r}; choose from {', '.join(PIPELINES)}")
    res = PIPELINES[args.name]()
    grid = parse_grid(args.grid)
    prefix = args.out or f"pipeline_{args.name}"
    written = []
    last = len(res.stages) - 1
    for idx, stage in enumerate(res.stages):
        cols = ["t"] + [f"curve{i}" for i in range(len(stage.curves))]
        rows = []
        for t in grid:
            row = [float(t)] + [_safe(c, t) for c in stage.curves]
            if idx == last:
                row.append(_safe(res.target, t))
            rows.append(row)
        if idx == last:
            cols.append("target")
        path = Path(f"{prefix}_stage{idx}_{stage.label}.{'json' if args.format == 'json' else 'csv'}")
        path.write_text(render("pipeline", cols, rows, args.format, {"pipeline": res.name, "stage": stage.label}))
        written.append((idx, stage.label, str(path)))
        if args.plot:
            _plot(cols, rows, path.with_suffix(".png"), f"{res.name}: {stage.label}")
    err = res.sup_error()
    sys.stdout.write(render("pipeline", ["stage", "label", "file"], written, "csv"))
    sys.stdout.write(f"# sup_error={err:.{SIG}g}\n")
    if not err < 1e-6:
        raise VerificationFailure({"command": "pipeline", "name": res.name, "detail": f"sup error {err:g}"})


def identities(nmax: int) -> tuple[list[tuple[str, int, int, int, str]], bool]:
    if nmax > 60:
        raise UsageError("identities supports nmax <= 60")
    rows, ok = [], True
    for left, right in IDENTITY_PAIRS:
        a = count_table(parse_class(left), nmax).counts
        b = count_table(parse_class(right), nmax).counts
        for n in range(1, nmax + 1):
            good = a[n] == b[n]
            ok &= good
            rows.append((f"{left}~{right}", n, a[n], b[n], "PASS" if good else "FAIL"))
    return rows, ok


def cmd_identities(args) -> None:
    rows, ok = identities(args.nmax)
    _emit(args, "identities", ["pair", "n", "left", "right", "status"], rows)
    if not ok:
        bad = sorted({r[0] for r in rows if r[4] == "FAIL"})
        raise VerificationFailure({"command": "identities", "detail": "count mismatch", "pairs": bad})


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


CLASS_HELP = (
    "class spec: unrestricted, distinct, odd, odd-distinct, glaisher-o:r, glaisher-d:r, convex:r, mindiff:d, "
    "romik-a, romik-b, lebesgue[:ell:k], self-conjugate, mod4, even-largest:k, even-count:k, "
    "multiples-largest:m:r:k, multiples-count:m:r:k, parts:SET[:a=N], andrews:b1,b2,...[:default=N]"
)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="limitshapes", description="Limit shapes of restricted integer partitions.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, plot: bool = False):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", help="output file (default: standard output)")
        if plot:
            sp.add_argument("--plot", metavar="PNG", help="also render a PNG (needs matplotlib)")
        return sp

    sp = common(sub.add_parser("count", help="exact count of a class at size n"))
    sp.add_argument("--class", dest="cls", required=True, help=CLASS_HELP)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--table", action="store_true", help="print counts for 0..n")
    sp.set_defaults(func=cmd_count)

    sp = common(sub.add_parser("enumerate", help="list the partitions of n in a class"))
    sp.add_argument("--class", dest="cls", required=True, help=CLASS_HELP)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = common(sub.add_parser("sample", help="exact uniform samples"))
    sp.add_argument("--class", dest="cls", required=True, help=CLASS_HELP)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mode", choices=("plain", "pdc"), default="plain")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--count", type=int, default=1)
    sp.set_defaults(func=cmd_sample)

    sp = common(sub.add_parser("converge", help="scaled diagrams of samples against the limit shape"), plot=True)
    sp.add_argument("--class", dest="cls", required=True, help=CLASS_HELP)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--replicas", type=int, default=100)
    sp.add_argument("--grid", default="0.1:3:0.1")
    sp.add_argument("--mode", choices=("plain", "pdc"), default="pdc")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--reference", choices=sh.CURVE_NAMES)
    sp.add_argument("--param", action="append", metavar="KEY=VALUE")
    sp.set_defaults(func=cmd_converge)

    sp = common(sub.add_parser("bijection", help="apply or verify a named bijection"))
    sp.add_argument("--name", required=True, choices=BIJECTION_NAMES)
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--k", type=int, default=4)
    sp.add_argument("--apply", metavar="PARTS")
    sp.add_argument("--inverse", action="store_true", help="apply the inverse map")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--nmax", type=int, default=30)
    sp.set_defaults(func=cmd_bijection)

    sp = common(sub.add_parser("shape", help="evaluate a limit-shape curve"), plot=True)
    sp.add_argument("--name", required=True, choices=sh.CURVE_NAMES)
    sp.add_argument("--param", action="append", metavar="KEY=VALUE")
    sp.add_argument("--grid", default="0.1:3:0.1")
    sp.set_defaults(func=cmd_shape)

    sp = common(sub.add_parser("constants", help="table of limit-shape constants"))
    sp.set_defaults(func=cmd_constants)

    sp = sub.add_parser("pipeline", help="run a curve-transformation pipeline")
    sp.add_argument("--name", required=True, choices=tuple(PIPELINES))
    sp.add_argument("--grid", default="0.1:3:0.1")
    sp.add_argument("--out", help="file prefix; stage k is written to PREFIX_stageK_LABEL.csv")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--plot", action="store_true", help="write a PNG next to each stage file")
    sp.set_defaults(func=cmd_pipeline)

    sp = common(sub.add_parser("identities", help="check equinumerosity identities by exact counts"))
    sp.add_argument("--nmax", type=int, default=40)
    sp.set_defaults(func=cmd_identities)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"limitshapes {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailure as exc:
        print(json.dumps({"status": "fail", **exc.record}), file=sys.stderr)
        return 1
    except SamplingError as exc:
        print(json.dumps({"status": "fail", "command": args.command, "detail": str(exc), "attempts": exc.attempts}), file=sys.stderr)
        return 1
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
