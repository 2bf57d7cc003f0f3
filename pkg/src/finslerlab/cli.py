"""Command-line front end.

    finslerlab validate-metric --spec space.json
    finslerlab s-curvature --spec space.json --direction 1,1
    finslerlab mean-berwald --spec space.json --direction 1,1 --format csv
    finslerlab verify-formulas --spec space.json --samples 8
    finslerlab isotropy --spec space.json
    finslerlab volume-coeff --spec space.json

Exit status: 0 on success, 1 on a parse or validation failure, 2 on a
numerical failure (singular direction, quadrature divergence, ...).
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .algebra import validate_spec
from .audit import run_audit
from .curvature import (classify_isotropy, mean_berwald_closed, mean_berwald_oracle,
                        s_curvature_generic, sample_directions)
from .errors import FinslerError, InputError, NumericalError
from .phi import Kropina, validity_check
from .specfile import load_spec
from .volume import f_of_b, fb_log_derivative

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 8
THREADS_ENV = "FINSLERLAB_THREADS"


def fmt(x: float) -> str:
    return f"{x:.9g}"


def fmt_vec(y) -> str:
    return ",".join(fmt(float(c)) for c in y)


def parse_direction(text: str) -> np.ndarray:
    try:
        return np.array([float(c) for c in text.split(",")])
    except ValueError as exc:
        raise InputError(f"bad --direction {text!r}: expected comma-separated numbers") from exc


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "0")
    try:
        n = int(raw)
    except ValueError as exc:
        raise InputError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
    return n if n > 0 else (os.cpu_count() or 1)


def pmap(func, items):
    """Order-preserving map, parallel up to the thread cap."""
    items = list(items)
    workers = min(thread_count(), max(1, len(items)))
    if workers == 1:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


class Output:
    def __init__(self, kind: str):
        self.kind = kind
        self.buf = io.StringIO()
        self.writer = csv.writer(self.buf, lineterminator="\n")

    def line(self, text: str = ""):
        self.buf.write(text + "\n")

    def scalar(self, label: str, value: float, text: str | None = None):
        if self.kind == "csv":
            self.writer.writerow([label, fmt(value)])
        else:
            self.line(text if text is not None else f"{label}: {fmt(value)}")

    def matrix(self, title: str, E: np.ndarray):
        if self.kind == "csv":
            self.writer.writerow(["i", "j", "value"])
            for i in range(E.shape[0]):
                for j in range(E.shape[1]):
                    self.writer.writerow([i + 1, j + 1, fmt(E[i, j])])
        else:
            self.line(title)
            for row in E:
                self.line("  " + "  ".join(f"{fmt(x):>16}" for x in row))


def _directions(args, spec, model) -> np.ndarray:
    if args.direction:
        dirs = [parse_direction(d) for d in args.direction]
        for d in dirs:
            if d.shape != (spec.n,):
                raise InputError(f"direction {fmt_vec(d)} has {d.size} components, expected {spec.n}")
        return np.array(dirs)
    dirs = sample_directions(spec, args.samples, args.seed, model=model)
    if len(dirs) == 0:
        raise NumericalError("no regular direction could be sampled")
    return dirs


def _model(args, loaded):
    if args.m is not None:
        return Kropina(args.m)
    return loaded.phi


def _kropina_m(model) -> float:
    if not isinstance(model, Kropina):
        raise InputError("this command needs a kropina metric (set phi.family or pass --m)")
    return model.m


def cmd_validate(args, loaded, out: Output) -> int:
    spec, model = loaded.spec, _model(args, loaded)
    report = validate_spec(spec)
    if not report.ok:
        out.line(str(report))
        return 1
    validity = validity_check(model, spec.b)
    text = f"valid, b={fmt(spec.b)}, {model.describe()}"
    if model.singular_at_zero:
        text += " singular at β=0"
    if validity.verdict == "domain-restricted":
        text += ", real only for β>0"
    if validity.verdict == "fail":
        bad = validity.failures[0]
        out.line(f"{text}, metric condition fails at s={fmt(bad.s)}")
        return 1
    out.line(text)
    return 0


def cmd_s_curvature(args, loaded, out: Output) -> int:
    spec, model = loaded.spec, _model(args, loaded)
    dirs = _directions(args, spec, model)
    values = pmap(lambda y: s_curvature_generic(spec, model, y), dirs)
    for y, val in zip(dirs, values):
        out.scalar(f"S({fmt_vec(y)})", val, f"S({fmt_vec(y)}) = {fmt(val)}")
    return 0


def cmd_mean_berwald(args, loaded, out: Output) -> int:
    spec, model = loaded.spec, _model(args, loaded)
    dirs = _directions(args, spec, model)
    results = pmap(lambda y: mean_berwald_oracle(spec, model, y), dirs)
    for k, (y, res) in enumerate(zip(dirs, results)):
        if k and out.kind == "csv":
            out.line()
        out.matrix(f"E({fmt_vec(y)})", res.E)
        if args.closed and out.kind == "text":
            closed = mean_berwald_closed(spec, _kropina_m(model), y, oracle=res)
            out.matrix(f"closed-form E({fmt_vec(y)})", closed.E)
            out.line(f"  residual vs oracle: {fmt(closed.residual_vs_oracle)}")
    return 0


def cmd_verify(args, loaded, out: Output) -> int:
    spec = loaded.spec
    model = _model(args, loaded)
    m = _kropina_m(model)
    dirs = _directions(args, spec, model)
    report = run_audit(spec, m, dirs)
    if out.kind == "text":
        out.line(f"formula audit: kropina m={fmt(m)}, n={spec.n}, {len(dirs)} direction(s)")
    for row in report.rows:
        out.scalar(row.key, row.value, f"  {row.label:<64} {fmt(row.value)}")
    return 0


def cmd_isotropy(args, loaded, out: Output) -> int:
    spec = loaded.spec
    m = _kropina_m(_model(args, loaded))
    verdict = classify_isotropy(spec, m, args.samples, args.seed)
    if out.kind == "csv":
        out.scalar("zero", 1.0 if verdict.verdict == "zero" else 0.0)
        out.scalar("max_abs_S", verdict.max_abs_s)
        out.scalar("scale", verdict.scale)
        out.scalar("samples", verdict.samples)
    else:
        out.line(verdict.label)
        out.line(f"  max |S| over {verdict.samples} directions: {fmt(verdict.max_abs_s)}")
        out.line(f"  term scale: {fmt(verdict.scale)}")
    return 0


def cmd_volume(args, loaded, out: Output) -> int:
    spec, model = loaded.spec, _model(args, loaded)
    b, n = spec.b, spec.n
    out.scalar("f(b)", f_of_b(model, b, n))
    out.scalar("f'(b)/(b f(b))", fb_log_derivative(model, b, n))
    return 0


COMMANDS = {
    "validate-metric": (cmd_validate, "check the inner product, bracket, b < 1 and the metric condition"),
    "s-curvature": (cmd_s_curvature, "S-curvature at the origin"),
    "mean-berwald": (cmd_mean_berwald, "mean Berwald curvature E_ij"),
    "verify-formulas": (cmd_verify, "audit every Kropina closed form"),
    "isotropy": (cmd_isotropy, "classify isotropic (zero) S-curvature"),
    "volume-coeff": (cmd_volume, "Busemann-Hausdorff f(b) and f'(b)/(b f(b))"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", required=True, help="path to the JSON spec file")
    common.add_argument("--direction", action="append", default=[],
                        help="tangent direction x1,x2,... (repeatable)")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                        help="number of sampled directions when none are given")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--format", choices=("text", "csv"), default="text")
    common.add_argument("--m", type=float, default=None, help="use kropina with this m")

    parser = argparse.ArgumentParser(prog="finslerlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "mean-berwald":
            p.add_argument("--closed", action="store_true",
                           help="also evaluate the closed form (kropina only, text output)")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    out = Output(args.format)
    try:
        loaded = load_spec(args.spec)
        if args.command != "validate-metric":
            report = validate_spec(loaded.spec)
            if not report.ok:
                print(f"error: {report}", file=stderr)
                return 1
        code = COMMANDS[args.command][0](args, loaded, out)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except (NumericalError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return 2
    except FinslerError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    stdout.write(out.buf.getvalue())
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
