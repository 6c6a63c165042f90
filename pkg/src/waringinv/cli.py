"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 shape error, 4 internal-consistency
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import aronhold, catalecticant, scorza, secant7
from .errors import ConsistencyError, FormSyntaxError, ShapeError
from .forms import form_from_json, form_to_json, parse_form, print_form, random_sum_of_powers
from .linalg import cube_root, det, rank

EXIT_PARSE, EXIT_SHAPE, EXIT_CONSISTENCY = 2, 3, 4

# (nvars, degree) expected by each form command; None means "any"
SHAPES = {
    "aronhold": (3, 3),
    "secant7": (5, 3),
    "catalecticant": (None, 4),
    "scorza": (3, 4),
}


def _read_source(source):
    if source is None or source == "-":
        return sys.stdin.read()
    if os.path.isfile(source):
        with open(source) as fh:
            return fh.read()
    return source


def load_form(text: str, command: str, nvars: int | None = None):
    want_vars, degree = SHAPES[command]
    text = text.strip()
    if text.startswith("{"):
        try:
            form = form_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormSyntaxError(f"invalid JSON: {exc.msg}", exc.pos) from None
    else:
        form = parse_form(text, want_vars or nvars or 3, degree)
    if (want_vars is not None and form.nvars != want_vars) or form.degree != degree:
        raise ShapeError(
            f"{command} needs nvars={want_vars or 'any'}, degree={degree}; "
            f"got nvars={form.nvars}, degree={form.degree}"
        )
    return form


def _matrix_payload(m):
    return [[str(x) for x in row] for row in m.tolist()]


def run_aronhold(form, args) -> dict:
    out = {"invariant": str(aronhold.aronhold_invariant(form))}
    if args.profile:
        out["profile"] = aronhold.plane_rank_profile(form).as_dict()
    if args.matrix:
        mats = aronhold.build_a(form)
        out["aprime"] = _matrix_payload(mats.aprime)
        out["a"] = _matrix_payload(mats.a)
    return out


def run_secant7(form, args) -> dict:
    res = secant7.in_sigma7(form)
    p = cube_root(res.det / 2)
    if p is None:
        raise ConsistencyError(f"det B = {res.det} is not twice a rational cube")
    picked = [k for k in ("det", "p", "rank") if getattr(args, k)] or ["det", "p", "rank"]
    values = {"det": str(res.det), "p": str(p), "rank": res.rank_b}
    out = {k: values[k] for k in picked}
    out["member"] = res.member
    if args.matrix:
        out["b"] = _matrix_payload(secant7.build_b(form).b)
    return out


def run_catalecticant(form, args) -> dict:
    c = catalecticant.build_c(form)
    d = det(c.matrix)
    out = {"det": str(d), "rank": rank(c.matrix), "clebsch": d == 0}
    if args.matrix:
        out["c"] = _matrix_payload(c.matrix)
    return out


def run_scorza(form, args) -> dict:
    s = scorza.scorza_map(form)
    return {"scorza": print_form(s), "scorza_json": form_to_json(s)}


RUNNERS = {
    "aronhold": run_aronhold,
    "secant7": run_secant7,
    "catalecticant": run_catalecticant,
    "scorza": run_scorza,
}


def build_report(command: str, text: str, args) -> dict:
    start = time.perf_counter()
    form = load_form(text, command, getattr(args, "vars", None))
    report = {
        "command": command,
        "input": {"text": print_form(form), "json": form_to_json(form)},
        "outputs": RUNNERS[command](form, args),
    }
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return report


def _batch_item(job):
    command, text, args = job
    try:
        return build_report(command, text, args)
    except (FormSyntaxError, ShapeError, ConsistencyError) as exc:
        return {"command": command, "error": f"{type(exc).__name__}: {exc}"}


def render(report, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2)
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict) and not prefix.endswith("json"):
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        elif isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{prefix}:")
            lines.append(_format_rows(value))
        elif isinstance(value, bool):
            lines.append(f"{prefix}: {'true' if value else 'false'}")
        elif isinstance(value, dict):
            lines.append(f"{prefix}: {json.dumps(value, separators=(',', ':'))}")
        else:
            lines.append(f"{prefix}: {value}")

    walk("", report)
    return "\n".join(lines)


def _format_rows(rows) -> str:
    width = max(len(c) for r in rows for c in r)
    return "\n".join("  " + " ".join(c.rjust(width) for c in r) for r in rows)


def _add_common(p, top=False):
    default = None if top else argparse.SUPPRESS
    p.add_argument("--json", action="store_true", default=False if top else argparse.SUPPRESS,
                   help="machine-readable output")
    p.add_argument("--seed", type=int, default=0 if top else default, help="random seed")
    p.add_argument("--timing", action="store_true", default=False if top else argparse.SUPPRESS,
                   help="include wall-clock timing in the report")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="waringinv", description=__doc__.splitlines()[0])
    _add_common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def form_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        p.add_argument("form", nargs="?", help="polynomial text, JSON, a file path, or - for stdin")
        p.add_argument("--matrix", action="store_true", help="print the matrices")
        p.add_argument("--batch", action="store_true", help="one form per input line, evaluated in parallel")
        p.add_argument("--jobs", type=int, default=None, help="worker processes for --batch")
        return p

    p = form_command("aronhold", "Aronhold invariant of a ternary cubic")
    p.add_argument("--profile", action="store_true", help="secant-variety rank profile")
    p = form_command("secant7", "degree-15 invariant of a quinary cubic")
    p.add_argument("--rank", action="store_true")
    p.add_argument("--det", action="store_true")
    p.add_argument("--p", action="store_true")
    p = form_command("catalecticant", "catalecticant of a quartic")
    p.add_argument("--vars", type=int, default=3, help="number of variables for text input")
    form_command("scorza", "Scorza map of a plane quartic")

    p = sub.add_parser("sample", help="seeded sum of powers of linear forms, as JSON")
    _add_common(p)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--sum-of", type=int, required=True, dest="sum_of")
    p.add_argument("--bound", type=int, default=5)

    p = sub.add_parser("segre", help="degree of the rank <= k symmetric matrices of order n+1")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    return parser


def run(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.command == "sample":
            if args.bound < 1 or args.sum_of < 0 or args.vars < 1 or args.degree < 0:
                raise ShapeError("sample needs vars >= 1, degree >= 0, sum-of >= 0, bound >= 1")
            f = random_sum_of_powers(args.vars, args.degree, args.sum_of, args.seed, args.bound)
            print(json.dumps(form_to_json(f)))
            return 0
        if args.command == "segre":
            try:
                value = catalecticant.segre_degree(args.n, args.k)
            except ValueError as exc:
                raise ShapeError(str(exc)) from None
            print(json.dumps({"n": args.n, "k": args.k, "degree": value}) if args.json else value)
            return 0
        text = _read_source(args.form)
        if args.batch:
            lines = [ln for ln in text.splitlines() if ln.strip()]
            jobs = [(args.command, ln, args) for ln in lines]
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_batch_item, jobs))
            if args.json:
                print(json.dumps(reports, indent=2))
            else:
                print("\n\n".join(render(r, False) for r in reports))
            return 0
        print(render(build_report(args.command, text, args), args.json))
        return 0
    except FormSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ShapeError as exc:
        print(f"shape error: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY


def main():
    sys.exit(run())
