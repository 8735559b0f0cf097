"""Command-line front end: ``d5jacobi {verify,compute,describe} ...``.

Exit codes: 0 when every check passes, 1 on a verification failure or a
singular step, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import basepoints, lattice, painleve, weyl
from .errors import D5JacobiError, DomainError
from .opcore import WeightParams, ladder_quantities, recurrence_coefficients
from .opcore.checks import LADDER_PARAMETER_SETS, classical_regression, ladder_suite
from .report import VerificationReport, decimal_string, reports_to_csv, table_to_csv, table_to_json

SUITES = ("lattice", "weyl", "ladder", "equivalence", "basepoints", "all")
TABLES = ("coeffs", "ladder", "orbit-std", "orbit-rec")
TOPICS = ("roots", "basepoints", "words", "rootvars", "maps")
DEFAULT_BASEPOINT_INDICES = (1, 2, 3)


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    """Parse a decimal or p/q string exactly."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None
    return value


def rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(rational(part) for part in text.split(","))


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=rational, help="exponent at x = 0 (decimal or p/q)")
    common.add_argument("--beta", type=rational, help="exponent at x = 1")
    common.add_argument("--s", type=rational, help="deformation parameter")
    common.add_argument("--nmax", type=positive_int, default=20, help="largest index (default 20)")
    common.add_argument("--prec", type=positive_int, default=60, help="working precision in digits (default 60)")
    common.add_argument("--seed", type=int, default=0, help="seed for random exact tests (default 0)")
    common.add_argument("--trials", type=positive_int, default=100, help="random samples per identity")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write to this file instead of standard output")

    parser = argparse.ArgumentParser(prog="d5jacobi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n", type=positive_int, action="append", dest="indices",
                   help="recurrence index for base-point checks (repeatable; default 1, 2, 3)")

    c = sub.add_parser("compute", parents=[common], help="emit a per-n table")
    c.add_argument("kind", choices=TABLES)
    c.add_argument("--a", type=rational_list, help="orbit-std: a0,a1,a2,a3")
    c.add_argument("--t", type=rational, help="orbit-std: t")
    c.add_argument("--f", type=rational, help="orbit-std: initial f")
    c.add_argument("--g", type=rational, help="orbit-std: initial g")
    c.add_argument("--x1", type=rational, help="orbit-rec: exact initial x_1 (otherwise from the weight)")
    c.add_argument("--y1", type=rational, help="orbit-rec: exact initial y_1")

    d = sub.add_parser("describe", parents=[common], help="print transcribed data for audit")
    d.add_argument("topic", choices=TOPICS)
    d.add_argument("--surface", choices=("standard", "recurrence", "recurrence-preliminary"),
                   default="recurrence")
    return parser


# --------------------------------------------------------------------------
# verify


def _parameter_sets(args) -> list[tuple[Fraction, Fraction, Fraction]]:
    given = [args.alpha, args.beta, args.s]
    if all(v is None for v in given):
        return [tuple(Fraction(v) for v in triple) for triple in LADDER_PARAMETER_SETS]
    if any(v is None for v in given):
        raise UsageError("give all of --alpha, --beta, --s or none of them")
    return [tuple(given)]


def _suite_reports(name: str, args) -> list[VerificationReport]:
    if name == "lattice":
        return lattice.lattice_suite()
    if name == "weyl":
        return weyl.weyl_suite(args.seed, args.trials)
    sets = _parameter_sets(args)
    if name == "ladder":
        reports = ladder_suite(sets, args.nmax, args.prec)
        reports.append(classical_regression(min(args.nmax, 10), args.prec))
        return reports
    if name == "equivalence":
        reports = [painleve.verify_equivalence(a, b, s, args.nmax, args.prec) for a, b, s in sets]
        reports.append(painleve.check_roundtrip(args.seed, args.trials))
        return reports
    if name == "basepoints":
        indices = tuple(args.indices or DEFAULT_BASEPOINT_INDICES)
        return [r for a, b, s in sets for r in basepoints.base_points_suite(a, b, s, indices)]
    raise UsageError(f"unknown suite {name!r}")


def _envelope(name: str, reports: list[VerificationReport], seed: int) -> dict:
    worst = max(reports, key=lambda r: Fraction(r.max_residual), default=None)
    return {
        "check": name,
        "passed": bool(reports) and all(r.passed for r in reports),
        "max_residual": worst.max_residual if worst else "0",
        "seed": seed,
        "samples": sum(r.samples for r in reports),
        "details": [r.to_dict() for r in reports],
    }


def run_verify(args) -> tuple[str, int]:
    names = SUITES[:-1] if args.suite == "all" else (args.suite,)
    reports = [r for name in names for r in _suite_reports(name, args)]
    env = _envelope(args.suite, reports, args.seed)
    if args.format == "csv":
        text = reports_to_csv(reports)
    else:
        text = json.dumps(env, indent=2) + "\n"
    return text, 0 if env["passed"] else 1


# --------------------------------------------------------------------------
# compute


def _weight(args, default=("3/2", "1/2", "1")) -> WeightParams:
    given = [args.alpha, args.beta, args.s]
    if any(v is None for v in given) and not all(v is None for v in given):
        raise UsageError("give all of --alpha, --beta, --s or none of them")
    a, b, s = default if all(v is None for v in given) else given
    return WeightParams.of(a, b, s, args.prec)


def _fmt(value, digits: int) -> str:
    return decimal_string(value, digits)


def _table_coeffs(args):
    params = _weight(args)
    rec = recurrence_coefficients(params, args.nmax)
    cols = ["n", "h", "alpha", "beta", "p"]
    rows = [{"n": str(n), "h": _fmt(rec.h[n], args.prec), "alpha": _fmt(rec.alpha[n], args.prec),
             "beta": _fmt(rec.beta[n], args.prec), "p": _fmt(rec.p[n], args.prec)} for n in range(args.nmax + 1)]
    return params, cols, rows


def _table_ladder(args):
    params = _weight(args)
    lad = ladder_quantities(params, args.nmax)
    s = params.mp(params.s)
    cols = ["n", "R", "r", "x", "y"]
    rows = []
    for n in range(args.nmax + 1):
        row = {"n": str(n), "R": _fmt(lad.R[n], args.prec), "r": _fmt(lad.r[n], args.prec), "x": "", "y": ""}
        if n >= 1:
            row["x"] = _fmt(1 / s - 1 / lad.R[n - 1], args.prec)
            row["y"] = _fmt(-lad.r[n], args.prec)
        rows.append(row)
    return params, cols, rows


def _rec_row(n, x, y, f, g, a, t, digits):
    row = {"n": str(n), "x": _fmt(x, digits), "y": _fmt(y, digits), "f": _fmt(f, digits), "g": _fmt(g, digits)}
    row.update({f"a{i}": _fmt(v, digits) for i, v in enumerate(a)})
    row["t"] = _fmt(t, digits)
    return row


REC_COLUMNS = ["n", "x", "y", "f", "g", "a0", "a1", "a2", "a3", "t"]
STD_COLUMNS = ["k", "a0", "a1", "a2", "a3", "t", "f", "g"]


def _table_orbit_rec(args):
    params = _weight(args)
    if (args.x1 is None) != (args.y1 is None):
        raise UsageError("give both --x1 and --y1 or neither")
    rows = []
    if args.x1 is not None:
        start = painleve.RecOrbitState(params.alpha, params.beta, params.s, 1, args.x1, args.y1)
        for st in painleve.iterate_recurrence(start, args.nmax - 1):
            std = painleve.rec_to_std(st)
            rows.append(_rec_row(st.n, st.x, st.y, std.f, std.g, std.a, std.t, args.prec))
    else:
        orbit, _ = painleve.equivalence_orbit(params, args.nmax)
        for r in orbit:
            rows.append(_rec_row(r.n, r.x, r.y, r.f, r.g, r.a, r.t, args.prec))
    return params, REC_COLUMNS, rows


def _table_orbit_std(args):
    missing = [k for k in ("a", "t", "f", "g") if getattr(args, k) is None]
    if missing:
        raise UsageError("orbit-std needs " + ", ".join(f"--{k}" for k in missing))
    if len(args.a) != 4:
        raise UsageError("--a takes four comma-separated values a0,a1,a2,a3")
    start = painleve.StdOrbitState(args.a, args.t, args.f, args.g)
    rows = []
    for st in painleve.iterate_standard(start, args.nmax):
        row = {"k": str(st.step_index), "t": _fmt(st.t, args.prec), "f": _fmt(st.f, args.prec),
               "g": _fmt(st.g, args.prec)}
        row.update({f"a{i}": _fmt(v, args.prec) for i, v in enumerate(st.a)})
        rows.append(row)
    return None, STD_COLUMNS, rows


def run_compute(args) -> tuple[str, int]:
    builder = {"coeffs": _table_coeffs, "ladder": _table_ladder,
               "orbit-rec": _table_orbit_rec, "orbit-std": _table_orbit_std}[args.kind]
    params, cols, rows = builder(args)
    meta = {"table": args.kind, "nmax": args.nmax, "precision": args.prec}
    if params is not None:
        meta.update(alpha=str(params.alpha), beta=str(params.beta), s=str(params.s))
    return _emit_table(args, meta, cols, rows), 0


def _emit_table(args, meta, cols, rows) -> str:
    if args.format == "csv":
        return table_to_csv(cols, rows)
    return table_to_json(meta, cols, rows) + "\n"


# --------------------------------------------------------------------------
# describe


def _roots_for(surface: str) -> lattice.RootSystemData:
    return {"standard": lattice.STANDARD_ROOTS, "recurrence": lattice.RECURRENCE_ROOTS,
            "recurrence-preliminary": lattice.RECURRENCE_ROOTS_PRELIMINARY}[surface]


def _describe_roots(args):
    data = _roots_for(args.surface)
    rows = []
    for kind, labels, classes in (("surface", data.surface_labels, data.surface_roots),
                                  ("symmetry", data.symmetry_labels, data.symmetry_roots)):
        for label, c in zip(labels, classes):
            rows.append({"label": label, "kind": kind, "class": str(c),
                         "self_intersection": str(lattice.self_intersection(c))})
    return {"surface": args.surface, "basis": data.basis}, ["label", "kind", "class", "self_intersection"], rows


def _describe_basepoints(args):
    surface = "recurrence" if args.surface.startswith("recurrence") else "standard"
    rows = [{"label": p.label, "map": p.half_map, "chart": p.chart_name, "point": p.coord_text,
             "infinitely_near_to": p.predecessor or ""} for p in basepoints.BASE_POINTS[surface]]
    return {"surface": surface}, ["label", "map", "chart", "point", "infinitely_near_to"], rows


def _describe_words(args):
    state = weyl.ParamPointState((Fraction(1, 3), Fraction(2, 7), Fraction(-5, 4), Fraction(137, 84)),
                                 Fraction(3, 5), Fraction(7, 11), Fraction(-2, 9))
    rows = []
    for name, word, step in (("standard", weyl.STANDARD_WORD, "direct standard step"),
                             ("recurrence", weyl.RECURRENCE_WORD, "w1 o standard step o w1")):
        shift = tuple(b - a for a, b in zip(state.a, weyl.apply_word(word, state).a))
        transl = lattice.translation_vector(lattice.word_map(word), lattice.STANDARD_ROOTS.symmetry_roots)
        rows.append({"name": name, "word": " ".join(word), "equals": step,
                     "parameter_shift": ",".join(map(str, shift)),
                     "root_translation": ",".join(map(str, transl))})
    meta = {"order": "rightmost letter acts first"}
    return meta, ["name", "word", "equals", "parameter_shift", "root_translation"], rows


def _describe_rootvars(args):
    rows = [
        {"symbol": "a0", "value": "n + beta"},
        {"symbol": "a1", "value": "-n"},
        {"symbol": "a2", "value": "n + alpha"},
        {"symbol": "a3", "value": "1 - n - alpha - beta"},
        {"symbol": "t", "value": "-s"},
        {"symbol": "f", "value": "(1 - s x)(n - y + s x y) / (s^2 x)"},
        {"symbol": "g", "value": "s (y - n) / ((1 - s x) y - n)"},
        {"symbol": "x", "value": "-(f (g + t) + n) / (t (f g + n))"},
        {"symbol": "y", "value": "(f g + n)(g + t) / t"},
    ]
    return {"normalisation": "a0 + a1 + a2 + a3 = 1"}, ["symbol", "value"], rows


def _describe_maps(args):
    fwd, inv = lattice.basis_change_final()
    rows = []
    for m in (lattice.phi_star(), fwd, inv):
        for gen, img in zip(lattice.generators(m.source_basis), m.images()):
            rows.append({"map": m.name, "generator": str(gen), "image": str(img)})
    return {}, ["map", "generator", "image"], rows


def run_describe(args) -> tuple[str, int]:
    builder = {"roots": _describe_roots, "basepoints": _describe_basepoints, "words": _describe_words,
               "rootvars": _describe_rootvars, "maps": _describe_maps}[args.topic]
    meta, cols, rows = builder(args)
    return _emit_table(args, {"topic": args.topic, **meta}, cols, rows), 0


# --------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    runner = {"verify": run_verify, "compute": run_compute, "describe": run_describe}[args.command]
    try:
        text, code = runner(args)
    except (UsageError, DomainError) as exc:
        print(f"d5jacobi: error: {exc}", file=sys.stderr)
        return 2
    except D5JacobiError as exc:
        print(f"d5jacobi: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
