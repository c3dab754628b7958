"""Command line front end.

Exit codes: 0 success, 1 mathematical failure (named on stderr), 2 input error.

    toric-lagrangian validate doc.json
    toric-lagrangian delzant doc.json --system stacked
    toric-lagrangian report doc.json --json
    toric-lagrangian sample doc.json --count 100 --seed 7
    toric-lagrangian examples --name projective -m 4
"""

from __future__ import annotations

import argparse
import sys

from . import serialize
from .construction import build_construction, report_text
from .delzant import check_delzant
from .documents import EXAMPLE_NAMES, DocumentError, example_document, load_document
from .errors import SamplingError, ValidationError
from .gale import build_polyhedron, gale_dual
from .quadrics import validate
from .sampler import INTERIOR_MARGIN, TOL_OMEGA, TOL_RANK, verify_batch

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toric-lagrangian", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check conditions (a)-(c) for gamma, delta and the stacked system")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("delzant", help="Delzant test of one associated polyhedron")
    p.add_argument("file")
    p.add_argument("--system", choices=("gamma", "delta", "stacked"), default="gamma")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("report", help="full construction report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sample", help="numerically certify sampled points")
    p.add_argument("file")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol-omega", type=float, default=TOL_OMEGA)
    p.add_argument("--tol-rank", type=float, default=TOL_RANK)
    p.add_argument("--margin", type=float, default=INTERIOR_MARGIN)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("examples", help="print a ready-made input document")
    p.add_argument("--name", choices=EXAMPLE_NAMES, required=True)
    p.add_argument("-m", type=int, default=3)
    return parser


def _verdict_line(name, v) -> str:
    flags = " ".join(f"({c})={'pass' if getattr(v, 'cond_' + c).passed else 'FAIL'}" for c in "abc")
    dim = f" dim Z = {v.smooth_dim_Z}" if v.smooth_dim_Z is not None else ""
    return f"{name}: {flags}{dim}"


def _cmd_validate(doc, args, out, err) -> int:
    results = {}
    for name in ("gamma", "delta", "stacked"):
        try:
            results[name] = validate(doc.system(name))
        except ValueError as exc:
            # more stacked quadrics than coordinates
            results[name] = None
            err.write(f"{name}: cannot form system ({exc})\n")
    if args.json:
        out.write(serialize.dumps({k: None if v is None else serialize.validation_to_dict(v) for k, v in results.items()}))
    else:
        for name, v in results.items():
            out.write(_verdict_line(name, v) + "\n" if v is not None else f"{name}: not formed\n")
    ok = True
    for name, v in results.items():
        if v is None:
            ok = False
            continue
        for cond in v.failed_conditions():
            err.write(f"{name}: condition ({cond}) fails\n")
            ok = False
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_delzant(doc, args, out, err) -> int:
    try:
        sys_ = doc.system(args.system)
    except ValueError as exc:
        err.write(f"{args.system}: cannot form system ({exc})\n")
        return EXIT_FAIL
    v = validate(sys_)
    if not v:
        for cond in v.failed_conditions():
            err.write(f"{args.system}: condition ({cond}) fails\n")
        return EXIT_FAIL
    P = build_polyhedron(gale_dual(sys_))
    d = check_delzant(P)
    if args.json:
        out.write(serialize.dumps({"system": args.system, "polyhedron": serialize.polyhedron_to_dict(P), "delzant": serialize.delzant_to_dict(d)}))
    else:
        out.write(f"{args.system}: {len(P.vertices)} vertices, simple={P.is_simple}, bounded={P.is_bounded}\n")
        out.write(f"covolume(Lambda) = {d.lambda_covolume}\n")
        for f in d.failures:
            pt = "(" + ", ".join(str(x) for x in f.point) + ")"
            detail = "non-simple" if f.abs_det is None else f"|det| = {f.abs_det}, |det|/covolume = {f.ratio}"
            out.write(f"  vertex {pt} active {list(f.active_set)}: {detail}\n")
        out.write(f"delzant: {'yes' if d else 'no'}\n")
    if not d:
        err.write(f"{args.system}: associated polyhedron is not Delzant ({len(d.failures)} failing vertices)\n")
    return EXIT_OK if d else EXIT_FAIL


def _cmd_report(doc, args, out, err) -> int:
    rep = build_construction(doc.gamma_system, doc.delta_system)
    out.write(serialize.dumps(serialize.report_to_dict(rep)) if args.json else report_text(rep))
    for role, cond in rep.failures:
        err.write(f"{role}: {cond} fails\n")
    return EXIT_OK if rep.valid else EXIT_FAIL


def _cmd_sample(doc, args, out, err) -> int:
    if args.count < 0:
        err.write("--count must be nonnegative\n")
        return EXIT_INPUT
    try:
        s = verify_batch(
            doc.gamma_system,
            doc.delta_system,
            args.count,
            args.seed,
            tol_omega=args.tol_omega,
            tol_rank=args.tol_rank,
            interior_margin=args.margin,
        )
    except ValidationError as exc:
        err.write(f"{exc}\n")
        return EXIT_FAIL
    except SamplingError as exc:
        err.write(f"sampling failed: {exc}\n")
        return EXIT_FAIL
    if args.json:
        out.write(serialize.dumps(serialize.summary_to_dict(s)))
    else:
        out.write(
            f"samples: {s.count}\npassed: {s.passed}\npass_fraction: {s.pass_fraction!r}\n"
            f"worst_pairing: {s.worst_pairing!r}\nworst_rank_ratio: {s.worst_rank_ratio!r}\n"
        )
    return EXIT_OK if s.pass_fraction == 1.0 else EXIT_FAIL


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    if args.command == "examples":
        try:
            out.write(example_document(args.name, args.m).to_json())
        except ValueError as exc:
            err.write(f"{exc}\n")
            return EXIT_INPUT
        return EXIT_OK

    try:
        doc = load_document(args.file)
    except DocumentError as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_INPUT
    handler = {"validate": _cmd_validate, "delzant": _cmd_delzant, "report": _cmd_report, "sample": _cmd_sample}[args.command]
    return handler(doc, args, out, err)


def run():
    sys.exit(main())
