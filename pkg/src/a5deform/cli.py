"""Command-line entry point: ``python -m a5deform <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
Set ``A5DEFORM_THREADS`` to process weight blocks concurrently.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from .chevalley import build_L, build_sl6, center
from .cochain import cbracket, cup
from .cohomology import basis_cocycle, h2_summary
from .deform import (DeformationError, build_type_ii, build_type_iii, jacobi_coefficients,
                     obstruction_status, specialize)
from .field_linalg import from_hex
from .jsonio import (JSONFormatError, algebra_to_json, cochain_from_json, cochain_to_json,
                     deformation_from_json, deformation_to_json, dump, load, trivector_from_json,
                     weight_from_json)
from .report import reproduction_report
from .simplicity import is_simple
from .tables import TableChecksumError, tables_status, write_tables
from . import trivector as tv


class UsageError(Exception):
    pass


def _emit(args, payload, text=None):
    if args.json or text is None:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load_deformation(args):
    if getattr(args, "type", None):
        return build_type_ii(args.field_degree) if args.type == "II" else build_type_iii(args.field_degree)
    if not getattr(args, "in_file", None):
        raise UsageError("give --in FILE or --type II|III")
    return deformation_from_json(load(args.in_file), path=args.in_file)


def _t0(args, F):
    try:
        return from_hex(args.t0, F)
    except ValueError as exc:
        raise UsageError(f"--t0: {exc}") from None


# -- commands --------------------------------------------------------------

def cmd_algebra_info(args) -> int:
    A = build_sl6(args.field_degree)
    L = build_L(args.field_degree)
    z = center(A)
    payload = {
        "dim_A": A.dim,
        "center_dim": len(z),
        "center_basis": [[A.labels[i] for i in np.nonzero(v)[0]] for v in z],
        "dim": L.dim,
        "center_dim_L": len(center(L)),
        "labels": L.labels,
        "field_degree": args.field_degree,
        "tables": tables_status(),
    }
    if args.export:
        dump(algebra_to_json(L), args.export)
    text = (f"dim A = {A.dim}; centre spanned by {' + '.join(payload['center_basis'][0])}; "
            f"dim L = {L.dim}; centre of L has dim {payload['center_dim_L']}")
    tables = payload["tables"]
    if tables["present"] and not (tables["checksum_ok"] and tables["matches_build"]):
        text += "\nshipped tables are corrupt or stale; rerun with --rebuild-tables"
        _emit(args, payload, text)
        return 1
    _emit(args, payload, text)
    return 0


def cmd_cohomology_h2(args) -> int:
    L = build_L(args.field_degree)
    if args.emit_cocycle:
        mu = weight_from_json(args.emit_cocycle, "--emit-cocycle")
        try:
            psi = basis_cocycle(mu, L)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print(json.dumps(cochain_to_json(psi), indent=2))
        return 0
    weights = [weight_from_json(args.weight, "--weight")] if args.weight else None
    t = time.perf_counter()
    summary = h2_summary(L, weights)
    payload = summary.to_json()
    payload["seconds"] = round(time.perf_counter() - t, 3)
    _emit(args, payload, f"dim H^2(L, L) = {summary.total} over {len(summary.h2_weights())} weights")
    return 0


def cmd_trivector(args) -> int:
    w = trivector_from_json(load(args.in_file), path=args.in_file)
    if args.action == "rank":
        r = tv.rank(w)
        _emit(args, {"rank": r}, str(r))
    elif args.action == "classify":
        tag = tv.classify(w)
        payload = {"class": tag, "rank": tv.rank(w)}
        if tag == "RANK6" and args.split:
            split = tv.split_rank6(w)
            payload["split_diagnostic"] = None if split is None else [s.a.T.tolist() for s in split]
        _emit(args, payload, tag)
    else:
        print(json.dumps(cochain_to_json(tv.to_cocycle(w, build_L(w.F.e))), indent=2))
    return 0


def cmd_cup(args) -> int:
    left = cochain_from_json(load(args.left), path=args.left)
    right = cochain_from_json(load(args.right), path=args.right, alg=left.alg)
    if left.degree != 2 or right.degree != 2:
        raise UsageError("cup takes two 2-cochains")
    c = cbracket(left, right) if args.bracket else cup(left, right)
    if args.count_sets:
        _emit(args, {"sets": c.set_count(), "entries": len(c)}, str(c.set_count()))
    else:
        print(json.dumps(cochain_to_json(c), indent=2))
    return 0


def cmd_deform_build(args) -> int:
    f = build_type_ii(args.field_degree) if args.type == "II" else build_type_iii(args.field_degree)
    doc = deformation_to_json(f)
    if args.out:
        dump(doc, args.out)
        _emit(args, {"written": args.out, "t_degree": f.degree}, f"wrote {args.out}")
    else:
        print(json.dumps(doc, indent=2))
    return 0


def cmd_deform_verify(args) -> int:
    f = _load_deformation(args)
    coeffs = jacobi_coefficients(f)
    status = {str(d): {"zero": c.is_zero(), "entries": len(c)} for d, c in coeffs.items()}
    ok = all(c.is_zero() for c in coeffs.values())
    lines = [f"t^{d}: {'0' if v['zero'] else str(v['entries']) + ' nonzero entries'}" for d, v in status.items()]
    lines.append("Jacobi identity holds" if ok else "Jacobi identity FAILS")
    _emit(args, {"jacobi": status, "lie": ok}, "\n".join(lines))
    return 0 if ok else 1


def cmd_deform_specialize(args) -> int:
    f = _load_deformation(args)
    t0 = _t0(args, f.alg.F)
    try:
        alg = specialize(f, t0)
    except DeformationError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    ok = alg.is_lie()
    doc = algebra_to_json(alg)
    doc["jacobi_on_basis_triples"] = ok
    if args.out:
        dump(doc, args.out)
    _emit(args, doc if not args.out else {"written": args.out, "lie": ok},
          f"specialised at t0={args.t0}: Jacobi on all basis triples {'holds' if ok else 'FAILS'}")
    return 0 if ok else 1


def cmd_deform_simplicity(args) -> int:
    f = _load_deformation(args)
    t0 = _t0(args, f.alg.F)
    try:
        alg = specialize(f, t0)
    except DeformationError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    rep = is_simple(alg, trials=args.trials, seed=args.seed)
    _emit(args, rep.to_json(alg), rep.verdict)
    return 0


def cmd_deform_obstruction(args) -> int:
    if args.trivector:
        w = trivector_from_json(load(args.trivector), path=args.trivector)
        psi = tv.to_cocycle(w, build_L(w.F.e))
    else:
        psi = cochain_from_json(load(args.cocycle), path=args.cocycle)
    rep = obstruction_status(psi)
    payload = rep.to_json()
    if not args.witness:
        payload.pop("witness")
    _emit(args, payload, f"obstruction zero: {rep.obstruction_vanishes_identically}; "
                         f"coboundary: {rep.is_coboundary}")
    return 0


def cmd_report_reproduce(args) -> int:
    rep = reproduction_report(seed=args.seed)
    _emit(args, rep, "\n".join(f"{'ok ' if c['ok'] else 'MISMATCH'} {c['name']}: {c['value']}"
                               for c in rep["checks"]))
    return 0 if rep["all_ok"] else 1


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field-degree", type=int, default=argparse.SUPPRESS, choices=[1, 2, 4, 8])
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="a5deform", parents=[common],
                                description="Cohomology and deformations of sl(6)/Z in characteristic 2")
    p.add_argument("--rebuild-tables", action="store_true", help="regenerate the shipped data tables")
    sub = p.add_subparsers(dest="group")

    alg = sub.add_parser("algebra").add_subparsers(dest="cmd", required=True)
    info = alg.add_parser("info", parents=[common])
    info.add_argument("--export", metavar="FILE", help="write the structure constants of L as JSON")
    info.set_defaults(func=cmd_algebra_info)

    coh = sub.add_parser("cohomology").add_subparsers(dest="cmd", required=True)
    h2 = coh.add_parser("h2", parents=[common])
    h2.add_argument("--weight", help="restrict to one block, e.g. '[1,1,1,-1,-1,-1]'")
    h2.add_argument("--emit-cocycle", metavar="MU", help="dump psi_mu as cochain JSON")
    h2.set_defaults(func=cmd_cohomology_h2)

    tri = sub.add_parser("trivector").add_subparsers(dest="action", required=True)
    for name in ("classify", "to-cocycle", "rank"):
        sp = tri.add_parser(name, parents=[common])
        sp.add_argument("--in", dest="in_file", required=True)
        if name == "classify":
            sp.add_argument("--split", action="store_true", help="run the rank-6 splitting diagnostic")
        sp.set_defaults(func=cmd_trivector)

    cp = sub.add_parser("cup", parents=[common])
    cp.add_argument("--left", required=True)
    cp.add_argument("--right", required=True)
    cp.add_argument("--count-sets", action="store_true")
    cp.add_argument("--bracket", action="store_true", help="compute left cup right + right cup left")
    cp.set_defaults(func=cmd_cup)

    de = sub.add_parser("deform").add_subparsers(dest="cmd", required=True)
    b = de.add_parser("build", parents=[common])
    b.add_argument("--type", choices=["II", "III"], required=True)
    b.add_argument("--out")
    b.set_defaults(func=cmd_deform_build)
    for name, func in (("verify", cmd_deform_verify), ("specialize", cmd_deform_specialize),
                       ("simplicity", cmd_deform_simplicity)):
        sp = de.add_parser(name, parents=[common])
        sp.add_argument("--in", dest="in_file")
        sp.add_argument("--type", choices=["II", "III"])
        if name != "verify":
            sp.add_argument("--t0", default="1", help="field element as hex")
        if name == "specialize":
            sp.add_argument("--out")
        if name == "simplicity":
            sp.add_argument("--seed", type=int, required=True)
            sp.add_argument("--trials", type=int, default=64)
        sp.set_defaults(func=func)
    ob = de.add_parser("obstruction", parents=[common])
    src = ob.add_mutually_exclusive_group(required=True)
    src.add_argument("--trivector")
    src.add_argument("--cocycle")
    ob.add_argument("--witness", action="store_true", help="include the witness cochain")
    ob.set_defaults(func=cmd_deform_obstruction)

    rp = sub.add_parser("report").add_subparsers(dest="cmd", required=True)
    pp = rp.add_parser("paper", parents=[common])
    pp.add_argument("--seed", type=int, default=0)
    pp.set_defaults(func=cmd_report_reproduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.field_degree = getattr(args, "field_degree", 1)
    args.json = getattr(args, "json", False)
    if args.rebuild_tables:
        digest = write_tables()
        print(f"tables rebuilt, sha256 {digest}", file=sys.stderr)
        if not hasattr(args, "func"):
            return 0
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except (JSONFormatError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TableChecksumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
