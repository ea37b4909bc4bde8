"""Command-line front end.

Exit status: 0 on success, 1 when a verification reports a failure, 2 on
usage errors (bad flags, malformed input, size limits).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .combinatorics import (
    Partition,
    Permutation,
    build_w_refinement,
    enumerate_fixed_points,
    phi,
    phi_lambda_seq,
    refinement_holds,
)
from .localization import restrict_springer, sn_act_poly
from .polyring import PolySyntaxError, VarSpace, format_poly, parse_poly
from .presentation import (
    SizeLimitError,
    check_size,
    classical_generators,
    equivariant_generators,
    export,
    flag_ideal_generators,
    space_for,
)
from .symfun import factorial_e, factorial_schur_tableaux
from .verify import hilbert_function, rank_certificate

DEFAULT_LIMITS = {
    "fixed-points": 9,
    "generators": 8,
    "restrict": 8,
    "act": 8,
    "hilbert": 6,
    "rank": 5,
    "verify": 8,
    "schur": 8,
    "export-wn": 64,
}


class UsageError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _permutation(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _poly(text: str, space: VarSpace):
    try:
        return parse_poly(text, space)
    except PolySyntaxError as exc:
        raise UsageError(str(exc)) from None


def cmd_fixed_points(args, out) -> int:
    points = enumerate_fixed_points(args.lam)
    if args.count_only:
        print(len(points), file=out)
    else:
        for w in points:
            print(w, file=out)
    return 0


def cmd_generators(args, out) -> int:
    if args.kind == "equivariant":
        pres = equivariant_generators(args.lam, max_n=args.max_n)
    elif args.kind == "classical":
        pres = classical_generators(args.lam, max_n=args.max_n)
    else:
        pres = flag_ideal_generators(args.lam.n, lam=args.lam)
    out.write(export(pres, args.format))
    if args.format == "json":
        out.write("\n")
    return 0


def cmd_restrict(args, out) -> int:
    p = _poly(args.poly, space_for(args.lam))
    try:
        c = restrict_springer(p, args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(_dump(c.to_json_dict()), file=out)
    return 0


def cmd_act(args, out) -> int:
    if args.perm.n != args.lam.n:
        raise UsageError(f"permutation {args.perm} is not in S_{args.lam.n}")
    p = _poly(args.poly, space_for(args.lam))
    print(format_poly(sn_act_poly(args.perm, p)), file=out)
    return 0


def cmd_hilbert(args, out) -> int:
    report = hilbert_function(args.lam, max_n=args.max_n)
    print(_dump(report.to_json_dict()), file=out)
    return 0 if report.passed else 1


def cmd_rank(args, out) -> int:
    cert = rank_certificate(args.lam, seed=args.seed, max_n=args.max_n)
    print(_dump(dict(cert.to_json_dict(), seed=args.seed)), file=out)
    return 0 if cert.verdict == "pass" else 1


def cmd_verify(args, out) -> int:
    check_size(args.lam.n, args.max_n, "verify")
    suites = checks.SUITES if args.suite == "all" else (args.suite,)
    results = checks.run_suites(args.lam, suites, seed=args.seed, samples=args.samples, max_n=args.max_n)
    ok = all(r.passed for r in results)
    print(_dump({
        "lambda": list(args.lam.parts),
        "seed": args.seed,
        "suites": [r.to_json_dict() for r in results],
        "verdict": "pass" if ok else "fail",
    }), file=out)
    return 0 if ok else 1


def _alphabet(text: str, s: int, shape: Partition | None):
    """``u`` or ``t`` for a symbolic family, or an explicit list such as ``u1,u1,u2``."""
    text = text.strip()
    need = s + (shape.parts[0] if shape else 1) - 1
    if text in ("u", "t"):
        names = [(text, i) for i in range(1, need + 1)]
    else:
        names = []
        for tok in text.replace(",", " ").split():
            fam, idx = tok[:1], tok[1:]
            if fam not in ("u", "t") or not idx.isdigit() or int(idx) < 1:
                raise UsageError(f"alphabet entries must look like u3 or t2, got {tok!r}")
            names.append((fam, int(idx)))
        if not names:
            raise UsageError("empty alphabet")
    n = max([s] + [i for f, i in names if f == "t"])
    ell = max([1] + [i for f, i in names if f == "u"])
    space = VarSpace(n, ell)
    return space, [space.var(f, i) for f, i in names]


def cmd_schur(args, out) -> int:
    check_size(args.s, args.max_n, "schur")
    if args.s < 1:
        raise UsageError("--s must be positive")
    shape = None if args.shape.strip() in ("", "0") else _partition_or_usage(args.shape)
    space, alpha = _alphabet(args.alphabet, args.s, shape)
    ys = [space.y(i) for i in range(1, args.s + 1)]
    try:
        tab = factorial_schur_tableaux(shape, args.s, alpha, ys, space)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = {
        "shape": list(shape.parts) if shape else [],
        "s": args.s,
        "alphabet": [format_poly(a) for a in alpha],
        "tableau_form": format_poly(tab),
        "factorial_e_form": None,
        "equal": None,
    }
    if shape is None or all(p == 1 for p in shape.parts):
        k = shape.n if shape else 0
        try:
            fe = factorial_e(k, ys, alpha, space)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        result["factorial_e_form"] = format_poly(fe)
        result["equal"] = fe == tab
    print(_dump(result), file=out)
    return 1 if result["equal"] is False else 0


def _partition_or_usage(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_export_wn(args, out) -> int:
    lam = args.lam
    w = build_w_refinement(lam)
    refines = refinement_holds(lam, w)
    phi_ok = tuple(phi(lam, w(i)) for i in range(1, lam.n + 1)) == phi_lambda_seq(lam)
    print(" ".join(map(str, w.oneline)), file=out)
    print(f"refinement: {'pass' if refines else 'fail'}", file=out)
    print(f"phi o w = phi_lambda: {'pass' if phi_ok else 'fail'}", file=out)
    return 0 if refines and phi_ok else 1


COMMANDS = {
    "fixed-points": cmd_fixed_points,
    "generators": cmd_generators,
    "restrict": cmd_restrict,
    "act": cmd_act,
    "hilbert": cmd_hilbert,
    "rank": cmd_rank,
    "verify": cmd_verify,
    "schur": cmd_schur,
    "export-wn": cmd_export_wn,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqspringer",
        description="Equivariant cohomology presentations of Springer varieties.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=None, help="override the soft size limit")
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness (default 0)")
    lam_arg = argparse.ArgumentParser(add_help=False)
    lam_arg.add_argument("--lambda", dest="lam", type=_partition, required=True,
                         help="partition, e.g. 3,2,1")

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("fixed-points", parents=[common, lam_arg], help="list torus fixed points")
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("generators", parents=[common, lam_arg], help="ideal generators")
    p.add_argument("--kind", choices=("equivariant", "classical", "flag"), default="equivariant")
    p.add_argument("--format", choices=("json", "cas"), default="json")

    p = sub.add_parser("restrict", parents=[common, lam_arg], help="restrict a polynomial to fixed points")
    p.add_argument("--poly", required=True)

    p = sub.add_parser("act", parents=[common, lam_arg], help="permute the y variables of a polynomial")
    p.add_argument("--perm", type=_permutation, required=True)
    p.add_argument("--poly", required=True)

    sub.add_parser("hilbert", parents=[common, lam_arg], help="Hilbert function of the classical quotient")
    sub.add_parser("rank", parents=[common, lam_arg], help="localization rank certificate")

    p = sub.add_parser("verify", parents=[common, lam_arg], help="run verification suites")
    p.add_argument("--suite", choices=checks.SUITES + ("all",), default="all")
    p.add_argument("--samples", type=int, default=checks.DEFAULT_SAMPLES)

    p = sub.add_parser("schur", parents=[common], help="factorial Schur polynomial of a shape")
    p.add_argument("--shape", required=True, help="partition, e.g. 1,1 (0 for the empty shape)")
    p.add_argument("--s", type=int, required=True, help="number of x variables")
    p.add_argument("--alphabet", default="u", help="u, t, or a list such as u1,u1,u2")

    sub.add_parser("export-wn", parents=[common, lam_arg], help="refinement permutation")
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_n is None:
        args.max_n = DEFAULT_LIMITS[args.command]
    try:
        if hasattr(args, "lam"):
            check_size(args.lam.n, args.max_n, args.command)
        return COMMANDS[args.command](args, out)
    except (UsageError, SizeLimitError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
