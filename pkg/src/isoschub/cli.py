"""Command-line interface.

Verbs: expand, convert, pieri, pushforward, locus, diagonal, schubert,
verify.  Output is deterministic text by default or JSON with
--format=json; exit codes are 0 (success), 1 (verification failure),
2 (usage error).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .partitions import Partition
from .polyring import Poly
from .symfunc import basis_convert, pieri, ptilde, qtilde, schur_q_classical, schur_s
from .gysin import (
    push_partial_flag,
    push_partial_flag_even,
    push_qtilde_closed,
    push_schur_closed,
    schur_push_shape,
    s_bracket2,
    _prefactor_exponent,
    _range_top,
)
from .loci import (
    ChernExpr,
    class_maximal_isotropic,
    class_single_condition,
    class_two_conditions,
    class_two_conditions_adjacent,
    diagonal_class,
)
from .schubpoly import c_w
from .weyl import SignedPerm
from . import verify as verify_mod

SCHEMA_VERSION = 1

_BASIS_NAMES = {
    "schur": "schur_s",
    "schur_s": "schur_s",
    "qtilde": "qtilde",
    "ptilde": "ptilde",
    "e": "e_monomial",
    "e_monomial": "e_monomial",
    "schurq": "schur_q",
    "schur_q": "schur_q",
}

_FAMILIES = {
    "qtilde": qtilde,
    "ptilde": ptilde,
    "schur": schur_s,
    "schurq": schur_q_classical,
}


class UsageError(Exception):
    pass


def _emit(args, text, payload=None):
    if args.format == "json":
        body = {"schema_version": SCHEMA_VERSION, "command": args.verb, "text": text}
        if payload is not None:
            body["result"] = payload
        print(json.dumps(body, sort_keys=True))
    else:
        print(text)


def _partition(text):
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_expand(args):
    fam = _FAMILIES.get(args.family)
    if fam is None:
        raise UsageError(f"unknown family {args.family!r}")
    parts = _partition(args.partition)
    poly = fam(parts, args.vars)
    if args.basis:
        basis = _BASIS_NAMES.get(args.basis)
        if basis is None:
            raise UsageError(f"unknown basis {args.basis!r}")
        vec = basis_convert(poly, basis, args.vars)
        _emit(args, vec.render(), vec.to_json())
    else:
        _emit(args, poly.render(), poly.to_json())
    return 0


def cmd_convert(args):
    if args.json:
        data = json.loads(args.json)
    else:
        data = json.load(sys.stdin)
    poly = Poly.from_json(data)
    if poly.n != args.vars:
        raise UsageError("--vars disagrees with the input arity")
    basis = _BASIS_NAMES.get(args.to)
    if basis is None:
        raise UsageError(f"unknown basis {args.to!r}")
    vec = basis_convert(poly, basis, args.vars)
    _emit(args, vec.render(), vec.to_json())
    return 0


def cmd_pieri(args):
    parts = _partition(args.partition)
    vec = pieri(parts, args.r, args.vars, args.family)
    _emit(args, vec.render(), vec.to_json())
    return 0


def _qtilde_push_chern(parts, n, geometry, family):
    """The closed push-forward image written in c_{2p}(V) classes."""
    parts = Partition(parts)
    top = _range_top(n, geometry)
    mult = parts.multiplicities()
    if set(mult) != set(range(1, top + 1)) or any(
        m % 2 == 0 for m in mult.values()
    ):
        return ChernExpr.zero()
    expr = ChernExpr.const(2 ** _prefactor_exponent(n, geometry))
    for p, m in mult.items():
        piece = ChernExpr.sym("V", "c", 2 * p)
        if p % 2:
            piece = -piece
        for _ in range((m - 1) // 2):
            expr = expr * piece
    if family == "ptilde":
        expr = expr.scale(Fraction(1, 2 ** len(parts)))
    return expr


def cmd_pushforward(args):
    parts = _partition(args.partition)
    n = args.vars
    if args.k is not None:
        if args.geometry == "even_orth":
            residual = push_partial_flag_even(parts, args.k, n)
            label = "Pt"
        else:
            residual = push_partial_flag(parts, args.k, n, args.geometry)
            label = "Qt" if args.geometry == "lagrangian" else "Pt"
        if residual is None:
            _emit(args, "0", {"zero": True})
        else:
            text = f"{label}[{residual}](V[{n}]~)"
            _emit(args, text, {"residual": list(residual)})
        return 0
    if args.family in ("qtilde", "ptilde"):
        if args.roots:
            poly = push_qtilde_closed(parts, n, args.geometry)
            if args.family == "ptilde":
                poly = poly.scale(Fraction(1, 2 ** len(parts)))
            _emit(args, poly.render(), poly.to_json())
        else:
            expr = _qtilde_push_chern(parts, n, args.geometry, args.family)
            _emit(args, expr.render(), expr.to_json())
        return 0
    if args.family == "schur":
        if args.roots:
            from .gysin import push_schur_closed_roots

            poly = push_schur_closed_roots(parts, n, args.geometry)
            _emit(args, poly.render(), poly.to_json())
        else:
            expr = push_schur_closed(parts, n, args.geometry)
            _emit(args, expr.render(), expr.to_json())
        return 0
    raise UsageError(f"family {args.family!r} has no push-forward form")


def cmd_locus(args):
    n = args.n
    if args.kind == "maximal":
        if args.k is None:
            raise UsageError("--kind maximal needs --k")
        bundles = tuple(args.bundles.split(","))
        if len(bundles) != 2:
            raise UsageError("--bundles needs two comma-separated names")
        formula = class_maximal_isotropic(args.k, args.geometry, bundles)
    elif args.kind == "single":
        if args.i is None:
            raise UsageError("--kind single needs --i")
        formula = class_single_condition(args.i, n, args.geometry)
    elif args.kind == "two":
        if args.i is None or args.j is None:
            raise UsageError("--kind two needs --i and --j")
        if args.form == "adjacent":
            if args.j != args.i - 1:
                raise UsageError("--form adjacent needs j = i-1")
            formula = class_two_conditions_adjacent(args.i, n)
        else:
            formula = class_two_conditions(args.i, args.j, n, args.geometry)
    else:
        raise UsageError(f"unknown kind {args.kind!r}")
    _emit(args, formula.render(), formula.to_json())
    return 0


def cmd_diagonal(args):
    formula = diagonal_class(args.n, args.geometry)
    _emit(args, formula.render(), formula.to_json())
    return 0


def cmd_schubert(args):
    try:
        w = SignedPerm.parse(args.w, "C")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    poly = c_w(w)
    _emit(args, poly.render(), poly.to_json())
    return 0


def cmd_verify(args):
    params = {}
    if args.n:
        params["n"] = args.n
    if args.geometry:
        params["geometry"] = args.geometry
    params["max_n"] = args.max_n
    max_weight = args.max_weight
    env = os.environ.get("ISOSCHUB_MAX_DEGREE")
    if env:
        max_weight = int(env)
    params["max_weight"] = max_weight
    if args.all:
        reports = verify_mod.run_all(params)
    elif args.suite:
        try:
            reports = [verify_mod.run_suite(args.suite, params)]
        except KeyError:
            raise UsageError(f"unknown suite {args.suite!r}") from None
    else:
        raise UsageError("verify needs --suite NAME or --all")
    ok = all(r.ok for r in reports)
    if args.format == "json":
        body = {
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "ok": ok,
            "reports": [r.to_json() for r in reports],
        }
        print(json.dumps(body, sort_keys=True))
    else:
        for r in reports:
            print(r.render())
        print("all suites OK" if ok else "FAILURES detected")
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="isoschub",
        description="Exact Schubert calculus for isotropic degeneracy loci",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add("expand", help="expand a family polynomial")
    p.add_argument("--family", required=True,
                   choices=("qtilde", "ptilde", "schur", "schurq"))
    p.add_argument("--partition", required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--basis")
    p.set_defaults(func=cmd_expand)

    p = add("convert", help="convert a JSON polynomial to a basis")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--json", help="inline JSON term list (default: stdin)")
    p.set_defaults(func=cmd_convert)

    p = add("pieri", help="multiply by a one-row class")
    p.add_argument("--family", default="qtilde", choices=("qtilde", "ptilde"))
    p.add_argument("--partition", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--vars", type=int, required=True)
    p.set_defaults(func=cmd_pieri)

    p = add("pushforward", help="Gysin push-forward closed forms")
    p.add_argument("--geometry", required=True,
                   choices=("lagrangian", "odd_orth", "even_orth"))
    p.add_argument("--family", default="qtilde",
                   choices=("qtilde", "ptilde", "schur"))
    p.add_argument("--partition", required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--k", type=int, help="partial-flag rule instead")
    p.add_argument("--roots", action="store_true",
                   help="print the Chern-root polynomial")
    p.set_defaults(func=cmd_pushforward)

    p = add("locus", help="degeneracy-locus class formulas")
    p.add_argument("--geometry", required=True,
                   choices=("lagrangian", "odd_orth", "even_orth"))
    p.add_argument("--kind", required=True, choices=("maximal", "single", "two"))
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--n", type=int, help="flag rank (omit for symbolic)")
    p.add_argument("--bundles", default="E,F")
    p.add_argument("--form", choices=("theorem", "adjacent"), default="theorem")
    p.set_defaults(func=cmd_locus)

    p = add("diagonal", help="diagonal class of a Grassmannian bundle")
    p.add_argument("--geometry", required=True,
                   choices=("lagrangian", "odd_orth", "even_orth"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_diagonal)

    p = add("schubert", help="symplectic Schubert polynomial C_w")
    p.add_argument("--w", required=True, help='barred permutation, e.g. "-2,1"')
    p.set_defaults(func=cmd_schubert)

    p = add("verify", help="run verification suites")
    p.add_argument("--suite")
    p.add_argument("--all", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--geometry",
                   choices=("lagrangian", "odd_orth", "even_orth"))
    p.add_argument("--max-n", type=int, default=3, dest="max_n")
    p.add_argument("--max-weight", type=int, default=12, dest="max_weight")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
