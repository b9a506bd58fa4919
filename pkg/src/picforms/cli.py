"""Command-line front end with stable JSON input and output.

Subcommands: curve-validate, triple-validate, triple-canonical,
triple-support, group-act, group-enumerate, class-relation, form-gram,
form-rank, form-decompose, galois-rational, search-caveat.

Exit codes: 0 success, 1 input validation failure, 2 domain error,
3 budget or search exhaustion.  Output is byte-stable for identical
inputs and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .equivalence import orbit_oracle, same_class
from .errors import AlgebraError, BudgetExhausted, SearchExhausted
from .fields import GF
from .galois import (
    class_rational,
    class_rational_mod_conj,
    find_caveat_example,
    galois_context,
)
from .ortho import enumerate_special_orthogonal
from .quadform import decompose, gram, rank_radical
from .triples import act, canonicalize_with_matrix, divisor_data, support
from .curves import infinity_points

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DOMAIN = 2
EXIT_BUDGET = 3


class InputError(Exception):
    pass


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from exc


def _load_curve(args):
    if not args.curve:
        raise InputError("--curve is required")
    obj = _load_json(args.curve)
    try:
        return serialize.curve_from_json(obj)
    except (AlgebraError, KeyError, ValueError) as exc:
        raise InputError("invalid curve: %s: %s" % (type(exc).__name__, exc)) from exc


def _load_triple(curve, path):
    obj = _load_json(path)
    try:
        return serialize.triple_from_json(curve, obj)
    except KeyError as exc:
        raise InputError("triple JSON is missing %s" % exc) from exc


# -- subcommand handlers: each returns (exit_code, payload) --------------------

def _cmd_curve_validate(args):
    obj = _load_json(args.curve)
    try:
        curve = serialize.curve_from_json(obj)
    except AlgebraError as exc:
        return EXIT_OK, {"valid": False, "reason": type(exc).__name__, "detail": str(exc)}
    inf = infinity_points(curve)
    return EXIT_OK, {
        "valid": True,
        "genus": curve.genus,
        "field": serialize.field_to_json(curve.field),
        "infinity": {
            "sqrt_status": inf.sqrt_status,
            "roots": [serialize.scalar_to_json(r) for r in inf.roots],
            "field": serialize.field_to_json(inf.field),
        },
    }


def _cmd_triple_validate(args):
    curve = _load_curve(args)
    obj = _load_json(args.t1)
    try:
        serialize.triple_from_json(curve, obj)
    except AlgebraError as exc:
        return EXIT_OK, {"valid": False, "reason": type(exc).__name__, "detail": str(exc)}
    return EXIT_OK, {"valid": True}


def _cmd_triple_canonical(args):
    curve = _load_curve(args)
    t = _load_triple(curve, args.t1)
    canon, matrix = canonicalize_with_matrix(t)
    data = divisor_data(t)
    return EXIT_OK, {
        "triple": serialize.triple_to_json(canon),
        "b_matrix": serialize.matrix_to_json(matrix),
        "divisor": {
            "U": serialize.poly_to_json(data.U_monic),
            "W": serialize.poly_to_json(data.W_repr),
            "infinity_multiplicity": data.infinity_multiplicity,
            "infinity_sign": data.infinity_sign,
        },
    }


def _cmd_triple_support(args):
    curve = _load_curve(args)
    t = _load_triple(curve, args.t1)
    sup = support(t, args.ext)
    return EXIT_OK, {
        "affine": [
            {"x": serialize.scalar_to_json(x),
             "y": serialize.scalar_to_json(y),
             "multiplicity": m}
            for x, y, m in sup.affine
        ],
        "infinity_sign": None if sup.infinity_sign == "none" else sup.infinity_sign,
        "infinity_multiplicity": sup.infinity_multiplicity,
        "complete": sup.complete,
        "field": serialize.field_to_json(sup.field),
    }


def _cmd_group_act(args):
    curve = _load_curve(args)
    t = _load_triple(curve, args.t1)
    matrix = serialize.matrix_from_json(_load_json(args.matrix), default_field=t.field)
    out = act(matrix, t)
    return EXIT_OK, {
        "triple": serialize.triple_to_json(out),
        "classification": "proper" if matrix.proper else "improper",
    }


def _cmd_group_enumerate(args):
    if args.p is None:
        raise InputError("--p is required")
    field = GF(args.p, args.m)
    group = enumerate_special_orthogonal(field)
    payload = {"order": len(group), "field": serialize.field_to_json(field)}
    if args.full:
        payload["elements"] = [serialize.matrix_to_json(m)["entries"] for m in group]
    return EXIT_OK, payload


def _cmd_class_relation(args):
    curve = _load_curve(args)
    t1 = _load_triple(curve, args.t1)
    t2 = _load_triple(curve, args.t2)
    rel = same_class(t1, t2, extension=args.ext)
    payload = {
        "kind": rel.kind,
        "search_domain": serialize.field_to_json(rel.search_domain),
    }
    if rel.witness is not None:
        payload["witness"] = serialize.matrix_to_json(rel.witness)
    if rel.conjugate_witness is not None:
        payload["conjugate_witness"] = serialize.matrix_to_json(rel.conjugate_witness)
    if args.oracle:
        payload["oracle"] = orbit_oracle(t1, t2)
    return EXIT_OK, payload


def _cmd_form_gram(args):
    curve = _load_curve(args)
    t = _load_triple(curve, args.t1)
    return EXIT_OK, serialize.gram_to_json(gram(t))


def _cmd_form_rank(args):
    curve = _load_curve(args) if args.curve else None
    default = curve.field if curve else None
    S = serialize.gram_from_json(_load_json(args.form), default_field=default)
    r, basis = rank_radical(S)
    return EXIT_OK, {
        "rank": r,
        "radical_basis": [serialize.scalars_to_json(v) for v in basis],
        "field": serialize.field_to_json(S.field),
    }


def _cmd_form_decompose(args):
    curve = _load_curve(args)
    S = serialize.gram_from_json(_load_json(args.form), default_field=curve.field)
    hint = None
    if args.hint:
        hint_obj = _load_json(args.hint)
        hint = serialize.scalars_from_json(S.field, hint_obj)
    t = decompose(S, curve, extension_budget=args.budget or 2, isotropic_hint=hint)
    return EXIT_OK, {"triple": serialize.triple_to_json(t)}


def _cmd_galois_rational(args):
    curve = _load_curve(args)
    t = _load_triple(curve, args.t1)
    if t.field.p is None:
        # characteristic 0: the verdict is syntactic, not a Galois-descent claim
        if args.mode == "mod-conj":
            S = gram(t)
            verdict = all(_rational_entry(c) for row in S.entries for c in row)
        else:
            verdict = all(_rational_entry(c) for form in t.forms() for c in form)
        return EXIT_OK, {
            "mode": args.mode,
            "rational": verdict,
            "syntactic": True,
            "ambient": serialize.field_to_json(t.field),
        }
    ctx = galois_context(t.field)
    if args.mode == "mod-conj":
        verdict = class_rational_mod_conj(t, ctx)
    else:
        verdict = class_rational(t, ctx)
    return EXIT_OK, {
        "mode": args.mode,
        "rational": verdict,
        "syntactic": False,
        "ambient": serialize.field_to_json(ctx.ambient),
        "base": serialize.field_to_json(ctx.base),
    }


def _rational_entry(c):
    if c.field.is_rationals:
        return True
    return not any(c.value[1:])


def _cmd_search_caveat(args):
    curve = _load_curve(args)
    if curve.field.p is None:
        raise InputError("the caveat search runs over finite fields")
    ambient = curve.field.extension(args.ext)
    ctx = galois_context(ambient)
    res = find_caveat_example(curve, ctx, args.budget, args.seed)
    payload = {
        "found": res.found,
        "searched": res.searched,
        "budget": res.budget,
        "seed": res.seed,
        "ambient": serialize.field_to_json(ambient),
        "curve": serialize.curve_to_json(curve),
    }
    if res.found:
        payload["triple"] = serialize.triple_to_json(res.triple)
    return EXIT_OK, payload


_HANDLERS = {
    "curve-validate": _cmd_curve_validate,
    "triple-validate": _cmd_triple_validate,
    "triple-canonical": _cmd_triple_canonical,
    "triple-support": _cmd_triple_support,
    "group-act": _cmd_group_act,
    "group-enumerate": _cmd_group_enumerate,
    "class-relation": _cmd_class_relation,
    "form-gram": _cmd_form_gram,
    "form-rank": _cmd_form_rank,
    "form-decompose": _cmd_form_decompose,
    "galois-rational": _cmd_galois_rational,
    "search-caveat": _cmd_search_caveat,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="picforms",
        description="Divisor classes on hyperelliptic curves as triples of "
                    "linear forms: validation, canonical forms, group actions, "
                    "class equivalence, quadratic-form invariants, Galois checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _HANDLERS:
        sp = sub.add_parser(name)
        sp.add_argument("--curve", help="path to curve JSON")
        sp.add_argument("--t1", help="path to first triple JSON")
        sp.add_argument("--t2", help="path to second triple JSON")
        sp.add_argument("--matrix", help="path to matrix JSON")
        sp.add_argument("--form", help="path to Gram form JSON")
        sp.add_argument("--hint", help="path to isotropic-vector JSON (rank-3 over QQ)")
        sp.add_argument("--mode", choices=["class", "mod-conj"], default="class",
                        help="galois-rational: which rationality predicate")
        sp.add_argument("--ext", type=int, default=2,
                        help="ambient/search extension degree (default 2)")
        sp.add_argument("--budget", type=int, default=10000)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--p", type=int, help="prime for group-enumerate")
        sp.add_argument("--m", type=int, default=1, help="extension degree for group-enumerate")
        sp.add_argument("--full", action="store_true",
                        help="group-enumerate: include all matrices")
        sp.add_argument("--oracle", action="store_true",
                        help="class-relation: cross-check with the exhaustive oracle")
        sp.add_argument("--out", help="output path (default stdout)")
    return parser


def _dispatch(args):
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except InputError as exc:
        return EXIT_INPUT, {"error": {"kind": "InputError", "detail": str(exc)}}
    except (BudgetExhausted, SearchExhausted) as exc:
        return EXIT_BUDGET, {"error": {"kind": type(exc).__name__, "detail": str(exc)}}
    except AlgebraError as exc:
        return EXIT_DOMAIN, {"error": {"kind": type(exc).__name__, "detail": str(exc)}}
    except (KeyError, TypeError, ValueError) as exc:
        return EXIT_INPUT, {"error": {"kind": "InputError", "detail": "%s: %s" % (
            type(exc).__name__, exc)}}


def run_command(argv):
    """Parse argv, run the subcommand, and return (exit_code, payload)."""
    args = build_parser().parse_args(argv)
    return _dispatch(args)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse errors are input errors
        return 0 if exc.code in (0, None) else EXIT_INPUT
    code, payload = _dispatch(args)
    text = serialize.dumps(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
