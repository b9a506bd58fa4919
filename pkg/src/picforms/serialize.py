"""Stable JSON encodings for every object the CLI reads or writes.

Scalars: rationals are strings "n/d" (or "n" when the denominator is 1);
finite-field elements are arrays of integers in [0, p), lowest degree
first; elements of a quadratic extension of the rationals are arrays of
rational strings.  Polynomials and linear forms are arrays of scalars,
lowest degree first.  Field descriptors are {"p": int | null, "m": int,
"modulus": [...]} with the modulus omitted when m = 1; null p means the
rationals.  Matrices and Gram forms are row-major arrays of scalars.

Every document emitted here is accepted unchanged by the matching reader,
and ``dumps`` is byte-stable (sorted keys, fixed layout).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .curves import make_curve
from .fields import GF, QQ, rational_extension
from .ortho import OrthogonalMatrix
from .poly import Polynomial
from .quadform import GramForm
from .triples import make_triple


def field_to_json(field):
    out = {"p": field.p, "m": field.m}
    if field.modulus is not None:
        out["modulus"] = [_base_scalar_to_json(c) for c in field.modulus]
    return out


def field_from_json(obj):
    p = obj.get("p")
    m = obj.get("m", 1)
    modulus = obj.get("modulus")
    if p is None:
        if m == 1:
            return QQ
        return rational_extension([_parse_rational(c) for c in modulus])
    if modulus is not None:
        return GF(p, m, [int(c) for c in modulus])
    return GF(p, m)


def _base_scalar_to_json(c):
    if isinstance(c, Fraction):
        return _rational_str(c)
    return int(c)


def _rational_str(fr):
    if fr.denominator == 1:
        return str(fr.numerator)
    return "%d/%d" % (fr.numerator, fr.denominator)


def _parse_rational(s):
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(s)


def scalar_to_json(e):
    field = e.field
    if field.is_rationals:
        return _rational_str(e.value)
    if field.p is not None:
        if field.m == 1:
            return [int(e.value)]
        return [int(c) for c in e.value]
    return [_rational_str(c) for c in e.value]


def scalar_from_json(field, obj):
    if field.is_rationals:
        return field.elem(_parse_rational(obj))
    if isinstance(obj, (int, str)):
        obj = [obj]
    if field.p is not None:
        return field.elem([int(c) for c in obj])
    return field.elem([_parse_rational(c) for c in obj])


def scalars_to_json(seq):
    return [scalar_to_json(c) for c in seq]


def scalars_from_json(field, arr):
    return tuple(scalar_from_json(field, c) for c in arr)


def poly_to_json(f):
    return scalars_to_json(f.coeffs)


def poly_from_json(field, arr):
    return Polynomial(field, scalars_from_json(field, arr))


def curve_to_json(curve):
    return {"field": field_to_json(curve.field), "coeffs": poly_to_json(curve.F)}


def curve_from_json(obj):
    field = field_from_json(obj["field"])
    return make_curve(scalars_from_json(field, obj["coeffs"]), field)


def triple_to_json(t, with_field=True):
    out = {
        "u": scalars_to_json(t.u),
        "v": scalars_to_json(t.v),
        "w": scalars_to_json(t.w),
    }
    if with_field:
        out["field"] = field_to_json(t.field)
    return out


def triple_from_json(curve, obj):
    field = field_from_json(obj["field"]) if "field" in obj else curve.field
    return make_triple(curve,
                       scalars_from_json(field, obj["u"]),
                       scalars_from_json(field, obj["v"]),
                       scalars_from_json(field, obj["w"]),
                       field=field)


def matrix_to_json(m):
    return {
        "entries": [scalars_to_json(row) for row in m.rows],
        "field": field_to_json(m.field),
    }


def matrix_from_json(obj, default_field=None):
    if isinstance(obj, list):
        entries, field = obj, default_field
    else:
        entries = obj["entries"]
        field = field_from_json(obj["field"]) if "field" in obj else default_field
    if field is None:
        raise ValueError("matrix JSON needs a field (explicit or from context)")
    rows = tuple(scalars_from_json(field, row) for row in entries)
    return OrthogonalMatrix(rows, field)


def gram_to_json(S):
    return {
        "entries": [scalars_to_json(row) for row in S.entries],
        "field": field_to_json(S.field),
    }


def gram_from_json(obj, default_field=None):
    if isinstance(obj, list):
        entries, field = obj, default_field
    else:
        entries = obj["entries"]
        field = field_from_json(obj["field"]) if "field" in obj else default_field
    if field is None:
        raise ValueError("form JSON needs a field (explicit or from context)")
    return GramForm(tuple(scalars_from_json(field, row) for row in entries), field)


def dumps(payload):
    """Canonical byte-stable rendering of a JSON payload."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
