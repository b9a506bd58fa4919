"""Triples of linear forms representing degree-(g+1) divisors in general position.

A triple t = (u, v, w) of linear forms in g + 2 variables lies on the
curve when F = W^2 - U*V holds exactly for the degree <= g + 1
polynomials U, V, W matching the forms.  The divisor it represents is cut
out by U(X) = 0, Y = W(X); when deg U < g + 1 the remaining g + 1 - deg U
points sit at one of the two points at infinity, the one whose branch the
top coefficient of W selects.

Triples may live over an extension of the curve's base field; the curve
coefficients embed upward.  The u and v components must be nonzero
(otherwise F would be a square), while w = 0 is allowed and describes
divisors supported on Weierstrass points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import (
    check_form_length,
    embed_form,
    form_to_poly,
    infinity_points,
    poly_to_form,
)
from .errors import NotOnCurve, RationalsUnsupported, ZeroForm
from .fields import can_embed, common_field, embed
from .ortho import OrthogonalMatrix, scale_matrix, shift_matrix
from .poly import Polynomial, roots_in_field


class Triple:
    """A validated point of the form variety attached to a curve."""

    __slots__ = ("curve", "field", "u", "v", "w")

    def __init__(self, curve, field, u, v, w):
        self.curve = curve
        self.field = field
        self.u = u
        self.v = v
        self.w = w

    # -- polynomial views ---------------------------------------------------------

    def u_poly(self):
        return form_to_poly(self.u, self.field)

    def v_poly(self):
        return form_to_poly(self.v, self.field)

    def w_poly(self):
        return form_to_poly(self.w, self.field)

    def forms(self):
        return (self.u, self.v, self.w)

    def embedded(self, field):
        if field == self.field:
            return self
        return make_triple(self.curve,
                           embed_form(self.u, field),
                           embed_form(self.v, field),
                           embed_form(self.w, field),
                           field=field)

    def __eq__(self, other):
        return (isinstance(other, Triple)
                and self.curve == other.curve and self.field == other.field
                and self.u == other.u and self.v == other.v and self.w == other.w)

    def __hash__(self):
        return hash((self.field, self.u, self.v, self.w))

    def __repr__(self):
        return "Triple(U=%r, V=%r, W=%r)" % (self.u_poly(), self.v_poly(), self.w_poly())


def make_triple(curve, u, v, w, field=None):
    """Validate the identity F = W^2 - U*V and build the triple.

    The forms are sequences of g + 2 field elements (or ints/Fractions,
    coerced into `field`); their common field must contain the curve's.
    """
    genus = curve.genus
    if field is None:
        fields = [c.field for form in (u, v, w) for c in form if hasattr(c, "field")]
        field = curve.field
        for f in fields:
            field = common_field(field, f)
    if not can_embed(curve.field, field):
        raise NotOnCurve("the triple's field does not contain the curve's field")
    u = tuple(field.elem(c) if not hasattr(c, "field") else embed(c, field) for c in u)
    v = tuple(field.elem(c) if not hasattr(c, "field") else embed(c, field) for c in v)
    w = tuple(field.elem(c) if not hasattr(c, "field") else embed(c, field) for c in w)
    for form in (u, v, w):
        check_form_length(form, genus)
    if not any(u):
        raise ZeroForm("u = 0 would force F to be a square")
    if not any(v):
        raise ZeroForm("v = 0 would force F to be a square")
    W = form_to_poly(w, field)
    U = form_to_poly(u, field)
    V = form_to_poly(v, field)
    if W * W - U * V != curve.embedded_F(field):
        raise NotOnCurve("W^2 - U*V != F")
    return Triple(curve, field, u, v, w)


def triple_from_polys(curve, U, V, W, field=None):
    """Convenience constructor from polynomials of degree <= g + 1."""
    if field is None:
        field = U.field
    genus = curve.genus
    return make_triple(curve,
                       poly_to_form(U.embedded(field), genus),
                       poly_to_form(V.embedded(field), genus),
                       poly_to_form(W.embedded(field), genus),
                       field=field)


def act(matrix, t):
    """Replace the column (u, v, w) by matrix @ (u, v, w).

    The matrix must be orthogonal for the pairing; the image then
    satisfies the curve identity again, which is re-checked here as an
    internal consistency assertion (a zero image form cannot occur for an
    orthogonal matrix and is reported as ZeroForm if it ever did).
    """
    if not isinstance(matrix, OrthogonalMatrix):
        matrix = OrthogonalMatrix(matrix)
    field = common_field(matrix.field, t.field)
    m = matrix.embedded(field).rows
    te = t.embedded(field)
    forms = te.forms()
    new = []
    for i in range(3):
        acc = None
        for j in range(3):
            c = m[i][j]
            if not c:
                continue
            term = tuple(c * x for x in forms[j])
            acc = term if acc is None else tuple(a + b for a, b in zip(acc, term))
        if acc is None:
            acc = (field.zero(),) * len(forms[0])
        new.append(acc)
    return make_triple(t.curve, new[0], new[1], new[2], field=field)


def conjugate(t):
    """(u, v, -w): the +-Y involution on representations; an involution."""
    return Triple(t.curve, t.field, t.u, t.v, tuple(-c for c in t.w))


def canonicalize_with_matrix(t):
    """The canonical representative of t's representation orbit, with a witness.

    Normalisation: scale (u, v) so that U is monic, then shift w by the
    unique multiple of u that zeroes the coefficient of X^deg(U) in W.
    Returns (canonical, M) with M a product of scale and shift generators
    and act(M, t) equal to the canonical triple.  The scale and shift
    moves preserve the curve identity, so the result is built directly.
    """
    u, v, w = t.u, t.v, t.w
    top = len(u) - 1
    while not u[top]:
        top -= 1
    c = u[top]
    m = scale_matrix(c.inverse())
    if c != t.field.one():
        cinv = c.inverse()
        u = tuple(cinv * x for x in u)
        v = tuple(c * x for x in v)
    b = w[top]
    m = shift_matrix(b) @ m
    if b:
        b2 = b * b
        b_2 = b + b
        v = tuple(vi + b2 * ui - b_2 * wi for ui, vi, wi in zip(u, v, w))
        w = tuple(wi - b * ui for ui, wi in zip(u, w))
    return Triple(t.curve, t.field, u, v, w), m


def canonicalize(t):
    return canonicalize_with_matrix(t)[0]


@dataclass(frozen=True)
class DivisorData:
    """Divisor-level view of a triple: U(X) = 0, Y = W(X) plus the infinity part."""
    U_monic: Polynomial
    W_repr: Polynomial
    V_repr: Polynomial
    infinity_multiplicity: int
    infinity_sign: str            # "+", "-", or "none"
    affine_part: tuple = None


def divisor_data(t):
    canon = canonicalize(t)
    U = canon.u_poly()
    W = canon.w_poly()
    V = canon.v_poly()
    genus = t.curve.genus
    mult = genus + 1 - U.degree
    sign = "none"
    if mult > 0:
        # the identity forces W's top coefficient to square to F's leading one
        w_top = W[genus + 1]
        inf = infinity_points(t.curve)
        r_plus = embed(inf.roots[0], canon.field)
        assert w_top * w_top == embed(inf.leading, canon.field)
        sign = "+" if w_top == r_plus else "-"
    return DivisorData(U, W, V, mult, sign)


@dataclass(frozen=True)
class SupportData:
    affine: tuple                  # ((x, y, multiplicity), ...) in canonical order
    infinity_sign: str
    infinity_multiplicity: int
    complete: bool
    field: object


def support(t, extension_degree=1):
    """The divisor's support over the named extension of the triple's field.

    Affine points are the roots x of U in that extension together with
    y = W(x); the infinity part comes from the canonical representative.
    ``complete`` records whether U split entirely.
    """
    if t.field.p is None:
        raise RationalsUnsupported("support enumeration needs a finite field")
    if extension_degree < 1:
        raise ValueError("extension degree must be >= 1")
    data = divisor_data(t)
    ext = t.field.extension(extension_degree)
    U = data.U_monic.embedded(ext)
    W = data.W_repr.embedded(ext)
    points = []
    found = 0
    for x, mult in roots_in_field(U):
        y = W(x)
        points.append((x, y, mult))
        found += mult
    complete = found == U.degree
    return SupportData(tuple(points), data.infinity_sign,
                       data.infinity_multiplicity, complete, ext)
