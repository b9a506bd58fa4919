"""The 3x3 pairing matrix, its orthogonal group, generators, and enumeration.

The quadratic form w^2 - u*v on a column (u, v, w) is represented by the
symmetric matrix with rows (0, -1/2, 0), (-1/2, 0, 0), (0, 0, 1).  An
:class:`OrthogonalMatrix` is a validated element of the group preserving
that pairing; the determinant of any such matrix is +-1, and "proper"
means determinant +1.

Generator families
------------------

``scale_matrix(a)``       diag(a, 1/a, 1): rescales the vanishing
                          polynomial of a divisor representation.
``shift_matrix(b)``       shifts the interpolation polynomial by b times
                          the vanishing polynomial.  Together with the
                          scalings it generates the subgroup that fixes
                          every divisor representation.
``swap_shift_matrix(b)``  the second proper generator family: swap u and v
                          combined with a shift.
``reduction_matrix(a)``   the proper move realising the linear-equivalence
                          step (u + a^2 v - 2 a w, v, w - a v).
``swap_matrix(field)``    (u, v, w) -> (v, u, -w), proper.
``flip_matrix(field)``    (u, v, w) -> (u, v, -w), the improper involution
                          matching the +-Y involution on divisors.

``enumerate_special_orthogonal`` closes the proper generator families
under multiplication over a small finite field; it serves as the
brute-force oracle for the equivalence decision.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from . import linalg
from .errors import (
    FieldTooLarge,
    NotOrthogonal,
    RationalsUnsupported,
    ZeroScale,
)
from .fields import FieldElement, common_field, embed

_ENUMERATION_FIELD_LIMIT = 13
_ENUMERATION_ORDER_LIMIT = 5000


def pairing_matrix(field):
    """The symmetric matrix of w^2 - u*v in (u, v, w) coordinates."""
    zero, one = field.zero(), field.one()
    neg_half = field.elem(Fraction(-1, 2))
    return (
        (zero, neg_half, zero),
        (neg_half, zero, zero),
        (zero, zero, one),
    )


def _pairing_inverse(field):
    zero, one = field.zero(), field.one()
    neg_two = field.elem(-2)
    return (
        (zero, neg_two, zero),
        (neg_two, zero, zero),
        (zero, zero, one),
    )


def classify(rows, field=None):
    """"proper", "improper", or "not-orthogonal" for a raw 3x3 matrix."""
    if field is None:
        field = rows[0][0].field
    omega = pairing_matrix(field)
    lhs = linalg.mat_mul(linalg.mat_mul(linalg.transpose(rows), omega), rows)
    if lhs != omega:
        return "not-orthogonal"
    d = linalg.det(rows, field)
    if d == field.one():
        return "proper"
    assert d == -field.one()  # A* Omega A = Omega forces det = +-1
    return "improper"


class OrthogonalMatrix:
    """A validated element of the pairing's orthogonal group."""

    __slots__ = ("field", "rows", "det", "proper")

    def __init__(self, rows, field=None):
        rows = tuple(tuple(r) for r in rows)
        if field is None:
            field = rows[0][0].field
        kind = classify(rows, field)
        if kind == "not-orthogonal":
            raise NotOrthogonal("matrix does not preserve the pairing")
        self.field = field
        self.rows = rows
        self.proper = kind == "proper"
        self.det = field.one() if self.proper else -field.one()

    @classmethod
    def _trusted(cls, rows, field, proper):
        # internal: for products/inverses of already validated matrices
        self = object.__new__(cls)
        self.field = field
        self.rows = rows
        self.proper = proper
        self.det = field.one() if proper else -field.one()
        return self

    def __matmul__(self, other):
        if not isinstance(other, OrthogonalMatrix):
            return NotImplemented
        field = common_field(self.field, other.field)
        rows = linalg.mat_mul(self.embedded(field).rows, other.embedded(field).rows)
        return OrthogonalMatrix._trusted(rows, field, self.proper == other.proper)

    def inverse(self):
        # A^{-1} = Omega^{-1} A^T Omega, exact and division-free
        field = self.field
        inv = linalg.mat_mul(
            linalg.mat_mul(_pairing_inverse(field), linalg.transpose(self.rows)),
            pairing_matrix(field))
        return OrthogonalMatrix._trusted(inv, field, self.proper)

    def embedded(self, field):
        if field == self.field:
            return self
        return OrthogonalMatrix(
            tuple(tuple(embed(x, field) for x in row) for row in self.rows), field)

    def __eq__(self, other):
        return (isinstance(other, OrthogonalMatrix)
                and self.field == other.field and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.rows))

    def sort_key(self):
        return tuple(x.sort_key() for row in self.rows for x in row)

    def __repr__(self):
        return "OrthogonalMatrix(%s)" % (self.rows,)


def _build(field, entries):
    return OrthogonalMatrix(
        tuple(tuple(field.elem(x) for x in row) for row in entries), field)


def scale_matrix(a):
    """diag(a, 1/a, 1); proper."""
    if not isinstance(a, FieldElement):
        raise TypeError("scale parameter must be a field element")
    if not a:
        raise ZeroScale("scale parameter must be nonzero")
    field = a.field
    zero, one = field.zero(), field.one()
    return OrthogonalMatrix(((a, zero, zero), (zero, a.inverse(), zero), (zero, zero, one)),
                            field)


def shift_matrix(b):
    """(u, v, w) -> (u, v + b^2 u - 2 b w, w - b u); proper."""
    field = b.field
    zero, one = field.zero(), field.one()
    return OrthogonalMatrix(
        ((one, zero, zero), (b * b, one, -(b + b)), (-b, zero, one)), field)


def swap_shift_matrix(b):
    """(u, v, w) -> (v, u + b^2 v + 2 b w, -b v - w); proper."""
    field = b.field
    zero, one = field.zero(), field.one()
    return OrthogonalMatrix(
        ((zero, one, zero), (one, b * b, b + b), (zero, -b, -one)), field)


def reduction_matrix(a):
    """(u, v, w) -> (u + a^2 v - 2 a w, v, w - a v); proper."""
    field = a.field
    zero, one = field.zero(), field.one()
    return OrthogonalMatrix(
        ((one, a * a, -(a + a)), (zero, one, zero), (zero, -a, one)), field)


def swap_matrix(field):
    """(u, v, w) -> (v, u, -w); proper."""
    return _build(field, ((0, 1, 0), (1, 0, 0), (0, 0, -1)))


def flip_matrix(field):
    """(u, v, w) -> (u, v, -w); the improper involution."""
    return _build(field, ((1, 0, 0), (0, 1, 0), (0, 0, -1)))


def identity_matrix(field):
    return _build(field, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


_GENERATOR_KINDS = ("b_scale", "b_shift", "so3_scale", "so3_swap",
                    "epsilon", "reduction", "plain_swap")


def generator(kind, param=None, field=None):
    """Dispatch on the generator vocabulary; param is a field element where used."""
    if kind in ("b_scale", "so3_scale"):
        return scale_matrix(param)
    if kind == "b_shift":
        return shift_matrix(param)
    if kind == "so3_swap":
        return swap_shift_matrix(param)
    if kind == "reduction":
        return reduction_matrix(param)
    if field is None and param is not None:
        field = param.field
    if kind == "epsilon":
        return flip_matrix(field)
    if kind == "plain_swap":
        return swap_matrix(field)
    raise ValueError("unknown generator kind %r (expected one of %s)"
                     % (kind, ", ".join(_GENERATOR_KINDS)))


def enumerate_special_orthogonal(field):
    """Every proper matrix over a small finite field, as a sorted tuple.

    Breadth-first closure of the scale and swap-shift families under
    left multiplication by generators.  Deterministic: the result is
    sorted by the canonical entry order.  Cached per field.
    """
    return _enumerate_cached(field)


@functools.lru_cache(maxsize=8)
def _enumerate_cached(field):
    if field.p is None:
        raise RationalsUnsupported("enumeration needs a finite field")
    if field.order > _ENUMERATION_FIELD_LIMIT:
        raise FieldTooLarge("enumeration is limited to fields with at most %d elements"
                            % _ENUMERATION_FIELD_LIMIT)
    gens = []
    for a in field.elements():
        if a:
            gens.append(scale_matrix(a))
        gens.append(swap_shift_matrix(a))
    seen = {}
    frontier = [identity_matrix(field)]
    seen[frontier[0].rows] = frontier[0]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = g @ m
                if prod.rows not in seen:
                    seen[prod.rows] = prod
                    nxt.append(prod)
                    if len(seen) > _ENUMERATION_ORDER_LIMIT:
                        raise FieldTooLarge("group closure exceeded %d elements"
                                            % _ENUMERATION_ORDER_LIMIT)
        frontier = nxt
    return tuple(sorted(seen.values(), key=OrthogonalMatrix.sort_key))
