"""The quadratic-form invariant of a triple and its constructive inverse.

``gram(t)`` is the symmetric (g+2) x (g+2) matrix of the quadratic form
w^2 - u*v built from a triple's coefficients; it is constant on orbits of
the full orthogonal group of the pairing, and substituting x_i = X^i maps
it back onto the curve polynomial.  Its rank equals the dimension of the
span of the three forms and is always 2 or 3 for a valid triple, the
radical being their common zero locus.

``recover_transform`` makes the orbit statement constructive: given two
triples with identical Gram matrices it produces a verified orthogonal
matrix carrying one to the other.  The rank-3 case is a plain change of
basis; the rank-2 case expresses both triples over one splitting
S = -(linear)(linear) and completes the 3x3 matrix with the closed-form
third column (x, y, z) = (2(af - eb), 2(de - cf), ad - bc) that the
coefficient relations e^2 = ac, f^2 = bd, 2ef = ad + bc - 1 make
orthogonal.

``decompose`` is a computational section of the invariant: it rebuilds
some triple from a rank-2/3 form, splitting off squares and, in rank 3,
completing a hyperbolic pair; a square root may force the canonical
quadratic extension, and over the rationals the rank-3 case requires an
isotropic vector supplied by the caller.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import (
    BudgetExhausted,
    FactorizationNeedsExtension,
    GramMismatch,
    NotCurveForm,
    RationalsNeedHint,
)
from .fields import adjoin_sqrt, common_field, embed
from .ortho import OrthogonalMatrix
from .poly import Polynomial
from .triples import act, make_triple

__all__ = [
    "GramForm", "gram", "gram_to_poly", "rank_radical", "in_curve_forms",
    "recover_transform", "decompose",
]


class GramForm:
    """A symmetric matrix of field elements, hashable and comparable."""

    __slots__ = ("field", "entries")

    def __init__(self, entries, field=None):
        entries = tuple(tuple(row) for row in entries)
        if field is None:
            field = entries[0][0].field
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if entries[i][j] != entries[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        self.field = field
        self.entries = entries

    @property
    def size(self):
        return len(self.entries)

    def embedded(self, field):
        if field == self.field:
            return self
        return GramForm(tuple(tuple(embed(x, field) for x in row) for row in self.entries),
                        field)

    def evaluate(self, vec):
        """The quadratic form's value x^T S x."""
        return linalg.dot(vec, linalg.mat_vec(self.entries, vec))

    def bilinear(self, x, y):
        return linalg.dot(x, linalg.mat_vec(self.entries, y))

    def __eq__(self, other):
        return (isinstance(other, GramForm)
                and self.field == other.field and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return "GramForm(%s)" % (self.entries,)


def gram(t):
    """Entry (i, j) is w_i w_j - (u_i v_j + u_j v_i)/2."""
    field = t.field
    half = field.elem(Fraction(1, 2))
    u, v, w = t.u, t.v, t.w
    n = len(u)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(w[i] * w[j] - half * (u[i] * v[j] + u[j] * v[i]))
        rows.append(tuple(row))
    return GramForm(tuple(rows), field)


def gram_to_poly(S):
    """Substitute x_i = X^i: the polynomial sum S_ij X^(i+j), degree <= 2(n-1)."""
    n = S.size
    field = S.field
    coeffs = [field.zero()] * (2 * n - 1)
    for i in range(n):
        for j in range(n):
            coeffs[i + j] = coeffs[i + j] + S.entries[i][j]
    return Polynomial(field, coeffs)


def rank_radical(S):
    """(rank, radical basis); rank + len(basis) = size."""
    r = linalg.rank(S.entries, S.field)
    basis = linalg.kernel_basis(S.entries, S.field, S.size)
    return r, basis


def in_curve_forms(S, curve):
    """True iff S maps onto the curve polynomial and has rank 2 or 3."""
    if S.size != curve.genus + 2:
        return False
    F = curve.embedded_F(S.field)
    if gram_to_poly(S) != F:
        return False
    return linalg.rank(S.entries, S.field) in (2, 3)


# ---------------------------------------------------------------------------
# diagonal split-off

def _split_diagonal(S):
    """Represent the form as sum alpha_i * ell_i(x)^2.

    Returns a list of (alpha_i, ell_i) with the ell_i linearly independent
    rows; its length is the rank.  Deterministic: the split vectors are
    the first basis vectors (or sums of two) with nonzero value.
    """
    field = S.field
    n = S.size
    entries = [list(row) for row in S.entries]
    zero, one = field.zero(), field.one()
    pieces = []
    while any(any(row) for row in entries):
        vec = None
        for i in range(n):
            if entries[i][i]:
                vec = tuple(one if k == i else zero for k in range(n))
                break
        if vec is None:
            for i in range(n):
                for j in range(i + 1, n):
                    if entries[i][j]:
                        vec = tuple(one if k in (i, j) else zero for k in range(n))
                        break
                if vec is not None:
                    break
        sv = linalg.mat_vec(entries, vec)
        alpha = linalg.dot(vec, sv)
        assert alpha  # char != 2: a nonzero symmetric matrix has a nonzero value
        inv = alpha.inverse()
        ell = tuple(x * inv for x in sv)
        pieces.append((alpha, ell))
        for i in range(n):
            for j in range(n):
                entries[i][j] = entries[i][j] - alpha * ell[i] * ell[j]
    return pieces


# ---------------------------------------------------------------------------
# recovery of the orthogonal transition matrix

def recover_transform(t1, t2):
    """A verified orthogonal matrix A with act(A, t1) = t2.

    Requires gram(t1) = gram(t2) exactly.  In rank 3 the matrix is the
    unique change of basis between the two form triples; in rank 2 both
    triples are expressed over a common splitting of the form and the two
    factor-side matrices are composed.
    """
    field = common_field(t1.field, t2.field)
    t1e, t2e = t1.embedded(field), t2.embedded(field)
    S1, S2 = gram(t1e), gram(t2e)
    if S1 != S2:
        raise GramMismatch("the triples have different Gram matrices")
    r = linalg.rank(S1.entries, field)
    if r == 3:
        A = _recover_rank3(t1e, t2e, field)
    else:
        A = _recover_rank2(t1e, t2e, S1)
    result = act(A, t1e)
    assert result == t2e.embedded(result.field)
    return A


def _recover_rank3(t1, t2, field):
    rows1 = (t1.u, t1.v, t1.w)
    rows2 = (t2.u, t2.v, t2.w)
    entries = []
    for target in rows2:
        coeffs = linalg.express_in_rows(rows1, target, field)
        assert coeffs is not None  # equal Gram matrices force equal spans
        entries.append(coeffs)
    return OrthogonalMatrix(tuple(entries), field)


def _normal_factors(S):
    """Independent forms (u, v) with S = -u v, possibly over a quadratic extension."""
    pieces = _split_diagonal(S)
    assert len(pieces) == 2
    (alpha, l1), (beta, l2) = pieces
    field = S.field
    want = -beta / alpha
    ext, s = adjoin_sqrt(field, want)
    if ext is None:
        raise FactorizationNeedsExtension(
            "splitting the rank-2 form needs a square root above %s" % field.label())
    l1 = tuple(embed(x, ext) for x in l1)
    l2 = tuple(embed(x, ext) for x in l2)
    alpha = embed(alpha, ext)
    u = tuple(a + s * b for a, b in zip(l1, l2))
    v = tuple(-alpha * a + alpha * s * b for a, b in zip(l1, l2))
    return u, v, ext


def _factor_coefficients(t, u, v, field):
    """(a, b, c, d, e, f) expressing (t.u, t.v, t.w) over the basis (u, v)."""
    out = []
    for form in (t.u, t.v, t.w):
        coeffs = linalg.express_in_rows((u, v), form, field)
        assert coeffs is not None  # the spans agree: both equal the radical's annihilator
        out.extend(coeffs)
    return out


def _factor_side_matrix(t, u, v, field):
    a, b, c, d, e, f = _factor_coefficients(t, u, v, field)
    # coefficient relations forced by w^2 - uv = -uv on the factor side
    assert e * e == a * c and f * f == b * d
    assert e * f + e * f == a * d + b * c - field.one()
    two = field.elem(2)
    x = two * (a * f - e * b)
    y = two * (d * e - c * f)
    z = a * d - b * c
    return OrthogonalMatrix(((a, b, x), (c, d, y), (e, f, z)), field)


def _recover_rank2(t1, t2, S):
    u, v, ext = _normal_factors(S)
    t1e, t2e = t1.embedded(ext), t2.embedded(ext)
    A1 = _factor_side_matrix(t1e, u, v, ext)
    A2 = _factor_side_matrix(t2e, u, v, ext)
    return A2 @ A1.inverse()


# ---------------------------------------------------------------------------
# section of the invariant

def decompose(S, curve, extension_budget=2, isotropic_hint=None):
    """Some triple t with gram(t) = S.

    Rank 2 returns (u, v, 0) from a splitting of the form; rank 3 finds an
    isotropic vector (base field first, then the quadratic extension as
    allowed by the budget), completes it to a hyperbolic pair plus an
    orthogonal complement, and reads off the w^2 - u*v shape.  Over the
    rationals the rank-3 search is replaced by the caller's hint.
    """
    if not in_curve_forms(S, curve):
        raise NotCurveForm("not a rank-2/3 form mapping onto this curve")
    r = linalg.rank(S.entries, S.field)
    if r == 2:
        u, v, ext = _normal_factors(S)
        if ext != S.field and extension_budget < 2:
            raise BudgetExhausted("rank-2 splitting needs a quadratic extension")
        zero = (ext.zero(),) * S.size
        t = make_triple(curve, u, v, zero, field=ext)
    else:
        t = _decompose_rank3(S, curve, extension_budget, isotropic_hint)
    assert gram(t) == S.embedded(t.field)
    return t


def _find_isotropic(S):
    """A deterministic isotropic vector outside the radical, or None.

    Works on the diagonalised form alpha l1^2 + alpha2 l2^2 + alpha3 l3^2:
    scan first the l3 = 0 plane, then l3 = 1 slices in canonical element
    order.  Over a finite field a ternary form always has such a vector.
    """
    field = S.field
    pieces = _split_diagonal(S)
    (a1, l1), (a2, l2), (a3, l3) = pieces
    s = field.sqrt(-a2 / a1)
    if s is not None:
        coords = (s, field.one(), field.zero())
    else:
        coords = None
        if field.p is not None:
            for x in field.elements():
                val = -(a1 * x * x + a3) / a2
                y = field.sqrt(val)
                if y is not None:
                    coords = (x, y, field.one())
                    break
        if coords is None:
            return None
    target = coords
    sol = linalg.solve((l1, l2, l3), target, field)
    assert sol is not None  # the three split forms are independent
    return sol


def _decompose_rank3(S, curve, extension_budget, isotropic_hint):
    field = S.field
    if isotropic_hint is not None:
        e1 = tuple(field.elem(c) for c in isotropic_hint)
        if S.evaluate(e1) or not any(linalg.mat_vec(S.entries, e1)):
            raise NotCurveForm("hint is not an isotropic vector outside the radical")
    else:
        if field.p is None:
            raise RationalsNeedHint("supply an isotropic vector over the rationals")
        e1 = _find_isotropic(S)
        if e1 is None:
            raise BudgetExhausted("no isotropic vector found in the base field")
    n = S.size
    one = field.one()
    # partner with B(e1, f) != 0
    f = None
    for k in range(n):
        cand = tuple(one if i == k else field.zero() for i in range(n))
        if S.bilinear(e1, cand):
            f = cand
            break
    assert f is not None  # e1 is outside the radical
    b = S.bilinear(e1, f)
    f = tuple(x / b for x in f)
    # make the partner isotropic: q(f + c e1) = q(f) + 2c
    c = -S.evaluate(f) / field.elem(2)
    e2 = tuple(x + c * y for x, y in zip(f, e1))
    # orthogonal complement of the hyperbolic plane, one vector outside the radical
    rows = (linalg.mat_vec(S.entries, e1), linalg.mat_vec(S.entries, e2))
    e3 = None
    for cand in linalg.kernel_basis(rows, field, n):
        if S.evaluate(cand):
            e3 = cand
            break
    assert e3 is not None  # rank 3 leaves a one-dimensional anisotropic complement
    gamma = S.evaluate(e3)
    ext, s = adjoin_sqrt(field, gamma)
    if ext is None:
        raise FactorizationNeedsExtension(
            "the rank-3 section needs a square root above %s" % field.label())
    if ext != field and extension_budget < 2:
        raise BudgetExhausted("the rank-3 section needs a quadratic extension")
    Se = S.embedded(ext)
    e1 = tuple(embed(x, ext) for x in e1)
    e2 = tuple(embed(x, ext) for x in e2)
    e3 = tuple(embed(x, ext) for x in e3)
    gamma = embed(gamma, ext)
    # q = 2 l1 l2 + gamma l3^2 in the dual coordinates of (e1, e2, e3)
    l1 = linalg.mat_vec(Se.entries, e2)
    l2 = linalg.mat_vec(Se.entries, e1)
    l3 = tuple(x / gamma for x in linalg.mat_vec(Se.entries, e3))
    u = tuple(ext.elem(-2) * x for x in l1)
    v = l2
    w = tuple(s * x for x in l3)
    return make_triple(curve, u, v, w, field=ext)
