"""Deciding the relation between the divisor classes of two triples.

Two triples on one curve represent equal divisor classes exactly when a
proper orthogonal matrix carries one to the other.  The decision follows
the constructive route: after a quick Gram comparison (equal or conjugate
classes share the invariant exactly), the reduction move
(u + a^2 v - 2 a w, v, w - a v) is searched over the requested domain,
then the plain swap (v, u, -w); both are repeated against the conjugate
of the target.  The verdict is one of

    equal | equal-and-self-conjugate | conjugate-only | distinct

and each positive verdict carries an explicit proper witness matrix that
is re-verified (orthogonality and exact action) before it is returned.

Over finite fields the reduction parameter ranges over the named
extension of the triples' field, scanned in canonical element order so
the reported witness is reproducible.  Over the rationals the matching
conditions are polynomial constraints of degree <= 2 in the parameter;
their gcd pins down the candidates, and an irreducible quadratic gcd
moves the search into the corresponding quadratic extension.

``orbit_oracle`` is the independent brute-force check: it exhausts the
full enumerated proper group over a small field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateResult, DescriptorMismatch, SearchExhausted
from .fields import Field, common_field, embed, rational_extension, unembed
from .ortho import (
    OrthogonalMatrix,
    enumerate_special_orthogonal,
    reduction_matrix,
    swap_matrix,
)
from .poly import Polynomial, gcd as poly_gcd, roots_in_field
from .quadform import gram
from .triples import act, canonicalize, canonicalize_with_matrix, conjugate

KIND_EQUAL = "equal"
KIND_BOTH = "equal-and-self-conjugate"
KIND_CONJ = "conjugate-only"
KIND_DISTINCT = "distinct"


@dataclass(frozen=True)
class ClassRelation:
    kind: str
    witness: OrthogonalMatrix = None
    conjugate_witness: OrthogonalMatrix = None
    search_domain: Field = None


def reduction_step(t, a):
    """act(reduction_matrix(a), t); raises DegenerateResult when u vanishes."""
    field = t.field
    a = field.elem(a) if not hasattr(a, "field") else embed(a, field)
    u2 = _reduced_u(t.u, t.v, t.w, a)
    if not any(u2):
        raise DegenerateResult("reduction parameter makes u vanish")
    return act(reduction_matrix(a), t)


def swap_step(t):
    """act(swap_matrix, t) = (v, u, -w)."""
    return act(swap_matrix(t.field), t)


# -- raw-form helpers (no validation; used inside the candidate scans) --------

def _reduced_u(u, v, w, a):
    a2 = a * a
    a_2 = a + a
    return tuple(ui + a2 * vi - a_2 * wi for ui, vi, wi in zip(u, v, w))


def _reduced_forms(u, v, w, a):
    return (_reduced_u(u, v, w, a), v, tuple(wi - a * vi for vi, wi in zip(v, w)))


def _canonical_forms(u, v, w):
    """The scale-and-shift normal form of raw form tuples."""
    top = len(u) - 1
    while not u[top]:
        top -= 1
    c = u[top]
    if c != c.field.one():
        cinv = c.inverse()
        u = tuple(cinv * x for x in u)
        v = tuple(c * x for x in v)
    b = w[top]
    if b:
        b2 = b * b
        b_2 = b + b
        v = tuple(vi + b2 * ui - b_2 * wi for ui, vi, wi in zip(u, v, w))
        w = tuple(wi - b * ui for ui, wi in zip(u, w))
    return (u, v, w)


def _witness_from(move, t1, t2_canon_matrix, t2):
    """Assemble B2^{-1} @ B' @ move and verify it maps t1 to t2 exactly."""
    moved = act(move, t1)
    _, b_move = canonicalize_with_matrix(moved)
    witness = t2_canon_matrix.inverse() @ (b_move @ move)
    assert witness.proper
    assert act(witness, t1) == t2.embedded(witness.field)
    return witness


def _scan(t1, t2, candidates, domain):
    """Try every reduction parameter, then the swap; return a witness or None."""
    u1, v1, w1 = t1.u, t1.v, t1.w
    canon2, b2 = canonicalize_with_matrix(t2)
    key2 = (canon2.u, canon2.v, canon2.w)
    for a in candidates:
        u2 = _reduced_u(u1, v1, w1, a)
        if not any(u2):
            continue
        if _canonical_forms(*_reduced_forms(u1, v1, w1, a)) == key2:
            return _witness_from(reduction_matrix(a), t1, b2, t2)
    swapped = (v1, u1, tuple(-x for x in w1))
    if _canonical_forms(*swapped) == key2:
        return _witness_from(swap_matrix(domain), t1, b2, t2)
    return None


def _search_equal(t1, t2, domain):
    """A proper witness carrying t1 onto t2's representation orbit, or None."""
    t1d = t1.embedded(domain)
    t2d = t2.embedded(domain)
    if domain.p is not None:
        return _scan(t1d, t2d, domain.elements(), domain)
    candidates = _rational_candidates(t1d, t2d)
    if candidates is None:
        witness = _search_equal_quadratic(t1d, t2d)
        if witness is not None:
            return witness
        candidates = []
    return _scan(t1d, t2d, candidates, domain)


def _constraint_polys(t1, t2):
    """Degree <= 2 polynomials in the reduction parameter whose common roots
    are the only parameters that can match t2's representation orbit."""
    field = t1.field
    U1 = t1.u
    V1 = t1.v
    W1 = t1.w
    U2 = t2.u
    W2 = t2.w
    n = len(U1)
    out = []
    # proportionality of U1 + a^2 V1 - 2 a W1 with U2: all 2x2 minors vanish
    cu = [(U1[i], -(W1[i] + W1[i]), V1[i]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            coeffs = tuple(cu[i][k] * U2[j] - cu[j][k] * U2[i] for k in range(3))
            out.append(Polynomial(field, coeffs))
    # W1 - a V1 - W2 must be a constant multiple of U2: linear minors
    cw = [(W1[i] - W2[i], -V1[i]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            coeffs = tuple(cw[i][k] * U2[j] - cw[j][k] * U2[i] for k in range(2))
            out.append(Polynomial(field, coeffs))
    return [p for p in out if not p.is_zero]


def _constraint_gcd(t1, t2):
    polys = _constraint_polys(t1, t2)
    if not polys:
        # would force F to be a square; reported rather than guessed
        raise SearchExhausted("constraint polynomials vanished identically")
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
        if g.degree == 0:
            break
    return g


def _rational_candidates(t1, t2):
    """Rational candidate parameters, or None when they live in a quadratic
    extension (irreducible quadratic constraint gcd)."""
    g = _constraint_gcd(t1, t2)
    if g.degree == 0:
        return []
    roots = [r for r, _ in roots_in_field(g)]
    if roots:
        return roots
    if g.degree == 2:
        return None
    return []


def _search_equal_quadratic(t1, t2):
    """Retry the reduction search inside QQ[T]/(constraint gcd)."""
    g = _constraint_gcd(t1, t2).monic()
    ext = rational_extension(tuple(c.value for c in g.coeffs))
    root = ext.generator()
    other = -root - embed(g[1], ext)
    t1e, t2e = t1.embedded(ext), t2.embedded(ext)
    canon2, b2 = canonicalize_with_matrix(t2e)
    key2 = (canon2.u, canon2.v, canon2.w)
    for a in sorted({root, other}, key=lambda e: e.sort_key()):
        u2 = _reduced_u(t1e.u, t1e.v, t1e.w, a)
        if not any(u2):
            continue
        if _canonical_forms(*_reduced_forms(t1e.u, t1e.v, t1e.w, a)) == key2:
            return _witness_from(reduction_matrix(a), t1e, b2, t2e)
    return None


def search_domain_for(field, extension):
    """The field playing the role of the algebraic closure in a search."""
    if field.p is None:
        return field
    return field.extension(extension)


def _descend_matrix(m, field):
    """Report a witness over the triples' own field when its entries allow it."""
    if m is None or m.field == field:
        return m
    try:
        rows = tuple(tuple(unembed(x, field) for x in row) for row in m.rows)
    except DescriptorMismatch:
        return m
    return OrthogonalMatrix._trusted(rows, field, m.proper)


def same_class(t1, t2, extension=2):
    """The relation between the divisor classes of t1 and t2.

    ``extension`` names the finite search domain (relative degree over the
    triples' common field); verdicts are relative to that domain.  Over
    the rationals the parameter search solves the coefficient constraints
    instead, moving into a quadratic extension when they demand it.
    """
    if t1.curve != t2.curve:
        raise ValueError("the triples live on different curves")
    if t1.field != t2.field:
        field = common_field(t1.field, t2.field)
        t1, t2 = t1.embedded(field), t2.embedded(field)
    if t1.field.p is None and t1.field.m > 1:
        from .errors import RationalsUnsupported
        raise RationalsUnsupported(
            "the class search takes triples over QQ or a finite field")
    domain = search_domain_for(t1.field, extension)
    if gram(t1) != gram(t2):
        return ClassRelation(KIND_DISTINCT, search_domain=domain)
    witness = _descend_matrix(_search_equal(t1, t2, domain), t1.field)
    conj_witness = _descend_matrix(_search_equal(t1, conjugate(t2), domain), t1.field)
    if witness is not None and conj_witness is not None:
        kind = KIND_BOTH
    elif witness is not None:
        kind = KIND_EQUAL
    elif conj_witness is not None:
        kind = KIND_CONJ
    else:
        kind = KIND_DISTINCT
    return ClassRelation(kind, witness, conj_witness, domain)


def orbit_oracle(t1, t2):
    """Exhaustive classification over the full enumerated proper group.

    Independent of the reduction search: every group element is applied
    directly.  Only for small finite fields.
    """
    if t1.curve != t2.curve:
        raise ValueError("the triples live on different curves")
    if t1.field != t2.field:
        field = common_field(t1.field, t2.field)
        t1, t2 = t1.embedded(field), t2.embedded(field)
    group = enumerate_special_orthogonal(t1.field)
    c2 = canonicalize(t2)
    key2 = (c2.u, c2.v, c2.w)
    c2c = canonicalize(conjugate(t2))
    key2c = (c2c.u, c2c.v, c2c.w)
    forms = (t1.u, t1.v, t1.w)
    equal = False
    conj = False
    for m in group:
        rows = m.rows
        moved = []
        for i in range(3):
            acc = None
            for j in range(3):
                c = rows[i][j]
                if not c:
                    continue
                term = tuple(c * x for x in forms[j])
                acc = term if acc is None else tuple(a + b for a, b in zip(acc, term))
            if acc is None:
                acc = (t1.field.zero(),) * len(forms[0])
            moved.append(acc)
        key = _canonical_forms(*moved)
        if key == key2:
            equal = True
        if key == key2c:
            conj = True
        if equal and conj:
            break
    if equal and conj:
        return KIND_BOTH
    if equal:
        return KIND_EQUAL
    if conj:
        return KIND_CONJ
    return KIND_DISTINCT
