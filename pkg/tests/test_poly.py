import random
from fractions import Fraction

import pytest

from picforms.errors import DivisionByZero, ZeroPolynomial
from picforms.fields import GF, QQ, embed
from picforms.poly import (
    Polynomial,
    crt,
    gcd,
    gcdext,
    invert_mod,
    is_squarefree,
    roots_in_field,
)

F5 = GF(5)


def P(field, *coeffs):
    return Polynomial(field, coeffs)


def test_divmod_factorization():
    q, r = divmod(P(QQ, -1, 0, 0, 0, 1), P(QQ, -1, 0, 1))
    assert q == P(QQ, 1, 0, 1) and r.is_zero


def test_gcd_common_factor():
    assert gcd(P(QQ, -1, 0, 1), P(QQ, 1, 2, 1)) == P(QQ, 1, 1)


def test_mul_mod5():
    f = P(F5, 3, 0, 1)
    assert f * f == P(F5, 4, 0, 1, 0, 1)


def test_divmod_by_zero():
    with pytest.raises(DivisionByZero):
        divmod(P(F5, 1, 1), P(F5))


def test_degree_convention():
    assert P(QQ).degree == -1
    assert P(QQ, 3).degree == 0


def test_divmod_round_trip_random():
    rng = random.Random(5)
    for _ in range(500):
        field = F5 if rng.randrange(2) else GF(7)
        f = Polynomial(field, [field.random_element(rng) for _ in range(rng.randint(0, 7))])
        g = Polynomial(field, [field.random_element(rng) for _ in range(rng.randint(1, 5))])
        if g.is_zero:
            continue
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree


def test_squarefree_examples():
    assert is_squarefree(P(QQ, -1, 0, 0, 0, 1))
    assert not is_squarefree(P(QQ, 1, -2, 1))
    assert is_squarefree(P(F5, 2, 0, 4, 0, 1))
    with pytest.raises(ZeroPolynomial):
        is_squarefree(P(QQ))


def _has_repeated_root(f):
    """Brute-force oracle: enumerate the splitting extensions a repeated root
    can live in (its minimal polynomial m has m^2 | f, so deg m <= deg f / 2)
    and look for a common zero of f and f'."""
    fd = f.derivative()
    for d in range(1, max(f.degree // 2, 1) + 1):
        ext = GF(5, d) if d > 1 else F5
        fe, fde = f.embedded(ext), fd.embedded(ext)
        for x in ext.elements():
            if not fe(x) and not fde(x):
                return True
    return False


def test_squarefree_against_brute_force():
    # all monic polynomials of degree <= 4 over GF(5)
    for deg in range(1, 5):
        for idx in range(5 ** deg):
            coeffs = []
            k = idx
            for _ in range(deg):
                coeffs.append(k % 5)
                k //= 5
            coeffs.append(1)
            f = Polynomial(F5, coeffs)
            assert is_squarefree(f) == (not _has_repeated_root(f)), f


def test_roots_examples():
    assert [(r, m) for r, m in roots_in_field(P(F5, -1, 0, 1))] == \
        [(F5.elem(1), 1), (F5.elem(4), 1)]
    assert roots_in_field(P(F5, -2, 0, 1)) == []
    assert roots_in_field(P(QQ, 1, -2, 1)) == [(QQ.elem(1), 2)]
    assert roots_in_field(P(QQ, -1, 2)) == [(QQ.elem(Fraction(1, 2)), 1)]
    assert roots_in_field(P(QQ, 0, 0, 1)) == [(QQ.zero(), 2)]


def test_roots_in_extension():
    f = P(F5, -2, 0, 1)  # X^2 - 2, irreducible over GF(5)
    rts = roots_in_field(f, GF(5, 2))
    assert len(rts) == 2
    for r, m in rts:
        assert m == 1 and r * r == embed(F5.elem(2), GF(5, 2))


def test_gcdext_and_invert_mod():
    f, g = P(F5, 1, 0, 1), P(F5, 2, 3, 0, 1)
    d, s, t = gcdext(f, g)
    assert s * f + t * g == d
    modulus = P(F5, 2, 0, 1)
    inv = invert_mod(P(F5, 0, 1), modulus)
    assert (inv * P(F5, 0, 1)) % modulus == Polynomial.one(F5)


def test_crt():
    m1, m2 = P(F5, -1, 1), P(F5, -2, 1)
    w = crt([P(F5, 3), P(F5, 1)], [m1, m2])
    assert w % m1 == P(F5, 3) and w % m2 == P(F5, 1)


def test_monic_and_leading():
    f = P(F5, 1, 0, 2)
    assert f.monic() == P(F5, 3, 0, 1)
    with pytest.raises(ZeroPolynomial):
        P(F5).monic()


def test_gcd_is_monic_random():
    rng = random.Random(11)
    for _ in range(100):
        f = Polynomial(F5, [F5.random_element(rng) for _ in range(rng.randint(1, 6))])
        g = Polynomial(F5, [F5.random_element(rng) for _ in range(rng.randint(1, 6))])
        if f.is_zero or g.is_zero:
            continue
        d = gcd(f, g)
        assert d.leading() == F5.one()
        assert (f % d).is_zero and (g % d).is_zero
