import random
from fractions import Fraction

import pytest

from picforms.errors import (
    CharacteristicTwo,
    DescriptorMismatch,
    DivisionByZero,
    NotFiniteField,
)
from picforms.fields import (
    GF,
    QQ,
    adjoin_sqrt,
    can_embed,
    common_field,
    embed,
    rational_extension,
    unembed,
)

F5 = GF(5)
F25 = GF(5, 2, (3, 0, 1))  # T^2 - 2


def test_prime_field_ops():
    assert F5.elem(2) * F5.elem(3) == F5.elem(1)
    assert F5.elem(2) - F5.elem(3) == F5.elem(4)
    assert F5.elem(2) / F5.elem(3) == F5.elem(4)


def test_rational_ops():
    assert QQ.elem(Fraction(1, 2)) + QQ.elem(Fraction(1, 3)) == QQ.elem(Fraction(5, 6))
    x = QQ.elem(Fraction(-7, 3))
    assert x / x == QQ.one()


def test_division_identity_and_zero():
    for x in (F5.elem(3), QQ.elem(Fraction(2, 7))):
        assert x / x == x.field.one()
    with pytest.raises(DivisionByZero):
        F5.elem(1) / F5.elem(0)
    with pytest.raises(DivisionByZero):
        F25.one() / F25.zero()


def test_descriptor_mismatch():
    with pytest.raises(DescriptorMismatch):
        F5.elem(1) + GF(7).elem(1)
    with pytest.raises(DescriptorMismatch):
        QQ.elem(1) * F5.elem(1)


def test_characteristic_two_rejected():
    with pytest.raises(CharacteristicTwo):
        GF(2)


def test_frobenius_prime_field_fixed():
    for x in F5.elements():
        assert x.frobenius() == x


def test_frobenius_full_orbit_closes():
    rng = random.Random(0)
    for _ in range(20):
        a = F25.random_element(rng)
        assert a.frobenius(2) == a


def test_frobenius_sqrt2_conjugate():
    # the two square roots of 2 in GF(25) are conjugate: t^5 = -t for t^2 = 2
    t = F25.generator()
    assert t * t == F25.elem(2)
    assert t.frobenius() == -t
    assert t ** 5 == -t  # direct exponentiation oracle


def test_frobenius_is_homomorphism():
    rng = random.Random(1)
    for _ in range(200):
        a, b = F25.random_element(rng), F25.random_element(rng)
        assert (a * b).frobenius() == a.frobenius() * b.frobenius()
        assert (a + b).frobenius() == a.frobenius() + b.frobenius()


def test_frobenius_fixed_set_is_prime_field():
    fixed = {x for x in F25.elements() if x.frobenius() == x}
    assert fixed == {embed(x, F25) for x in F5.elements()}


def test_frobenius_rejects_rationals():
    with pytest.raises(NotFiniteField):
        QQ.elem(1).frobenius()


@pytest.mark.parametrize("field", [F5, F25, GF(7), QQ])
def test_field_axioms_on_samples(field):
    rng = random.Random(7)

    def sample():
        if field.p is None:
            return field.elem(Fraction(rng.randint(-20, 20), rng.randint(1, 9)))
        return field.random_element(rng)

    for _ in range(200):
        a, b, c = sample(), sample(), sample()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == field.one()


def test_embeddings_consistent():
    F625 = GF(5, 4)
    t = F25.generator()
    e = embed(t, F625)
    assert e * e == F625.elem(2)
    assert unembed(e, F25) == t
    # embedding is a homomorphism
    rng = random.Random(3)
    for _ in range(50):
        a, b = F25.random_element(rng), F25.random_element(rng)
        assert embed(a * b, F625) == embed(a, F625) * embed(b, F625)
        assert embed(a + b, F625) == embed(a, F625) + embed(b, F625)


def test_common_field():
    assert common_field(F5, F25) == F25
    assert common_field(QQ, QQ) == QQ
    with pytest.raises(DescriptorMismatch):
        common_field(F5, GF(7))
    assert can_embed(F5, GF(5, 4)) and not can_embed(F25, GF(5, 3))


def test_sqrt():
    assert F5.sqrt(F5.elem(4)) == F5.elem(2)
    assert F5.sqrt(F5.elem(2)) is None
    assert QQ.sqrt(QQ.elem(Fraction(9, 4))) == QQ.elem(Fraction(3, 2))
    assert QQ.sqrt(QQ.elem(2)) is None
    ext, r = adjoin_sqrt(F5, F5.elem(2))
    assert r * r == embed(F5.elem(2), ext)
    qext, rq = adjoin_sqrt(QQ, QQ.elem(2))
    assert rq * rq == embed(QQ.elem(2), qext)


def test_modulus_validation():
    with pytest.raises(ValueError):
        GF(5, 2, (4, 0, 1))  # T^2 - 1 splits
    with pytest.raises(ValueError):
        rational_extension((Fraction(-4), Fraction(0), Fraction(1)))
    # deterministic default modulus
    assert GF(5, 2).modulus == GF(5, 2).modulus
    assert GF(5, 2) is GF(5, 2)


def test_element_order_enumeration():
    xs = list(F25.elements())
    assert len(xs) == 25
    assert len(set(xs)) == 25
    assert xs[0] == F25.zero() and xs[1] == F25.one()
    keys = [x.sort_key() for x in xs]
    assert keys == sorted(keys)
