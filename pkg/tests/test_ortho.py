import random
from fractions import Fraction

import pytest

from picforms import linalg
from picforms.errors import (
    FieldTooLarge,
    NotOrthogonal,
    RationalsUnsupported,
    ZeroScale,
)
from picforms.fields import GF, QQ
from picforms.ortho import (
    OrthogonalMatrix,
    classify,
    enumerate_special_orthogonal,
    flip_matrix,
    generator,
    identity_matrix,
    pairing_matrix,
    reduction_matrix,
    scale_matrix,
    shift_matrix,
    swap_matrix,
    swap_shift_matrix,
)
from picforms.sampling import random_b_word, random_orthogonal_word

F5 = GF(5)


def _mat(field, entries):
    return tuple(tuple(field.elem(x) for x in row) for row in entries)


def test_pairing_matrix_qq():
    half = Fraction(-1, 2)
    assert pairing_matrix(QQ) == _mat(QQ, ((0, half, 0), (half, 0, 0), (0, 0, 1)))


def test_pairing_matrix_f5():
    # -1/2 = 2 mod 5
    assert pairing_matrix(F5) == _mat(F5, ((0, 2, 0), (2, 0, 0), (0, 0, 1)))


def test_pairing_symmetric_invertible():
    m = pairing_matrix(QQ)
    assert m == linalg.transpose(m)
    assert linalg.det(m, QQ) != QQ.zero()


def test_classification_examples():
    assert classify(identity_matrix(QQ).rows) == "proper"
    assert classify(_mat(QQ, ((1, 0, 0), (0, 1, 0), (0, 0, -1)))) == "improper"
    assert classify(_mat(QQ, ((2, 0, 0), (0, 2, 0), (0, 0, 1)))) == "not-orthogonal"


def test_generator_matrices_match_displays():
    a2 = QQ.elem(2)
    assert scale_matrix(a2).rows == _mat(QQ, ((2, 0, 0), (0, Fraction(1, 2), 0), (0, 0, 1)))
    assert scale_matrix(a2).proper
    b = QQ.elem(3)
    assert shift_matrix(b).rows == _mat(QQ, ((1, 0, 0), (9, 1, -6), (-3, 0, 1)))
    assert swap_shift_matrix(b).rows == _mat(QQ, ((0, 1, 0), (1, 9, 6), (0, -3, -1)))
    assert reduction_matrix(QQ.elem(1)).rows == _mat(QQ, ((1, 1, -2), (0, 1, 0), (0, -1, 1)))
    assert swap_matrix(QQ).rows == _mat(QQ, ((0, 1, 0), (1, 0, 0), (0, 0, -1)))
    assert swap_matrix(QQ).proper
    assert not flip_matrix(QQ).proper


def test_generator_dispatch_vocabulary():
    a = F5.elem(2)
    assert generator("b_scale", a) == scale_matrix(a)
    assert generator("so3_scale", a) == scale_matrix(a)
    assert generator("b_shift", a) == shift_matrix(a)
    assert generator("so3_swap", a) == swap_shift_matrix(a)
    assert generator("reduction", a) == reduction_matrix(a)
    assert generator("epsilon", field=F5) == flip_matrix(F5)
    assert generator("plain_swap", field=F5) == swap_matrix(F5)
    with pytest.raises(ValueError):
        generator("nope", a)


def test_zero_scale_rejected():
    with pytest.raises(ZeroScale):
        scale_matrix(QQ.zero())


def test_not_orthogonal_rejected():
    with pytest.raises(NotOrthogonal):
        OrthogonalMatrix(_mat(QQ, ((2, 0, 0), (0, 2, 0), (0, 0, 1))))


def test_all_generators_orthogonal_det():
    rng = random.Random(4)
    for _ in range(50):
        a = F5.random_element(rng)
        for m in (shift_matrix(a), swap_shift_matrix(a), reduction_matrix(a)):
            assert m.proper
        if a:
            assert scale_matrix(a).proper


def test_inverse_and_composition():
    rng = random.Random(9)
    for _ in range(50):
        m = random_orthogonal_word(F5, rng, improper=bool(rng.randrange(2)))
        assert m @ m.inverse() == identity_matrix(F5)


def test_enumeration_orders():
    assert len(enumerate_special_orthogonal(GF(3))) == 24 == 3 ** 3 - 3
    group = enumerate_special_orthogonal(F5)
    assert len(group) == 120 == 5 ** 3 - 5


def test_enumeration_group_axioms():
    group = enumerate_special_orthogonal(GF(3))
    elems = set(group)
    assert identity_matrix(GF(3)) in elems
    for m in group:
        assert m.proper
        assert m.inverse() in elems
    rng = random.Random(1)
    for _ in range(100):
        a, b = rng.choice(group), rng.choice(group)
        assert a @ b in elems


def test_enumeration_contains_other_generators():
    group = set(enumerate_special_orthogonal(F5))
    for a in F5.elements():
        assert reduction_matrix(a) in group
    assert swap_matrix(F5) in group


def test_b_words_inside_enumeration():
    for p in (3, 5):
        field = GF(p)
        group = set(enumerate_special_orthogonal(field))
        rng = random.Random(p)
        for _ in range(40):
            assert random_b_word(field, rng) in group


def test_enumeration_guards():
    with pytest.raises(RationalsUnsupported):
        enumerate_special_orthogonal(QQ)
    with pytest.raises(FieldTooLarge):
        enumerate_special_orthogonal(GF(17))


def test_enumeration_deterministic():
    g1 = enumerate_special_orthogonal(GF(3))
    g2 = enumerate_special_orthogonal(GF(3))
    assert g1 == g2
