import random

import pytest

from picforms.fields import GF, QQ
from picforms.curves import make_curve
from picforms.poly import Polynomial, is_squarefree
from picforms.sampling import random_proper_word
from picforms.triples import act, make_triple


@pytest.fixture(scope="session")
def curve_q():
    return make_curve([-1, 0, 0, 0, 1], QQ)


@pytest.fixture(scope="session")
def curve_f5a():
    return make_curve([-1, 0, 0, 0, 1], GF(5))


@pytest.fixture(scope="session")
def curve_f5b():
    return make_curve([2, 0, 4, 0, 1], GF(5))


@pytest.fixture(scope="session")
def curve_f7():
    """A genus-2 model: deterministic pseudo-random squarefree sextic over GF(7)."""
    f7 = GF(7)
    rng = random.Random(20260810)
    while True:
        coeffs = [rng.randrange(7) for _ in range(6)] + [rng.randrange(1, 7)]
        F = Polynomial(f7, coeffs)
        if is_squarefree(F):
            return make_curve(F, f7)


@pytest.fixture(scope="session")
def triple_a(curve_q):
    """(1, 1, X^2) on Y^2 = X^4 - 1."""
    return make_triple(curve_q, (1, 0, 0), (1, 0, 0), (0, 0, 1))


@pytest.fixture(scope="session")
def triple_b(curve_q):
    """(X^2 - 1, -X^2 - 1, 0) on Y^2 = X^4 - 1."""
    return make_triple(curve_q, (-1, 0, 1), (-1, 0, -1), (0, 0, 0))


def rational_triples(curve, rng, n):
    """Pseudo-random rational triples: proper words acting on two seeds."""
    seeds = [
        make_triple(curve, (1, 0, 0), (1, 0, 0), (0, 0, 1)),
        make_triple(curve, (-1, 0, 1), (-1, 0, -1), (0, 0, 0)),
    ]
    out = []
    for _ in range(n):
        seed = seeds[rng.randrange(len(seeds))]
        out.append(act(random_proper_word(curve.field, rng), seed))
    return out
