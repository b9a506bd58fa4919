"""Exact univariate polynomials over any picforms field.

Coefficients are stored lowest degree first with no trailing zeros; the
zero polynomial is the empty tuple and has degree -1 by convention, which
keeps every degree bound uniform.  The operators +, -, *, //, %, divmod
and ** are overloaded, polynomials are callable (evaluation), and the gcd
is always returned monic.

Root finding is exhaustive over finite fields and uses the rational-root
bound over QQ; both return multiplicities.  There is no general
factorization into irreducibles here.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (DescriptorMismatch, DivisionByZero, RationalsUnsupported,
                     ZeroPolynomial)
from .fields import FieldElement, embed


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        out = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise DescriptorMismatch("coefficient field mismatch")
                out.append(c)
            else:
                out.append(field.elem(c))
        while out and not out[-1]:
            out.pop()
        self.field = field
        self.coeffs = tuple(out)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one(),))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero(), field.one()))

    @classmethod
    def monomial(cls, field, k, c=1):
        return cls(field, (field.zero(),) * k + (field.elem(c),))

    # -- structure ----------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomial("leading coefficient of 0")
        return self.coeffs[-1]

    def monic(self):
        if not self.coeffs:
            raise ZeroPolynomial("monic form of 0")
        lc = self.coeffs[-1]
        if lc == self.field.one():
            return self
        inv = lc.inverse()
        return Polynomial(self.field, tuple(c * inv for c in self.coeffs))

    def derivative(self):
        return Polynomial(self.field,
                          tuple(self.coeffs[i] * i for i in range(1, len(self.coeffs))))

    def embedded(self, field):
        if field == self.field:
            return self
        return Polynomial(field, tuple(embed(c, field) for c in self.coeffs))

    # -- arithmetic ------------------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise DescriptorMismatch("polynomial field mismatch")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return Polynomial(self.field, (self.field.elem(other),))
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(self.field, tuple(self[i] + o[i] for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(self.field, tuple(self[i] - o[i] for i in range(n)))

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Polynomial(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            c = self.field.elem(other)
            return Polynomial(self.field, tuple(a * c for a in self.coeffs))
        o = self._check(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Polynomial.zero(self.field)
        zero = self.field.zero()
        prod = [zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] = prod[i + j] + a * b
        return Polynomial(self.field, tuple(prod))

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise DivisionByZero("polynomial division by zero")
        field = self.field
        rem = list(self.coeffs)
        db = o.degree
        inv = o.coeffs[-1].inverse()
        q = [field.zero()] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            k = len(rem) - 1 - db
            f = rem[-1] * inv
            q[k] = f
            for i, bc in enumerate(o.coeffs):
                rem[i + k] = rem[i + k] - f * bc
            while rem and not rem[-1]:
                rem.pop()
        return Polynomial(field, tuple(q)), Polynomial(field, tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Polynomial.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        x = self.field.elem(x) if not isinstance(x, FieldElement) else x
        if x.field != self.field:
            raise DescriptorMismatch("evaluation point outside coefficient field")
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- identity -----------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s*X" % c)
            else:
                parts.append("%s*X^%d" % (c, i))
        return " + ".join(reversed(parts))


def gcd(f, g):
    """Monic greatest common divisor."""
    if f.is_zero and g.is_zero:
        raise ZeroPolynomial("gcd(0, 0)")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def gcdext(f, g):
    """(d, s, t) with d = s*f + t*g and d the monic gcd."""
    if f.is_zero and g.is_zero:
        raise ZeroPolynomial("gcdext(0, 0)")
    field = f.field
    r0, r1 = f, g
    s0, s1 = Polynomial.one(field), Polynomial.zero(field)
    t0, t1 = Polynomial.zero(field), Polynomial.one(field)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.leading().inverse()
    return r0 * lc, s0 * lc, t0 * lc


def invert_mod(f, modulus):
    """Inverse of f modulo `modulus`; raises DivisionByZero if they share a factor."""
    d, s, _ = gcdext(f, modulus)
    if d.degree != 0:
        raise DivisionByZero("%r is not invertible mod %r" % (f, modulus))
    return s % modulus


def crt(residues, moduli):
    """The polynomial congruent to residues[i] mod moduli[i] (pairwise coprime)."""
    acc, mod = residues[0] % moduli[0], moduli[0]
    for r, m in zip(residues[1:], moduli[1:]):
        delta = (r - acc) % m
        lift = (delta * invert_mod(mod, m)) % m
        acc = acc + mod * lift
        mod = mod * m
    return acc % mod


def is_squarefree(f):
    """True iff gcd(f, f') is constant.

    Valid over the perfect fields used here: when f' = 0 the polynomial is
    a p-th power, and the gcd comes out nonconstant as required.
    """
    if f.is_zero:
        raise ZeroPolynomial("squarefree test on 0")
    if f.degree == 0:
        return True
    return gcd(f, f.derivative()).degree == 0


def _divisors(n):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def roots_in_field(f, field=None):
    """All roots of f in the given field, with multiplicities.

    Returns a list of (root, multiplicity) pairs sorted by the canonical
    element order.  Finite fields are scanned exhaustively; over QQ the
    candidates come from the rational-root bound.
    """
    if f.is_zero:
        raise ZeroPolynomial("roots of 0")
    if field is None:
        field = f.field
    if field != f.field:
        f = f.embedded(field)
    if field.p is None and field.m > 1:
        raise RationalsUnsupported("root finding inside extensions of QQ is not supported")
    out = []
    if field.p is not None:
        for x in field.elements():
            if not f(x):
                mult = 0
                g = f
                lin = Polynomial(field, (-x, field.one()))
                while True:
                    q, r = divmod(g, lin)
                    if not r.is_zero:
                        break
                    mult += 1
                    g = q
                out.append((x, mult))
        return out
    # QQ: strip powers of X, clear denominators, try p/q candidates
    k = 0
    while k <= f.degree and not f.coeffs[k]:
        k += 1
    if k:
        out.append((field.zero(), k))
        f = Polynomial(field, f.coeffs[k:])
    if f.degree >= 1:
        denom = 1
        for c in f.coeffs:
            denom = denom * c.value.denominator // _gcd_int(denom, c.value.denominator)
        ints = [int(c.value * denom) for c in f.coeffs]
        a0, an = ints[0], ints[-1]
        seen = set()
        for num in _divisors(a0):
            for den in _divisors(an):
                for sign in (1, -1):
                    cand = Fraction(sign * num, den)
                    if cand in seen:
                        continue
                    seen.add(cand)
                    x = field.elem(cand)
                    if not f(x):
                        mult = 0
                        g = f
                        lin = Polynomial(field, (-x, field.one()))
                        while True:
                            q, r = divmod(g, lin)
                            if not r.is_zero:
                                break
                            mult += 1
                            g = q
                        out.append((x, mult))
    out.sort(key=lambda pair: pair[0].sort_key())
    return out


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a
