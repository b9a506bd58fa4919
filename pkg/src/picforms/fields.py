"""Exact scalar arithmetic over the rationals and small finite fields.

A ``Field`` describes one coefficient domain:

* the rationals QQ (arbitrary-precision ``Fraction`` values),
* a prime field GF(p), p an odd prime,
* an extension GF(p^m) realised as GF(p)[T]/(modulus) with a monic
  irreducible modulus, either supplied or found deterministically
  (lowest coefficient tuple first),
* a quadratic extension QQ[T]/(T^2 + c1*T + c0), used when a square root
  or a reduction parameter leaves the rationals.

Fields are interned, so requesting the same parameters twice returns the
same object and element equality never crosses descriptors silently.
Elements are immutable and hashable; every operation is exact.  There is
no floating point anywhere in this package.

Element values are kept in canonical form: ``Fraction`` in lowest terms,
integers reduced into [0, p), coefficient tuples of length m for
extensions.  The canonical total order used for deterministic searches is
the natural order on QQ and the integer index c0 + c1*p + ... on finite
fields.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import isqrt

from .errors import (
    CharacteristicTwo,
    DescriptorMismatch,
    DivisionByZero,
    FieldTooLarge,
    NotFiniteField,
    RationalsUnsupported,
)

_SQRT_TABLE_LIMIT = 1 << 20


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# raw polynomial helpers over GF(p), used only for modulus bookkeeping.
# Coefficient lists are lowest degree first, trailing zeros stripped.

def _fp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        f = a[-1] * inv % p
        q[k] = f
        for i, bc in enumerate(b):
            a[i + k] = (a[i + k] - f * bc) % p
        _fp_trim(a)
    return q, a


def _fp_is_irreducible(mod, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(mod) - 1
    if deg < 1 or mod[-1] != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for idx in range(p ** d):
            div = []
            k = idx
            for _ in range(d):
                div.append(k % p)
                k //= p
            div.append(1)
            _, r = _fp_divmod(mod, div, p)
            if not r:
                return False
    return True


@functools.lru_cache(maxsize=None)
def _default_modulus(p, m):
    """Lowest monic irreducible of degree m over GF(p), lexicographic on (c0..c_{m-1})."""
    for idx in range(p ** m):
        cand = []
        k = idx
        for _ in range(m):
            cand.append(k % p)
            k //= p
        cand.append(1)
        if _fp_is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible modulus found")  # unreachable: they always exist


class Field:
    """One exact coefficient domain.  Use :func:`GF`, :data:`QQ` or
    :func:`rational_extension` instead of calling the constructor directly."""

    __slots__ = (
        "p", "m", "modulus", "char", "order",
        "_red", "_zero", "_one", "_sqrt_table", "_embed_cache",
    )

    def __init__(self, p, m, modulus):
        self.p = p
        self.m = m
        self.modulus = modulus
        self.char = p if p is not None else 0
        self.order = p ** m if p is not None else None
        self._sqrt_table = None
        self._embed_cache = {}
        if m > 1:
            # rows for T^k mod modulus, k = m .. 2m-2
            top = [self._base_neg(c) for c in modulus[:-1]]
            rows = [tuple(top)]
            for _ in range(m - 2):
                prev = rows[-1]
                shifted = [self._base_zero()] + list(prev[:-1])
                carry = prev[-1]
                rows.append(tuple(self._base_add(shifted[i], self._base_mul(carry, top[i]))
                                  for i in range(m)))
            self._red = rows
        else:
            self._red = None
        self._zero = FieldElement(self, self._raw_zero())
        self._one = FieldElement(self, self._raw_one())

    # -- structural identity --------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Field)
                and self.p == other.p and self.m == other.m
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return self.label()

    def label(self):
        if self.p is None:
            if self.m == 1:
                return "QQ"
            return "QQ[T]/(%s)" % ",".join(str(c) for c in self.modulus)
        if self.m == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.m)

    @property
    def is_rationals(self):
        return self.p is None and self.m == 1

    @property
    def is_finite(self):
        return self.p is not None

    @property
    def kind(self):
        if self.p is None and self.m == 1:
            return "rationals"
        if self.m == 1:
            return "prime-field"
        return "extension-field"

    # -- base-scalar helpers (int mod p, or Fraction) -------------------------

    def _base_zero(self):
        return 0 if self.p else Fraction(0)

    def _base_add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def _base_mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def _base_neg(self, a):
        return (-a) % self.p if self.p else -a

    # -- raw element values ----------------------------------------------------

    def _raw_zero(self):
        if self.m == 1:
            return 0 if self.p else Fraction(0)
        return (0,) * self.m if self.p else (Fraction(0),) * self.m

    def _raw_one(self):
        if self.m == 1:
            return 1 if self.p else Fraction(1)
        if self.p:
            return (1,) + (0,) * (self.m - 1)
        return (Fraction(1),) + (Fraction(0),) * (self.m - 1)

    def _raw_add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p if self.p else a + b
        if self.p:
            p = self.p
            return tuple((x + y) % p for x, y in zip(a, b))
        return tuple(x + y for x, y in zip(a, b))

    def _raw_sub(self, a, b):
        if self.m == 1:
            return (a - b) % self.p if self.p else a - b
        if self.p:
            p = self.p
            return tuple((x - y) % p for x, y in zip(a, b))
        return tuple(x - y for x, y in zip(a, b))

    def _raw_neg(self, a):
        if self.m == 1:
            return (-a) % self.p if self.p else -a
        if self.p:
            p = self.p
            return tuple((-x) % p for x in a)
        return tuple(-x for x in a)

    def _raw_mul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p if self.p else a * b
        m = self.m
        zero = 0 if self.p else Fraction(0)
        prod = [zero] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = prod[:m]
        red = self._red
        for k in range(m, 2 * m - 1):
            c = prod[k]
            if c:
                row = red[k - m]
                for i in range(m):
                    out[i] += c * row[i]
        if self.p:
            p = self.p
            return tuple(x % p for x in out)
        return tuple(out)

    def _raw_inv(self, a):
        if not self._raw_nonzero(a):
            raise DivisionByZero("inverse of zero in %s" % self.label())
        if self.m == 1:
            return pow(a, self.p - 2, self.p) if self.p else Fraction(1) / a
        if self.p is None:
            # quadratic extension of QQ: closed-form conjugate inverse
            c0, c1 = self.modulus[0], self.modulus[1]
            x, y = a
            norm = x * x - x * y * c1 + y * y * c0
            return ((x - y * c1) / norm, -y / norm)
        # extended Euclid on coefficient lists over GF(p)
        p = self.p
        r0, r1 = list(self.modulus), _fp_trim(list(a))
        s0, s1 = [], [1]
        while r1:
            q, r = _fp_divmod(r0, r1, p)
            s = list(s0)
            if len(s) < len(q) + len(s1):
                s += [0] * (len(q) + len(s1) - len(s))
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        s[i + j] = (s[i + j] - qc * sc) % p
            _fp_trim(s)
            r0, r1, s0, s1 = r1, r, s1, s
        inv_lead = pow(r0[-1], p - 2, p)
        s0 = [c * inv_lead % p for c in s0]
        s0 += [0] * (self.m - len(s0))
        return tuple(s0[: self.m])

    def _raw_nonzero(self, a):
        if self.m == 1:
            return a != self._base_zero() if self.p is None else a != 0
        return any(a)

    # -- element constructors --------------------------------------------------

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def elem(self, value):
        """Coerce an int, Fraction, coefficient sequence, or FieldElement."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise DescriptorMismatch(
                    "element of %s used in %s" % (value.field.label(), self.label()))
            return value
        if isinstance(value, int):
            if self.m == 1:
                return FieldElement(self, value % self.p if self.p else Fraction(value))
            base = value % self.p if self.p else Fraction(value)
            rest = (0,) * (self.m - 1) if self.p else (Fraction(0),) * (self.m - 1)
            return FieldElement(self, (base,) + rest)
        if isinstance(value, Fraction):
            if self.p is not None:
                num = value.numerator % self.p
                den = value.denominator % self.p
                base = num * pow(den, self.p - 2, self.p) % self.p
                if self.m == 1:
                    return FieldElement(self, base)
                return FieldElement(self, (base,) + (0,) * (self.m - 1))
            if self.m == 1:
                return FieldElement(self, value)
            return FieldElement(self, (value,) + (Fraction(0),) * (self.m - 1))
        if isinstance(value, (tuple, list)):
            if len(value) != self.m:
                raise DescriptorMismatch(
                    "coefficient vector of length %d for %s" % (len(value), self.label()))
            if self.p:
                raw = tuple(int(c) % self.p for c in value)
            else:
                raw = tuple(Fraction(c) for c in value)
            if self.m == 1:
                return FieldElement(self, raw[0])
            return FieldElement(self, raw)
        raise DescriptorMismatch("cannot coerce %r into %s" % (value, self.label()))

    def generator(self):
        """The class of T in an extension field."""
        if self.m == 1:
            raise DescriptorMismatch("no generator in %s" % self.label())
        if self.p:
            return FieldElement(self, (0, 1) + (0,) * (self.m - 2))
        return FieldElement(self, (Fraction(0), Fraction(1)) + (Fraction(0),) * (self.m - 2))

    # -- enumeration -----------------------------------------------------------

    def element_from_index(self, idx):
        if self.p is None:
            raise RationalsUnsupported("cannot index elements of %s" % self.label())
        if self.m == 1:
            return FieldElement(self, idx % self.p)
        digits = []
        k = idx
        for _ in range(self.m):
            digits.append(k % self.p)
            k //= self.p
        return FieldElement(self, tuple(digits))

    def index_of(self, e):
        if self.p is None:
            raise RationalsUnsupported("cannot index elements of %s" % self.label())
        if self.m == 1:
            return e.value
        idx = 0
        for c in reversed(e.value):
            idx = idx * self.p + c
        return idx

    def elements(self):
        """All field elements in canonical (index) order.  Finite fields only."""
        if self.p is None:
            raise RationalsUnsupported("cannot enumerate %s" % self.label())
        for idx in range(self.order):
            yield self.element_from_index(idx)

    def random_element(self, rng):
        if self.p is None:
            raise RationalsUnsupported("cannot sample %s uniformly" % self.label())
        return self.element_from_index(rng.randrange(self.order))

    def extension(self, degree):
        """The canonical extension of this finite field of relative degree `degree`."""
        if degree == 1:
            return self
        if self.p is None:
            raise RationalsUnsupported(
                "extensions of %s are built explicitly from a modulus" % self.label())
        return GF(self.p, self.m * degree)

    # -- square roots ------------------------------------------------------------

    def sqrt(self, e):
        """A canonical square root of e, or None if e is not a square here.

        Finite fields use a cached table (these fields are desk-scale);
        the canonical choice is the root with the smaller element index.
        """
        e = self.elem(e)
        if self.p is None:
            if self.m > 1:
                return None  # square roots inside QQ extensions are out of scope
            v = e.value
            if v < 0:
                return None
            n, d = v.numerator, v.denominator
            rn, rd = isqrt(n), isqrt(d)
            if rn * rn == n and rd * rd == d:
                return FieldElement(self, Fraction(rn, rd))
            return None
        if self.order > _SQRT_TABLE_LIMIT:
            raise FieldTooLarge("square-root table for %s" % self.label())
        if self._sqrt_table is None:
            table = {}
            for x in self.elements():
                sq = x * x
                prev = table.get(sq.value)
                if prev is None or self.index_of(x) < self.index_of(prev):
                    table[sq.value] = x
            self._sqrt_table = table
        return self._sqrt_table.get(e.value)


class FieldElement:
    """An immutable exact scalar tied to its :class:`Field`."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    # -- conversions -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DescriptorMismatch(
                    "%s vs %s" % (self.field.label(), other.field.label()))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.elem(other)
        return None

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._raw_add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._raw_sub(self.value, o.value))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._raw_sub(o.value, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field._raw_neg(self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._raw_mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._raw_mul(self.value, self.field._raw_inv(o.value)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._raw_mul(o.value, self.field._raw_inv(self.value)))

    def inverse(self):
        return FieldElement(self.field, self.field._raw_inv(self.value))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates -------------------------------------------------------------

    def __bool__(self):
        return self.field._raw_nonzero(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == self.field.elem(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        if self.field.m == 1:
            return str(self.value)
        return "[%s]" % ",".join(str(c) for c in self.value)

    def sort_key(self):
        """Key for the canonical total order used in deterministic searches."""
        if self.field.p is not None:
            return self.field.index_of(self)
        if self.field.m == 1:
            return self.value
        return self.value

    # -- Galois -------------------------------------------------------------------

    def frobenius(self, power=1):
        """self ** (p ** power); the identity when power is a multiple of m."""
        f = self.field
        if f.p is None:
            raise NotFiniteField("Frobenius of an element of %s" % f.label())
        if power < 0:
            raise ValueError("Frobenius power must be >= 0")
        if not self:
            return self
        exponent = pow(f.p, power, f.order - 1)
        return self ** exponent

    def sqrt(self):
        return self.field.sqrt(self)


# ---------------------------------------------------------------------------
# interned constructors

@functools.lru_cache(maxsize=None)
def _make_field(p, m, modulus):
    return Field(p, m, modulus)


QQ = _make_field(None, 1, None)


def GF(p, m=1, modulus=None):
    """The finite field GF(p^m), with an optional explicit monic modulus.

    The modulus is verified irreducible by trial division.  Without one,
    the deterministic default (lowest coefficient tuple) is used so that
    element encodings are reproducible across runs.
    """
    if p == 2:
        raise CharacteristicTwo("characteristic 2 is out of scope")
    if not _is_prime(p):
        raise ValueError("%d is not prime" % p)
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if m == 1:
        return _make_field(p, 1, None)
    if modulus is None:
        mod = _default_modulus(p, m)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not _fp_is_irreducible(list(mod), p):
            raise ValueError("modulus is reducible over GF(%d)" % p)
    return _make_field(p, m, mod)


def rational_extension(modulus):
    """QQ[T]/(modulus) for a monic irreducible quadratic modulus."""
    mod = tuple(Fraction(c) for c in modulus)
    if len(mod) != 3 or mod[-1] != 1:
        raise ValueError("only monic quadratic extensions of QQ are supported")
    disc = mod[1] * mod[1] - 4 * mod[0]
    if QQ.sqrt(QQ.elem(disc)) is not None:
        raise ValueError("modulus is reducible over QQ")
    return _make_field(None, 2, mod)


def adjoin_sqrt(field, e):
    """A field containing a square root of e, with that root.

    Returns ``(field, root)`` when e is already a square; otherwise builds
    the canonical quadratic extension and returns the root there.
    """
    e = field.elem(e)
    r = field.sqrt(e)
    if r is not None:
        return field, r
    if field.p is not None:
        ext = field.extension(2)
        r = ext.sqrt(embed(e, ext))
        assert r is not None  # every element of GF(q) is a square in GF(q^2)
        return ext, r
    if field.m > 1:
        return None, None  # square roots above a QQ extension are out of scope
    ext = rational_extension((-e.value, Fraction(0), Fraction(1)))
    return ext, ext.generator()


# ---------------------------------------------------------------------------
# embeddings

def can_embed(src, dst):
    if src == dst:
        return True
    if src.p != dst.p:
        return False
    if src.p is None:
        return src.m == 1  # QQ into any QQ extension
    return dst.m % src.m == 0


def _embedding_powers(src, dst):
    """Powers 1, r, r^2, ... of the canonical image of src's generator in dst."""
    cached = dst._embed_cache.get(src)
    if cached is not None:
        return cached
    root = None
    for cand in dst.elements():
        acc = dst.zero()
        power = dst.one()
        for c in src.modulus:
            acc = acc + power * dst.elem(int(c))
            power = power * cand
        if not acc:
            root = cand
            break
    assert root is not None  # dst contains a subfield isomorphic to src
    powers = [dst.one()]
    for _ in range(src.m - 1):
        powers.append(powers[-1] * root)
    dst._embed_cache[src] = powers
    return powers


def embed(e, dst):
    """Map a field element into a larger compatible field.

    Prime fields and QQ embed as constants; GF(p^a) embeds into GF(p^b)
    (a | b) along the first root, in canonical element order, of its
    modulus.  The choice is cached per field pair, so it is consistent
    within and across computations in one process.
    """
    src = e.field
    if src == dst:
        return e
    if not can_embed(src, dst):
        raise DescriptorMismatch("cannot embed %s into %s" % (src.label(), dst.label()))
    if src.m == 1:
        return dst.elem(e.value if src.p is None else int(e.value))
    powers = _embedding_powers(src, dst)
    acc = dst.zero()
    for c, power in zip(e.value, powers):
        acc = acc + power * dst.elem(int(c))
    return acc


def unembed(e, src):
    """Inverse of :func:`embed` on its image; raises if e is outside the subfield."""
    dst = e.field
    if src == dst:
        return e
    if not can_embed(src, dst):
        raise DescriptorMismatch("cannot embed %s into %s" % (src.label(), dst.label()))
    key = ("unembed", src)
    table = dst._embed_cache.get(key)
    if table is None:
        table = {embed(x, dst).value: x for x in src.elements()}
        dst._embed_cache[key] = table
    out = table.get(e.value)
    if out is None:
        raise DescriptorMismatch("element does not lie in %s" % src.label())
    return out


def common_field(f1, f2):
    """The larger of two comparable fields (one must embed into the other)."""
    if can_embed(f2, f1):
        return f1
    if can_embed(f1, f2):
        return f2
    raise DescriptorMismatch("incomparable fields %s and %s" % (f1.label(), f2.label()))
