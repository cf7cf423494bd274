"""Exact scalars and univariate polynomials in ``x`` over the rationals.

Scalars are plain :class:`fractions.Fraction` values (exposed as ``Rat``),
always in lowest terms with a positive denominator.  :class:`XPoly` keeps its
coefficients in a FLINT ``fmpq_poly``; every value crossing the public
surface is a ``Fraction``.
"""

from fractions import Fraction
from math import gcd, inf, lcm

import flint

Rat = Fraction

__all__ = [
    "Rat",
    "XPoly",
    "NotDivisibleError",
    "as_rat",
    "to_fmpq",
    "from_fmpq",
    "xpoly_derivative",
    "xpoly_divexact",
    "xpoly_content_primitive",
    "xpoly_gcd",
]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def as_rat(value):
    """Coerce an int, Fraction, fmpq or rational string to ``Rat``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, flint.fmpq):
        return from_fmpq(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def to_fmpq(c):
    if isinstance(c, int):
        return flint.fmpq(c)
    c = as_rat(c)
    return flint.fmpq(c.numerator, c.denominator)


def from_fmpq(c):
    return Fraction(int(c.p), int(c.q))


_SCALARS = (int, Fraction)


class XPoly:
    """Polynomial ``c0 + c1*x + ... + cd*x^d`` with exact rational coefficients.

    ``coeffs`` lists the coefficients low power first with no trailing
    zeros, so the zero polynomial has ``coeffs == ()`` and degree ``-inf``.
    """

    __slots__ = ("_p",)

    def __init__(self, coeffs=()):
        self._p = flint.fmpq_poly([to_fmpq(c) for c in coeffs])

    @classmethod
    def _wrap(cls, p):
        out = object.__new__(cls)
        out._p = p
        return out

    @classmethod
    def const(cls, c):
        return cls._wrap(flint.fmpq_poly([to_fmpq(c)]))

    @classmethod
    def monomial(cls, k, c=1):
        return cls._wrap(flint.fmpq_poly([0] * k + [to_fmpq(c)]))

    @classmethod
    def x(cls):
        return cls.monomial(1)

    # ------------------------------------------------------------------
    @property
    def coeffs(self):
        return tuple(from_fmpq(c) for c in self._p.coeffs())

    @property
    def degree(self):
        d = self._p.degree()
        return d if d >= 0 else -inf

    @property
    def lc(self):
        d = self._p.degree()
        return from_fmpq(self._p[d]) if d >= 0 else Fraction(0)

    def is_constant(self):
        return self._p.degree() <= 0

    def __bool__(self):
        return not self._p.is_zero()

    def __len__(self):
        return self._p.degree() + 1

    def __getitem__(self, k):
        return from_fmpq(self._p[k]) if 0 <= k <= self._p.degree() else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self._p == other._p
        if isinstance(other, _SCALARS):
            return self._p == flint.fmpq_poly([to_fmpq(other)])
        return NotImplemented

    def __hash__(self):
        return hash(("XPoly", self.coeffs))

    def __repr__(self):
        return f"XPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        from .weyl import WeylPoly

        return str(WeylPoly.from_ycoeffs([self]))

    def __call__(self, at):
        return from_fmpq(self._p(to_fmpq(at)))

    # ------------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, XPoly):
            return other._p
        if isinstance(other, _SCALARS):
            return to_fmpq(other)
        return None

    def __neg__(self):
        return XPoly._wrap(-self._p)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return XPoly._wrap(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return XPoly._wrap(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return XPoly._wrap(o - self._p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return XPoly._wrap(self._p * o)

    __rmul__ = __mul__

    def scale(self, c):
        return XPoly._wrap(self._p * to_fmpq(c))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        return XPoly._wrap(self._p**k)

    def derivative(self, k=1):
        return xpoly_derivative(self, k)

    def divmod(self, d):
        """Euclidean division ``self = q*d + r`` with ``deg r < deg d``."""
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = divmod(self._p, d._p)
        return XPoly._wrap(q), XPoly._wrap(r)

    def divexact(self, d):
        return xpoly_divexact(self, d)

    def content_primitive(self):
        return xpoly_content_primitive(self)

    def monic(self):
        if not self:
            return self
        return XPoly._wrap(self._p / self._p[self._p.degree()])


def xpoly_derivative(p, k=1):
    """k-th formal derivative; ``k = 0`` returns ``p`` itself."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    q = p._p
    for _ in range(k):
        if q.is_zero():
            break
        q = q.derivative()
    return XPoly._wrap(q) if k else p


def xpoly_divexact(p, d):
    """Quotient of ``p`` by ``d``; raises NotDivisibleError if inexact."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    if d._p.degree() == 0:
        return XPoly._wrap(p._p / d._p[0])
    q, r = divmod(p._p, d._p)
    if not r.is_zero():
        raise NotDivisibleError(f"{p} is not divisible by {d}")
    return XPoly._wrap(q)


def rational_content(coeffs):
    """Positive ``c`` such that ``coeffs / c`` are coprime integers."""
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    num = 0
    for c in coeffs:
        num = gcd(num, c.numerator * (den // c.denominator))
    return Fraction(num, den)


def xpoly_content_primitive(p):
    """Split ``p = c * prim`` with ``prim`` integral, coprime and lc > 0."""
    if not p:
        raise ValueError("the zero polynomial has no primitive part")
    content = rational_content(p.coeffs)
    if p.lc < 0:
        content = -content
    return content, p.scale(1 / content)


def xpoly_gcd(p, q):
    """Monic greatest common divisor (zero only if both inputs are zero)."""
    return XPoly._wrap(p._p.gcd(q._p))
