"""Left fractions ``b^-1 o a`` over the Weyl algebra.

A fraction is a pair (denominator, numerator) with nonzero denominator.
There is no canonical representative: two fractions are equal in the
division algebra exactly when :func:`equivalent` says so, and ``==`` on
:class:`WeylFraction` delegates to it.  Structural comparison of the stored
pair is available as :meth:`WeylFraction.same_pair`.
"""

from fractions import Fraction

from .arith import as_rat
from .comeasure import comeasure_left
from .weyl import ONE, ZERO, WeylPoly, mul_closed

__all__ = [
    "WeylFraction",
    "embed",
    "equivalent",
    "add",
    "neg",
    "sub",
    "scalar_mul",
    "mul",
    "inverse",
    "is_zero",
]


def _weyl(v):
    if isinstance(v, WeylPoly):
        return v
    return WeylPoly.const(as_rat(v))


class WeylFraction:
    """The class of ``den^-1 o num``."""

    __slots__ = ("den", "num")

    def __init__(self, den, num):
        den, num = _weyl(den), _weyl(num)
        if not den:
            raise ZeroDivisionError("fraction with zero denominator")
        self.den = den
        self.num = num

    def __repr__(self):
        return f"WeylFraction(den={self.den!r}, num={self.num!r})"

    def __str__(self):
        from .expr import render

        return render(self)

    def same_pair(self, other):
        return self.den == other.den and self.num == other.num

    def __eq__(self, other):
        if isinstance(other, (WeylPoly, int, Fraction)):
            other = embed(_weyl(other))
        if not isinstance(other, WeylFraction):
            return NotImplemented
        return equivalent(self, other)

    __hash__ = None

    def __bool__(self):
        return bool(self.num)

    def __neg__(self):
        return neg(self)

    def __add__(self, other):
        return add(self, _lift(other))

    def __radd__(self, other):
        return add(_lift(other), self)

    def __sub__(self, other):
        return sub(self, _lift(other))

    def __rsub__(self, other):
        return sub(_lift(other), self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scalar_mul(self, other)
        return mul(self, _lift(other))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scalar_mul(self, other)
        return mul(_lift(other), self)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = embed(ONE)
        for _ in range(k):
            out = mul(out, self)
        return out

    def inverse(self):
        return inverse(self)


def _lift(v):
    if isinstance(v, WeylFraction):
        return v
    return embed(_weyl(v))


def embed(f):
    """``f`` as the fraction ``1^-1 o f``."""
    return WeylFraction(ONE, _weyl(f))


def is_zero(z):
    return not z.num


def equivalent(z1, z2):
    """Decide ``z1 ~ z2``.

    Bring both to the common denominator ``u*b == v*d`` and compare the
    numerators ``u*a`` and ``v*c``; with equal denominators the numerators
    of equivalent fractions must coincide.
    """
    if not z1.num or not z2.num:
        return not z1.num and not z2.num
    if z1.den == z2.den:
        return z1.num == z2.num
    pair = comeasure_left(z1.den, z2.den)
    return mul_closed(pair.a, z1.num) == mul_closed(pair.b, z2.num)


def _common_factors(b, d):
    """Nonzero ``(u, v)`` with ``u*b == v*d``."""
    if b == d:
        return ONE, ONE
    if b.is_scalar():
        return d.scale(1 / b.scalar_value()), ONE
    if d.is_scalar():
        return ONE, b.scale(1 / d.scalar_value())
    pair = comeasure_left(b, d)
    return pair.a, pair.b


def add(z1, z2):
    u, v = _common_factors(z1.den, z2.den)
    den = mul_closed(u, z1.den)
    num = mul_closed(u, z1.num) + mul_closed(v, z2.num)
    return WeylFraction(den, num)


def neg(z):
    return WeylFraction(z.den, -z.num)


def sub(z1, z2):
    return add(z1, neg(z2))


def scalar_mul(z, c):
    return WeylFraction(z.den, z.num.scale(as_rat(c)))


def mul(z1, z2):
    """``(b^-1 o a) * (d^-1 o c)``.

    Zero if ``a == 0``.  Otherwise take ``u*d == v*(d*a)`` and return
    ``(v*d*b)^-1 o (u*c)``.  A scalar ``d`` needs no comeasuring:
    the product is ``b^-1 o (a*c/d)``.
    """
    b, a = z1.den, z1.num
    d, c = z2.den, z2.num
    if not a:
        return WeylFraction(ONE, ZERO)
    if d.is_scalar():
        return WeylFraction(b, mul_closed(a, c).scale(1 / d.scalar_value()))
    pair = comeasure_left(d, mul_closed(d, a))
    u, v = pair.a, pair.b
    return WeylFraction(mul_closed(mul_closed(v, d), b), mul_closed(u, c))


def mul_general(z1, z2):
    """:func:`mul` without the scalar-denominator shortcut."""
    b, a = z1.den, z1.num
    d, c = z2.den, z2.num
    if not a:
        return WeylFraction(ONE, ZERO)
    pair = comeasure_left(d, mul_closed(d, a))
    return WeylFraction(mul_closed(mul_closed(pair.b, d), b), mul_closed(pair.a, c))


def add_general(z1, z2):
    """:func:`add` without the shortcuts for equal or scalar denominators."""
    pair = comeasure_left(z1.den, z2.den)
    den = mul_closed(pair.a, z1.den)
    num = mul_closed(pair.a, z1.num) + mul_closed(pair.b, z2.num)
    return WeylFraction(den, num)


def inverse(z):
    if not z.num:
        raise ZeroDivisionError("the zero fraction has no inverse")
    return WeylFraction(z.num, z.den)
