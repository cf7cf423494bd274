from fractions import Fraction
from math import inf

import pytest
from hypothesis import given, strategies as st

from weylfrac.arith import (
    NotDivisibleError,
    Rat,
    XPoly,
    xpoly_content_primitive,
    xpoly_derivative,
    xpoly_divexact,
    xpoly_gcd,
)

from conftest import nonzero_rats, rats, xpolys

X = XPoly.x()


def test_rat_examples():
    assert Rat(1, 2) + Rat(1, 3) == Rat(5, 6)
    r = Rat(2, 4)
    assert (r.numerator, r.denominator) == (1, 2)
    with pytest.raises(ZeroDivisionError):
        Rat(3) / 0


@given(rats, rats, rats)
def test_rat_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a:
        assert a * (1 / a) == 1


@given(rats)
def test_rat_canonical(a):
    assert a.denominator > 0
    from math import gcd

    assert gcd(abs(a.numerator), a.denominator) == 1


def test_xpoly_examples():
    assert (X + 1) * (X - 1) == XPoly([-1, 0, 1])
    p = XPoly([3, Fraction(1, 2), -7])
    assert p + (-p) == XPoly()
    assert ((X**2) * (X**3)).degree == 5


def test_xpoly_zero_and_trim():
    assert XPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert XPoly([0, 0]).coeffs == ()
    assert XPoly().degree == -inf
    assert not XPoly()
    assert XPoly([5]) == 5


@given(xpolys(), xpolys(), xpolys())
def test_xpoly_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == XPoly()


@given(xpolys(), xpolys())
def test_degree_additivity(p, q):
    if p and q:
        assert (p * q).degree == p.degree + q.degree
    else:
        assert (p * q).degree == -inf


def test_derivative_examples():
    assert xpoly_derivative(X**3, 1) == XPoly([0, 0, 3])
    p = XPoly([1, 2, 3])
    assert xpoly_derivative(p, 0) == p
    assert xpoly_derivative(X**3, 4) == XPoly()
    assert xpoly_derivative(X**5, 2) == XPoly.monomial(3, 20)
    with pytest.raises(ValueError):
        xpoly_derivative(p, -1)


def test_divexact_examples():
    assert xpoly_divexact(X**2 - 1, X - 1) == X + 1
    assert xpoly_divexact(XPoly(), X + 3) == XPoly()
    with pytest.raises(NotDivisibleError):
        xpoly_divexact(X**2 + 1, X)
    with pytest.raises(ZeroDivisionError):
        xpoly_divexact(X, XPoly())


@given(xpolys(), xpolys().filter(bool))
def test_divexact_roundtrip(p, d):
    assert xpoly_divexact(p * d, d) == p


def test_content_primitive_examples():
    assert xpoly_content_primitive(XPoly([Fraction(4, 3), Fraction(2, 3)])) == (
        Fraction(2, 3),
        X + 2,
    )
    assert xpoly_content_primitive(X**2) == (1, X**2)
    assert xpoly_content_primitive(XPoly([0, -2])) == (-2, X)
    with pytest.raises(ValueError):
        xpoly_content_primitive(XPoly())


@given(xpolys().filter(bool), nonzero_rats)
def test_content_primitive_recovers(p, c):
    c0, prim = xpoly_content_primitive(p)
    assert all(k.denominator == 1 for k in prim.coeffs)
    assert prim.lc > 0
    assert c0 * prim == p
    c1, prim1 = xpoly_content_primitive(p.scale(c))
    assert prim1 == prim
    assert c1 == c * c0


@given(xpolys(4), xpolys(4), xpolys(3).filter(bool))
def test_gcd_divides(p, q, h):
    g = xpoly_gcd(p * h, q * h)
    if not p and not q:
        assert not g
        return
    assert g.lc == 1
    xpoly_divexact(p * h, g)
    xpoly_divexact(q * h, g)
    xpoly_divexact(g, h.monic())


@given(xpolys(), st.integers(-3, 3))
def test_evaluation(p, t):
    expected = sum((c * t**i for i, c in enumerate(p.coeffs)), Fraction(0))
    assert p(t) == expected
