from fractions import Fraction
from math import factorial, inf

import pytest
from hypothesis import given, strategies as st

from weylfrac.arith import XPoly
from weylfrac.weyl import (
    ONE,
    X,
    Y,
    ZERO,
    WeylPoly,
    binom,
    c_qr,
    commutator,
    deg_x,
    deg_y,
    dx,
    dy,
    is_invertible,
    leading_ycoef,
    mul_closed,
    mul_rewrite,
    normal_order,
    wpow,
    y_coefficients,
)

from conftest import nonzero_weyls, weyls

W = WeylPoly
# x^2 y^2 + 4 x y + 2, the normal form of yyxx worked by hand
YYXX = W({(2, 2): 1, (1, 1): 4, (0, 0): 2})
words = st.text(alphabet="xy", max_size=7)


def test_binom_examples():
    assert binom(4, 2) == 6
    assert binom(7, 0) == 1
    assert binom(5, 5) == 1
    with pytest.raises(ValueError):
        binom(2, 3)


def test_c_qr_examples():
    assert c_qr(1, 1, 1) == 1
    assert c_qr(2, 2, 1) == 4
    assert c_qr(3, 1, 0) == 1
    with pytest.raises(ValueError):
        c_qr(1, 2, 2)


@pytest.mark.parametrize("q", range(5))
@pytest.mark.parametrize("r", range(5))
def test_c_qr_matches_word_rewriting(q, r):
    expanded = normal_order("y" * q + "x" * r)
    for a in range(min(q, r) + 1):
        assert expanded.coefficient(r - a, q - a) == c_qr(q, r, a)
    assert len(expanded) == min(q, r) + 1


def test_normal_order_examples():
    assert normal_order("yx") == W({(1, 1): 1, (0, 0): 1})
    assert normal_order("xy") == W({(1, 1): 1})
    assert normal_order("yyxx") == YYXX
    assert normal_order("") == ONE
    with pytest.raises(ValueError):
        normal_order("xz")


def test_mul_rewrite_examples():
    assert mul_rewrite(Y, X) == X * Y + 1
    assert mul_rewrite(Y**2, X**2) == YYXX
    g = W({(2, 1): 3, (0, 3): -1})
    assert mul_rewrite(ONE, g) == g
    assert mul_rewrite(g, ONE) == g


def test_mul_closed_examples():
    assert mul_closed(Y, X) == W({(1, 1): 1, (0, 0): 1})
    assert mul_closed(X, Y) == W({(1, 1): 1})
    assert mul_closed(W({(0, 2): 1}), W({(2, 0): 1})) == YYXX
    assert mul_closed(ZERO, Y) == ZERO


def test_linear_ops():
    assert X + (-X) == ZERO
    assert (X * Y).scale(3) == W({(1, 1): 3})
    assert (X**2 + Y) + Y == W({(2, 0): 1, (0, 1): 2})
    assert X - X == 0
    assert 2 * X == X + X


def test_commutator_examples():
    assert commutator(X, Y**3) == W({(0, 2): -3})
    assert commutator(Y, X**2) == W({(1, 0): 2})
    assert commutator(X, X**5) == ZERO
    assert commutator(X, Y) == -1


def test_derivatives():
    assert dy(W({(2, 3): 1})) == W({(2, 2): 3})
    assert dx(Y**4) == ZERO
    assert dx(X * Y) == Y
    assert W({(3, 1): 1}).dx(2) == W({(1, 1): 6})


def test_y_coefficients_and_degrees():
    assert y_coefficients(YYXX) == [XPoly([2]), XPoly([0, 4]), XPoly([0, 0, 1])]
    assert y_coefficients(X**3) == [XPoly([0, 0, 0, 1])]
    assert y_coefficients(ZERO) == []
    assert deg_y(YYXX) == 2
    assert leading_ycoef(YYXX) == XPoly([0, 0, 1])
    assert deg_x(Y**3) == 0
    assert deg_x(ZERO) == -inf
    with pytest.raises(ValueError):
        leading_ycoef(ZERO)


def test_from_ycoeffs_inverts_view():
    assert W.from_ycoeffs(y_coefficients(YYXX)) == YYXX


def test_is_invertible():
    assert is_invertible(W.const(5))
    assert not is_invertible(X)
    assert not is_invertible(ZERO)


def test_pow():
    assert wpow(X + Y, 2) == W({(2, 0): 1, (1, 1): 2, (0, 2): 1, (0, 0): 1})
    assert wpow(X * Y + 3, 0) == ONE
    assert wpow(Y, 3) == W({(0, 3): 1})
    assert (X + Y) ** 5 == mul_rewrite(mul_rewrite((X + Y) ** 2, (X + Y) ** 2), X + Y)


def test_rendering_order():
    assert str(YYXX) == "x^2*y^2 + 4*x*y + 2"
    assert str(W({(0, 2): 1, (1, 1): -1, (2, 0): Fraction(1, 2)})) == "1/2*x^2 - x*y + y^2"
    assert str(ZERO) == "0"


def test_hash_consistent_with_eq():
    a = mul_closed(Y, X)
    b = X * Y + 1
    assert a == b and hash(a) == hash(b)


# --- properties ----------------------------------------------------------------


@given(weyls(5, 5), weyls(5, 5))
def test_engines_agree(f, g):
    assert mul_closed(f, g) == mul_rewrite(f, g)


@given(weyls(2, 2), weyls(2, 2), weyls(2, 2))
def test_associativity(f, g, h):
    assert mul_closed(mul_closed(f, g), h) == mul_closed(f, mul_closed(g, h))
    assert mul_rewrite(mul_rewrite(f, g), h) == mul_rewrite(f, mul_rewrite(g, h))


@given(weyls(), weyls(), weyls())
def test_distributivity(f, g, h):
    assert mul_closed(f, g + h) == mul_closed(f, g) + mul_closed(f, h)
    assert mul_closed(f + g, h) == mul_closed(f, h) + mul_closed(g, h)


def test_commutation_rule():
    assert mul_closed(X, Y) - mul_closed(Y, X) == -1


@given(weyls(4, 4))
def test_derivation_identities(f):
    assert commutator(X, f) == -dy(f)
    assert commutator(Y, f) == dx(f)


@given(weyls(), st.integers(0, 4))
def test_reordering_with_generator_powers(f, k):
    xk, yk = X**k, Y**k
    right = ZERO
    left = ZERO
    for a in range(k + 1):
        c = binom(k, a)
        right += (X**a).commutative_mul(f.dy(k - a)).scale(c)
        left += f.dx(k - a).commutative_mul(Y**a).scale(c)
    assert mul_rewrite(f, xk) == right
    assert mul_rewrite(yk, f) == left


@pytest.mark.parametrize("k", range(4))
@pytest.mark.parametrize("q", range(4))
def test_specialized_reorderings(k, q):
    def coef(a):
        return Fraction(
            factorial(k) * factorial(k + q),
            factorial(a) * factorial(k - a) * factorial(q + a),
        )

    lhs1 = W({(a, q + a): coef(a) for a in range(k + 1)})
    assert mul_rewrite(Y ** (k + q), X**k) == lhs1
    assert normal_order("y" * (k + q) + "x" * k) == lhs1
    lhs2 = W({(a + q, a): coef(a) for a in range(k + 1)})
    assert mul_rewrite(Y**k, X ** (k + q)) == lhs2
    assert normal_order("y" * k + "x" * (k + q)) == lhs2


@given(nonzero_weyls(), nonzero_weyls())
def test_no_zero_divisors(f, g):
    h = mul_closed(f, g)
    assert h
    assert deg_y(h) == deg_y(f) + deg_y(g)
    assert leading_ycoef(h) == leading_ycoef(f) * leading_ycoef(g)


@given(words, words)
def test_normal_order_homomorphism(w1, w2):
    assert normal_order(w1 + w2) == mul_closed(normal_order(w1), normal_order(w2))


@given(words)
def test_normal_order_matches_generator_product(w):
    prod = ONE
    for ch in w:
        prod = mul_rewrite(prod, X if ch == "x" else Y)
    assert normal_order(w) == prod
