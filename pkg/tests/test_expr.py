from fractions import Fraction

import pytest
from hypothesis import given

from weylfrac.comeasure import ComeasurePair
from weylfrac.expr import (
    Add,
    Call,
    Comm,
    EvalError,
    Let,
    Mul,
    Neg,
    Num,
    ParseError,
    Pow,
    Session,
    Sym,
    evaluate,
    parse,
    parse_statement,
    render,
)
from weylfrac.leftfrac import WeylFraction, embed
from weylfrac.weyl import ONE, X, Y, ZERO, WeylPoly

from conftest import rats, weyls

from hypothesis import strategies as st

x, y = Sym("x"), Sym("y")


def ev(text):
    return evaluate(parse(text))


def test_parse_examples():
    assert parse("y*x") == Mul(y, x)
    assert parse("[x, y^3]") == Comm(x, Pow(y, 3))
    assert parse("(x+y)^2") == Pow(Add(x, y), 2)
    assert parse("3/4") == Num(Fraction(3, 4))
    assert parse("inv(x) ∘ y") == Mul(Call("inv", (x,)), y)
    assert parse_statement("let f = x") == Let("f", x)


def test_precedence():
    # ^ binds tighter than unary minus, which binds tighter than *
    assert parse("-x^2") == Neg(Pow(x, 2))
    assert parse("-x*y") == Mul(Neg(x), y)
    assert parse("x + y*x") == Add(x, Mul(y, x))
    assert ev("-x^2") == -(X**2)


@pytest.mark.parametrize(
    "text",
    ["x^-1", "x^(2)", "x^1/2", "x^y", "x^", "x y", "xy*x", "(x", "[x y]", "x +", "1/0",
     "foo(x)", "inv(x, y)", "let x = 1", "2 let"],
)
def test_rejects(text):
    with pytest.raises((ParseError, EvalError)):
        Session().run(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse("x + * y")
    err = info.value
    assert (err.line, err.col) == (1, 5)
    assert "NUMBER" in err.expected and "(" in err.expected
    with pytest.raises(ParseError) as info:
        parse("x^-1")
    assert info.value.col == 3


def test_eval_examples():
    assert ev("y*x") == X * Y + 1
    assert ev("[x,y]") == -1
    assert ev("(x+y)^2") == WeylPoly({(2, 0): 1, (1, 1): 2, (0, 2): 1, (0, 0): 1})
    assert ev("dx(x^2*y)") == WeylPoly({(1, 1): 2})
    assert ev("hres(y, x)") == -X
    assert ev("comeasure(y, x)") == ComeasurePair(-(X**2), -(X * Y) + 1)
    assert ev("fraceq(inv(x)*x, 1)") is True
    assert ev("fraceq(inv(y)*x, x)") is False


def test_eval_fractions():
    z = ev("inv(y) ∘ x")
    assert isinstance(z, WeylFraction) and z.same_pair(WeylFraction(Y, X))
    assert ev("inv(x) * x") == embed(ONE)
    assert ev("inv(inv(x))") == embed(X)


def test_eval_errors():
    with pytest.raises(ZeroDivisionError):
        ev("inv(0)")
    with pytest.raises(ZeroDivisionError):
        ev("inv(x - x)")
    with pytest.raises(EvalError):
        ev("f + 1")
    with pytest.raises(EvalError):
        ev("hres(1, x)")
    with pytest.raises(EvalError):
        ev("hres(inv(y), x)")


def test_session_bindings_and_underscore():
    s = Session()
    s.run("let f = y^2")
    s.run("let g = x^2")
    assert s.run("f*g") == ev("y^2*x^2")
    assert s.run("_ - x^2*y^2") == WeylPoly({(1, 1): 4, (0, 0): 2})


def test_rewrite_engine_session():
    s = Session(engine="rewrite")
    assert s.run("(x+y)^3") == ev("(x+y)^3")


def test_render_examples():
    assert render(ev("y^2*x^2")) == "x^2*y^2 + 4*x*y + 2"
    assert render(ZERO) == "0"
    assert render(ev("-x*y + 1")) == "-x*y + 1"
    assert render(ev("1/2*x - 3/4")) == "1/2*x - 3/4"
    assert render(WeylFraction(Y, X + 1)) == "inv(y) ∘ (x + 1)"
    assert render(WeylFraction(X, -Y)) == "inv(x) ∘ -y"
    assert render(ComeasurePair(X, Y)) == "a = x; b = y"
    assert render(True) == "true"
    with pytest.raises(TypeError):
        render(3)


@given(weyls(4, 4, rats))
def test_round_trip(v):
    assert ev(render(v)) == v


@given(weyls(2, 2), weyls(2, 2).filter(bool))
def test_fraction_round_trip(num, den):
    z = WeylFraction(den, num)
    back = ev(render(z))
    assert isinstance(back, WeylFraction)
    assert back.same_pair(z) or (not num and not back.num)
