"""Exact arithmetic in the Weyl algebra Q<x, y>/(xy - yx + 1) and its
division algebra of left fractions."""

from .arith import NotDivisibleError, Rat, XPoly, xpoly_content_primitive, xpoly_derivative, xpoly_divexact
from .comeasure import (
    ComeasureError,
    ComeasurePair,
    ComeasureSystem,
    build_system,
    comeasure_left,
    hres,
    verify_pair,
)
from .expr import EvalError, ParseError, Session, evaluate, parse, parse_statement, render
from .leftfrac import WeylFraction, embed, equivalent, inverse, is_zero
from .linalg import PolyMatrix, PolyVec, SingularMatrixError, det, nullspace_vector, solve
from .weyl import (
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

__version__ = "0.1.0"


def weyl(text):
    """Parse and evaluate ``text``, e.g. ``weyl("y^2*x^2")``."""
    return evaluate(parse(text))
