"""Left comeasuring factors: nonzero ``a, b`` with ``a*f == b*g``.

For ``f = sum_{s<=m} f_s(x) y^s`` and ``g = sum_{s<=n} g_s(x) y^s`` the
factors are sought as ``a = sum_{k<=n} a_k(x) y^k`` and
``b = sum_{k<=m} b_k(x) y^k``.  The leading coefficients are fixed as
``a_n = g_n * phi`` and ``b_m = f_m * phi``; matching the remaining powers of
``y`` gives a square linear system over Q[x] in the lower coefficients.  Its
determinant is the noncommutative resultant :func:`hres`.

Matrix layout: row ``i`` is the coefficient of ``y^(n+m-1-i)``; the columns
are ``a_{n-1}, ..., a_0`` followed by ``b_{m-1}, ..., b_0``, where the
``b`` columns hold the *negated* coefficients because ``b*g`` is moved to the
left of ``a*f - b*g = 0``.  The sign of :func:`hres` depends on this layout.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm

from .arith import XPoly, xpoly_divexact, xpoly_gcd
from .linalg import PolyMatrix, PolyVec, det, scaled_solve
from .weyl import WeylPoly, mul_closed, y_coefficients

__all__ = [
    "ComeasureError",
    "ComeasureSystem",
    "ComeasurePair",
    "build_system",
    "hres",
    "comeasure_left",
    "verify_pair",
]


class ComeasureError(AssertionError):
    """A constructed pair failed the ``a*f == b*g`` re-check."""


@dataclass(frozen=True)
class ComeasureSystem:
    m: int
    n: int
    M: PolyMatrix
    rhs_template: PolyVec

    def rhs(self, phi):
        return self.rhs_template.scale(phi)


@dataclass(frozen=True)
class ComeasurePair:
    a: WeylPoly
    b: WeylPoly


def _ycoef_contrib(q, coeffs, r):
    """Coefficient of ``y^r`` in ``y^q * F`` for ``F = sum_s coeffs[s] y^s``.

    ``y^q * F_s(x) y^s = sum_p C(q, p) D^(q-p) F_s y^(p+s)``; only ``s = r-p``
    contributes.
    """
    top = len(coeffs) - 1
    acc = XPoly()
    for p in range(max(0, r - top), min(q, r) + 1):
        fs = coeffs[r - p]
        if fs:
            d = fs.derivative(q - p)
            if d:
                acc = acc + d.scale(comb(q, p))
    return acc


def build_system(f, g):
    if not f or not g:
        raise ValueError("comeasuring needs nonzero elements")
    fc = y_coefficients(f)
    gc = y_coefficients(g)
    m, n = len(fc) - 1, len(gc) - 1
    if m + n == 0:
        raise ValueError("both elements are free of y; no system to build")
    size = n + m
    entries = []
    template = []
    for r in range(size - 1, -1, -1):
        for q in range(n - 1, -1, -1):
            entries.append(_ycoef_contrib(q, fc, r))
        for q in range(m - 1, -1, -1):
            entries.append(-_ycoef_contrib(q, gc, r))
        # a_n = g_n*phi and b_m = f_m*phi, moved to the right-hand side
        known = fc[m] * _ycoef_contrib(m, gc, r) - gc[n] * _ycoef_contrib(n, fc, r)
        template.append(known)
    return ComeasureSystem(m, n, PolyMatrix(size, size, entries), PolyVec(template))


def hres(f, g):
    """Noncommutative resultant ``det M`` (sign fixed by the module layout)."""
    return det(build_system(f, g).M)


def _reduce(a_coeffs, b_coeffs):
    # dividing every y-coefficient by a common c(x) is left division by c(x)
    g = XPoly()
    for e in a_coeffs + b_coeffs:
        if e:
            g = xpoly_gcd(g, e) if g else e.monic()
    if not g:
        return a_coeffs, b_coeffs
    a_coeffs = [xpoly_divexact(e, g) for e in a_coeffs]
    b_coeffs = [xpoly_divexact(e, g) for e in b_coeffs]
    den, num = 1, 0
    for e in a_coeffs + b_coeffs:
        for c in e.coeffs:
            den = lcm(den, c.denominator)
    for e in a_coeffs + b_coeffs:
        for c in e.coeffs:
            num = gcd(num, c.numerator * (den // c.denominator))
    s = Fraction(den, num)
    return [e.scale(s) for e in a_coeffs], [e.scale(s) for e in b_coeffs]


def comeasure_left(f, g, *, reduce=True):
    """Return a :class:`ComeasurePair` with ``a*f == b*g``, both nonzero.

    Three cases: both inputs free of ``y`` (they commute, so ``(g, f)``);
    nonzero resultant (``phi`` = resultant, unique polynomial solution); zero
    resultant (``phi = 0`` and a kernel vector of the system).

    With ``reduce`` the pair is divided by the gcd of all its y-coefficients
    and by its positive rational content.  That is a left division by an
    element of Q[x], so the identity is preserved and sizes stay small.
    """
    if not f or not g:
        raise ValueError("comeasuring needs nonzero elements")
    if f.deg_y == 0 and g.deg_y == 0:
        pair = ComeasurePair(g, f)
    else:
        system = build_system(f, g)
        m, n = system.m, system.n
        # with phi = mu the solution of M s = mu * template is adj(M) template
        mu, sol = scaled_solve(system.M, system.rhs_template)
        if mu:
            a_top = y_coefficients(g)[n] * mu
            b_top = y_coefficients(f)[m] * mu
        else:
            # sol is already a kernel vector; phi = 0 drops the leading terms
            a_top = b_top = XPoly()
        a_coeffs = list(reversed(sol[:n])) + [a_top]
        b_coeffs = list(reversed(sol[n:])) + [b_top]
        if reduce:
            a_coeffs, b_coeffs = _reduce(a_coeffs, b_coeffs)
        pair = ComeasurePair(
            WeylPoly.from_ycoeffs(a_coeffs), WeylPoly.from_ycoeffs(b_coeffs)
        )
    if not verify_pair(f, g, pair):
        raise ComeasureError(f"comeasuring failed for f = {f}, g = {g}")
    return pair


def verify_pair(f, g, pair):
    return bool(pair.a) and bool(pair.b) and mul_closed(pair.a, f) == mul_closed(pair.b, g)
