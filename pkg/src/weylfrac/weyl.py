"""Normal-ordered elements of the Weyl algebra with ``x*y - y*x = -1``.

An element is the family of coefficients ``(p, q) -> c`` standing for
``sum c * x^p * y^q`` with every ``x`` to the left of every ``y``.  Two
independent multiplication engines are provided:

* :func:`mul_closed` reduces the product to commutative products of partial
  derivatives, ``f*g = sum_k D_y^k f * D_x^k g / k!``;
* :func:`mul_rewrite` multiplies monomial by monomial, reordering each
  ``y^q * x^r`` with the coefficients from :func:`c_qr`.

:func:`normal_order` is a third, purely syntactic route that rewrites words
in ``x`` and ``y`` with ``y x -> x y + 1``.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, inf

import flint

from .arith import XPoly, as_rat, from_fmpq, to_fmpq

__all__ = [
    "WeylPoly",
    "X",
    "Y",
    "ONE",
    "ZERO",
    "binom",
    "c_qr",
    "normal_order",
    "mul_rewrite",
    "mul_closed",
    "commutator",
    "dx",
    "dy",
    "y_coefficients",
    "deg_x",
    "deg_y",
    "leading_ycoef",
    "is_invertible",
    "wpow",
]


_CTX = flint.fmpq_mpoly_ctx.get(("x", "y"), "deglex")


class WeylPoly:
    """Immutable normal-ordered Weyl polynomial.

    ``*`` uses the closed-form engine; ``+``, ``-`` and scalar ``*`` act
    coefficient-wise.  Equality is exact and structural, which coincides
    with equality in the algebra because the normal form is unique.  The
    coefficients live in a FLINT polynomial of the commutative ring
    Q[x, y], which is exactly the data of the normal form.
    """

    __slots__ = ("_p", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (p, q), c in items:
                if p < 0 or q < 0:
                    raise ValueError("exponents must be nonnegative")
                key = (int(p), int(q))
                clean[key] = clean.get(key, 0) + as_rat(c)
        self._p = _CTX.from_dict({k: to_fmpq(c) for k, c in clean.items() if c})
        self._hash = None

    @classmethod
    def _wrap(cls, p):
        w = object.__new__(cls)
        w._p = p
        w._hash = None
        return w

    @classmethod
    def const(cls, c):
        return cls._wrap(_CTX.constant(to_fmpq(c)))

    @classmethod
    def monomial(cls, p, q, c=1):
        return cls({(p, q): c})

    @classmethod
    def from_ycoeffs(cls, coeffs):
        """Build ``sum_q coeffs[q](x) * y^q``."""
        terms = {}
        for q, fq in enumerate(coeffs):
            for p, c in enumerate(fq._p.coeffs()):
                if c:
                    terms[(p, q)] = c
        return cls._wrap(_CTX.from_dict(terms))

    # ------------------------------------------------------------------
    @property
    def _terms(self):
        return {
            (int(p), int(q)): from_fmpq(c)
            for (p, q), c in zip(self._p.monoms(), self._p.coeffs())
        }

    def terms(self):
        """(p, q, coefficient) triples in graded-lex descending order."""
        t = self._terms
        keys = sorted(t, key=lambda k: (k[0] + k[1], k[0]), reverse=True)
        return [(p, q, t[(p, q)]) for p, q in keys]

    def coefficient(self, p, q):
        return from_fmpq(self._p[(p, q)])

    def __len__(self):
        return len(self._p)

    def __bool__(self):
        return not self._p.is_zero()

    def __eq__(self, other):
        if isinstance(other, WeylPoly):
            return self._p == other._p
        if isinstance(other, (int, Fraction)):
            return self._p == _CTX.constant(to_fmpq(other))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.terms()))
        return self._hash

    def __repr__(self):
        return f"WeylPoly({str(self)!r})"

    def __str__(self):
        from .expr import render

        return render(self)

    def is_scalar(self):
        return self._p.is_constant()

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError(f"{self} is not a scalar")
        return self.coefficient(0, 0)

    # ------------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, WeylPoly):
            return other._p
        if isinstance(other, (int, Fraction)):
            return _CTX.constant(to_fmpq(other))
        return None

    def __neg__(self):
        return WeylPoly._wrap(-self._p)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return WeylPoly._wrap(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return WeylPoly._wrap(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return WeylPoly._wrap(o - self._p)

    def scale(self, c):
        return WeylPoly._wrap(self._p * to_fmpq(c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, WeylPoly):
            return NotImplemented
        return mul_closed(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        return wpow(self, k)

    def commutative_mul(self, other):
        """Product in the commutative ring Q[x, y] (no reordering)."""
        return WeylPoly._wrap(self._p * other._p)

    def dx(self, k=1):
        return _derive(self, k, 0)

    def dy(self, k=1):
        return _derive(self, k, 1)

    @property
    def deg_x(self):
        d = int(self._p.degrees()[0])
        return d if d >= 0 else -inf

    @property
    def deg_y(self):
        d = int(self._p.degrees()[1])
        return d if d >= 0 else -inf

    def y_coefficients(self):
        return y_coefficients(self)

    def leading_ycoef(self):
        return leading_ycoef(self)


X = WeylPoly({(1, 0): 1})
Y = WeylPoly({(0, 1): 1})
ONE = WeylPoly.const(1)
ZERO = WeylPoly()


def _derive(f, k, axis):
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    p = f._p
    for _ in range(k):
        if p.is_zero():
            break
        p = p.derivative(axis)
    return WeylPoly._wrap(p) if k else f


def dx(f):
    return _derive(f, 1, 0)


def dy(f):
    return _derive(f, 1, 1)


def binom(k, alpha):
    """Binomial coefficient ``k! / (alpha! (k - alpha)!)`` as a Rat."""
    if not 0 <= alpha <= k:
        raise ValueError(f"binom({k}, {alpha}) needs 0 <= alpha <= k")
    return Fraction(comb(k, alpha))


@lru_cache(maxsize=4096)
def c_qr(q, r, alpha):
    """Coefficient of ``x^(r-alpha) y^(q-alpha)`` in ``y^q * x^r``."""
    if not 0 <= alpha <= min(q, r):
        raise ValueError(f"c_qr({q}, {r}, {alpha}) needs 0 <= alpha <= min(q, r)")
    return Fraction(
        factorial(q) * factorial(r),
        factorial(q - alpha) * factorial(alpha) * factorial(r - alpha),
    )


def normal_order(word):
    """Expand a word over ``{'x', 'y'}`` into normal order.

    Rewrites the leftmost ``yx`` as ``xy + 1`` until no word contains one.
    Words are collected with multiplicities at every step so the number of
    live words stays bounded by the number of distinct words.
    """
    word = "".join(word)
    if set(word) - {"x", "y"}:
        raise ValueError(f"words may only contain 'x' and 'y': {word!r}")
    pending = {word: 1}
    done = {}
    while pending:
        nxt = {}
        for w, c in pending.items():
            i = w.find("yx")
            if i < 0:
                key = (w.count("x"), w.count("y"))
                done[key] = done.get(key, 0) + c
                continue
            for v in (w[:i] + "xy" + w[i + 2 :], w[:i] + w[i + 2 :]):
                nxt[v] = nxt.get(v, 0) + c
        pending = nxt
    return WeylPoly(done)


def mul_rewrite(f, g):
    """Product via ``y^q x^r = sum_a c_qr(q, r, a) x^(r-a) y^(q-a)``."""
    out = {}
    gt = g._terms
    for (p1, q1), c1 in f._terms.items():
        for (p2, q2), c2 in gt.items():
            c12 = c1 * c2
            for a in range(min(q1, p2) + 1):
                key = (p1 + p2 - a, q1 + q2 - a)
                s = out.get(key, 0) + c12 * c_qr(q1, p2, a)
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return WeylPoly(out)


def mul_closed(f, g):
    """Product via ``sum_k D_y^k f * D_x^k g / k!`` in Q[x, y].

    The sum stops as soon as either derivative vanishes.
    """
    df, dg = f._p, g._p
    total = _CTX.from_dict({})
    k = 0
    fact = 1
    while not df.is_zero() and not dg.is_zero():
        term = df * dg
        total += term if fact == 1 else term / fact
        k += 1
        fact *= k
        df = df.derivative(1)
        dg = dg.derivative(0)
    return WeylPoly._wrap(total)


def commutator(f, g):
    return mul_closed(f, g) - mul_closed(g, f)


def wpow(f, k, mul=mul_closed):
    if not isinstance(k, int) or k < 0:
        raise ValueError("exponent must be a nonnegative integer")
    out = ONE
    base = f
    while k:
        if k & 1:
            out = mul(out, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return out


def y_coefficients(f):
    """``[f_0(x), ..., f_m(x)]`` with ``f = sum_q f_q(x) y^q``."""
    if not f:
        return []
    rows = [[] for _ in range(int(f._p.degrees()[1]) + 1)]
    for (p, q), c in zip(f._p.monoms(), f._p.coeffs()):
        row = rows[q]
        if len(row) <= p:
            row.extend([0] * (p + 1 - len(row)))
        row[p] = c
    return [XPoly._wrap(flint.fmpq_poly(r)) for r in rows]


def deg_x(f):
    return f.deg_x


def deg_y(f):
    return f.deg_y


def leading_ycoef(f):
    if not f:
        raise ValueError("the zero element has no leading coefficient")
    return y_coefficients(f)[-1]


def is_invertible(f):
    """Only nonzero scalars are units in the Weyl algebra."""
    return bool(f) and f.is_scalar()
