"""Exact linear algebra over Q[x]: determinant, solve and kernel vectors.

Everything is built on one fraction-free (Bareiss) forward elimination, so
intermediate entries stay polynomial.  Each Bareiss division goes through
:func:`xpoly_divexact` and therefore raises if it is ever inexact.
"""

from fractions import Fraction
from math import gcd, lcm

from .arith import NotDivisibleError, XPoly, xpoly_divexact, xpoly_gcd

__all__ = [
    "PolyMatrix",
    "PolyVec",
    "SingularMatrixError",
    "det",
    "solve",
    "scaled_solve",
    "nullspace_vector",
]


class SingularMatrixError(ArithmeticError):
    pass


def _poly(e):
    return e if isinstance(e, XPoly) else XPoly.const(e)


class PolyVec:
    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(_poly(e) for e in entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if isinstance(other, PolyVec):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"PolyVec([{', '.join(str(e) for e in self.entries)}])"

    def scale(self, p):
        p = _poly(p)
        return PolyVec([p * e for e in self.entries])

    def is_zero(self):
        return not any(self.entries)


class PolyMatrix:
    """Dense row-major matrix of :class:`XPoly` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(_poly(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other):
        if isinstance(other, PolyMatrix):
            return (self.rows, self.cols, self.entries) == (
                other.rows,
                other.cols,
                other.entries,
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self.to_rows())
        return f"PolyMatrix({self.rows}x{self.cols}: [{body}])"

    def __matmul__(self, other):
        if isinstance(other, PolyVec):
            if len(other) != self.cols:
                raise ValueError("dimension mismatch")
            out = []
            for i in range(self.rows):
                acc = XPoly()
                for j, e in enumerate(self.row(i)):
                    if e and other[j]:
                        acc = acc + e * other[j]
                out.append(acc)
            return PolyVec(out)
        if isinstance(other, PolyMatrix):
            if other.rows != self.cols:
                raise ValueError("dimension mismatch")
            out = []
            for i in range(self.rows):
                for j in range(other.cols):
                    acc = XPoly()
                    for k in range(self.cols):
                        acc = acc + self[i, k] * other[k, j]
                    out.append(acc)
            return PolyMatrix(self.rows, other.cols, out)
        return NotImplemented


def _eliminate(rows, npivot):
    """Fraction-free row echelon form, pivoting only in columns ``< npivot``.

    Pivot choice: lowest-degree nonzero entry in the column, ties to the
    lowest row index.  Returns ``(rows, pivot_columns, sign)`` where
    ``sign`` is the parity of the row swaps.
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = XPoly.const(1)
    sign = 1
    pivots = []
    r = 0
    for c in range(npivot):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            e = a[i][c]
            if e and (best is None or e.degree < a[best][c].degree):
                best = i
        if best is None:
            continue
        if best != r:
            a[r], a[best] = a[best], a[r]
            sign = -sign
        piv = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            lead = row[c]
            for j in range(c + 1, ncols):
                v = piv * row[j]
                if lead and prow[j]:
                    v = v - lead * prow[j]
                row[j] = xpoly_divexact(v, prev)
            row[c] = XPoly()
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots, sign


def _square(m):
    if m.rows != m.cols:
        raise ValueError(f"matrix must be square, got {m.rows}x{m.cols}")


def det(m):
    """Determinant by Bareiss elimination; the 0x0 determinant is 1."""
    _square(m)
    n = m.rows
    if n == 0:
        return XPoly.const(1)
    a, pivots, sign = _eliminate(m.to_rows(), n)
    if len(pivots) < n:
        return XPoly()
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def _back_substitute(a, pivots, rhs_col, scale):
    """Return ``scale * x`` for the triangular system left by ``_eliminate``.

    ``scale`` must be the last pivot, which makes every entry polynomial.
    """
    r = len(pivots)
    y = [None] * r
    for k in range(r - 1, -1, -1):
        acc = scale * rhs_col[k]
        for t in range(k + 1, r):
            e = a[k][pivots[t]]
            if e and y[t]:
                acc = acc - e * y[t]
        y[k] = xpoly_divexact(acc, a[k][pivots[k]])
    return y


def solve(m, rhs):
    """Unique polynomial solution ``s`` of ``m @ s == rhs``.

    Raises SingularMatrixError if ``det(m) == 0`` and NotDivisibleError if
    the solution over Q(x) is not polynomial.
    """
    _square(m)
    n = m.rows
    if len(rhs) != n:
        raise ValueError("right-hand side has the wrong length")
    if n == 0:
        return PolyVec([])
    aug = [r + [rhs[i]] for i, r in enumerate(m.to_rows())]
    a, pivots, _ = _eliminate(aug, n)
    if len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    d = a[n - 1][n - 1]
    y = _back_substitute(a, pivots, [row[n] for row in a], d)
    out = []
    for i, yi in enumerate(y):
        try:
            out.append(xpoly_divexact(yi, d))
        except NotDivisibleError as exc:
            raise NotDivisibleError(
                f"solution component {i} is not a polynomial: ({yi}) / ({d})"
            ) from exc
    return PolyVec(out)


def scaled_solve(m, rhs):
    """Return ``(det(m), s)`` with ``m @ s == det(m) * rhs``.

    ``s`` is the adjugate of ``m`` applied to ``rhs``, hence polynomial, and
    both come out of a single elimination.  If ``m`` is singular the
    determinant is 0 and ``s`` is :func:`nullspace_vector` of ``m`` instead,
    read off the same elimination.
    """
    _square(m)
    n = m.rows
    if len(rhs) != n:
        raise ValueError("right-hand side has the wrong length")
    if n == 0:
        return XPoly.const(1), PolyVec([])
    aug = [r + [rhs[i]] for i, r in enumerate(m.to_rows())]
    a, pivots, sign = _eliminate(aug, n)
    if len(pivots) < n:
        return XPoly(), _kernel(a, pivots, n)
    last = a[n - 1][n - 1]
    y = _back_substitute(a, pivots, [row[n] for row in a], last)
    if sign < 0:
        return -last, PolyVec([-e for e in y])
    return last, PolyVec(y)


def _normalize(vec):
    """Divide out polynomial gcd and rational content; first nonzero lc > 0."""
    g = XPoly()
    for e in vec:
        if e:
            g = xpoly_gcd(g, e) if g else e.monic()
    vec = [xpoly_divexact(e, g) for e in vec]
    den = 1
    for e in vec:
        for c in e.coeffs:
            den = lcm(den, c.denominator)
    num = 0
    for e in vec:
        for c in e.coeffs:
            num = gcd(num, c.numerator * (den // c.denominator))
    content = Fraction(num, den)
    first = next(e for e in vec if e)
    if first.lc < 0:
        content = -content
    return [e.scale(1 / content) for e in vec]


def nullspace_vector(m):
    """A nonzero kernel vector of a singular square matrix.

    Back-substitutes with the first non-pivot column set to 1 (all other free
    columns 0), clears denominators, and normalizes the result to be jointly
    primitive with the first nonzero entry having positive leading
    coefficient.
    """
    _square(m)
    n = m.rows
    if n == 0:
        raise ValueError("the 0x0 matrix has a trivial kernel")
    a, pivots, _ = _eliminate(m.to_rows(), n)
    if len(pivots) == n:
        raise ValueError("matrix is nonsingular; kernel is trivial")
    return _kernel(a, pivots, n)


def _kernel(a, pivots, n):
    free = next(c for c in range(n) if c not in pivots)
    r = len(pivots)
    d = a[r - 1][pivots[r - 1]] if r else XPoly.const(1)
    y = _back_substitute(a, pivots, [-a[k][free] for k in range(r)], d)
    vec = [XPoly()] * n
    for k, c in enumerate(pivots):
        vec[c] = y[k]
    vec[free] = d
    return PolyVec(_normalize(vec))
