"""Normal ordering in the Weyl algebra, three ways.

Run with ``python3 demos/normal_ordering.py``.
"""

from weylfrac import X, Y, c_qr, commutator, mul_closed, mul_rewrite, normal_order, weyl

# The defining relation: moving y past x leaves a constant behind.
print("y*x            =", mul_closed(Y, X))
print("[x, y]         =", commutator(X, Y))

# The word yyxx reordered by repeated rewriting of "yx".
print("normal(yyxx)   =", normal_order("yyxx"))

# The same product from the derivative formula and from the coefficient table.
print("closed engine  =", mul_closed(Y**2, X**2))
print("rewrite engine =", mul_rewrite(Y**2, X**2))
print("table c_qr(2, 2, a) for a = 0..2:", [int(c_qr(2, 2, a)) for a in range(3)])

# Commuting a generator past f differentiates f.
f = weyl("x^3*y^2 + 2*x*y")
print("f              =", f)
print("[x, f]         =", commutator(X, f), "  (minus the y-derivative)")
print("[y, f]         =", commutator(Y, f), "  (the x-derivative)")
