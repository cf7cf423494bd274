"""Left comeasuring: nonzero a, b with a*f == b*g, and the resultant.

Run with ``python3 demos/comeasuring.py``.
"""

from weylfrac import X, Y, build_system, comeasure_left, hres, mul_closed, render, weyl

f, g = Y, X
system = build_system(f, g)
rows = [[str(e) for e in row] for row in system.M.to_rows()]
print("system for f = y, g = x:", rows, "rhs", [str(e) for e in system.rhs_template])
print("hres(y, x) =", hres(f, g))
pair = comeasure_left(f, g)
print(f"a = {pair.a}, b = {pair.b}")
print("a*f =", mul_closed(pair.a, f), " b*g =", mul_closed(pair.b, g))

# When the resultant vanishes a kernel vector of the system is used instead.
print("hres(y, y) =", hres(Y, Y), "->", render(comeasure_left(Y, Y)))

# A bigger instance.
f = weyl("x*y^2 + y - 3")
g = weyl("y*x^2 + x")
pair = comeasure_left(f, g)
print(f"\nf = {f}\ng = {g}\nhres = {hres(f, g)}")
print(f"a = {pair.a}\nb = {pair.b}")
assert mul_closed(pair.a, f) == mul_closed(pair.b, g)
print("identity a*f == b*g holds")
