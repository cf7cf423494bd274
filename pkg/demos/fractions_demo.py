"""Left fractions inv(b) o a and the division algebra they form.

Run with ``python3 demos/fractions_demo.py``.
"""

from weylfrac import ONE, X, Y, WeylFraction, embed, equivalent, inverse, weyl

z = WeylFraction(Y, X)  # inv(y) o x
print("z          =", z)
print("z * inv(z) =", z * inverse(z))
print("equal to 1:", equivalent(z * inverse(z), embed(ONE)))

# Fractions have no canonical form; == decides equivalence.
c = weyl("x*y + 2")
same = WeylFraction(c * Y, c * X)
print("\n(c*y)^-1 o (c*x) =", same)
print("same class as z:", same == z, "| same stored pair:", same.same_pair(z))

# inv(y) o x is not x * inv(y): the order of the quotient matters.
print("\ninv(y) o x == x o inv(y)?", z == embed(X) * inverse(embed(Y)))

w = weyl("inv(x) ∘ 1 + inv(x) ∘ (x - 1)")
print("inv(x) o 1 + inv(x) o (x - 1) =", w, "~ 1:", w == 1)
