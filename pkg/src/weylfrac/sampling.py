"""Seeded random elements for property checks and benchmarks."""

from fractions import Fraction

from .leftfrac import WeylFraction
from .weyl import WeylPoly


def random_weyl(rng, max_dx, max_dy, coeffs=5, density=0.5, nonzero=False):
    """Random WeylPoly with ``deg_x <= max_dx``, ``deg_y <= max_dy``.

    Each monomial is present with probability ``density`` and gets an integer
    coefficient drawn from ``-coeffs..coeffs``.
    """
    while True:
        terms = {}
        for p in range(max_dx + 1):
            for q in range(max_dy + 1):
                if rng.random() < density:
                    c = rng.randint(-coeffs, coeffs)
                    if c:
                        terms[(p, q)] = Fraction(c)
        f = WeylPoly(terms)
        if f or not nonzero:
            return f


def random_fraction(rng, max_deg=2, coeffs=3, density=0.5):
    den = random_weyl(rng, max_deg, max_deg, coeffs, density, nonzero=True)
    num = random_weyl(rng, max_deg, max_deg, coeffs, density)
    return WeylFraction(den, num)
