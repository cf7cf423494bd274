from fractions import Fraction

from hypothesis import settings, strategies as st

from weylfrac import WeylPoly, XPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-5, max_value=5)
rats = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))
nonzero_rats = rats.filter(bool)


def xpolys(max_deg=8):
    return st.lists(rats, max_size=max_deg + 1).map(XPoly)


def weyls(max_dx=3, max_dy=3, coeffs=small_ints):
    keys = st.tuples(st.integers(0, max_dx), st.integers(0, max_dy))
    return st.dictionaries(keys, coeffs, max_size=8).map(WeylPoly)


def nonzero_weyls(max_dx=3, max_dy=3):
    return weyls(max_dx, max_dy).filter(bool)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(line)
