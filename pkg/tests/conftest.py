import sys
from fractions import Fraction

from hypothesis import strategies as st

from bwfamily.polynomial import Polynomial

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def polynomials(draw, max_degree=6, coeffs=small_fractions):
    cs = draw(st.lists(coeffs, min_size=0, max_size=max_degree + 1))
    return Polynomial(cs)


@st.composite
def nonzero_polynomials(draw, max_degree=6):
    p = draw(polynomials(max_degree=max_degree))
    if p.is_zero():
        p = Polynomial([Fraction(draw(st.integers(1, 9)))])
    return p


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
