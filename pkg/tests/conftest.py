from fractions import Fraction

from hypothesis import settings, strategies as st

from pastrev.exactfield import GaussianRational
from pastrev.poly import Poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)
nonzero_rationals = rationals.filter(lambda q: q != 0)
gaussians = st.builds(GaussianRational, rationals, rationals)


def polys(coeff=rationals, max_size=9, unit_constant=False):
    lists = st.lists(coeff, min_size=1, max_size=max_size)
    if unit_constant:
        lists = st.tuples(coeff.filter(lambda c: c != 0), lists).map(lambda t: [t[0], *t[1]])
    return lists.map(Poly).filter(lambda p: not p.is_zero())


def F(s) -> Fraction:
    return Fraction(s)


# criterion number -> pass/fail line, filled in by the acceptance module
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
