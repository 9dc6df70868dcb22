import os
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from periodic_dedekind.exact import Cyclotomic, totient

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=30)
small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=12)


@st.composite
def cyclotomics(draw, order=None):
    m = draw(st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])) if order is None else order
    coeffs = draw(st.lists(small_fractions, min_size=totient(m), max_size=totient(m)))
    return Cyclotomic(m, coeffs)


def nonzero(x: Cyclotomic) -> bool:
    return not x.is_zero()


__all__ = ["Fraction", "cyclotomics", "fractions", "small_fractions", "nonzero"]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
