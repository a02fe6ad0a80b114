from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from jimm.cf import ContinuedFraction
from jimm.core import is_noble
from jimm.surd import QuadSurd

settings.register_profile(
    "default",
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")

small_quotient = st.integers(min_value=1, max_value=9)


@st.composite
def periodic_cfs(draw, a0=st.integers(min_value=-6, max_value=6)):
    head = [draw(a0)] + draw(st.lists(small_quotient, max_size=3))
    period = draw(st.lists(small_quotient, min_size=1, max_size=4).filter(lambda p: any(a != 1 for a in p)))
    return ContinuedFraction.periodic(head, period)


@st.composite
def surds(draw):
    """Non-noble quadratic surds from two independent recipes."""
    if draw(st.booleans()):
        return draw(periodic_cfs()).value()
    d = draw(st.integers(min_value=2, max_value=80).filter(lambda n: int(n**0.5) ** 2 != n))
    x = QuadSurd.make(
        draw(st.integers(-30, 30)),
        draw(st.integers(-7, 7).filter(bool)),
        d,
        draw(st.integers(1, 20)),
    )
    if not isinstance(x, QuadSurd) or is_noble(x):
        from hypothesis import reject

        reject()
    return x


@st.composite
def unit_surds(draw):
    x = draw(surds())
    return x - x.floor()


positive_rationals = st.builds(Fraction, st.integers(1, 1000), st.integers(1, 1000))
nonzero_rationals = st.builds(Fraction, st.integers(-1000, 1000).filter(bool), st.integers(1, 1000))


# acceptance criteria report one line each; collected here and printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
