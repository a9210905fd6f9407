from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from toric_basic.corpus import builtin_fans, invalid_fans, load_corpus
from toric_basic.exactfield import QuadraticScalar

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(-6, 6)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def scalars(draw, d=2):
    """Elements of Q(sqrt d), including some with b = 0."""
    a = draw(rationals)
    b = draw(st.one_of(st.just(Fraction(0)), rationals))
    return QuadraticScalar(a, b, d)


@st.composite
def int_matrices(draw, rows=st.integers(1, 4), cols=st.integers(1, 5), entries=small_ints):
    r, c = draw(rows), draw(cols)
    return [[draw(entries) for _ in range(c)] for _ in range(r)]


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def builtins():
    return builtin_fans()


@pytest.fixture(scope="session")
def fixtures():
    return invalid_fans()


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
