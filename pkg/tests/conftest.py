from fractions import Fraction

import pytest
from hypothesis import strategies as st

from e6sp4 import presets
from e6sp4.rootcore import build_root_system, compact_weyl_group, weyl_group


@pytest.fixture(scope="session")
def e6():
    return build_root_system(presets.get("E6-bourbaki"))


@pytest.fixture(scope="session")
def e6_alt():
    return build_root_system(presets.get("E6-paper"))


@pytest.fixture(scope="session")
def c2():
    return build_root_system(presets.get("C2"))


@pytest.fixture(scope="session")
def w_e6(e6):
    return weyl_group(e6)


@pytest.fixture(scope="session")
def wc_e6(e6):
    return compact_weyl_group(e6)


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def rational_vectors(n):
    return st.tuples(*[small_rationals] * n)


def integer_vectors(n, lo=-4, hi=4):
    return st.tuples(*[st.integers(lo, hi)] * n).map(lambda v: tuple(Fraction(x) for x in v))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
