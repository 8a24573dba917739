from fractions import Fraction

import pytest
from hypothesis import strategies as st

from liepoly.lie import AlgebraSpec
from liepoly.poly import Polynomial, parse_polynomial
from liepoly.rep import RepresentationContext


def P(text: str, nvars: int = 4, n_x: int | None = None) -> Polynomial:
    return parse_polynomial(text, nvars, n_x)


def ctx_of(family: str, n: int, swap=(), model: str = "A") -> RepresentationContext:
    return RepresentationContext.build(AlgebraSpec(family, n), swap, model)


def polynomials(nvars: int = 3, max_exp: int = 2, max_terms: int = 4):
    exps = st.tuples(*[st.integers(0, max_exp)] * nvars)
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: Polynomial(nvars, d))


@pytest.fixture
def sp4_t12():
    return ctx_of("sp", 2, (1, 2))


@pytest.fixture
def half():
    return Fraction(1, 2)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.LINES, key=lambda k: int(k[2:])):
        terminalreporter.write_line(mod.LINES[key])
