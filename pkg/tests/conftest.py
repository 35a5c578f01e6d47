from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from impobs.ratmat import Mat

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


small_fractions = st.builds(Fraction, st.integers(-3, 3), st.integers(1, 3))


@st.composite
def matrices(draw, max_rows=5, max_cols=5, rows=None, cols=None, entries=small_fractions):
    r = draw(st.integers(0, max_rows)) if rows is None else rows
    c = draw(st.integers(0, max_cols)) if cols is None else cols
    data = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return Mat(data, cols=c)


@st.composite
def low_rank_matrices(draw, max_rows=5, max_cols=5):
    """Products of two thin factors, so rank deficiency is the norm."""
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    k = draw(st.integers(0, 3))
    X = draw(matrices(rows=r, cols=k))
    Y = draw(matrices(rows=k, cols=c))
    return X @ Y if k else Mat.zeros(r, c)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
