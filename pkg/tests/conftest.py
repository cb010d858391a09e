"""Shared generators and helpers for the test suite."""

import pytest
from hypothesis import strategies as st

from ordcalc.names import ZERO, suc_list, sup_finite, und
from ordcalc.oracle import gen_finitary


def finitary_names(max_leaves: int = 8):
    """Hypothesis strategy for finitary names of modest size."""
    leaves = st.just(ZERO) | st.integers(0, 3).map(und)
    return st.recursive(
        leaves,
        lambda kids: (
            st.lists(kids, min_size=1, max_size=3).map(suc_list)
            | st.lists(kids, min_size=1, max_size=3).map(sup_finite)
        ),
        max_leaves=max_leaves,
    )


def seeded_pairs(count: int, salt: int = 0, depth: int = 3, width: int = 3):
    """Deterministic finitary name pairs for fixed-count batteries."""
    return [
        (gen_finitary(2 * i + salt, max_depth=depth, max_width=width),
         gen_finitary(2 * i + 1 + salt, max_depth=depth, max_width=width))
        for i in range(count)
    ]


@pytest.fixture
def report_line(request):
    """Write one line that stays visible under captured output."""
    reporter = request.config.pluginmanager.getplugin("terminalreporter")

    def write(text: str) -> None:
        if reporter is not None:
            reporter.ensure_newline()
            reporter.write_line(text)

    return write
