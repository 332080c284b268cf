import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hfset.kernel import empty, from_elements

settings.register_profile(
    "default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def hsets(max_leaves: int = 12, max_width: int = 4):
    """Hypothesis strategy for small hereditarily finite sets."""
    return st.recursive(
        st.just(empty()),
        lambda inner: st.lists(inner, max_size=max_width).map(from_elements),
        max_leaves=max_leaves,
    )


_ACCEPTANCE_LINES: list = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
