import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "zbgof",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("zbgof")


@pytest.fixture
def rng():
    return np.random.default_rng(20240101)


def samples(min_size=3, max_size=40):
    """Finite, non-degenerate samples with moderate dynamic range."""
    elems = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
    return (
        st.lists(elems, min_size=min_size, max_size=max_size)
        .map(np.array)
        .filter(lambda x: np.ptp(x) > 1e-6 * max(1.0, np.max(np.abs(x))))
    )


# One line per acceptance criterion, shown even when output is captured.
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
