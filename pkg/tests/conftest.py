import mpmath
import pytest

from zetaratio import build_tables, integrate_ratio_moment
from zetaratio.kernel import PrecisionContext

ACCEPTANCE = {}


@pytest.fixture(autouse=True)
def _mp_precision():
    """Compare extended-precision results at 40 digits, not mpmath's default 15."""
    with mpmath.workdps(40):
        yield


@pytest.fixture(scope="session")
def table():
    """Shared table up to 10^6 (covers P = 10^6 and tail references 2^16)."""
    return build_tables(10**6)


@pytest.fixture(scope="session")
def small_table():
    return build_tables(10**4)


@pytest.fixture(scope="session")
def fast_ctx():
    return PrecisionContext(15)


class _LazyMoments(dict):
    """a = 2 ratio moments keyed by T, computed on first access (T = 10^4 takes ~40 s)."""

    def __missing__(self, T):
        self[T] = integrate_ratio_moment(T, 2.0)
        return self[T]


@pytest.fixture(scope="session")
def ratio_moments():
    return _LazyMoments()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
